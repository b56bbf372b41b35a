#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace coarse {

// Exact rational arithmetic for edge weights and distances. Comparisons on
// distances must never go through floating point.
using Rat = boost::rational<std::int64_t>;

// A distance value: a non-negative rational, or infinity (unreachable).
class Dist {
public:
    Dist() : finite_(true), value_(0) {}
    explicit Dist(Rat v) : finite_(true), value_(std::move(v)) {}
    explicit Dist(std::int64_t v) : finite_(true), value_(v) {}

    static Dist infinity() {
        Dist d;
        d.finite_ = false;
        return d;
    }

    bool is_infinite() const { return !finite_; }
    bool is_finite() const { return finite_; }

    const Rat& value() const {
        if (!finite_) throw std::logic_error("Dist: value() on infinity");
        return value_;
    }

    friend bool operator==(const Dist& a, const Dist& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const Dist& a, const Dist& b) { return !(a == b); }
    friend bool operator<(const Dist& a, const Dist& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Dist& a, const Dist& b) { return a < b || a == b; }
    friend bool operator>(const Dist& a, const Dist& b) { return b < a; }
    friend bool operator>=(const Dist& a, const Dist& b) { return b <= a; }

    friend Dist operator+(const Dist& a, const Dist& b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return Dist(a.value_ + b.value_);
    }

private:
    bool finite_;
    Rat value_;
};

// "7/2" or "7"; used in the graph text format and JSON certificates.
Rat parse_rat(const std::string& s);
std::string format_rat(const Rat& r);
std::string format_dist(const Dist& d);

}  // namespace coarse
