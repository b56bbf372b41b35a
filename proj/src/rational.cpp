#include "coarse/rational.hpp"

#include <charconv>

namespace coarse {

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    auto parse_int = [&](std::size_t from, std::size_t to) {
        std::int64_t out = 0;
        auto [ptr, ec] = std::from_chars(s.data() + from, s.data() + to, out);
        if (ec != std::errc() || ptr != s.data() + to)
            throw std::invalid_argument("bad rational: '" + s + "'");
        return out;
    };
    if (slash == std::string::npos) return Rat(parse_int(0, s.size()));
    std::int64_t num = parse_int(0, slash);
    std::int64_t den = parse_int(slash + 1, s.size());
    if (den == 0) throw std::invalid_argument("bad rational (zero denominator): '" + s + "'");
    return Rat(num, den);
}

std::string format_rat(const Rat& r) {
    std::string out = std::to_string(r.numerator());
    if (r.denominator() != 1) {
        out += '/';
        out += std::to_string(r.denominator());
    }
    return out;
}

std::string format_dist(const Dist& d) {
    return d.is_infinite() ? "inf" : format_rat(d.value());
}

}  // namespace coarse
