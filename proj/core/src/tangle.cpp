#include "hkannuli/tangle.hpp"

#include <stdexcept>

#include <limits>

namespace hka {

BigInt parse_bigint(std::string_view text) {
    std::string s(text);
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("not an integer: \"" + s + "\"");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("not an integer: \"" + s + "\"");
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s);
}

std::optional<std::int64_t> to_int64(const BigInt& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        return std::nullopt;
    return static_cast<std::int64_t>(x);
}

ExtendedRational ExtendedRational::make(BigInt n, BigInt d) {
    if (d == 0) return infinity();
    if (d < 0) {
        n = -n;
        d = -d;
    }
    BigInt g = boost::multiprecision::gcd(n < 0 ? BigInt(-n) : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return {n, d};
}

std::string to_string(const ExtendedRational& f) {
    if (f.is_infinite()) return "inf";
    return f.num.str() + "/" + f.den.str();
}

RationalTangle::RationalTangle(std::vector<BigInt> twists) : twists_(std::move(twists)) {
    if (twists_.empty()) throw std::invalid_argument("rational tangle needs at least one twist");
}

ExtendedRational cf_eval(const RationalTangle& t, TwistConvention c) {
    const auto& a = t.twists();
    auto twist = [&](std::size_t i) {  // 0-based index; position i+1
        return (c == TwistConvention::Mirrored && i % 2 == 0) ? BigInt(-a[i]) : a[i];
    };
    ExtendedRational x = ExtendedRational::make(twist(0), 1);
    for (std::size_t i = 1; i < a.size(); ++i) {
        // 1/x
        ExtendedRational r = x.is_infinite() ? ExtendedRational{0, 1}
                                             : ExtendedRational::make(x.den, x.num);
        // a_i + 1/x
        x = r.is_infinite() ? r : ExtendedRational::make(twist(i) * r.den + r.num, r.den);
    }
    return x;
}

bool is_integral(const ExtendedRational& f, bool infinity_counts) {
    if (f.is_infinite()) return infinity_counts;
    return f.den == 1;
}

BigInt meridian_count(const RationalTangle& t, TwistConvention c) {
    ExtendedRational f = cf_eval(t, c);
    return f.num < 0 ? BigInt(-f.num) : f.num;
}

}  // namespace hka
