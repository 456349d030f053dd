#pragma once

#include <string>
#include <vector>

#include "hkannuli/bigint.hpp"

namespace hka {

// Value in Q u {inf}. Lowest terms, den >= 0; infinity is (1, 0).
struct ExtendedRational {
    BigInt num{0};
    BigInt den{1};

    static ExtendedRational infinity() { return {BigInt(1), BigInt(0)}; }
    static ExtendedRational make(BigInt n, BigInt d);  // normalizes; d may be 0

    bool is_infinite() const { return den == 0; }
    bool operator==(const ExtendedRational&) const = default;
};

std::string to_string(const ExtendedRational& f);  // "p/q" or "inf"

// R(a_1, ..., a_n), n >= 1.
class RationalTangle {
public:
    explicit RationalTangle(std::vector<BigInt> twists);
    const std::vector<BigInt>& twists() const { return twists_; }

private:
    std::vector<BigInt> twists_;
};

// literal: the continued fraction as written.
// mirrored: odd positions (1-based) negated before evaluation.
enum class TwistConvention { Literal, Mirrored };

// [a_1, ..., a_n] = a_n + 1/(a_{n-1} + ... + 1/a_1), with 1/0 = inf,
// k + inf = inf, 1/inf = 0.
ExtendedRational cf_eval(const RationalTangle& t, TwistConvention c = TwistConvention::Literal);

// den == 1, or infinity when infinity_counts is set.
bool is_integral(const ExtendedRational& f, bool infinity_counts = false);

BigInt meridian_count(const RationalTangle& t, TwistConvention c = TwistConvention::Literal);

}  // namespace hka
