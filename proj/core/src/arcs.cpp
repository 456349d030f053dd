#include "hkannuli/arcs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hka {

namespace {

using i128 = __int128;

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

bool even(i128 x) { return x % 2 == 0; }

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// A crossing together with its position t = num/den along the segment.
struct Event {
    i128 num;
    i128 den;
    Crossing c;
};

}  // namespace

bool slope_is_valid(std::int64_t rho, std::int64_t beta) noexcept {
    if (rho < 0) return false;
    i128 d = 2 * static_cast<i128>(beta) + 1;
    return gcd128(2 * static_cast<i128>(rho), d) == 1;
}

void check_slope(std::int64_t rho, std::int64_t beta) {
    if (rho < 0) throw std::invalid_argument("arc coordinate: rho must be non-negative");
    if (!slope_is_valid(rho, beta))
        throw std::invalid_argument("arc coordinate: gcd(2rho, |2beta+1|) != 1 for rho=" +
                                    std::to_string(rho) + ", beta=" + std::to_string(beta));
}

std::vector<std::int64_t> SequenceExtension::zeta() const {
    const std::size_t t2 = base.entries.size();
    std::vector<std::int64_t> z(t2 + 1, 0);
    auto kap = [&](std::size_t i) -> std::size_t {  // i in 0..2tau+1
        if (i == 0) return 0;
        if (i == t2 + 1) return entries.size() + 1;
        return kappa[i - 1];
    };
    for (std::size_t i = 0; i <= t2; ++i)
        for (std::size_t p = kap(i) + 1; p < kap(i + 1); ++p) z[i] += entries[p - 1];
    return z;
}

ReferenceCrossings reference_crossings(std::int64_t rho, std::int64_t beta) {
    check_slope(rho, beta);
    const i128 r2 = 2 * static_cast<i128>(rho);
    const i128 d = 2 * static_cast<i128>(beta) + 1;
    const i128 ad = d < 0 ? -d : d;
    if (ad - 1 + rho > (i128{1} << 26)) throw std::length_error("reference_crossings: slope too large");

    std::vector<Event> ev;
    // Integer vertical lines strictly inside the segment.
    for (i128 j = 1; j < ad; ++j) {
        i128 k = d > 0 ? j : -j;
        i128 fy = floor_div(r2 * j, ad);  // y at x = k
        int sign = d > 0 ? (even(fy) ? 1 : -1) : (even(fy) ? -1 : 1);
        ev.push_back({j, ad, {even(k) ? DualArc::De : DualArc::Do, sign}});
    }
    // Odd horizontal lines.
    for (i128 y = 1; y < r2; y += 2) {
        i128 fx = floor_div(y * d, r2);
        ev.push_back({y, r2, {DualArc::S0, even(fx) ? 1 : -1}});
    }
    std::stable_sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
        return a.num * b.den < b.num * a.den;
    });

    std::vector<Crossing> cs;
    if (beta < 0) cs.push_back({DualArc::De, -1});
    for (const Event& e : ev) cs.push_back(e.c);
    if (beta < 0) cs.push_back({DualArc::Do, 1});

    ReferenceCrossings out;
    out.crossings = cs;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        out.ext.entries.push_back(cs[i].sign);
        if (cs[i].arc != DualArc::S0) {
            out.seq.entries.push_back(cs[i].sign);
            out.ext.kappa.push_back(i + 1);
        }
    }
    out.ext.base = out.seq;
    return out;
}

Word alternating(const PairedUnitSequence& seq, const Word& x, const Word& y) {
    Word w;
    for (std::size_t i = 0; i < seq.entries.size(); ++i)
        w = w * (i % 2 == 0 ? x : y).pow(seq.entries[i]);
    return w;
}

Word interpolating(const SequenceExtension& ext, const Word& x, const Word& y, const Word& z) {
    std::vector<std::int64_t> zeta = ext.zeta();
    Word w = z.pow(zeta[0]);
    const auto& a = ext.base.entries;
    for (std::size_t i = 0; i < a.size(); ++i) {
        w = w * (i % 2 == 0 ? x : y).pow(a[i]);
        w = w * z.pow(zeta[i + 1]);
    }
    return w;
}

Word arc_word(const ArcCoordinate& coord, const ArcImages& im) {
    ReferenceCrossings rc = reference_crossings(coord.rho, coord.beta);
    Word mid = coord.beta >= 0 ? interpolating(rc.ext, im.c_o_hat, im.c_e, im.v_hat)
                               : interpolating(rc.ext, im.c_e, im.c_o_hat, im.v_hat);
    return im.c_e.pow(coord.lambda) * mid * im.c_o_hat.pow(coord.mu) * im.s0;
}

}  // namespace hka
