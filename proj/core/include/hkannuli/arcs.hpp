#pragma once

#include <cstdint>
#include <vector>

#include "hkannuli/freegroup.hpp"

namespace hka {

// Coordinate (rho, beta, lambda, mu) of an arc; slope 2rho/(2beta+1).
struct ArcCoordinate {
    std::int64_t rho = 0;
    std::int64_t beta = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;
};

// Throws std::invalid_argument unless rho >= 0 and gcd(2rho, |2beta+1|) = 1.
void check_slope(std::int64_t rho, std::int64_t beta);
bool slope_is_valid(std::int64_t rho, std::int64_t beta) noexcept;

// Entries in {+1, -1}, even length 2*tau.
struct PairedUnitSequence {
    std::vector<int> entries;

    std::size_t tau() const { return entries.size() / 2; }
    bool operator==(const PairedUnitSequence&) const = default;
};

// entries has length sigma; kappa[i] (1-based positions, increasing) picks
// out base.entries[i].
struct SequenceExtension {
    PairedUnitSequence base;
    std::vector<int> entries;
    std::vector<std::size_t> kappa;

    std::size_t sigma() const { return entries.size(); }
    // zeta_0 .. zeta_{2 tau}: sums of entries strictly between consecutive
    // kappa values, kappa(0) = 0 and kappa(2 tau + 1) = sigma + 1.
    std::vector<std::int64_t> zeta() const;
};

enum class DualArc { De, Do, S0 };

struct Crossing {
    DualArc arc;
    int sign;
};

struct ReferenceCrossings {
    PairedUnitSequence seq;
    SequenceExtension ext;
    std::vector<Crossing> crossings;  // in order along the arc
};

// Signed crossings of the reference arc of slope 2rho/(2beta+1) with the
// dual arcs, by exact lattice geometry in the lift.
ReferenceCrossings reference_crossings(std::int64_t rho, std::int64_t beta);

// x^u1 y^u2 x^u3 ... y^u2tau
Word alternating(const PairedUnitSequence& seq, const Word& x, const Word& y);

// z^zeta0 x^u1 z^zeta1 y^u2 ... y^u2tau z^zeta2tau
Word interpolating(const SequenceExtension& ext, const Word& x, const Word& y, const Word& z);

struct ArcImages {
    Word c_e;
    Word c_o_hat;
    Word v_hat;
    Word s0;
};

// beta >= 0: C_e^lambda A^_beta(C^_o, C_e, v^) C^_o^mu s0
// beta <  0: C_e^lambda A^_-beta(C_e, C^_o, v^) C^_o^mu s0
Word arc_word(const ArcCoordinate& coord, const ArcImages& images);

}  // namespace hka
