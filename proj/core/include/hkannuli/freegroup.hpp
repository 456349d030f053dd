#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hka {

// Generators of the rank-2 free group <u, v>.
enum class Gen : std::uint8_t { U = 0, V = 1 };

inline Gen other(Gen g) { return g == Gen::U ? Gen::V : Gen::U; }

struct Block {
    Gen gen;
    std::int64_t exp;
    bool operator==(const Block&) const = default;
};

// Freely reduced word. Adjacent blocks carry distinct generators and no
// exponent is zero; the empty block list is the identity.
//
// All exponent arithmetic is checked and throws std::overflow_error rather
// than wrapping.
class Word {
public:
    Word() = default;

    static Word reduce(std::span<const Block> raw);
    static Word reduce(std::initializer_list<Block> raw) {
        return reduce(std::span<const Block>(raw.begin(), raw.size()));
    }
    static Word gen(Gen g, std::int64_t e = 1);
    static Word u(std::int64_t e = 1) { return gen(Gen::U, e); }
    static Word v(std::int64_t e = 1) { return gen(Gen::V, e); }

    const std::vector<Block>& blocks() const { return blocks_; }
    bool is_identity() const { return blocks_.empty(); }
    std::size_t block_count() const { return blocks_.size(); }

    // Number of letters; throws if it does not fit in int64.
    std::int64_t length() const;

    Word inverse() const;
    Word pow(std::int64_t k) const;

    bool operator==(const Word&) const = default;

private:
    std::vector<Block> blocks_;
};

Word concat(const Word& a, const Word& b);
Word invert(const Word& a);
inline Word operator*(const Word& a, const Word& b) { return concat(a, b); }

// w = conjugator * core * conjugator^-1, core cyclically reduced.
struct CyclicReduction {
    Word core;
    Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);

// Conjugacy class with a canonical representative: the least rotation of
// the cyclically reduced core as a letter string, ordered u < U < v < V.
class CyclicWord {
public:
    explicit CyclicWord(Word w);
    const Word& representative() const { return rep_; }
    const Word& canonical() const { return canon_; }
    bool operator==(const CyclicWord& o) const { return canon_ == o.canon_; }

private:
    Word rep_;
    Word canon_;
};

bool are_conjugate(const Word& a, const Word& b);

struct Root {
    Word r;
    std::int64_t k;
};
// w = r^k with k maximal. Throws std::invalid_argument on the identity.
Root root(const Word& w);

bool is_primitive(const Word& w);

// Throws std::invalid_argument on the identity.
bool is_power_of_primitive(const Word& w);

// Sufficient test for "not a power of a primitive". false means inconclusive.
bool cho_koda_criterion(const Word& w);

// Exponent sums (u, v).
std::pair<std::int64_t, std::int64_t> abelianization(const Word& w);

// Minimal cyclic length over the Aut(F2)-orbit, reached by greedy
// length-reducing Whitehead moves.
std::int64_t whitehead_minimal_length(const Word& w);

namespace detail {
// Block form of a cyclic word with generators alternating around the
// cycle: either a single block or an even number of blocks whose first and
// last generators differ. conjugator satisfies w = g * word * g^-1.
struct AlignedCycle {
    std::vector<Block> blocks;
    Word conjugator;
};
AlignedCycle align_cycle(const Word& w);

std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t abs_checked(std::int64_t a);
}  // namespace detail

// Text form. Letters u v U V, optional ^k exponents, whitespace ignored;
// a lone "1" is the identity.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

}  // namespace hka
