#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hkannuli/classify.hpp"

namespace hka {

enum class NodeKind { IFibered, Seifert, Simple };
std::string to_string(NodeKind k);

// Unordered slope pair of a type 3-3 annulus.
//   Recip(p, q) = (p/q, q/p), pq != 0
//   Prod(p, q)  = (p/q, pq),  q > 0, p not +-1; Prod(0, 1) is trivial
// Fractions are kept in lowest terms; Recip is stored with |p| <= |q|,
// q > 0, so Recip(p, q) == Recip(q, p).
class SlopePair {
public:
    enum class Form { Recip, Prod };

    static SlopePair recip(std::int64_t p, std::int64_t q);
    static SlopePair prod(std::int64_t p, std::int64_t q);
    static SlopePair trivial() { return prod(0, 1); }

    Form form() const { return form_; }
    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    bool is_trivial() const { return form_ == Form::Prod && p_ == 0; }
    bool operator==(const SlopePair&) const = default;

private:
    SlopePair(Form f, std::int64_t p, std::int64_t q) : form_(f), p_(p), q_(q) {}
    Form form_;
    std::int64_t p_;
    std::int64_t q_;
};

std::string to_string(const SlopePair& s);  // "prod:p/q" or "recip:p/q"
SlopePair parse_slope(std::string_view s);  // throws std::invalid_argument

struct JsjNode {
    std::string id;
    NodeKind kind;
};

struct JsjEdge {
    std::string id;
    std::string a;
    std::string b;
    std::optional<AnnulusType> label;
    std::optional<SlopePair> slope;

    bool is_loop() const { return a == b; }
};

struct JsjGraph {
    std::vector<JsjNode> nodes;
    std::vector<JsjEdge> edges;

    // One simple node, no edges.
    static JsjGraph trivial();
    // I-fibered node joined to one Seifert node.
    static JsjGraph graph_k();
    // I-fibered node joined to two Seifert nodes.
    static JsjGraph graph_m();
    static JsjGraph from_shape(JsjShape s) { return s == JsjShape::GraphK ? graph_k() : graph_m(); }
};

struct Violation {
    std::string rule;
    std::string lemma;
    std::string subject;
    bool operator==(const Violation&) const = default;
};

// Rule ids that can be switched off individually.
namespace rules {
inline constexpr const char* kType21Shape = "type-2-1-shape";
inline constexpr const char* kType22Shape = "type-2-2-shape";
inline constexpr const char* kType33iiShape = "type-3-3ii-shape";
inline constexpr const char* kParallelLabels = "parallel-edge-labels";
inline constexpr const char* kBigonPlusEdge = "bigon-plus-edge-labels";
inline constexpr const char* kLoopLabels = "loop-edge-labels";
inline constexpr const char* kType41 = "type-4-1-edge";
inline constexpr const char* kAtoroidal = "atoroidal-types";
inline constexpr const char* kThetaType22 = "theta-type-2-2";
inline constexpr const char* kSlopeLabel = "slope-needs-type-3-3";
inline constexpr const char* kType33iiSlope = "type-3-3ii-slope";
inline constexpr const char* kTrivialSlopeType22 = "trivial-slope-with-type-2-2";
inline constexpr const char* kBigonSlopes = "bigon-slopes";
}  // namespace rules

struct RuleSet {
    std::set<std::string> disabled;
    bool enabled(const std::string& id) const { return !disabled.count(id); }
};

// Shape rules: node ids, endpoints, one I-fibered or simple node that every
// edge meets, Seifert nodes of degree at most 3, at most three edges.
std::vector<Violation> validate_structure(const JsjGraph& g);

// Label and slope rules. Throws std::invalid_argument if the structure is
// invalid.
std::vector<Violation> validate_labels(const JsjGraph& g, const RuleSet& rules = {});

// Rules that look at one labeled edge.
std::vector<Violation> slope_rules(AnnulusType label, const SlopePair& slope);

// Two T3_3i edges of one bigon.
std::vector<Violation> bigon_slope_rules(const SlopePair& a, const SlopePair& b);

// Notes that do not reject, e.g. shapes whose labelings are admissible but
// not known to be realized.
std::vector<std::string> graph_warnings(const JsjGraph& g);

// Line format:
//   node <id> ifibered|seifert|simple
//   edge <id> <a> <b> [label=<type>] [slope=prod:p/q|recip:p/q]
// '#' starts a comment. Throws std::invalid_argument with a line number.
JsjGraph parse_jsj_graph(std::istream& in);

}  // namespace hka
