#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hkannuli/jsjgraph.hpp"

using namespace hka;

namespace {

JsjGraph load(const std::string& name) {
    std::ifstream in(std::string(HKANN_TEST_DATA_DIR) + "/" + name);
    EXPECT_TRUE(in) << name;
    return parse_jsj_graph(in);
}

JsjGraph from_text(const std::string& s) {
    std::istringstream in(s);
    return parse_jsj_graph(in);
}

bool has_rule(const std::vector<Violation>& v, const std::string& rule) {
    for (const auto& x : v)
        if (x.rule == rule) return true;
    return false;
}

}  // namespace

TEST(Slope, Normalization) {
    EXPECT_EQ(SlopePair::recip(2, 3), SlopePair::recip(3, 2));
    EXPECT_EQ(SlopePair::recip(-2, 3), SlopePair::recip(3, -2));
    EXPECT_THROW(SlopePair::recip(-4, 6), std::invalid_argument);
    EXPECT_THROW(SlopePair::prod(6, 4), std::invalid_argument);
    EXPECT_THROW(SlopePair::recip(0, 2), std::invalid_argument);
    EXPECT_THROW(SlopePair::prod(1, 2), std::invalid_argument);
    EXPECT_THROW(SlopePair::prod(3, -2), std::invalid_argument);
    EXPECT_TRUE(SlopePair::trivial().is_trivial());
    EXPECT_EQ(parse_slope("prod:3/2"), SlopePair::prod(3, 2));
    EXPECT_EQ(to_string(parse_slope("recip:3/2")), "recip:2/3");
    EXPECT_THROW(parse_slope("prod:3"), std::invalid_argument);
}

TEST(Slope, Rules) {
    EXPECT_TRUE(slope_rules(AnnulusType::T3_3ii, SlopePair::trivial()).empty());
    EXPECT_TRUE(has_rule(slope_rules(AnnulusType::T3_3ii, SlopePair::prod(3, 2)), rules::kType33iiSlope));
    EXPECT_TRUE(bigon_slope_rules(SlopePair::prod(3, 2), SlopePair::prod(3, 2)).empty());
    EXPECT_TRUE(has_rule(bigon_slope_rules(SlopePair::prod(3, 2), SlopePair::prod(2, 3)), rules::kBigonSlopes));
}

TEST(Structure, Examples) {
    EXPECT_TRUE(validate_structure(JsjGraph::trivial()).empty());
    EXPECT_TRUE(validate_structure(JsjGraph::graph_k()).empty());
    EXPECT_TRUE(validate_structure(JsjGraph::graph_m()).empty());
    EXPECT_TRUE(has_rule(validate_structure(load("bad_structure.jsj")), "central-node"));

    JsjGraph g;
    g.nodes = {{"x", NodeKind::IFibered}, {"s", NodeKind::Seifert}};
    for (int i = 0; i < 4; ++i) g.edges.push_back({"e" + std::to_string(i), "x", "s", {}, {}});
    auto v = validate_structure(g);
    EXPECT_TRUE(has_rule(v, "seifert-degree"));
    EXPECT_TRUE(has_rule(v, "edge-count"));
}

TEST(Structure, RemovingEdgesAddsNothing) {
    JsjGraph g;
    g.nodes = {{"x", NodeKind::IFibered}, {"s", NodeKind::Seifert}, {"t", NodeKind::Seifert}, {"y", NodeKind::Simple}};
    g.edges = {{"a", "x", "s", {}, {}}, {"b", "s", "t", {}, {}}, {"c", "x", "x", {}, {}}, {"d", "y", "s", {}, {}}};
    auto rules_of = [](const std::vector<Violation>& v) {
        std::set<std::string> r;
        for (auto& x : v) r.insert(x.rule);
        return r;
    };
    auto full = rules_of(validate_structure(g));
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        JsjGraph h = g;
        h.edges.erase(h.edges.begin() + static_cast<long>(i));
        for (auto& r : rules_of(validate_structure(h))) EXPECT_TRUE(full.count(r)) << r;
    }
}

TEST(Labels, NamedShapesClean) {
    EXPECT_TRUE(validate_labels(JsjGraph::trivial()).empty());
    EXPECT_TRUE(validate_labels(JsjGraph::graph_k()).empty());
    EXPECT_TRUE(validate_labels(JsjGraph::graph_m()).empty());
    EXPECT_TRUE(validate_labels(load("trivial.jsj")).empty());
    EXPECT_TRUE(validate_labels(load("bigon_t33i.jsj")).empty());
}

TEST(Labels, ViolationExamples) {
    auto loop = validate_labels(load("loop_t21.jsj"));
    ASSERT_TRUE(has_rule(loop, rules::kLoopLabels));
    auto bigon = validate_labels(load("bigon_t32i.jsj"));
    ASSERT_TRUE(has_rule(bigon, rules::kParallelLabels));
    auto t41 = validate_labels(load("t41.jsj"));
    ASSERT_EQ(t41.size(), 1u);
    EXPECT_EQ(t41[0].rule, rules::kType41);
    EXPECT_EQ(t41[0].lemma, "type 4-1 classification theorem");
    EXPECT_EQ(t41[0].subject, "e1");
    for (auto& v : loop)
        if (v.rule == rules::kLoopLabels) EXPECT_EQ(v.lemma, "loop edge lemma");
    for (auto& v : bigon)
        if (v.rule == rules::kParallelLabels) EXPECT_EQ(v.lemma, "bigon edge lemma");
}

TEST(Labels, RulesToggle) {
    JsjGraph g = load("t41.jsj");
    RuleSet rs;
    rs.disabled.insert(rules::kType41);
    EXPECT_TRUE(validate_labels(g, rs).empty());
    JsjGraph loop = load("loop_t21.jsj");
    rs.disabled.insert(rules::kLoopLabels);
    EXPECT_FALSE(has_rule(validate_labels(loop, rs), rules::kLoopLabels));
}

TEST(Labels, SlopeInGraph) {
    auto g = from_text(
        "node x ifibered\nnode s seifert\n"
        "edge e1 x s label=3-3i slope=prod:3/2\nedge e2 x s label=3-3i slope=prod:2/3\n");
    EXPECT_TRUE(has_rule(validate_labels(g), rules::kBigonSlopes));
    auto h = from_text("node x ifibered\nnode s seifert\nedge e1 x s slope=prod:3/2\n");
    EXPECT_TRUE(has_rule(validate_labels(h), rules::kSlopeLabel));
    auto bad = from_text("node x ifibered\nnode y ifibered\nedge e1 x y\n");
    EXPECT_THROW(validate_labels(bad), std::invalid_argument);
}

TEST(Warnings, RealizabilityUnknown) {
    auto g = from_text(
        "node x ifibered\nnode s seifert\nnode t seifert\n"
        "edge e1 x s\nedge e2 x s\nedge e3 x t\n");
    auto w = graph_warnings(g);
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0], "admissible, realizability unknown");
    EXPECT_TRUE(graph_warnings(JsjGraph::trivial()).empty());
}

TEST(Parse, Errors) {
    EXPECT_THROW(from_text("node x blob\n"), std::invalid_argument);
    EXPECT_THROW(from_text("node x simple\nedge e1 x\n"), std::invalid_argument);
    EXPECT_THROW(from_text("node x simple\nedge e1 x x label=9-9\n"), std::invalid_argument);
    try {
        from_text("node x simple\n\nfoo\n");
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
    }
    auto g = from_text("# c\nnode x simple  # trailing\n");
    EXPECT_EQ(g.nodes.size(), 1u);
}
