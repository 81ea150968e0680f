// Cayley balls, the boundary-safe strong checks in both modes, and good
// combings, all pinned to the frozen group records.
#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <vrmorse/groups.hpp>

#include "support/golden.hpp"

using namespace vrmorse;
using nlohmann::json;

namespace {

std::vector<GroupSpec::Edge> cycle_edges(int n) {
    std::vector<GroupSpec::Edge> e;
    for (int i = 0; i < n; ++i)
        e.push_back({std::to_string(i), std::to_string((i + 1) % n), "s"});
    return e;
}

std::string vec_label(const json& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v.at(i).get<long>());
    }
    return out + ")";
}

}  // namespace

TEST_CASE("reduced word arithmetic", "[groups]") {
    REQUIRE(reduced_mul("aB", "ba") == "aa");
    REQUIRE(reduced_mul("ab", "BA") == "");
    REQUIRE(reduced_inv("ab") == "BA");
    REQUIRE(free_group_dist("a", "b") == 2);
    REQUIRE(free_group_dist("aa", "a") == 1);
    REQUIRE(l1_dist({2, -1}, {0, 0}) == 3);
}

TEST_CASE("ball sizes match the frozen records", "[groups]") {
    json g = testsupport::load_golden("groups.json");
    REQUIRE(cayley_ball(GroupSpec::free_group(2), 2).n() ==
            g.at("ball_sizes").at("f2_R2").get<int>());
    REQUIRE(cayley_ball(GroupSpec::free_abelian(2), 2).n() ==
            g.at("ball_sizes").at("z2_R2").get<int>());
    REQUIRE(cayley_ball(GroupSpec::free_group(2),
                        g.at("f2").at("R").get<int>())
                .n() == g.at("f2").at("ball_size").get<int>());
    REQUIRE(cayley_ball(GroupSpec::free_abelian(2),
                        g.at("z2").at("R").get<int>())
                .n() == g.at("z2").at("ball_size").get<int>());
}

TEST_CASE("BFS distances agree with the closed formulas", "[groups]") {
    CayleyBall f2 = cayley_ball(GroupSpec::free_group(2), 4);
    for (int i = 0; i < f2.n(); ++i) {
        REQUIRE(f2.dist1[i] == int(f2.words[i].size()));
        REQUIRE(f2.dist1[i] == f2.dist(0, i));
    }
    CayleyBall z2 = cayley_ball(GroupSpec::free_abelian(2), 4);
    for (int i = 0; i < z2.n(); ++i)
        REQUIRE(z2.dist1[i] == l1_dist(z2.vecs[i], {0, 0}));
    // left translation preserves word distance
    for (int i = 1; i < 10; ++i)
        for (int j = 1; j < 10; ++j) {
            std::string u = reduced_mul("bA", f2.words[i]);
            std::string v = reduced_mul("bA", f2.words[j]);
            REQUIRE(free_group_dist(u, v) == f2.dist(i, j));
        }
}

TEST_CASE("free group translation checks certify", "[groups]") {
    json g = testsupport::load_golden("groups.json").at("f2");
    CayleyBall ball = cayley_ball(GroupSpec::free_group(2), g.at("R").get<int>());
    for (const char* key : {"strong_t2", "strong_t3"}) {
        const json& gs = g.at(key);
        auto v = strong_translation_check(ball, gs.at("scale").get<int>());
        CAPTURE(key);
        REQUIRE(to_string(v.status) == gs.at("status"));
        REQUIRE(v.mode == gs.at("mode"));
        const json& pairs = gs.at("pairs");
        REQUIRE(v.witnesses.size() == pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            REQUIRE(v.witnesses[i][0] == 0);
            REQUIRE(ball.label(v.witnesses[i][1]) == pairs.at(i).at("g"));
            REQUIRE(ball.label(v.witnesses[i][2]) == pairs.at(i).at("z"));
        }
    }
}

TEST_CASE("free group literal checks certify with margins", "[groups]") {
    json g = testsupport::load_golden("groups.json").at("f2");
    CayleyBall ball = cayley_ball(GroupSpec::free_group(2), g.at("R").get<int>());
    for (const char* key : {"literal_t2", "literal_t3"}) {
        const json& gs = g.at(key);
        auto v = strong_literal_check(ball, gs.at("scale").get<int>());
        CAPTURE(key);
        REQUIRE(to_string(v.status) == gs.at("status"));
        REQUIRE(v.coverage == gs.at("checked").get<long>());
        const json& fw = gs.at("first_witnesses");
        REQUIRE(v.witnesses.size() == fw.size());
        for (std::size_t i = 0; i < fw.size(); ++i) {
            REQUIRE(ball.label(v.witnesses[i][0]) == fw.at(i).at("pair").at(0));
            REQUIRE(ball.label(v.witnesses[i][1]) == fw.at(i).at("pair").at(1));
            REQUIRE(ball.label(v.witnesses[i][2]) == fw.at(i).at("z"));
        }
    }
}

TEST_CASE("prefix combing on the free group", "[groups]") {
    json g = testsupport::load_golden("groups.json").at("f2").at("combing");
    CayleyBall ball = cayley_ball(GroupSpec::free_group(2), 8);
    auto rep = good_combing_check(ball, prefix_combing, g.at("N").get<int>());
    REQUIRE(rep.N == g.at("N").get<int>());
    REQUIRE(rep.t_max == g.at("t_max").get<int>());
    REQUIRE(rep.checked == g.at("checked").get<long>());
    REQUIRE(rep.failed == g.at("failed").get<long>());
    REQUIRE(g.at("first_failing").is_null());
    REQUIRE(rep.first_failing.g == -1);
    const json& per = g.at("per_g");
    REQUIRE(rep.per_g.size() == per.size());
    for (std::size_t i = 0; i < per.size(); ++i) {
        REQUIRE(ball.label(rep.per_g[i].g) == per.at(i).at("g"));
        REQUIRE(rep.per_g[i].t == per.at(i).at("t").get<int>());
        REQUIRE(rep.per_g[i].n == per.at(i).at("n").get<int>());
    }
}

TEST_CASE("plane translation checks refute", "[groups]") {
    json g = testsupport::load_golden("groups.json").at("z2");
    CayleyBall ball =
        cayley_ball(GroupSpec::free_abelian(2), g.at("R").get<int>());
    for (const char* key : {"strong_t2", "strong_t3", "strong_t4"}) {
        const json& gs = g.at(key);
        auto v = strong_translation_check(ball, gs.at("scale").get<int>());
        CAPTURE(key);
        REQUIRE(to_string(v.status) == gs.at("status"));
        REQUIRE(ball.label(v.failing[1]) == vec_label(gs.at("failing_g")));
        REQUIRE(v.lens_size == gs.at("lens_size").get<int>());
        REQUIRE(v.widest_dist == gs.at("widest_dist").get<int>());
        REQUIRE(ball.label(v.widest[0]) ==
                vec_label(gs.at("widest_lens_pair").at(0)));
        REQUIRE(ball.label(v.widest[1]) ==
                vec_label(gs.at("widest_lens_pair").at(1)));
        const json& pairs = gs.at("pairs");
        REQUIRE(v.witnesses.size() == pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            REQUIRE(ball.label(v.witnesses[i][1]) ==
                    vec_label(pairs.at(i).at("g")));
            REQUIRE(ball.label(v.witnesses[i][2]) ==
                    vec_label(pairs.at(i).at("z")));
        }
    }
}

TEST_CASE("staircase combing fails where certification fails", "[groups]") {
    json g = testsupport::load_golden("groups.json")
                 .at("z2")
                 .at("staircase_combing");
    CayleyBall ball = cayley_ball(GroupSpec::free_abelian(2), 12);
    auto rep = good_combing_check(ball, staircase_combing, g.at("N").get<int>());
    REQUIRE(rep.t_max == g.at("t_max").get<int>());
    REQUIRE(rep.checked == g.at("checked").get<long>());
    REQUIRE(rep.failed == g.at("failed").get<long>());
    REQUIRE(ball.label(rep.first_failing.g) ==
            vec_label(g.at("first_failing").at("g")));
    REQUIRE(rep.first_failing.t == g.at("first_failing").at("t").get<int>());
    std::vector<CombingEntry> failing;
    for (const auto& e : rep.per_g)
        if (e.n < 0 && failing.size() < 10) failing.push_back(e);
    const json& per = g.at("per_g");
    REQUIRE(failing.size() == per.size());
    for (std::size_t i = 0; i < per.size(); ++i) {
        REQUIRE(ball.label(failing[i].g) == vec_label(per.at(i).at("g")));
        REQUIRE(failing[i].t == per.at(i).at("t").get<int>());
        REQUIRE(per.at(i).at("n").is_null());
    }
}

TEST_CASE("even cycle refuted at the antipodal scale", "[groups]") {
    json g = testsupport::load_golden("groups.json").at("cycle8");
    CayleyBall ball = cayley_ball(GroupSpec::explicit_cayley(cycle_edges(8)), 4);
    REQUIRE(ball.n() == g.at("ball_size").get<int>());
    REQUIRE(ball.complete);
    for (int i = 0; i < ball.n(); ++i)
        REQUIRE(ball.words[i] == g.at("node_order").at(i));

    const json& gs = g.at("strong_t4");
    auto v = boundary_safe_strong_check(ball, gs.at("scale").get<int>());
    REQUIRE(v.mode == gs.at("mode"));
    REQUIRE(to_string(v.status) == gs.at("status"));
    REQUIRE(v.coverage == gs.at("checked").get<long>());
    REQUIRE(ball.label(v.failing[0]) == gs.at("failing_pair").at(0));
    REQUIRE(ball.label(v.failing[1]) == gs.at("failing_pair").at(1));
    REQUIRE(v.lens_size == gs.at("lens_size").get<int>());
    REQUIRE(v.widest_dist == gs.at("widest_dist").get<int>());
    REQUIRE(ball.label(v.widest[0]) == gs.at("widest_lens_pair").at(0));
    REQUIRE(ball.label(v.widest[1]) == gs.at("widest_lens_pair").at(1));

    // beyond the graph diameter there is nothing to check
    REQUIRE(strong_literal_check(ball, 5).status ==
            GroupCriterionVerdict::Status::Vacuous);
}

TEST_CASE("combing success implies certification at that scale", "[groups]") {
    CayleyBall ball = cayley_ball(GroupSpec::free_group(2), 8);
    auto rep = good_combing_check(ball, prefix_combing, 0);
    std::vector<char> any_fail(rep.t_max + 1, 0);
    std::vector<char> seen(rep.t_max + 1, 0);
    for (const auto& e : rep.per_g) {
        seen[e.t] = 1;
        if (e.n < 0) any_fail[e.t] = 1;
    }
    for (int t = 1; t <= rep.t_max; ++t) {
        if (!seen[t] || any_fail[t]) continue;
        REQUIRE(strong_translation_check(ball, t).status ==
                GroupCriterionVerdict::Status::Certified);
    }
}

TEST_CASE("invalid inputs are rejected", "[groups]") {
    REQUIRE_THROWS_AS(GroupSpec::free_group(0), std::invalid_argument);
    REQUIRE_THROWS_AS(GroupSpec::free_group(27), std::invalid_argument);
    REQUIRE_THROWS_AS(GroupSpec::free_abelian(0), std::invalid_argument);
    REQUIRE_THROWS_AS(GroupSpec::explicit_cayley({}), std::invalid_argument);
    REQUIRE_THROWS_AS(GroupSpec::explicit_cayley({{"a", "a", "s"}}),
                      std::invalid_argument);

    CayleyBall small = cayley_ball(GroupSpec::free_group(2), 2);
    REQUIRE_THROWS_AS(strong_translation_check(small, 0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(strong_translation_check(small, 3),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(strong_literal_check(small, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(small.index_of_word("zz"), std::invalid_argument);

    CayleyBall cyc = cayley_ball(GroupSpec::explicit_cayley(cycle_edges(8)), 4);
    REQUIRE_THROWS_AS(strong_translation_check(cyc, 2), std::invalid_argument);

    // a non-geodesic comber is rejected, not silently checked
    CayleyBall ball = cayley_ball(GroupSpec::free_group(2), 6);
    auto bogus = [](const CayleyBall& b, int g) {
        std::vector<int> p = prefix_combing(b, g);
        std::reverse(p.begin(), p.end());
        return p;
    };
    REQUIRE_THROWS_AS(good_combing_check(ball, bogus, 1),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(good_combing_check(ball, prefix_combing, -1),
                      std::invalid_argument);

    REQUIRE(suggest_combing_N(0) == 2);
    REQUIRE(suggest_combing_N(1) == 6);
    REQUIRE_THROWS_AS(suggest_combing_N(-1), std::invalid_argument);
}
