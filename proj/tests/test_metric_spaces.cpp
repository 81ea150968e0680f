// Exact/squared/approx space behavior, axiom validation, generators, and the
// diameter spectrum.
#include <catch2/catch_amalgamated.hpp>

#include <vrmorse/metric.hpp>

#include "support/random_spaces.hpp"

using namespace vrmorse;

namespace {

ExactSpace tiny(int n, std::vector<Rational> table) {
    ExactSpace sp;
    sp.n = n;
    for (int i = 0; i < n; ++i) sp.labels.push_back("p" + std::to_string(i));
    sp.table = std::move(table);
    sp.provenance = "test";
    return sp;
}

}  // namespace

TEST_CASE("circle generator produces the arclength metric", "[metric]") {
    ExactSpace c = make_circle(12);
    REQUIRE(c.n == 12);
    REQUIRE(c.dist(0, 6) == Rational(1, 2));
    REQUIRE(c.dist(0, 4) == Rational(1, 3));
    REQUIRE(c.dist(4, 0) == Rational(1, 3));
    REQUIRE(c.dist(0, 11) == Rational(1, 12));
    REQUIRE(validate_metric(c).ok);
    REQUIRE_THROWS_AS(make_circle(2), std::invalid_argument);
}

TEST_CASE("metric validation reports each axiom failure", "[metric]") {
    SECTION("asymmetry") {
        auto sp = tiny(2, {Rational(0), Rational(1), Rational(2), Rational(0)});
        auto rep = validate_metric(sp);
        REQUIRE_FALSE(rep.ok);
        REQUIRE(rep.problems[0].find("asymmetry") != std::string::npos);
    }
    SECTION("nonzero diagonal") {
        auto sp = tiny(1, {Rational(3)});
        auto rep = validate_metric(sp);
        REQUIRE_FALSE(rep.ok);
        REQUIRE(rep.problems[0].find("self-distance") != std::string::npos);
    }
    SECTION("negative entry") {
        auto sp = tiny(2, {Rational(0), Rational(-1), Rational(-1), Rational(0)});
        auto rep = validate_metric(sp);
        REQUIRE_FALSE(rep.ok);
        bool found = false;
        for (const auto& p : rep.problems)
            if (p.find("negative") != std::string::npos) found = true;
        REQUIRE(found);
    }
    SECTION("triangle violation") {
        // d(0,2)=5 > d(0,1)+d(1,2)=2
        auto sp = tiny(3, {Rational(0), Rational(1), Rational(5),  //
                           Rational(1), Rational(0), Rational(1),  //
                           Rational(5), Rational(1), Rational(0)});
        auto rep = validate_metric(sp);
        REQUIRE_FALSE(rep.ok);
        bool found = false;
        for (const auto& p : rep.problems)
            if (p.find("triangle") != std::string::npos) found = true;
        REQUIRE(found);
    }
}

TEST_CASE("squared-space comparisons match their square roots", "[metric]") {
    SquaredSpace sp;
    // sqrt(2) <= sqrt(1) + sqrt(1) but sqrt(5) > 2
    REQUIRE(sp.tri_le(Rational(2), Rational(1), Rational(1)));
    REQUIRE(sp.tri_le(Rational(4), Rational(1), Rational(1)));
    REQUIRE_FALSE(sp.tri_le(Rational(5), Rational(1), Rational(1)));
    // sqrt(1) < sqrt(4) - sqrt(1) is false (equality); sqrt(1) < sqrt(9)-sqrt(1) holds
    REQUIRE_FALSE(sp.lt_pinched(Rational(1), Rational(4), Rational(1)));
    REQUIRE(sp.lt_pinched(Rational(1), Rational(9), Rational(1)));
    // r = 0 degrades to the strict comparison
    REQUIRE(sp.lt_pinched(Rational(3), Rational(4), Rational(0)));
    REQUIRE_FALSE(sp.lt_pinched(Rational(4), Rational(4), Rational(0)));
}

TEST_CASE("lattice box is the exact squared-Euclidean grid", "[metric]") {
    SquaredSpace g = make_lattice_box(2, 4);
    REQUIRE(g.n == 16);
    REQUIRE(validate_metric(g).ok);
    // row-major: index = x0*4 + x1
    REQUIRE(g.dist(0, 5) == Rational(2));   // (0,0) vs (1,1)
    REQUIRE(g.dist(0, 15) == Rational(18)); // (0,0) vs (3,3)
    auto spec = diameter_spectrum(g);
    std::vector<Rational> want{Rational(1), Rational(2),  Rational(4),
                               Rational(5), Rational(8),  Rational(9),
                               Rational(10), Rational(13), Rational(18)};
    REQUIRE(spec.values == want);
}

TEST_CASE("four-point sphere has the two-value spectrum", "[metric]") {
    ApproxSpace s4 = make_sphere4();
    REQUIRE(s4.n == 4);
    REQUIRE(validate_metric(s4).ok);
    REQUIRE(s4.eq(s4.dist(0, 1), 0.25));  // equator pair
    REQUIRE(s4.eq(s4.dist(2, 3), 0.5));   // poles
    REQUIRE(s4.eq(s4.dist(0, 2), 0.25));  // equator to pole
    auto spec = diameter_spectrum(s4);
    REQUIRE(spec.values.size() == 2);
    REQUIRE(s4.eq(spec.values[0], 0.25));
    REQUIRE(s4.eq(spec.values[1], 0.5));
}

TEST_CASE("spectrum values, lookup, and min gap on circle(12)", "[metric]") {
    ExactSpace c = make_circle(12);
    auto spec = diameter_spectrum(c);
    REQUIRE(spec.values.size() == 6);
    REQUIRE(spec.values.front() == Rational(1, 12));
    REQUIRE(spec.values.back() == Rational(1, 2));
    REQUIRE(spec.has_min_gap);
    REQUIRE(spec.min_gap == Rational(1, 12));
    REQUIRE(spec.index_of(Rational(1, 4)) == 2);
    REQUIRE(spec.index_of(Rational(1, 5)) == -1);
}

TEST_CASE("random closure tables are metrics", "[metric]") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        ExactSpace sp = testsupport::random_space(seed);
        CAPTURE(seed, sp.n);
        REQUIRE(validate_metric(sp).ok);
    }
}

TEST_CASE("approx comparisons honor the tolerance band", "[metric]") {
    ApproxSpace sp;
    sp.eps = 1e-9;
    REQUIRE(sp.eq(0.25, 0.25 + 5e-10));
    REQUIRE_FALSE(sp.eq(0.25, 0.25 + 5e-9));
    REQUIRE(sp.le(0.25 + 5e-10, 0.25));
    REQUIRE_FALSE(sp.lt(0.25 + 5e-10, 0.25));
    REQUIRE(sp.lt(0.25, 0.2500001));
}
