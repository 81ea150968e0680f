// Reduced GF(2) homology against the frozen oracle answers, plus the
// structural properties (Euler characteristic, cones, joins).
#include <catch2/catch_amalgamated.hpp>

#include <vrmorse/explicit_complex.hpp>
#include <vrmorse/homology.hpp>

#include "support/golden.hpp"

using namespace vrmorse;

namespace {

ExplicitComplex from_json_maximal(const nlohmann::json& maximal) {
    std::vector<Vertices> faces;
    for (const auto& f : maximal) faces.push_back(f.get<Vertices>());
    return ExplicitComplex::from_maximal(faces);
}

std::vector<long> betti_of(const nlohmann::json& entry) {
    ExplicitComplex c = from_json_maximal(entry["maximal"]);
    const int top = int(entry["betti"].size()) - 1;
    return betti_numbers(c, top);
}

}  // namespace

TEST_CASE("fixed complexes match the oracle", "[homology]") {
    auto golden = testsupport::load_golden("homology_cases.json");
    for (const auto& [name, entry] : golden["fixed"].items()) {
        CAPTURE(name);
        REQUIRE(betti_of(entry) == entry["betti"].get<std::vector<long>>());
    }
}

TEST_CASE("random complexes match the oracle", "[homology]") {
    auto golden = testsupport::load_golden("homology_cases.json");
    int i = 0;
    for (const auto& entry : golden["random"]) {
        CAPTURE(i++);
        REQUIRE(betti_of(entry) == entry["betti"].get<std::vector<long>>());
    }
}

TEST_CASE("euler characteristic identity on the random corpus", "[homology]") {
    auto golden = testsupport::load_golden("homology_cases.json");
    for (const auto& entry : golden["random"]) {
        ExplicitComplex c = from_json_maximal(entry["maximal"]);
        auto betti = betti_numbers(c, c.top_dim());
        long lhs = 1;  // the reduced b_{-1} correction
        for (std::size_t k = 0; k < betti.size(); ++k)
            lhs += (k % 2 ? -1 : 1) * betti[k];
        long rhs = 0;
        for (std::size_t k = 0; k < c.dims.size(); ++k)
            rhs += (k % 2 ? -1 : 1) * long(c.dims[k].size());
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("cones are acyclic", "[homology]") {
    auto golden = testsupport::load_golden("homology_cases.json");
    int checked = 0;
    for (const auto& entry : golden["random"]) {
        ExplicitComplex c = from_json_maximal(entry["maximal"]);
        ExplicitComplex coned = cone(c, 1000);
        REQUIRE(is_acyclic(coned, coned.top_dim()));
        ++checked;
    }
    REQUIRE(checked == 20);
}

TEST_CASE("join of two 0-spheres is a circle", "[homology]") {
    ExplicitComplex s0a = ExplicitComplex::from_maximal({{0}, {1}});
    ExplicitComplex s0b = ExplicitComplex::from_maximal({{2}, {3}});
    ExplicitComplex ring = join(s0a, s0b);
    REQUIRE(betti_numbers(ring, 1) == std::vector<long>{0, 1});
    REQUIRE_THROWS_AS(join(s0a, s0a), std::invalid_argument);
}

TEST_CASE("empty and one-point complexes", "[homology]") {
    ExplicitComplex empty;
    // the empty complex has reduced homology in degree -1, so it never
    // counts as acyclic
    REQUIRE_FALSE(is_acyclic(empty, 2));
    REQUIRE(betti_numbers(empty, 2) == std::vector<long>{0, 0, 0});

    ExplicitComplex pt = ExplicitComplex::from_maximal({{0}});
    REQUIRE(is_acyclic(pt, 2));
}

TEST_CASE("boundary matrix rank sanity on a triangle", "[homology]") {
    // full triangle: ranks force b0=b1=0
    ExplicitComplex tri = ExplicitComplex::from_maximal({{0, 1, 2}});
    REQUIRE(betti_numbers(tri, 2) == std::vector<long>{0, 0, 0});
    // its boundary: one circle
    ExplicitComplex ring = ExplicitComplex::from_maximal({{0, 1}, {1, 2}, {0, 2}});
    REQUIRE(betti_numbers(ring, 2) == std::vector<long>{0, 1, 0});
}
