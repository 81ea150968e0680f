// Descending-link classification, the join materialization against the
// barycentric-subdivision brute force, and attachment-order verification.
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <vrmorse/homology.hpp>
#include <vrmorse/metric.hpp>
#include <vrmorse/morse.hpp>
#include <vrmorse/vr_complex.hpp>

#include "support/random_spaces.hpp"

using namespace vrmorse;

namespace {

// Descending link straight from the definition of the barycentric
// subdivision: vertices are the proper faces and cofaces that attach
// earlier under (diam, -dim), simplices are chains under inclusion.
template <class S>
ExplicitComplex barycentric_descending_link(const S& sp,
                                            const ExplicitComplex& c,
                                            const Vertices& sigma) {
    const auto t = simplex_diameter(sp, sigma);
    std::vector<Vertices> elements;
    for (std::uint32_t mask = 1; mask + 1 < (1u << sigma.size()); ++mask) {
        Vertices f;
        for (std::size_t b = 0; b < sigma.size(); ++b)
            if (mask & (1u << b)) f.push_back(sigma[b]);
        if (sp.lt(simplex_diameter(sp, f), t)) elements.push_back(std::move(f));
    }
    for (const auto& level : c.dims)
        for (const auto& chi : level) {
            if (chi.size() <= sigma.size()) continue;
            if (!std::includes(chi.begin(), chi.end(), sigma.begin(),
                               sigma.end()))
                continue;
            if (sp.eq(simplex_diameter(sp, chi), t)) elements.push_back(chi);
        }
    // chains of the inclusion poset; order elements by (size, lex) so every
    // chain is an increasing index sequence and the DFS finds them all
    std::sort(elements.begin(), elements.end(),
              [](const Vertices& a, const Vertices& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    const int m = int(elements.size());
    std::vector<std::vector<char>> le(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            le[i][j] = i != j && elements[i].size() < elements[j].size() &&
                       std::includes(elements[j].begin(), elements[j].end(),
                                     elements[i].begin(), elements[i].end());
    ExplicitComplex out;
    Vertices cur;
    auto grow = [&](auto&& self, int from) -> void {
        for (int v = from; v < m; ++v) {
            bool chain = true;
            for (int u : cur)
                if (!le[u][v] && !le[v][u]) {
                    chain = false;
                    break;
                }
            if (!chain) continue;
            cur.push_back(v);
            out.insert(cur);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    grow(grow, 0);
    out.sort_dedup();
    return out;
}

std::vector<long> padded_betti(const ExplicitComplex& c, int k) {
    auto b = betti_numbers(c, k);
    return b;
}

}  // namespace

TEST_CASE("classification of the three circle(12) cases", "[morse]") {
    ExactSpace c = make_circle(12);

    auto a = classify_descending_link(c, {0, 2, 10});
    REQUIRE(a.kind == DLinkClassification::Kind::ConeFace);
    REQUIRE(a.witness == 0);

    auto b = classify_descending_link(c, {0, 3});
    REQUIRE(b.kind == DLinkClassification::Kind::ConeCoface);
    REQUIRE(b.witness == 1);

    auto n = classify_descending_link(c, {0, 4, 8});
    REQUIRE(n.kind == DLinkClassification::Kind::Nontrivial);
    REQUIRE(n.betti == std::vector<long>{2});

    auto v = classify_descending_link(c, {5});
    REQUIRE(v.kind == DLinkClassification::Kind::Empty);
}

TEST_CASE("join materialization matches the barycentric brute force",
          "[morse]") {
    int spaces = 0;
    for (std::uint64_t seed = 1; spaces < 10 && seed < 200; ++seed) {
        ExactSpace sp = testsupport::random_space(seed);
        if (sp.n > 6) continue;
        ++spaces;
        auto spec = diameter_spectrum(sp);
        ExplicitComplex top = vietoris_rips(sp, spec.values.back(), sp.n);
        for (const auto& level : top.dims)
            for (const auto& sigma : level) {
                CAPTURE(seed, sigma);
                ExplicitComplex link = descending_link(sp, sigma, sp.n);
                ExplicitComplex bary = barycentric_descending_link(sp, top, sigma);
                REQUIRE(link.empty() == bary.empty());
                if (link.empty()) continue;
                int k = std::max(link.top_dim(), bary.top_dim());
                REQUIRE(padded_betti(link, k) == padded_betti(bary, k));
            }
    }
    REQUIRE(spaces == 10);
}

TEST_CASE("coface part is the flag complex on the witness pool", "[morse]") {
    ExactSpace c = make_circle(12);
    ExplicitComplex vr = vietoris_rips(c, Rational(1, 4), 3);
    for (const auto& level : vr.dims)
        for (const auto& sigma : level) {
            if (sigma.size() == 1) continue;
            CofaceData cd = descending_coface_data(c, sigma);
            ExplicitComplex flags = coface_flag_complex(cd, 13, nullptr);
            // brute force: subsets of W that are pairwise within diam(sigma)
            const auto t = simplex_diameter(c, sigma);
            REQUIRE(cd.W.size() <= 20);
            for (std::uint32_t mask = 1; mask < (1u << cd.W.size()); ++mask) {
                Vertices s;
                for (std::size_t b = 0; b < cd.W.size(); ++b)
                    if (mask & (1u << b)) s.push_back(cd.W[b]);
                bool clique = true;
                for (std::size_t i = 0; i < s.size() && clique; ++i)
                    for (std::size_t j = i + 1; j < s.size(); ++j)
                        if (!c.le(c.dist(s[i], s[j]), t)) {
                            clique = false;
                            break;
                        }
                CAPTURE(sigma, s);
                REQUIRE(flags.contains(s) == clique);
            }
        }
}

TEST_CASE("cone classifications imply acyclic materializations", "[morse]") {
    long cones = 0;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        ExactSpace sp = testsupport::random_space(seed);
        if (sp.n > 7) continue;
        auto spec = diameter_spectrum(sp);
        ExplicitComplex top = vietoris_rips(sp, spec.values.back(), sp.n);
        for (const auto& level : top.dims)
            for (const auto& sigma : level) {
                auto cls = classify_descending_link(sp, sigma);
                if (cls.kind != DLinkClassification::Kind::ConeFace &&
                    cls.kind != DLinkClassification::Kind::ConeCoface)
                    continue;
                ++cones;
                ExplicitComplex link = descending_link(sp, sigma, sp.n);
                CAPTURE(seed, sigma);
                REQUIRE_FALSE(link.empty());
                REQUIRE(is_acyclic(link, link.top_dim()));
            }
    }
    REQUIRE(cones > 50);  // the property must actually exercise something
}

TEST_CASE("attachment property holds for circle(12) at 1/4", "[morse]") {
    ExactSpace c = make_circle(12);
    auto spec = diameter_spectrum(c);
    ExplicitComplex vr = vietoris_rips(c, Rational(1, 4), 3);
    auto ord = attachment_order(c, vr, spec);
    auto rep = verify_attachment_property(c, vr, ord);
    CAPTURE(rep.detail);
    REQUIRE(rep.pass);
}

TEST_CASE("violated order fails with a concrete witness", "[morse]") {
    ExactSpace c = make_circle(12);
    auto spec = diameter_spectrum(c);
    ExplicitComplex vr = vietoris_rips(c, Rational(1, 6), 2);
    auto ord = attachment_order(c, vr, spec);
    // move the last simplex to the front: a fat simplex now precedes its faces
    std::rotate(ord.simplices.begin(), ord.simplices.end() - 1,
                ord.simplices.end());
    std::rotate(ord.diam.begin(), ord.diam.end() - 1, ord.diam.end());
    std::rotate(ord.spectrum_index.begin(), ord.spectrum_index.end() - 1,
                ord.spectrum_index.end());
    auto rep = verify_attachment_property(c, vr, ord);
    REQUIRE_FALSE(rep.pass);
    REQUIRE_FALSE(rep.detail.empty());
    REQUIRE_FALSE(rep.simplex.empty());
}

TEST_CASE("single-vertex space passes trivially", "[morse]") {
    ExactSpace sp;
    sp.n = 1;
    sp.labels = {"p0"};
    sp.table = {Rational(0)};
    sp.provenance = "point";
    auto spec = diameter_spectrum(sp);
    ExplicitComplex vr = vietoris_rips(sp, Rational(1), 3);
    auto ord = attachment_order(sp, vr, spec);
    REQUIRE(verify_attachment_property(sp, vr, ord).pass);
}

TEST_CASE("non-permutation orders are rejected as errors", "[morse]") {
    ExactSpace c = make_circle(12);
    auto spec = diameter_spectrum(c);
    ExplicitComplex vr = vietoris_rips(c, Rational(1, 6), 2);
    auto ord = attachment_order(c, vr, spec);
    // duplicate an entry: no longer a permutation
    auto broken = ord;
    broken.simplices[1] = broken.simplices[0];
    REQUIRE_THROWS_AS(verify_attachment_property(c, vr, broken),
                      std::invalid_argument);
    // drop an entry: wrong size
    auto shorter = ord;
    shorter.simplices.pop_back();
    REQUIRE_THROWS_AS(verify_attachment_property(c, vr, shorter),
                      std::invalid_argument);
}

TEST_CASE("join truncation respects the budget", "[morse]") {
    ExactSpace c = make_circle(12);
    Budget tiny{5};
    REQUIRE_THROWS_AS(descending_link(c, {0, 3}, 8, &tiny), BudgetError);
}
