#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "mcluster/tquiver.hpp"

using namespace mcluster;

namespace {

int idx(const TranslationQuiver& Q, int i, int j) {
    return Q.require_index(VertexLabel::of(Diagonal{i, j}));
}

std::vector<int> component_sizes(const std::vector<TranslationQuiver>& comps) {
    std::vector<int> sizes;
    for (const auto& c : comps) sizes.push_back(c.vertex_count());
    return sizes;
}

} // namespace

TEST_CASE("gamma of the decagon") {
    TranslationQuiver Q = build_gamma_m(PolygonConfig(8, 1));
    CHECK(Q.vertex_count() == 35);
    CHECK(connected_components(Q).size() == 1);

    // out-arrows of (1,3) are (1,4) and (2,3); the latter is an edge
    CHECK(Q.out[idx(Q, 1, 3)] == std::vector<int>{idx(Q, 1, 4)});
    CHECK(Q.has_arrow(idx(Q, 1, 4), idx(Q, 1, 5)));
    CHECK(Q.has_arrow(idx(Q, 1, 4), idx(Q, 2, 4)));
}

TEST_CASE("gamma^2 of the decagon") {
    TranslationQuiver Q = build_gamma_m(PolygonConfig(4, 2));
    CHECK(Q.vertex_count() == 15);
    CHECK(Q.out[idx(Q, 1, 4)] == std::vector<int>{idx(Q, 1, 6)});
}

TEST_CASE("smallest polygon") {
    TranslationQuiver Q = build_gamma_m(PolygonConfig(2, 1));
    CHECK(Q.vertex_count() == 2);
    CHECK(Q.arrow_count() == 0);
    CHECK(Q.tau[idx(Q, 1, 3)] == idx(Q, 2, 4));
}

TEST_CASE("sectional paths") {
    TranslationQuiver Q = build_gamma_m(PolygonConfig(8, 1));
    int start = idx(Q, 1, 3);

    auto len0 = sectional_paths(Q, start, 0);
    REQUIRE(len0.size() == 1);
    CHECK(len0[0] == std::vector<int>{start});

    auto len1 = sectional_paths(Q, start, 1);
    CHECK(len1.size() == Q.out[start].size());

    auto len2 = sectional_paths(Q, start, 2);
    std::set<std::vector<int>> set2(len2.begin(), len2.end());
    CHECK(set2.count({start, idx(Q, 1, 4), idx(Q, 1, 5)}));
    // tau(2,4) = (1,3) makes (1,3) -> (1,4) -> (2,4) non-sectional
    CHECK(!set2.count({start, idx(Q, 1, 4), idx(Q, 2, 4)}));

    CHECK_THROWS_AS(sectional_paths(Q, 999, 1), unknown_vertex);
}

TEST_CASE("power of a quiver") {
    TranslationQuiver Q = build_gamma_m(PolygonConfig(8, 1));

    TranslationQuiver P1 = power(Q, 1);
    CHECK(P1.labels == Q.labels);
    CHECK(P1.out == Q.out);
    CHECK(P1.tau == Q.tau);

    TranslationQuiver P2 = power(Q, 2);
    CHECK(P2.labels == Q.labels);
    auto comps = connected_components(P2);
    auto sizes = component_sizes(comps);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{10, 10, 15});

    TranslationQuiver Q14 = build_gamma_m(PolygonConfig(15, 1));
    auto comps5 = connected_components(power(Q14, 5));
    CHECK(comps5.size() == 3);

    TranslationQuiver Q11 = build_gamma_m(PolygonConfig(12, 1));
    auto sizes6 = component_sizes(connected_components(power(Q11, 6)));
    std::sort(sizes6.begin(), sizes6.end());
    CHECK(sizes6 == std::vector<int>{7, 7, 7, 14, 14, 14, 14});
}

TEST_CASE("tau orbits") {
    TranslationQuiver Q = build_gamma_m(PolygonConfig(8, 1));
    auto orbits = tau_orbits(Q);
    auto orbit_size_of = [&](int v) -> std::size_t {
        for (const auto& o : orbits)
            if (std::find(o.begin(), o.end(), v) != o.end()) return o.size();
        return 0;
    };
    CHECK(orbit_size_of(idx(Q, 1, 3)) == 10);
    CHECK(orbit_size_of(idx(Q, 1, 6)) == 5); // central

    TranslationQuiver P2 = power(Q, 2);
    for (const auto& o : tau_orbits(P2)) CHECK(o.size() == 5);
}

TEST_CASE("ZA_p automorphism identities") {
    for (int p = 1; p <= 5; ++p)
        for (long long k = -6; k <= 6; ++k)
            for (int row = 1; row <= p; ++row) {
                ZAVertex v{k, row};
                CHECK(za_sigma(za_tau(v), p) == za_tau(za_sigma(v, p)));
                CHECK(za_sigma(za_sigma(v, p), p) == za_tau(v, -(p + 1)));
            }
    // Sigma maps arrows to arrows
    int p = 4;
    for (long long k = -3; k <= 3; ++k)
        for (int row = 1; row < p; ++row) {
            ZAVertex a = za_sigma(ZAVertex{k, row}, p);
            ZAVertex b = za_sigma(ZAVertex{k, row + 1}, p);
            bool up = b == ZAVertex{a.k, a.row + 1};
            bool down = b == ZAVertex{a.k + 1, a.row - 1};
            CHECK((up || down));
        }
}

TEST_CASE("ZA quotients") {
    CHECK(build_za_quotient(QuotientSpec{4, 1, 0}).vertex_count() == 10);
    CHECK(build_za_quotient(QuotientSpec{2, 1, 2}).vertex_count() == 7);
    CHECK(build_za_quotient(QuotientSpec{3, 2, 1}).vertex_count() == 15);
    CHECK_THROWS_AS(build_za_quotient(QuotientSpec{3, 0, 0}), mcluster::error);
}

TEST_CASE("canonical presentations") {
    // Sigma^2 = tau^{-(p+1)}
    CHECK(canonical_spec(QuotientSpec{3, 2, 1}) ==
          canonical_spec(QuotientSpec{3, 0, 5}));
    CHECK(canonical_spec(QuotientSpec{2, 3, 1}) ==
          canonical_spec(QuotientSpec{2, 1, 4}));
    // one-row quotients forget the reflection
    CHECK(canonical_spec(QuotientSpec{1, 6, 1}) ==
          canonical_spec(QuotientSpec{1, 0, 7}));
}

TEST_CASE("isomorphism search") {
    TranslationQuiver Q = build_gamma_m(PolygonConfig(8, 1));
    auto comps = connected_components(power(Q, 2));
    REQUIRE(comps.size() == 3);
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) {
                  return a.vertex_count() > b.vertex_count();
              });

    // the two 10-vertex components are isomorphic
    CHECK(iso_translation_quivers(comps[1], comps[2]).has_value());
    // and each is ZA_4 / Sigma
    CHECK(iso_translation_quivers(comps[1],
                                  build_za_quotient(QuotientSpec{4, 1, 0}))
              .has_value());
    // the 15-vertex component is gamma^2 of the decagon = ZA_3/tau^{-1}Sigma^2
    CHECK(iso_translation_quivers(comps[0],
                                  build_za_quotient(QuotientSpec{3, 2, 1}))
              .has_value());
    CHECK(iso_translation_quivers(build_gamma_m(PolygonConfig(4, 2)),
                                  build_za_quotient(QuotientSpec{3, 2, 1}))
              .has_value());
    // size mismatch
    CHECK(!iso_translation_quivers(comps[0], comps[1]).has_value());
    // same size, different presentation
    CHECK(!iso_translation_quivers(comps[1],
                                   build_za_quotient(QuotientSpec{2, 0, 5}))
               .has_value());
}

TEST_CASE("gamma^m is a component of the m-th power") {
    for (int n = 2; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            PolygonConfig cfg(n, m);
            TranslationQuiver gm = build_gamma_m(cfg);
            auto comps = connected_components(
                power(build_gamma_m(PolygonConfig(n * m, 1)), m));
            int hits = 0;
            for (const auto& c : comps)
                if (c.vertex_count() == gm.vertex_count() &&
                    iso_translation_quivers(c, gm))
                    ++hits;
            CHECK(hits == 1);
        }
}

TEST_CASE("power keeps vertices and composes tau") {
    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m) {
            TranslationQuiver base = build_gamma_m(PolygonConfig(n * m, 1));
            TranslationQuiver P = power(base, m);
            CHECK(P.vertex_count() == base.vertex_count());
            for (int v = 0; v < base.vertex_count(); ++v) {
                int t = v;
                for (int s = 0; s < m; ++s) t = base.tau[t];
                CHECK(P.tau[v] == t);
            }
        }
}
