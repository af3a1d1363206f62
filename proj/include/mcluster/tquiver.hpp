#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "mcluster/polygon.hpp"

namespace mcluster {

// vertex identity usable for both polygon quivers and ZA_p quotients;
// ordering on (tag, a, b) fixes every deterministic enumeration we emit
struct VertexLabel {
    int tag = 0; // 0: diagonal (a=i, b=j); 1: ZA coordinate (a=k, b=row)
    int a = 0;
    int b = 0;

    auto operator<=>(const VertexLabel&) const = default;

    static VertexLabel of(const Diagonal& d) { return {0, d.i, d.j}; }
    static VertexLabel za(int k, int row) { return {1, k, row}; }
    bool is_diagonal() const { return tag == 0; }
    Diagonal diagonal() const { return Diagonal{a, b}; }
};

std::string to_string(const VertexLabel& v);

// finite stable translation quiver: total bijective tau and the mesh axiom
// (arrow u -> v iff arrow tau(v) -> u); arrow multiplicities here are <= 1
struct TranslationQuiver {
    std::vector<VertexLabel> labels;       // sorted ascending
    std::vector<std::vector<int>> out;     // sorted target indices
    std::vector<std::vector<int>> in;      // derived, sorted
    std::vector<int> tau;                  // vertex -> vertex

    int vertex_count() const { return (int)labels.size(); }
    int arrow_count() const;
    std::optional<int> index_of(const VertexLabel& v) const;
    int require_index(const VertexLabel& v) const;
    bool has_arrow(int u, int v) const;

    // recompute `in` from `out` and check all invariants
    void finalize_and_validate(bool require_mesh = true);
};

// row coordinates on ZA_p: arrows (k,i)->(k,i+1) and (k,i+1)->(k+1,i),
// tau(k,i) = (k-1,i)
struct ZAVertex {
    long long k = 0;
    int row = 1;

    auto operator<=>(const ZAVertex&) const = default;
};

// presentation ZA_p / (tau^{-s} Sigma^r)
struct QuotientSpec {
    int p = 1;
    int r = 0;
    int s = 0;
};

// canonical form of a presentation: Sigma^2 = tau^{-(p+1)} collapses r to
// its parity, and on one row (p = 1) Sigma itself is a plain shift
struct CanonicalSpec {
    int p = 1;
    int sigma = 0;   // 0 or 1
    long long shift = 0;

    auto operator<=>(const CanonicalSpec&) const = default;
};

CanonicalSpec canonical_spec(const QuotientSpec& q);
std::string to_string(const QuotientSpec& q);
std::string to_string(const CanonicalSpec& q);

ZAVertex za_tau(const ZAVertex& v, long long t = 1);      // k -= t
ZAVertex za_sigma(const ZAVertex& v, int p);              // (k+row, p+1-row)
ZAVertex za_phi(const ZAVertex& v, const QuotientSpec& q);

// diagonal quiver of the (nm+2)-gon: arrows (i,j)->(i,j+m) and (i+m,j)
// whenever the image is again an m-diagonal, translation rotate_tau_m
TranslationQuiver build_gamma_m(const PolygonConfig& cfg);

// all paths start -> ... of the given length with tau(x_{t+1}) != x_{t-1}
// at every interior step
std::vector<std::vector<int>> sectional_paths(const TranslationQuiver& Q,
                                              int start, int length);

// same vertices, one arrow per sectional path of length m, translation
// tau^m
TranslationQuiver power(const TranslationQuiver& Q, int m);

// weakly connected pieces under arrows together with tau edges (a tau-orbit
// without arrows is still one component); deterministic order by smallest
// vertex label
std::vector<TranslationQuiver> connected_components(const TranslationQuiver& Q);
std::vector<int> component_index(const TranslationQuiver& Q);

// orbits of the tau permutation, each listed from its smallest vertex
std::vector<std::vector<int>> tau_orbits(const TranslationQuiver& Q);

// finite quotient of ZA_p by tau^{-s} Sigma^r
TranslationQuiver build_za_quotient(const QuotientSpec& spec);

// arrow- and tau-preserving bijection Q1 -> Q2 if one exists
std::optional<std::vector<int>> iso_translation_quivers(
    const TranslationQuiver& Q1, const TranslationQuiver& Q2);

} // namespace mcluster
