#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcluster/polygon.hpp"
#include "mcluster/tquiver.hpp"

namespace mcluster {

// global shape of a component ZA_p/(tau^{-s} Sigma^r): the Sigma-parity
// decides cylinder vs Moebius band; p = 1 components degenerate to a bare
// tau-cycle where the band notion is empty
enum class ShapeClass { cylinder, moebius_band, rank_one_cycle };

std::string to_string(ShapeClass s);

struct ComponentReport {
    TranslationQuiver component;
    int size = 0;
    ShapeClass shape = ShapeClass::cylinder;
    int rank_p = 0;
    std::optional<QuotientSpec> matched_spec;
    std::optional<int> u_cluster;
    std::optional<std::vector<int>> witness_iso; // into build_za_quotient(matched_spec)
    bool is_gamma_m = false;
};

struct PredictedEntry {
    QuotientSpec spec;
    int multiplicity = 1;
    bool is_gamma_m = false;
    ShapeClass shape = ShapeClass::cylinder;
};

struct PredictedDecomposition {
    std::vector<PredictedEntry> entries;
    int component_count = 0;
    bool prediction_gap = false; // certification-only fallback
};

struct VerificationReport {
    int n = 0, m = 0, N = 0;
    bool pass = false;
    int computed_components = 0;
    int predicted_components = 0;
    std::vector<std::string> computed;  // canonical spec per component
    std::vector<std::string> predicted; // canonical multiset
    std::vector<std::string> messages;
};

// full pipeline: gamma = diagonal quiver of the N-gon, its m-th power,
// components, and a certified report per component
std::vector<ComponentReport> decompose(const PolygonConfig& cfg);

// boundary-row heuristic plus certification against a quotient candidate;
// the returned rank is the certified one
std::pair<ShapeClass, int> classify_shape(const TranslationQuiver& comp);

PredictedDecomposition predict(const PolygonConfig& cfg);

VerificationReport verify_decomposition(const PolygonConfig& cfg);

// matches a non-gamma^m component against the u-cluster quiver the
// divisibility conditions select, certifying by explicit isomorphism
std::optional<int> u_cluster_match(const ComponentReport& report,
                                   const PolygonConfig& cfg);

// number of components of the m-th power meeting the tau-orbit of d,
// cross-checked against the orbit laws
int orbit_component_count(const PolygonConfig& cfg, const Diagonal& d);

// m even, d = (1, j): whether (1,j) and its mirror share a component,
// equивalent to m | |2(2-j)|; checked against direct membership
bool mirror_criterion(const PolygonConfig& cfg, const Diagonal& d);

// internal helpers exposed for tests and the verify driver
QuotientSpec gamma_m_presentation(const PolygonConfig& cfg); // ZA_{n-1}/tau^{-1}Sigma^m
int predicted_component_count(int m);

} // namespace mcluster
