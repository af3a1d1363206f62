#pragma once

#include <map>
#include <vector>

#include "mcluster/polygon.hpp"
#include "mcluster/tquiver.hpp"

namespace mcluster {

// one minimal positive rotation of a diagonal about the pivot vertex
struct PivotMove {
    int pivot;
    Diagonal from;
    Diagonal to;
};

using PivotPath = std::vector<PivotMove>;

// hom spaces of the mesh category of a stable translation quiver, computed
// as path spaces modulo the two-sided ideal of the mesh relations
// r_v = sum over arrows a: u -> v of a . sigma(a) with sigma(a): tau(v) -> u.
// the ideal is homogeneous in path length, so dimensions are accumulated
// degree by degree until an entire degree vanishes (from then on every
// longer path factors through a vanishing one)
class MeshAlgebra {
public:
    explicit MeshAlgebra(const TranslationQuiver& Q);

    const TranslationQuiver& quiver() const { return Q_; }

    // dim Hom(x, y) in the mesh category; identity counted at x == y
    int hom_dim(int x, int y) const;

    // dim rad(x,y) - dim rad^2(x,y); checked against arrow multiplicity
    int irr_dim(int x, int y) const;

    int rad_dim(int x, int y) const;
    int rad2_dim(int x, int y) const;

private:
    struct SourceTable {
        std::vector<int> total; // per target vertex
        std::vector<int> deg1;
        std::vector<int> rad2;
    };
    const SourceTable& table_for(int x) const;
    SourceTable compute(int x, int length_bound) const;

    TranslationQuiver Q_;
    std::vector<std::vector<int>> sigma_; // sigma_[v][t]: source of the mesh
                                          // partner of the t-th in-arrow of v
    mutable std::map<int, SourceTable> cache_;
};

int mesh_hom_dim(const MeshAlgebra& A, int x, int y);
int irr_dim(const MeshAlgebra& A, int x, int y);

// checks on the gamma^m component of power(Gamma, m): arrows coincide with
// sectional-path pairs of length m in Gamma and with irr_dim = 1 pairs
struct SectionalIrreducibleReport {
    bool pass = true;
    std::vector<std::string> mismatches;
};
SectionalIrreducibleReport verify_sectional_irreducibles(const PolygonConfig& cfg);

// the length-m pivoting path realizing an arrow of build_gamma_m
PivotPath arrow_to_pivot_moves(const Diagonal& from, const Diagonal& to,
                               const PolygonConfig& cfg);

} // namespace mcluster
