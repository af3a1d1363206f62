#pragma once

#include <optional>
#include <vector>

#include "mcluster/homological.hpp"
#include "mcluster/rational.hpp"

// brute-force representation theory of the equioriented A_q quiver
// (arrows v+1 -> v), computed from explicit commuting linear systems.
// nothing here reads the closed-form predicates it is used to check.
namespace mcluster::oracle {

// dim Hom(M, N) by solving the commuting system
int hom_dim(const IntervalModule& M, const IntervalModule& N);

// dim Ext^1(M, N) from the projective resolution 0 -> P_{a-1} -> P_b -> M
int ext1_dim(const IntervalModule& M, const IntervalModule& N);

// per-vertex scalars of the canonical nonzero morphism (hom dim must be 1)
std::vector<Rational> canonical_hom(const IntervalModule& M,
                                    const IntervalModule& N);

struct KernelCokernel {
    std::optional<IntervalModule> kernel;
    std::optional<IntervalModule> cokernel;
};

// kernel and cokernel supports of the canonical morphism
KernelCokernel kernel_cokernel(const IntervalModule& M, const IntervalModule& N);

MorphKind morphism_kind(const IntervalModule& M, const IntervalModule& N);

// Cone(f) = coker(f) + Sigma ker(f) mapped to diagonals of the (q+3)-gon
ObjectRepr cone_assembly(const IntervalModule& M, const IntervalModule& N);

// arrow of the AR quiver of mod kA_q: dim rad(M,N)/rad^2(M,N) = 1, with
// rad^2 spanned by composites through third modules
bool irreducible(const IntervalModule& M, const IntervalModule& N);

std::vector<IntervalModule> all_intervals(int q);

} // namespace mcluster::oracle
