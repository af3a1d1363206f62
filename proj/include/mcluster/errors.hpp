#pragma once

#include <stdexcept>
#include <string>

namespace mcluster {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a == b mod N, so the requested chord is degenerate
struct invalid_chord : error {
    using error::error;
};

// mirror anchor is not an endpoint of the diagonal
struct bad_anchor : error {
    using error::error;
};

struct unknown_vertex : error {
    using error::error;
};

// the quotient auto-equivalence has a fixed point or nonpositive shift
struct degenerate_quotient : error {
    using error::error;
};

// cone requested for a zero morphism
struct no_canonical_triangle : error {
    using error::error;
};

// a computed value contradicts one of the statements the artifact verifies
struct theorem_violation : error {
    using error::error;
};

// two internal routes that must agree disagree
struct model_inconsistency : error {
    using error::error;
};

struct verification_failure : error {
    using error::error;
};

// component certified against no candidate quotient presentation
struct unclassified_component : error {
    using error::error;
};

// operation restricted to m-diagonals applied to something else
struct not_in_power : error {
    using error::error;
};

struct input_cap_exceeded : error {
    using error::error;
};

} // namespace mcluster
