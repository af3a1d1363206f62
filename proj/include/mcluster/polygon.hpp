#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcluster/errors.hpp"

namespace mcluster {

// ambient data of the model: an N-gon with N = n*m + 2, vertices 1..N
// clockwise, all vertex arithmetic reduced into 1..N
struct PolygonConfig {
    int n;
    int m;
    int N;

    PolygonConfig(int n_, int m_);

    // rho_m = 2*m*pi/N kept symbolically as the pair (m, N)
    std::pair<int, int> rotation_step() const { return {m, N}; }
};

// normalized chord between non-adjacent vertices: 1 <= i < j <= N,
// j - i >= 2, and (i, j) != (1, N) since that is a boundary edge
struct Diagonal {
    int i = 0;
    int j = 0;

    auto operator<=>(const Diagonal&) const = default;
};

// result of normalizing an arbitrary vertex pair: either a diagonal or the
// edge marker that downstream operations treat as the zero object
class Chord {
public:
    static Chord edge() { return Chord{}; }
    static Chord of(Diagonal d) {
        Chord c;
        c.d_ = d;
        return c;
    }
    bool is_edge() const { return !d_.has_value(); }
    const Diagonal& diag() const { return d_.value(); }

private:
    std::optional<Diagonal> d_;
};

enum class ParityClass { even_even, odd_odd, mixed };

// reduce into 1..N
int mod_vertex(long long a, int N);

// canonical chord of the unordered pair {a, b}; throws invalid_chord when
// a == b mod N
Chord normalize(long long a, long long b, int N);

// same, but the caller promises the pair is a genuine diagonal
Diagonal normalize_diagonal(long long a, long long b, int N);

int span(const Diagonal& d);                    // j - i in 1..N window
bool is_central(const Diagonal& d, int N);      // span == N/2

// true iff the two polygon parts cut off by d have side counts = 2 mod m;
// equivalently span(d) = 1 mod m
bool is_m_diagonal(const Diagonal& d, const PolygonConfig& cfg);

// strict interior crossing; shared endpoints do not cross
bool crosses(const Diagonal& a, const Diagonal& b);

// translate (i, j) -> (i - step, j - step) mod N
Diagonal rotate_tau(const Diagonal& d, int step, int N);
Diagonal rotate_tau_m(const Diagonal& d, const PolygonConfig& cfg);

// reflection of the free endpoint about the long diagonal through anchor;
// for anchor 1 this is j -> N + 2 - j
Diagonal mirror(const Diagonal& d, int anchor, int N);

ParityClass parity_class(const Diagonal& d);

// all m-diagonals, lexicographically sorted, no duplicates
std::vector<Diagonal> enumerate_m_diagonals(const PolygonConfig& cfg);

std::string to_string(const Diagonal& d);
std::string to_string(ParityClass p);

} // namespace mcluster
