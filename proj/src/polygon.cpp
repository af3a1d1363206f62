#include "mcluster/polygon.hpp"

#include <algorithm>

namespace mcluster {

PolygonConfig::PolygonConfig(int n_, int m_) : n(n_), m(m_), N(n_ * m_ + 2) {
    if (n < 2) throw error("PolygonConfig: n must be >= 2");
    if (m < 1) throw error("PolygonConfig: m must be >= 1");
}

int mod_vertex(long long a, int N) {
    long long r = a % N;
    if (r <= 0) r += N;
    return (int)r;
}

Chord normalize(long long a, long long b, int N) {
    int x = mod_vertex(a, N);
    int y = mod_vertex(b, N);
    if (x == y) throw invalid_chord("normalize: endpoints coincide mod N");
    if (x > y) std::swap(x, y);
    int s = y - x;
    if (s == 1 || s == N - 1) return Chord::edge();
    return Chord::of(Diagonal{x, y});
}

Diagonal normalize_diagonal(long long a, long long b, int N) {
    Chord c = normalize(a, b, N);
    if (c.is_edge()) throw invalid_chord("normalize_diagonal: boundary edge");
    return c.diag();
}

int span(const Diagonal& d) { return d.j - d.i; }

bool is_central(const Diagonal& d, int N) {
    return N % 2 == 0 && span(d) == N / 2;
}

bool is_m_diagonal(const Diagonal& d, const PolygonConfig& cfg) {
    // the part on one side of d has span(d)+1 sides, the other N-span(d)+1;
    // both are 2 mod m exactly when span(d) = 1 mod m
    return span(d) % cfg.m == 1 % cfg.m;
}

bool crosses(const Diagonal& a, const Diagonal& b) {
    auto inside = [&](int v) { return a.i < v && v < a.j; };
    if (b.i == a.i || b.i == a.j || b.j == a.i || b.j == a.j) return false;
    return inside(b.i) != inside(b.j);
}

Diagonal rotate_tau(const Diagonal& d, int step, int N) {
    return normalize_diagonal((long long)d.i - step, (long long)d.j - step, N);
}

Diagonal rotate_tau_m(const Diagonal& d, const PolygonConfig& cfg) {
    return rotate_tau(d, cfg.m, cfg.N);
}

Diagonal mirror(const Diagonal& d, int anchor, int N) {
    if (d.i != anchor && d.j != anchor)
        throw bad_anchor("mirror: anchor is not an endpoint");
    int other = d.i == anchor ? d.j : d.i;
    long long image = 2LL * anchor + N - other;
    return normalize_diagonal(anchor, image, N);
}

ParityClass parity_class(const Diagonal& d) {
    bool ei = d.i % 2 == 0;
    bool ej = d.j % 2 == 0;
    if (ei && ej) return ParityClass::even_even;
    if (!ei && !ej) return ParityClass::odd_odd;
    return ParityClass::mixed;
}

std::vector<Diagonal> enumerate_m_diagonals(const PolygonConfig& cfg) {
    std::vector<Diagonal> out;
    for (int i = 1; i <= cfg.N; ++i)
        for (int j = i + 2; j <= cfg.N; ++j) {
            if (i == 1 && j == cfg.N) continue;
            Diagonal d{i, j};
            if (is_m_diagonal(d, cfg)) out.push_back(d);
        }
    return out; // loop order already lexicographic
}

std::string to_string(const Diagonal& d) {
    return std::to_string(d.i) + "-" + std::to_string(d.j);
}

std::string to_string(ParityClass p) {
    switch (p) {
    case ParityClass::even_even: return "EE";
    case ParityClass::odd_odd: return "OO";
    default: return "Mixed";
    }
}

} // namespace mcluster
