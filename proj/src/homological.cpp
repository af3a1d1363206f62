#include "mcluster/homological.hpp"

#include <algorithm>

namespace mcluster {

ModuleLabel diagonal_to_object(const Diagonal& d, int N) {
    ModuleLabel label;
    if (d.j == N) {
        label.shifted_projective = true;
        label.index = d.i - 1;
        label.interval = IntervalModule{1, d.i - 1, N - 3};
    } else {
        label.shifted_projective = false;
        label.interval = IntervalModule{d.i, d.j - 2, N - 3};
    }
    return label;
}

Diagonal object_to_diagonal(const ModuleLabel& label, int N) {
    if (label.shifted_projective)
        return normalize_diagonal(label.index + 1, N, N);
    return normalize_diagonal(label.interval.a, label.interval.b + 2, N);
}

int hom_dim_modkq(const IntervalModule& M, const IntervalModule& N) {
    if (M.q != N.q) throw error("hom_dim_modkq: rank mismatch");
    // the unique common factor is a quotient M[c,b] of M and a submodule
    // M[c,b] of N, which exists exactly for a <= c <= b <= d
    return (M.a <= N.a && N.a <= M.b && M.b <= N.b) ? 1 : 0;
}

namespace {

// rotate both diagonals so the source passes through vertex 1; returns
// (j, rotated target) with source (1, j)
struct SlicePosition {
    int j;
    Diagonal target;
    int rotation;
};

SlicePosition to_slice(const Diagonal& d1, const Diagonal& d2, int N) {
    int r = d1.i - 1;
    SlicePosition pos;
    pos.rotation = r;
    pos.j = d1.j - r;
    pos.target = rotate_tau(d2, r, N);
    return pos;
}

} // namespace

int hom_dim_c(const Diagonal& d1, const Diagonal& d2, int N) {
    SlicePosition pos = to_slice(d1, d2, N);
    const Diagonal& e = pos.target;
    if (e.j == N) return 0; // shifted projective slice
    return (e.i <= pos.j - 2 && e.j >= pos.j) ? 1 : 0;
}

bool ext1_nonzero(const Diagonal& d1, const Diagonal& d2, int N) {
    bool ext = hom_dim_c(d1, rotate_tau(d2, 1, N), N) > 0;
    if (ext != crosses(d1, d2))
        throw theorem_violation("ext1_nonzero disagrees with crossing at " +
                                to_string(d1) + " / " + to_string(d2));
    return ext;
}

MorphismClass classify_morphism(const Diagonal& d1, const Diagonal& d2, int N) {
    MorphismClass mc;
    mc.source = d1;
    mc.target = d2;
    mc.hom_dim = hom_dim_c(d1, d2, N);
    if (mc.hom_dim == 0) {
        mc.kind = MorphKind::zero;
        return mc;
    }
    if (d1 == d2) {
        mc.kind = MorphKind::iso;
        return mc;
    }
    SlicePosition pos = to_slice(d1, d2, N);
    int k = pos.target.i, l = pos.target.j;
    if (k == 1)
        mc.kind = MorphKind::injective;
    else if (l == pos.j)
        mc.kind = MorphKind::surjective;
    else
        mc.kind = MorphKind::neither;
    return mc;
}

ObjectRepr cone(const Diagonal& d1, const Diagonal& d2, int N) {
    if (hom_dim_c(d1, d2, N) == 0)
        throw no_canonical_triangle("NoCanonicalTriangle: Hom(" + to_string(d1) +
                                    ", " + to_string(d2) + ") = 0");
    SlicePosition pos = to_slice(d1, d2, N);
    int j = pos.j, k = pos.target.i, l = pos.target.j;
    ObjectRepr result;
    // cokernel part M_{(j-1, l)} unless the map is surjective (l == j)
    if (l != j) {
        Diagonal c = normalize_diagonal((long long)j - 1 + pos.rotation,
                                        (long long)l + pos.rotation, N);
        result.summands.push_back({c, 0});
    }
    // shifted kernel part Sigma M_{(1, 1+k)} unless injective (k == 1)
    if (k != 1) {
        Diagonal ker = normalize_diagonal(1 + pos.rotation,
                                          (long long)1 + k + pos.rotation, N);
        result.summands.push_back({ker, 1});
    }
    std::sort(result.summands.begin(), result.summands.end());
    return result;
}

std::vector<Diagonal> framed_set(const Diagonal& d, const PolygonConfig& cfg) {
    if (!is_m_diagonal(d, cfg))
        throw not_in_power("framed_set: not an m-diagonal");
    std::vector<Diagonal> out;
    for (Chord c : {Chord::of(d), normalize(d.i, (long long)d.j - cfg.m, cfg.N),
                    normalize((long long)d.i - cfg.m, d.j, cfg.N),
                    normalize((long long)d.i - cfg.m, (long long)d.j - cfg.m,
                              cfg.N)}) {
        if (!c.is_edge()) out.push_back(c.diag());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Triangle ar_triangle(const Diagonal& d, const PolygonConfig& cfg) {
    if (!is_m_diagonal(d, cfg))
        throw not_in_power("ar_triangle: not an m-diagonal");
    Triangle t;
    Diagonal start = rotate_tau_m(d, cfg);
    t.a = ObjectRepr::of(start);
    for (Chord c : {normalize((long long)d.i - cfg.m, d.j, cfg.N),
                    normalize(d.i, (long long)d.j - cfg.m, cfg.N)}) {
        if (!c.is_edge()) t.b.summands.push_back({c.diag(), 0});
    }
    std::sort(t.b.summands.begin(), t.b.summands.end());
    t.c = ObjectRepr::of(d);
    t.shifted_a = ObjectRepr::of(start, 1);
    // w != 0 comes down to Ext^1(M_d, M_{tau_m d}) != 0, i.e. the crossing
    t.connecting_nonzero = ext1_nonzero(d, start, cfg.N);
    return t;
}

std::vector<Diagonal> one_mesh(const Diagonal& d, int N) {
    std::vector<Diagonal> out;
    for (Chord c : {Chord::of(d), normalize(d.i, (long long)d.j - 1, N),
                    normalize((long long)d.i - 1, d.j, N),
                    normalize((long long)d.i - 1, (long long)d.j - 1, N)}) {
        if (!c.is_edge()) out.push_back(c.diag());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Diagonal> m_dilatation(const Diagonal& d, const PolygonConfig& cfg) {
    if (!is_m_diagonal(d, cfg))
        throw not_in_power("m_dilatation: mesh ends outside the power quiver");
    return framed_set(d, cfg);
}

ObjectRepr shift_normalize(const ObjectRepr& obj, const PolygonConfig& cfg) {
    ObjectRepr out;
    for (const auto& s : obj.summands) {
        Diagonal d = s.d;
        for (int t = 0; t < s.shift; ++t) d = rotate_tau_m(d, cfg);
        out.summands.push_back({d, 0});
    }
    std::sort(out.summands.begin(), out.summands.end());
    return out;
}

std::string to_string(MorphKind k) {
    switch (k) {
    case MorphKind::zero: return "zero";
    case MorphKind::iso: return "iso";
    case MorphKind::injective: return "injective";
    case MorphKind::surjective: return "surjective";
    default: return "neither";
    }
}

std::string to_string(const Summand& s) {
    std::string out;
    for (int t = 0; t < s.shift; ++t) out += "S";
    if (s.shift) out += ".";
    out += "M(" + std::to_string(s.d.i) + "," + std::to_string(s.d.j) + ")";
    return out;
}

std::string to_string(const ObjectRepr& o) {
    if (o.is_zero()) return "0";
    std::string out;
    for (std::size_t t = 0; t < o.summands.size(); ++t) {
        if (t) out += " + ";
        out += to_string(o.summands[t]);
    }
    return out;
}

} // namespace mcluster
