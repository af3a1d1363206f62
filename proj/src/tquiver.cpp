#include "mcluster/tquiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mcluster {

std::string to_string(const VertexLabel& v) {
    if (v.tag == 0) return to_string(Diagonal{v.a, v.b});
    return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
}

int TranslationQuiver::arrow_count() const {
    int c = 0;
    for (const auto& a : out) c += (int)a.size();
    return c;
}

std::optional<int> TranslationQuiver::index_of(const VertexLabel& v) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), v);
    if (it == labels.end() || *it != v) return std::nullopt;
    return (int)(it - labels.begin());
}

int TranslationQuiver::require_index(const VertexLabel& v) const {
    auto idx = index_of(v);
    if (!idx) throw unknown_vertex("unknown vertex " + to_string(v));
    return *idx;
}

bool TranslationQuiver::has_arrow(int u, int v) const {
    return std::binary_search(out[u].begin(), out[u].end(), v);
}

void TranslationQuiver::finalize_and_validate(bool require_mesh) {
    const int V = vertex_count();
    if ((int)out.size() != V || (int)tau.size() != V)
        throw model_inconsistency("quiver: size mismatch");
    if (!std::is_sorted(labels.begin(), labels.end()))
        throw model_inconsistency("quiver: labels not sorted");
    in.assign(V, {});
    for (int u = 0; u < V; ++u) {
        std::sort(out[u].begin(), out[u].end());
        if (std::adjacent_find(out[u].begin(), out[u].end()) != out[u].end())
            throw model_inconsistency("quiver: arrow multiplicity > 1");
        for (int v : out[u]) in[v].push_back(u);
    }
    for (auto& l : in) std::sort(l.begin(), l.end());

    std::vector<char> hit(V, 0);
    for (int v = 0; v < V; ++v) {
        if (tau[v] < 0 || tau[v] >= V)
            throw model_inconsistency("quiver: tau out of range");
        if (hit[tau[v]]++) throw model_inconsistency("quiver: tau not injective");
    }
    if (require_mesh) {
        // mesh axiom: arrows into v biject with arrows out of tau(v)
        for (int v = 0; v < V; ++v) {
            if (in[v].size() != out[tau[v]].size())
                throw model_inconsistency("quiver: mesh axiom fails at " +
                                          to_string(labels[v]));
            for (int u : in[v])
                if (!has_arrow(tau[v], u))
                    throw model_inconsistency("quiver: mesh axiom fails at " +
                                              to_string(labels[v]));
        }
    }
}

CanonicalSpec canonical_spec(const QuotientSpec& q) {
    if (q.p < 1) throw error("QuotientSpec: p must be >= 1");
    if (q.r < 0 || q.s < 0 || (q.r == 0 && q.s == 0))
        throw error("QuotientSpec: need r,s >= 0 and (r,s) != (0,0)");
    CanonicalSpec c;
    c.p = q.p;
    if (q.p == 1) {
        // Sigma on one row is the unit shift
        c.sigma = 0;
        c.shift = (long long)q.s + q.r;
        return c;
    }
    c.sigma = q.r % 2;
    c.shift = (long long)q.s + (long long)(q.r - c.sigma) / 2 * (q.p + 1);
    return c;
}

std::string to_string(const QuotientSpec& q) {
    return "ZA_" + std::to_string(q.p) + "/tau^-" + std::to_string(q.s) +
           "Sigma^" + std::to_string(q.r);
}

std::string to_string(const CanonicalSpec& q) {
    std::string s = "ZA_" + std::to_string(q.p) + "/tau^-" + std::to_string(q.shift);
    if (q.sigma) s += "Sigma";
    return s;
}

ZAVertex za_tau(const ZAVertex& v, long long t) { return {v.k - t, v.row}; }

ZAVertex za_sigma(const ZAVertex& v, int p) {
    return {v.k + v.row, p + 1 - v.row};
}

ZAVertex za_phi(const ZAVertex& v, const QuotientSpec& q) {
    ZAVertex w = v;
    for (int t = 0; t < q.r; ++t) w = za_sigma(w, q.p);
    w.k += q.s;
    return w;
}

TranslationQuiver build_gamma_m(const PolygonConfig& cfg) {
    TranslationQuiver Q;
    auto diags = enumerate_m_diagonals(cfg);
    for (const auto& d : diags) Q.labels.push_back(VertexLabel::of(d));
    Q.out.assign(Q.labels.size(), {});
    Q.tau.assign(Q.labels.size(), -1);
    for (int v = 0; v < Q.vertex_count(); ++v) {
        Diagonal d = Q.labels[v].diagonal();
        for (Chord target : {normalize(d.i, d.j + cfg.m, cfg.N),
                             normalize((long long)d.i + cfg.m, d.j, cfg.N)}) {
            if (target.is_edge()) continue;
            if (auto w = Q.index_of(VertexLabel::of(target.diag())))
                Q.out[v].push_back(*w);
        }
        Q.tau[v] = Q.require_index(VertexLabel::of(rotate_tau_m(d, cfg)));
    }
    Q.finalize_and_validate();
    return Q;
}

std::vector<std::vector<int>> sectional_paths(const TranslationQuiver& Q,
                                              int start, int length) {
    if (start < 0 || start >= Q.vertex_count())
        throw unknown_vertex("sectional_paths: start out of range");
    std::vector<std::vector<int>> result;
    std::vector<int> path{start};
    auto dfs = [&](auto&& self) -> void {
        if ((int)path.size() == length + 1) {
            result.push_back(path);
            return;
        }
        int x = path.back();
        for (int y : Q.out[x]) {
            if (path.size() >= 2 && Q.tau[y] == path[path.size() - 2]) continue;
            path.push_back(y);
            self(self);
            path.pop_back();
        }
    };
    dfs(dfs);
    return result;
}

TranslationQuiver power(const TranslationQuiver& Q, int m) {
    if (m < 1) throw error("power: m must be >= 1");
    TranslationQuiver P;
    P.labels = Q.labels;
    P.out.assign(Q.vertex_count(), {});
    P.tau.assign(Q.vertex_count(), -1);
    for (int v = 0; v < Q.vertex_count(); ++v) {
        for (const auto& path : sectional_paths(Q, v, m))
            P.out[v].push_back(path.back());
        int t = v;
        for (int step = 0; step < m; ++step) t = Q.tau[t];
        P.tau[v] = t;
    }
    P.finalize_and_validate();
    return P;
}

namespace {

std::vector<int> component_of(const TranslationQuiver& Q) {
    const int V = Q.vertex_count();
    std::vector<int> comp(V, -1);
    std::vector<int> tau_inv(V, -1);
    for (int v = 0; v < V; ++v) tau_inv[Q.tau[v]] = v;
    int c = 0;
    for (int s = 0; s < V; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            auto visit = [&](int w) {
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            };
            for (int w : Q.out[v]) visit(w);
            for (int w : Q.in[v]) visit(w);
            visit(Q.tau[v]);
            visit(tau_inv[v]);
        }
        ++c;
    }
    return comp;
}

} // namespace

std::vector<int> component_index(const TranslationQuiver& Q) {
    return component_of(Q);
}

std::vector<TranslationQuiver> connected_components(const TranslationQuiver& Q) {
    auto comp = component_of(Q);
    int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<TranslationQuiver> parts((std::size_t)count);
    std::vector<std::vector<int>> members((std::size_t)count);
    for (int v = 0; v < Q.vertex_count(); ++v)
        members[comp[v]].push_back(v); // ascending, so labels stay sorted
    for (int c = 0; c < count; ++c) {
        TranslationQuiver& P = parts[c];
        std::vector<int> local(Q.vertex_count(), -1);
        for (int t = 0; t < (int)members[c].size(); ++t) {
            local[members[c][t]] = t;
            P.labels.push_back(Q.labels[members[c][t]]);
        }
        P.out.assign(members[c].size(), {});
        P.tau.assign(members[c].size(), -1);
        for (int v : members[c]) {
            for (int w : Q.out[v]) {
                if (local[w] < 0)
                    throw model_inconsistency("component: arrow leaves component");
                P.out[local[v]].push_back(local[w]);
            }
            if (local[Q.tau[v]] < 0)
                throw model_inconsistency("component: tau leaves component");
            P.tau[local[v]] = local[Q.tau[v]];
        }
        P.finalize_and_validate();
    }
    return parts;
}

std::vector<std::vector<int>> tau_orbits(const TranslationQuiver& Q) {
    std::vector<char> seen(Q.vertex_count(), 0);
    std::vector<std::vector<int>> orbits;
    for (int s = 0; s < Q.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> orbit;
        int v = s;
        while (!seen[v]) {
            seen[v] = 1;
            orbit.push_back(v);
            v = Q.tau[v];
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

TranslationQuiver build_za_quotient(const QuotientSpec& spec) {
    CanonicalSpec c = canonical_spec(spec);
    const int p = c.p;
    if (c.shift <= 0 && c.sigma == 0)
        throw degenerate_quotient("quotient by a non-moving auto-equivalence");

    long long period; // phi (sigma odd) or phi itself (sigma even) as tau^{-period}
    if (c.sigma == 0) {
        period = c.shift;
    } else {
        period = 2 * c.shift + p + 1; // phi^2 = tau^{-period}
    }
    if (period <= 0) throw degenerate_quotient("nonpositive quotient period");

    auto rep = [&](long long k, int row) -> ZAVertex {
        long long k0 = ((k % period) + period) % period;
        if (c.sigma == 0) return {k0, row};
        ZAVertex w1{k0, row};
        long long k1 = k0 + row + c.shift;
        ZAVertex w2{((k1 % period) + period) % period, p + 1 - row};
        return std::min(w1, w2);
    };

    std::set<ZAVertex> verts;
    for (long long k = 0; k < period; ++k)
        for (int row = 1; row <= p; ++row) verts.insert(rep(k, row));

    TranslationQuiver Q;
    std::map<ZAVertex, int> index;
    for (const auto& v : verts) {
        index[v] = (int)Q.labels.size();
        Q.labels.push_back(VertexLabel::za((int)v.k, v.row));
    }
    Q.out.assign(verts.size(), {});
    Q.tau.assign(verts.size(), -1);
    for (const auto& v : verts) {
        int idx = index.at(v);
        if (v.row < p) Q.out[idx].push_back(index.at(rep(v.k, v.row + 1)));
        if (v.row > 1) Q.out[idx].push_back(index.at(rep(v.k + 1, v.row - 1)));
        Q.tau[idx] = index.at(rep(v.k - 1, v.row));
    }
    Q.finalize_and_validate();
    return Q;
}

namespace {

struct IsoSearch {
    const TranslationQuiver& A;
    const TranslationQuiver& B;
    std::vector<int> tau_inv_a, tau_inv_b;
    std::vector<int> map_ab;       // A vertex -> B vertex or -1
    std::vector<char> used_b;
    std::vector<int> order;        // BFS order over arrows+tau from the anchor

    IsoSearch(const TranslationQuiver& a, const TranslationQuiver& b)
        : A(a), B(b) {
        tau_inv_a.assign(A.vertex_count(), -1);
        tau_inv_b.assign(B.vertex_count(), -1);
        for (int v = 0; v < A.vertex_count(); ++v) tau_inv_a[A.tau[v]] = v;
        for (int v = 0; v < B.vertex_count(); ++v) tau_inv_b[B.tau[v]] = v;
    }

    bool consistent(int v, int w) const {
        if (A.out[v].size() != B.out[w].size()) return false;
        if (A.in[v].size() != B.in[w].size()) return false;
        // every already-mapped neighbour must match in both directions
        for (int x : A.out[v])
            if (map_ab[x] >= 0 && !B.has_arrow(w, map_ab[x])) return false;
        for (int x : A.in[v])
            if (map_ab[x] >= 0 && !B.has_arrow(map_ab[x], w)) return false;
        if (map_ab[A.tau[v]] >= 0 && map_ab[A.tau[v]] != B.tau[w]) return false;
        if (map_ab[tau_inv_a[v]] >= 0 && map_ab[tau_inv_a[v]] != tau_inv_b[w])
            return false;
        // reverse constraints: images already used must be reachable the same way
        return true;
    }

    bool extend(std::size_t pos) {
        if (pos == order.size()) return true;
        int v = order[pos];
        for (int w = 0; w < B.vertex_count(); ++w) {
            if (used_b[w]) continue;
            if (!consistent(v, w)) continue;
            map_ab[v] = w;
            used_b[w] = 1;
            if (extend(pos + 1)) return true;
            map_ab[v] = -1;
            used_b[w] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> iso_translation_quivers(
    const TranslationQuiver& Q1, const TranslationQuiver& Q2) {
    if (Q1.vertex_count() != Q2.vertex_count()) return std::nullopt;
    if (Q1.arrow_count() != Q2.arrow_count()) return std::nullopt;

    auto degree_profile = [](const TranslationQuiver& Q) {
        std::map<std::pair<int, int>, int> prof;
        for (int v = 0; v < Q.vertex_count(); ++v)
            prof[{(int)Q.out[v].size(), (int)Q.in[v].size()}]++;
        return prof;
    };
    if (degree_profile(Q1) != degree_profile(Q2)) return std::nullopt;

    auto orbit_profile = [](const TranslationQuiver& Q) {
        std::vector<int> sizes;
        for (const auto& o : tau_orbits(Q)) sizes.push_back((int)o.size());
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    };
    if (orbit_profile(Q1) != orbit_profile(Q2)) return std::nullopt;

    if (Q1.vertex_count() == 0) return std::vector<int>{};

    IsoSearch search(Q1, Q2);
    search.map_ab.assign(Q1.vertex_count(), -1);
    search.used_b.assign(Q2.vertex_count(), 0);

    // breadth-first order over arrows and tau so each vertex lands next to
    // already-mapped ones and the local consistency check bites early
    std::vector<char> seen(Q1.vertex_count(), 0);
    for (int s = 0; s < Q1.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> queue{s};
        seen[s] = 1;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int v = queue[h];
            search.order.push_back(v);
            auto push = [&](int w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            };
            for (int w : Q1.out[v]) push(w);
            for (int w : Q1.in[v]) push(w);
            push(Q1.tau[v]);
            push(search.tau_inv_a[v]);
        }
    }

    if (!search.extend(0)) return std::nullopt;

    // full verification of the witness before handing it out
    const auto& f = search.map_ab;
    for (int v = 0; v < Q1.vertex_count(); ++v) {
        if (Q2.tau[f[v]] != f[Q1.tau[v]])
            throw model_inconsistency("iso witness fails tau");
        if (Q1.out[v].size() != Q2.out[f[v]].size())
            throw model_inconsistency("iso witness fails degree");
        for (int w : Q1.out[v])
            if (!Q2.has_arrow(f[v], f[w]))
                throw model_inconsistency("iso witness fails arrows");
    }
    return f;
}

} // namespace mcluster
