#include "mcluster/verify.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <thread>

#include "mcluster/homological.hpp"
#include "mcluster/mesh.hpp"
#include "mcluster/oracle.hpp"

namespace mcluster {

namespace {

void check_orbit_laws(const PolygonConfig& cfg, CellResult& cell) {
    if (cfg.m % 2) return;
    PolygonConfig base(cfg.n * cfg.m, 1);
    TranslationQuiver gamma = build_gamma_m(base);
    const int N = cfg.N;

    for (const auto& orbit : tau_orbits(gamma)) {
        int size = (int)orbit.size();
        bool central = is_central(gamma.labels[orbit.front()].diagonal(), N);
        int expected = central ? N / 2 : N;
        if (size != expected)
            cell.failures.push_back("tau-orbit of " +
                                    to_string(gamma.labels[orbit.front()]) +
                                    " has size " + std::to_string(size));
    }

    TranslationQuiver powered = power(gamma, cfg.m);
    int exceptional = 0;
    for (const auto& orbit : tau_orbits(powered)) {
        int size = (int)orbit.size();
        const Diagonal d = powered.labels[orbit.front()].diagonal();
        // central diagonals with n odd and m = 2 mod 4 sit in tau^m-orbits
        // of size N/4; everything else has size N/2
        bool quartered =
            is_central(d, N) && cfg.n % 2 == 1 && cfg.m % 4 == 2;
        int expected = quartered ? N / 4 : N / 2;
        if (quartered) ++exceptional;
        if (size != expected)
            cell.failures.push_back("tau^m-orbit of " + to_string(d) +
                                    " has size " + std::to_string(size) +
                                    ", expected " + std::to_string(expected));
    }
    if (exceptional)
        cell.info.push_back("central tau^m-orbits of size N/4: " +
                            std::to_string(exceptional));

    for (int v = 0; v < powered.vertex_count(); ++v) {
        const Diagonal d = powered.labels[v].diagonal();
        const Diagonal td = powered.labels[powered.tau[v]].diagonal();
        if (parity_class(d) != parity_class(td))
            cell.failures.push_back("tau^m changes parity class of " +
                                    to_string(d));
    }
}

void check_crossing_laws(const PolygonConfig& cfg, CellResult& cell,
                         const VerifyOptions& opts) {
    for (const auto& d : enumerate_m_diagonals(cfg))
        if (!crosses(d, rotate_tau_m(d, cfg)))
            cell.failures.push_back("m-diagonal " + to_string(d) +
                                    " misses its tau_m rotate");

    if (cfg.m == 1 && cfg.N <= opts.mesh_max_N) {
        auto diags = enumerate_m_diagonals(cfg);
        for (const auto& a : diags)
            for (const auto& b : diags) {
                try {
                    (void)ext1_nonzero(a, b, cfg.N);
                } catch (const theorem_violation& e) {
                    cell.failures.push_back(e.what());
                }
            }
    }
}

void check_mesh_laws(const PolygonConfig& cfg, CellResult& cell,
                     const VerifyOptions& opts) {
    if (cfg.N > opts.mesh_max_N) return;
    try {
        verify_sectional_irreducibles(cfg);
    } catch (const error& e) {
        cell.failures.push_back(e.what());
    }

    // irr_dim agrees with arrow multiplicity on gamma and on every
    // component of the power (irr_dim itself throws on disagreement)
    PolygonConfig base(cfg.n * cfg.m, 1);
    TranslationQuiver gamma = build_gamma_m(base);
    try {
        MeshAlgebra algebra(gamma);
        for (int x = 0; x < gamma.vertex_count(); ++x)
            for (int y = 0; y < gamma.vertex_count(); ++y)
                (void)algebra.irr_dim(x, y);
        for (const auto& comp : connected_components(power(gamma, cfg.m))) {
            MeshAlgebra calg(comp);
            for (int x = 0; x < comp.vertex_count(); ++x)
                for (int y = 0; y < comp.vertex_count(); ++y)
                    (void)calg.irr_dim(x, y);
        }
    } catch (const error& e) {
        cell.failures.push_back(e.what());
    }

    // the two hom pipelines agree on the diagonal quiver
    if (cfg.m == 1) {
        MeshAlgebra algebra(gamma);
        for (int x = 0; x < gamma.vertex_count(); ++x)
            for (int y = 0; y < gamma.vertex_count(); ++y) {
                int via_mesh = algebra.hom_dim(x, y);
                int via_modules = hom_dim_c(gamma.labels[x].diagonal(),
                                            gamma.labels[y].diagonal(), cfg.N);
                if (via_mesh != via_modules)
                    cell.failures.push_back(
                        "hom pipelines disagree at " + to_string(gamma.labels[x]) +
                        " -> " + to_string(gamma.labels[y]));
            }
    }
}

void check_triangle_laws(const PolygonConfig& cfg, CellResult& cell) {
    TranslationQuiver gamma_m = build_gamma_m(cfg);
    for (int v = 0; v < gamma_m.vertex_count(); ++v) {
        const Diagonal d = gamma_m.labels[v].diagonal();
        Triangle t = ar_triangle(d, cfg);

        std::vector<Diagonal> middles;
        for (const auto& s : t.b.summands) middles.push_back(s.d);
        std::vector<Diagonal> in_neighbours;
        for (int u : gamma_m.in[v])
            in_neighbours.push_back(gamma_m.labels[u].diagonal());
        std::sort(in_neighbours.begin(), in_neighbours.end());
        if (middles != in_neighbours)
            cell.failures.push_back("AR middle terms of " + to_string(d) +
                                    " differ from in-neighbours");

        if (t.a != ObjectRepr::of(rotate_tau_m(d, cfg)))
            cell.failures.push_back("AR first term of " + to_string(d));
        ObjectRepr fourth = shift_normalize(t.shifted_a, cfg);
        if (fourth !=
            ObjectRepr::of(rotate_tau_m(rotate_tau_m(d, cfg), cfg)))
            cell.failures.push_back("AR fourth term of " + to_string(d));

        if (m_dilatation(d, cfg) != framed_set(d, cfg))
            cell.failures.push_back("m-dilatation of " + to_string(d) +
                                    " differs from framed set");
    }
}

void check_cone_oracle(const PolygonConfig& cfg, CellResult& cell,
                       const VerifyOptions& opts) {
    const int N = cfg.N, q = N - 3;
    if (q > opts.cone_max_q || q < 1) return;
    PolygonConfig base(cfg.n * cfg.m, 1);
    auto diags = enumerate_m_diagonals(base);
    int checked = 0;
    for (const auto& d1 : diags)
        for (const auto& d2 : diags) {
            if (hom_dim_c(d1, d2, N) == 0) continue;
            ++checked;
            // rotate to the slice, feed the module pair to the oracle,
            // rotate the assembled cone back
            int r = d1.i - 1;
            Diagonal s1 = rotate_tau(d1, r, N);
            Diagonal s2 = rotate_tau(d2, r, N);
            IntervalModule M{s1.i, s1.j - 2, q};
            IntervalModule Nv{s2.i, s2.j - 2, q};
            if (oracle::hom_dim(M, Nv) != 1) {
                cell.failures.push_back("oracle hom differs at " + to_string(d1) +
                                        " -> " + to_string(d2));
                continue;
            }
            ObjectRepr expected = oracle::cone_assembly(M, Nv);
            for (auto& s : expected.summands)
                s.d = rotate_tau(s.d, -r, N);
            std::sort(expected.summands.begin(), expected.summands.end());
            ObjectRepr got = cone(d1, d2, N);
            if (got != expected)
                cell.failures.push_back("cone mismatch at " + to_string(d1) +
                                        " -> " + to_string(d2) + ": got " +
                                        to_string(got) + ", oracle " +
                                        to_string(expected));
            MorphKind want_kind = oracle::morphism_kind(M, Nv);
            MorphKind got_kind = classify_morphism(d1, d2, N).kind;
            if (want_kind != got_kind)
                cell.failures.push_back("morphism kind mismatch at " +
                                        to_string(d1) + " -> " + to_string(d2));
        }
    cell.info.push_back("cone oracle pairs checked: " + std::to_string(checked));
}

void check_component_orbit_laws(const PolygonConfig& cfg, CellResult& cell) {
    if (cfg.m % 2) return;
    // every (1, j): component count of its orbit and the mirror criterion
    for (int j = 3; j < cfg.N; ++j) {
        Diagonal d{1, j};
        try {
            (void)orbit_component_count(cfg, d);
            (void)mirror_criterion(cfg, d);
        } catch (const theorem_violation& e) {
            cell.failures.push_back(e.what());
        }
    }
}

} // namespace

CellResult verify_cell(int n, int m, const VerifyOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    CellResult cell;
    cell.n = n;
    cell.m = m;
    PolygonConfig cfg(n, m);
    cell.N = cfg.N;

    cell.decomposition = verify_decomposition(cfg);
    if (opts.inject_fault) {
        cell.decomposition.pass = false;
        cell.decomposition.messages.push_back(
            "injected fault: prediction multiset corrupted (test mode)");
    }
    if (!cell.decomposition.pass) {
        cell.failures.push_back("decomposition mismatch");
        for (const auto& msg : cell.decomposition.messages)
            cell.failures.push_back("  " + msg);
    }
    cell.info.push_back(
        "components: " + std::to_string(cell.decomposition.computed_components) +
        " (predicted " +
        std::to_string(cell.decomposition.predicted_components) + ")");

    check_orbit_laws(cfg, cell);
    check_crossing_laws(cfg, cell, opts);
    check_mesh_laws(cfg, cell, opts);
    check_triangle_laws(cfg, cell);
    check_cone_oracle(cfg, cell, opts);
    check_component_orbit_laws(cfg, cell);

    cell.pass = cell.failures.empty();
    cell.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return cell;
}

SweepResult verify_sweep(int n_lo, int n_hi, int m_lo, int m_hi, int jobs,
                         const VerifyOptions& opts) {
    std::vector<std::pair<int, int>> todo;
    for (int n = n_lo; n <= n_hi; ++n)
        for (int m = m_lo; m <= m_hi; ++m) todo.push_back({n, m});

    SweepResult result;
    result.cells.resize(todo.size());
    jobs = std::max(1, jobs);

    std::mutex mtx;
    std::size_t next = 0;
    auto worker = [&]() {
        for (;;) {
            std::size_t idx;
            {
                std::lock_guard<std::mutex> lock(mtx);
                if (next >= todo.size()) return;
                idx = next++;
            }
            result.cells[idx] = verify_cell(todo[idx].first, todo[idx].second, opts);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& cell : result.cells) result.pass &= cell.pass;
    return result;
}

} // namespace mcluster
