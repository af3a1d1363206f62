#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mcluster/decomposition.hpp"
#include "mcluster/homological.hpp"
#include "mcluster/mesh.hpp"
#include "mcluster/tquiver.hpp"
#include "mcluster/verify.hpp"

namespace py = pybind11;
using namespace mcluster;

namespace {

py::tuple diag_tuple(const Diagonal& d) { return py::make_tuple(d.i, d.j); }

Diagonal diag_from(std::pair<int, int> p, int N) {
    return normalize_diagonal(p.first, p.second, N);
}

py::dict quiver_dict(const TranslationQuiver& Q) {
    py::dict out;
    py::list vertices, arrows, tau;
    for (const auto& l : Q.labels) vertices.append(to_string(l));
    for (int u = 0; u < Q.vertex_count(); ++u)
        for (int w : Q.out[u])
            arrows.append(py::make_tuple(to_string(Q.labels[u]),
                                         to_string(Q.labels[w])));
    for (int v = 0; v < Q.vertex_count(); ++v)
        tau.append(py::make_tuple(to_string(Q.labels[v]),
                                  to_string(Q.labels[Q.tau[v]])));
    out["vertices"] = vertices;
    out["arrows"] = arrows;
    out["tau"] = tau;
    return out;
}

py::list object_list(const ObjectRepr& o) {
    py::list out;
    for (const auto& s : o.summands)
        out.append(py::make_tuple(diag_tuple(s.d), s.shift));
    return out;
}

} // namespace

PYBIND11_MODULE(_mcluster, mod) {
    mod.doc() = "geometric model of m-cluster categories of type A";

    mod.def("polygon_sides", [](int n, int m) { return PolygonConfig(n, m).N; });

    mod.def("normalize", [](int a, int b, int N) -> py::object {
        Chord c = normalize(a, b, N);
        if (c.is_edge()) return py::none();
        return diag_tuple(c.diag());
    });

    mod.def("is_m_diagonal", [](std::pair<int, int> d, int n, int m) {
        PolygonConfig cfg(n, m);
        return is_m_diagonal(diag_from(d, cfg.N), cfg);
    });

    mod.def("crosses", [](std::pair<int, int> a, std::pair<int, int> b, int N) {
        return crosses(diag_from(a, N), diag_from(b, N));
    });

    mod.def("rotate_tau_m", [](std::pair<int, int> d, int n, int m) {
        PolygonConfig cfg(n, m);
        return diag_tuple(rotate_tau_m(diag_from(d, cfg.N), cfg));
    });

    mod.def("mirror", [](std::pair<int, int> d, int anchor, int N) {
        return diag_tuple(mirror(diag_from(d, N), anchor, N));
    });

    mod.def("m_diagonals", [](int n, int m) {
        PolygonConfig cfg(n, m);
        py::list out;
        for (const auto& d : enumerate_m_diagonals(cfg)) out.append(diag_tuple(d));
        return out;
    });

    mod.def("gamma", [](int n, int m) {
        return quiver_dict(build_gamma_m(PolygonConfig(n, m)));
    });

    mod.def("decompose", [](int n, int m) {
        PolygonConfig cfg(n, m);
        py::list out;
        for (const auto& r : decompose(cfg)) {
            py::dict rep;
            rep["size"] = r.size;
            rep["shape"] = to_string(r.shape);
            rep["rank_p"] = r.rank_p;
            rep["is_gamma_m"] = r.is_gamma_m;
            if (r.matched_spec)
                rep["matched_spec"] = py::make_tuple(
                    r.matched_spec->p, r.matched_spec->r, r.matched_spec->s);
            if (r.u_cluster) rep["u_cluster"] = *r.u_cluster;
            out.append(rep);
        }
        return out;
    });

    mod.def("hom_dim", [](std::pair<int, int> d1, std::pair<int, int> d2, int N) {
        return hom_dim_c(diag_from(d1, N), diag_from(d2, N), N);
    });

    mod.def("ext1_nonzero",
            [](std::pair<int, int> d1, std::pair<int, int> d2, int N) {
                return ext1_nonzero(diag_from(d1, N), diag_from(d2, N), N);
            });

    mod.def("classify_morphism",
            [](std::pair<int, int> d1, std::pair<int, int> d2, int N) {
                return to_string(classify_morphism(diag_from(d1, N),
                                                   diag_from(d2, N), N)
                                     .kind);
            });

    mod.def("cone", [](std::pair<int, int> d1, std::pair<int, int> d2, int N) {
        return object_list(cone(diag_from(d1, N), diag_from(d2, N), N));
    });

    mod.def("ar_triangle", [](std::pair<int, int> d, int n, int m) {
        PolygonConfig cfg(n, m);
        Triangle t = ar_triangle(diag_from(d, cfg.N), cfg);
        py::dict out;
        out["A"] = object_list(t.a);
        out["B"] = object_list(t.b);
        out["C"] = object_list(t.c);
        out["ShiftA"] = object_list(t.shifted_a);
        return out;
    });

    mod.def("framed_set", [](std::pair<int, int> d, int n, int m) {
        PolygonConfig cfg(n, m);
        py::list out;
        for (const auto& x : framed_set(diag_from(d, cfg.N), cfg))
            out.append(diag_tuple(x));
        return out;
    });

    mod.def("mesh_hom_dim",
            [](std::pair<int, int> d1, std::pair<int, int> d2, int n, int m) {
                PolygonConfig cfg(n, m);
                TranslationQuiver Q = build_gamma_m(cfg);
                MeshAlgebra algebra(Q);
                return algebra.hom_dim(
                    Q.require_index(VertexLabel::of(diag_from(d1, cfg.N))),
                    Q.require_index(VertexLabel::of(diag_from(d2, cfg.N))));
            });

    mod.def("orbit_component_count", [](std::pair<int, int> d, int n, int m) {
        PolygonConfig cfg(n, m);
        return orbit_component_count(cfg, diag_from(d, cfg.N));
    });

    mod.def("mirror_criterion", [](std::pair<int, int> d, int n, int m) {
        PolygonConfig cfg(n, m);
        return mirror_criterion(cfg, diag_from(d, cfg.N));
    });

    mod.def("predict", [](int n, int m) {
        PolygonConfig cfg(n, m);
        auto pred = predict(cfg);
        py::dict out;
        out["component_count"] = pred.component_count;
        py::list entries;
        for (const auto& e : pred.entries) {
            py::dict entry;
            entry["spec"] = py::make_tuple(e.spec.p, e.spec.r, e.spec.s);
            entry["multiplicity"] = e.multiplicity;
            entry["is_gamma_m"] = e.is_gamma_m;
            entry["shape"] = to_string(e.shape);
            entries.append(entry);
        }
        out["entries"] = entries;
        return out;
    });

    mod.def("verify_cell", [](int n, int m) {
        CellResult cell = verify_cell(n, m);
        py::dict out;
        out["n"] = cell.n;
        out["m"] = cell.m;
        out["N"] = cell.N;
        out["pass"] = cell.pass;
        out["info"] = cell.info;
        out["failures"] = cell.failures;
        return out;
    });

    py::register_exception<no_canonical_triangle>(mod, "NoCanonicalTriangle");
    py::register_exception<theorem_violation>(mod, "TheoremViolation");
}
