#include "mcluster/serialize.hpp"

#include <map>
#include <sstream>

namespace mcluster {

std::string vertex_id(const VertexLabel& v) { return to_string(v); }

json quiver_to_json(const TranslationQuiver& Q) {
    json doc;
    json vertices = json::array();
    for (const auto& l : Q.labels) {
        json v;
        v["id"] = vertex_id(l);
        if (l.is_diagonal())
            v["diagonal"] = {l.a, l.b};
        else
            v["za"] = {l.a, l.b};
        vertices.push_back(v);
    }
    doc["vertices"] = vertices;
    json arrows = json::array();
    for (int u = 0; u < Q.vertex_count(); ++u)
        for (int w : Q.out[u])
            arrows.push_back({vertex_id(Q.labels[u]), vertex_id(Q.labels[w])});
    doc["arrows"] = arrows;
    json tau = json::array();
    for (int v = 0; v < Q.vertex_count(); ++v)
        tau.push_back({vertex_id(Q.labels[v]), vertex_id(Q.labels[Q.tau[v]])});
    doc["tau"] = tau;
    return doc;
}

json gamma_document(const PolygonConfig& cfg, const TranslationQuiver& Q) {
    json doc;
    doc["config"] = {{"n", cfg.n}, {"m", cfg.m}, {"N", cfg.N}};
    json body = quiver_to_json(Q);
    doc["vertices"] = body["vertices"];
    doc["arrows"] = body["arrows"];
    doc["tau"] = body["tau"];
    return doc;
}

namespace {

json spec_to_json(const QuotientSpec& q) {
    return {{"p", q.p}, {"r", q.r}, {"s", q.s}};
}

} // namespace

json decompose_document(const PolygonConfig& cfg,
                        const std::vector<ComponentReport>& reports) {
    json doc;
    doc["config"] = {{"n", cfg.n}, {"m", cfg.m}, {"N", cfg.N}};
    json comps = json::array();
    json reps = json::array();
    for (const auto& r : reports) {
        comps.push_back(quiver_to_json(r.component));
        json rep;
        rep["size"] = r.size;
        rep["shape"] = to_string(r.shape);
        rep["rank_p"] = r.rank_p;
        rep["is_gamma_m"] = r.is_gamma_m;
        if (r.matched_spec) rep["matched_spec"] = spec_to_json(*r.matched_spec);
        if (r.u_cluster) rep["u_cluster"] = *r.u_cluster;
        reps.push_back(rep);
    }
    doc["components"] = comps;
    doc["reports"] = reps;
    return doc;
}

namespace {

json summand_to_json(const Summand& s) {
    return {{"diagonal", {s.d.i, s.d.j}}, {"shift", s.shift}};
}

json object_to_json(const ObjectRepr& o) {
    json arr = json::array();
    for (const auto& s : o.summands) arr.push_back(summand_to_json(s));
    return arr;
}

} // namespace

json triangle_document(const PolygonConfig& cfg, const Diagonal& d1,
                       const Diagonal& d2, const MorphismClass& mc,
                       const ObjectRepr& cone_obj) {
    json doc;
    doc["config"] = {{"n", cfg.n}, {"m", cfg.m}, {"N", cfg.N}};
    doc["mu"] = {{"source", {d1.i, d1.j}},
                 {"target", {d2.i, d2.j}},
                 {"hom_dim", mc.hom_dim},
                 {"kind", to_string(mc.kind)}};
    doc["A"] = object_to_json(ObjectRepr::of(d1));
    doc["B"] = object_to_json(ObjectRepr::of(d2));
    doc["C"] = object_to_json(cone_obj);
    doc["ShiftA"] = object_to_json(ObjectRepr::of(d1, 1));
    return doc;
}

json verification_to_json(const VerificationReport& r) {
    json doc;
    doc["config"] = {{"n", r.n}, {"m", r.m}, {"N", r.N}};
    doc["pass"] = r.pass;
    doc["components"] = r.computed_components;
    doc["predicted_components"] = r.predicted_components;
    doc["computed"] = r.computed;
    doc["predicted"] = r.predicted;
    doc["messages"] = r.messages;
    return doc;
}

std::string quiver_to_dot(const PolygonConfig& cfg, const TranslationQuiver& Q) {
    std::ostringstream os;
    os << "digraph gamma {\n";
    os << "  // N=" << cfg.N << " n=" << cfg.n << " m=" << cfg.m << "\n";
    os << "  rankdir=LR;\n  node [shape=plaintext];\n";
    for (const auto& l : Q.labels) {
        os << "  \"" << vertex_id(l) << "\"";
        if (l.is_diagonal())
            os << " [diagonal=\"" << l.a << "," << l.b << "\"]";
        else
            os << " [za=\"" << l.a << "," << l.b << "\"]";
        os << ";\n";
    }
    for (int u = 0; u < Q.vertex_count(); ++u)
        for (int w : Q.out[u])
            os << "  \"" << vertex_id(Q.labels[u]) << "\" -> \""
               << vertex_id(Q.labels[w]) << "\";\n";
    for (int v = 0; v < Q.vertex_count(); ++v)
        os << "  \"" << vertex_id(Q.labels[v]) << "\" -> \""
           << vertex_id(Q.labels[Q.tau[v]]) << "\" [style=dashed, kind=tau];\n";

    // group the diagonals through a common first vertex (the i-columns)
    std::map<int, std::vector<std::string>> columns;
    for (const auto& l : Q.labels)
        if (l.is_diagonal()) columns[l.a].push_back(vertex_id(l));
    for (const auto& [i, ids] : columns) {
        os << "  { rank=same;";
        for (const auto& id : ids) os << " \"" << id << "\";";
        os << " }\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace mcluster
