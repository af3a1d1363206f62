#include "mcluster/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "mcluster/homological.hpp"
#include "mcluster/serialize.hpp"
#include "mcluster/verify.hpp"

namespace mcluster {

namespace {

constexpr int default_max_N = 200;

int vertex_cap() {
    if (const char* env = std::getenv("CQ_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return default_max_N;
}

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& text, int min_value) {
    Range r;
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoi(text);
    } else {
        r.lo = std::stoi(text.substr(0, dots));
        r.hi = std::stoi(text.substr(dots + 2));
    }
    if (r.lo > r.hi)
        throw input_cap_exceeded("empty range " + text);
    if (r.lo < min_value)
        throw input_cap_exceeded("range " + text + " below the minimum " +
                                 std::to_string(min_value));
    return r;
}

void check_cap(int n, int m) {
    long long N = (long long)n * m + 2;
    if (N > vertex_cap())
        throw input_cap_exceeded("N = " + std::to_string(N) +
                                 " exceeds the vertex cap " +
                                 std::to_string(vertex_cap()) +
                                 " (override with CQ_MAX_N)");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw error("cannot open output file " + path);
    file << text;
}

int cmd_gamma(int n, int m, const std::string& format, const std::string& output,
              std::ostream& out) {
    check_cap(n, m);
    PolygonConfig cfg(n, m);
    TranslationQuiver Q = build_gamma_m(cfg);
    if (format == "dot") {
        emit(quiver_to_dot(cfg, Q), output, out);
    } else if (format == "json") {
        emit(gamma_document(cfg, Q).dump(2) + "\n", output, out);
    } else {
        std::string text = "gamma^" + std::to_string(m) + " on the " +
                           std::to_string(cfg.N) + "-gon: " +
                           std::to_string(Q.vertex_count()) + " vertices, " +
                           std::to_string(Q.arrow_count()) + " arrows\n";
        for (int v = 0; v < Q.vertex_count(); ++v) {
            text += to_string(Q.labels[v]) + " -> ";
            for (std::size_t t = 0; t < Q.out[v].size(); ++t)
                text += (t ? ", " : "") + to_string(Q.labels[Q.out[v][t]]);
            text += "  [tau: " + to_string(Q.labels[Q.tau[v]]) + "]\n";
        }
        emit(text, output, out);
    }
    return 0;
}

int cmd_decompose(int n, int m, const std::string& format,
                  const std::string& output, std::ostream& out) {
    check_cap(n, m);
    PolygonConfig cfg(n, m);
    auto reports = decompose(cfg);
    if (format == "json") {
        emit(decompose_document(cfg, reports).dump(2) + "\n", output, out);
        return 0;
    }
    std::string text = "(gamma)^" + std::to_string(m) + " of the " +
                       std::to_string(cfg.N) + "-gon decomposes into " +
                       std::to_string(reports.size()) + " components\n";
    for (const auto& r : reports) {
        text += "  size " + std::to_string(r.size) + "  " + to_string(r.shape) +
                "  rank " + std::to_string(r.rank_p);
        if (r.matched_spec) text += "  ~ " + to_string(*r.matched_spec);
        if (r.is_gamma_m) text += "  [gamma^m]";
        if (r.u_cluster)
            text += "  [" + std::to_string(*r.u_cluster) + "-cluster of A_" +
                    std::to_string(n) + "]";
        text += "\n";
    }
    emit(text, output, out);
    return 0;
}

int cmd_cone(int i, int j, int k, int l, int n, int m, const std::string& format,
             const std::string& output, std::ostream& out) {
    check_cap(n, m);
    PolygonConfig cfg(n, m);
    Chord c1 = normalize(i, j, cfg.N);
    Chord c2 = normalize(k, l, cfg.N);
    if (c1.is_edge() || c2.is_edge())
        throw invalid_chord("cone: boundary edge is the zero object");
    MorphismClass mc = classify_morphism(c1.diag(), c2.diag(), cfg.N);
    ObjectRepr obj = cone(c1.diag(), c2.diag(), cfg.N); // throws if Hom = 0
    if (format == "table") {
        emit("Cone(" + to_string(c1.diag()) + " -> " + to_string(c2.diag()) +
                 ") = " + to_string(obj) + "  [" + to_string(mc.kind) + "]\n",
             output, out);
    } else {
        emit(triangle_document(cfg, c1.diag(), c2.diag(), mc, obj).dump(2) + "\n",
             output, out);
    }
    return 0;
}

int cmd_verify(const Range& nr, const Range& mr, int jobs,
               const std::string& format, const std::string& output,
               bool inject_fault, std::ostream& out) {
    for (int n = nr.lo; n <= nr.hi; ++n)
        for (int m = mr.lo; m <= mr.hi; ++m) check_cap(n, m);
    VerifyOptions opts;
    opts.inject_fault = inject_fault;
    SweepResult sweep = verify_sweep(nr.lo, nr.hi, mr.lo, mr.hi, jobs, opts);

    if (format == "json") {
        json doc;
        doc["pass"] = sweep.pass;
        json cells = json::array();
        for (const auto& cell : sweep.cells) {
            json c;
            c["n"] = cell.n;
            c["m"] = cell.m;
            c["N"] = cell.N;
            c["pass"] = cell.pass;
            c["info"] = cell.info;
            c["failures"] = cell.failures;
            c["decomposition"] = verification_to_json(cell.decomposition);
            cells.push_back(c);
        }
        doc["cells"] = cells;
        emit(doc.dump(2) + "\n", output, out);
    } else {
        std::string text;
        for (const auto& cell : sweep.cells) {
            text += "n=" + std::to_string(cell.n) + " m=" + std::to_string(cell.m) +
                    " N=" + std::to_string(cell.N) + ": " +
                    (cell.pass ? "pass" : "FAIL") + "\n";
            for (const auto& line : cell.info) text += "  " + line + "\n";
            for (const auto& line : cell.failures) text += "  ! " + line + "\n";
        }
        text += sweep.pass ? "all cells pass\n" : "verification FAILED\n";
        emit(text, output, out);
    }
    return sweep.pass ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"geometric model of m-cluster categories of type A"};
    app.require_subcommand(1);

    int n = 4, m = 1;
    std::string format = "table", output;
    std::string n_range = "4", m_range = "1";
    int jobs = 1;
    bool inject_fault = false;
    int ci = 0, cj = 0, ck = 0, cl = 0;

    auto* gamma = app.add_subcommand("gamma", "emit the m-diagonal quiver");
    gamma->add_option("--n", n, "rank parameter")->required();
    gamma->add_option("--m", m, "cluster parameter")->required();
    gamma->add_option("--format", format, "json|dot|table");
    gamma->add_option("--output", output, "write to file instead of stdout");

    auto* dec = app.add_subcommand("decompose",
                                   "components of the m-th power with "
                                   "certified presentations");
    dec->add_option("--n", n)->required();
    dec->add_option("--m", m)->required();
    dec->add_option("--format", format, "json|table");
    dec->add_option("--output", output);

    auto* cone_cmd = app.add_subcommand("cone",
                                        "cone of the morphism (i,j) -> (k,l)");
    cone_cmd->add_option("i", ci)->required();
    cone_cmd->add_option("j", cj)->required();
    cone_cmd->add_option("k", ck)->required();
    cone_cmd->add_option("l", cl)->required();
    cone_cmd->add_option("--n", n)->required();
    cone_cmd->add_option("--m", m)->required();
    auto* cone_format = cone_cmd->add_option("--format", format, "json|table");
    cone_cmd->add_option("--output", output);

    auto* verify = app.add_subcommand("verify", "run the verification sweep");
    verify->add_option("--n", n_range, "n or n_lo..n_hi")->required();
    verify->add_option("--m", m_range, "m or m_lo..m_hi")->required();
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--format", format, "json|table");
    verify->add_option("--output", output);
    verify->add_flag("--inject-fault", inject_fault,
                     "corrupt the prediction (test mode)");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gamma->parsed()) return cmd_gamma(n, m, format, output, out);
        if (dec->parsed()) return cmd_decompose(n, m, format, output, out);
        if (cone_cmd->parsed()) {
            if (cone_format->count() == 0) format = "json";
            return cmd_cone(ci, cj, ck, cl, n, m, format, output, out);
        }
        if (verify->parsed())
            return cmd_verify(parse_range(n_range, 2), parse_range(m_range, 1),
                              jobs, format, output, inject_fault, out);
    } catch (const input_cap_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const no_canonical_triangle& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const verification_failure& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const theorem_violation& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace mcluster
