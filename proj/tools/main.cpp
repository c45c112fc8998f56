// Command-line front end: determinant evaluation, matroid and variety
// queries, subspace enumeration, the verification suites, and the
// determinant-algorithm benchmark.
//
// Exit codes: 0 success, 1 verification counterexample, 2 usage/input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cullis/bench.hpp"
#include "cullis/det.hpp"
#include "cullis/linvar.hpp"
#include "cullis/matroid.hpp"
#include "cullis/verify.hpp"
#include "cullis/verify_lemmas.hpp"

using namespace cullis;

namespace {

Mat load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::istream& is = in;
    int line_no = 0;
    return parse_matrix(is, line_no);
}

ConstraintSystem load_variety(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_variety(in);
}

// "3" -> index label, "2.1" -> cell label
Label parse_label(const std::string& tok) {
    auto dot = tok.find('.');
    if (dot == std::string::npos) return Label::index(std::stoi(tok));
    return Label::cell(std::stoi(tok.substr(0, dot)), std::stoi(tok.substr(dot + 1)));
}

std::vector<Label> parse_label_list(const std::string& s) {
    std::vector<Label> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(parse_label(tok));
    }
    return out;
}

int emit_report(const verify::Report& rep, const std::string& format) {
    if (format == "records")
        std::cout << rep.to_json().dump() << '\n';
    else
        rep.print_text(std::cout);
    return rep.pass() ? 0 : 1;
}

std::string label_set_to_string(const std::vector<Label>& labels) {
    std::string s = "{";
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) s += ",";
        s += labels[i].to_string();
    }
    return s + "}";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Cullis determinants, matroids and linear varieties"};
    app.require_subcommand(1);

    std::string file, algo = "all", format = "text", query, set_arg, pin_arg, select_arg,
                values_arg, mode = "exhaustive", pairs_arg = "10x4", field_arg = "F5";
    int col = 1, n = 0, k = 0, cap_n = 0, cap_c = 0, row_arg = 0, col_arg = 0, reps = 5, jobs = 1;
    uint32_t q = 2;
    uint64_t budget = 0, seed = 0;
    bool do_dual = false, do_print = false;
    std::string restrict_arg, contract_arg;

    auto* det_cmd = app.add_subcommand("det", "evaluate det_{n,k} of a matrix file");
    det_cmd->add_option("--file", file, "matrix file")->required();
    det_cmd->add_option("--algo", algo, "all|injection-sum|minor-sum|laplace");
    det_cmd->add_option("--col", col, "expansion column for laplace");

    auto* mat_cmd = app.add_subcommand("matroid", "vector-matroid queries on a matrix file");
    mat_cmd->add_option("--file", file, "matrix file (columns are the ground set)")->required();
    mat_cmd->add_option("--query", query, "rank|independent|bases|cobases")->required();
    mat_cmd->add_option("--set", set_arg, "comma-separated column labels");
    mat_cmd->add_flag("--dual", do_dual, "query the dual matroid");
    mat_cmd->add_option("--restrict", restrict_arg, "restrict to these labels first");
    mat_cmd->add_option("--contract", contract_arg, "then contract these labels");

    auto* var_cmd = app.add_subcommand("variety", "linear-variety queries on a variety file");
    var_cmd->add_option("--file", file, "variety file")->required();
    var_cmd
        ->add_option("--query", query,
                     "codim|dim|witness|matroid-rank|points|slice|project|strike-out|reduce")
        ->required();
    var_cmd->add_option("--set", set_arg, "labels for matroid-rank");
    var_cmd->add_option("--pin", pin_arg, "slice pins, e.g. 1=0,3=1 or 1.2=0");
    var_cmd->add_option("--select", select_arg, "labels kept by the projection, in order");
    var_cmd->add_option("--row", row_arg, "strike-out row");
    var_cmd->add_option("--col", col_arg, "strike-out column");
    var_cmd->add_option("--values", values_arg, "strike-out pinned column values");

    auto* enum_cmd = app.add_subcommand("enum", "enumerate codim-c subspaces of F_q^N");
    enum_cmd->add_option("--N", cap_n, "ambient dimension")->required();
    enum_cmd->add_option("--c", cap_c, "codimension")->required();
    enum_cmd->add_option("--q", q, "field size (prime)")->required();
    enum_cmd->add_flag("--print", do_print, "print every RREF matrix");

    auto* verify_cmd = app.add_subcommand("verify", "verification suites");
    verify_cmd->require_subcommand(1);
    auto add_verify_common = [&](CLI::App* c, bool with_nkq) {
        if (with_nkq) {
            c->add_option("--n", n, "rows")->required();
            c->add_option("--k", k, "columns")->required();
            c->add_option("--q", q, "field size (prime)")->required();
        }
        c->add_option("--seed", seed, "random seed (default 0)");
        c->add_option("--jobs", jobs, "worker threads (output is identical for any value)");
        c->add_option("--format", format, "text|records");
    };
    auto* vc = verify_cmd->add_subcommand("codim-bound", "no annihilating variety has codim < k");
    add_verify_common(vc, true);
    vc->add_option("--mode", mode, "exhaustive|sampled");
    vc->add_option("--budget", budget,
                   "exhaustive: worst-case point budget; sampled: number of varieties");
    auto* vch = verify_cmd->add_subcommand("characterization",
                                           "codim-k annihilators = alternating space, k odd");
    add_verify_common(vch, true);
    vch->add_option("--budget", budget, "point budget for the uniqueness sweep");
    auto* vz = verify_cmd->add_subcommand("z-condition", "row-relation determinant criterion");
    add_verify_common(vz, true);
    auto* vl = verify_cmd->add_subcommand("lemmas", "the registered lemma checks");
    add_verify_common(vl, false);

    auto* bench_cmd = app.add_subcommand("bench", "time the determinant algorithms (CSV)");
    bench_cmd->add_option("--pairs", pairs_arg, "shapes, e.g. 10x4,8x3");
    bench_cmd->add_option("--field", field_arg, "field, e.g. F5 or Q");
    bench_cmd->add_option("--reps", reps, "matrices per shape");
    bench_cmd->add_option("--seed", seed, "random seed");
    bench_cmd->add_option("--jobs", jobs, "accepted for symmetry; timing runs serially");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (det_cmd->parsed()) {
            Mat x = load_matrix(file);
            auto print_val = [&](const char* name, const Scalar& v) {
                std::cout << name << ' ' << v.to_string() << '\n';
            };
            if (algo == "all" || algo == "injection-sum")
                print_val("injection-sum", det_injection_sum(x));
            if (algo == "all" || algo == "minor-sum") print_val("minor-sum", det_minor_sum(x));
            if (algo == "all" || algo == "laplace") print_val("laplace", det_laplace(x, col));
            if (algo != "all" && algo != "injection-sum" && algo != "minor-sum" &&
                algo != "laplace")
                throw Error("unknown algorithm '" + algo + "'");
            return 0;
        }

        if (mat_cmd->parsed()) {
            Mat a = load_matrix(file);
            Matroid m = vector_matroid(a);
            if (!restrict_arg.empty()) m = m.restrict_to(parse_label_list(restrict_arg));
            if (!contract_arg.empty()) m = m.contract(parse_label_list(contract_arg));
            if (do_dual) m = m.dual();
            if (query == "rank") {
                std::cout << "rank " << m.rank(parse_label_list(set_arg)) << '\n';
            } else if (query == "independent") {
                std::cout << (m.is_independent(parse_label_list(set_arg)) ? "independent"
                                                                          : "dependent")
                          << '\n';
            } else if (query == "bases" || query == "cobases") {
                auto sets = query == "bases" ? m.bases() : m.cobases();
                for (uint64_t s : sets)
                    std::cout << label_set_to_string(m.ground().labels_of(s)) << '\n';
            } else {
                throw Error("unknown matroid query '" + query + "'");
            }
            return 0;
        }

        if (var_cmd->parsed()) {
            ConstraintSystem cs = load_variety(file);
            auto kv = variety_from_constraints(cs);
            if (!kv) {
                std::cout << "empty\n";
                return 0;
            }
            if (query == "codim") {
                std::cout << "codim " << kv->codim() << '\n';
            } else if (query == "dim") {
                std::cout << "dim " << kv->dim() << '\n';
            } else if (query == "witness") {
                std::cout << "witness";
                for (const auto& v : kv->witness()) std::cout << ' ' << v.to_string();
                std::cout << '\n';
            } else if (query == "matroid-rank") {
                Matroid m = variety_matroid(*kv);
                std::cout << "rank " << m.rank(parse_label_list(set_arg)) << '\n';
            } else if (query == "points") {
                for_each_point(*kv, [&](const std::vector<Scalar>& p) {
                    for (size_t i = 0; i < p.size(); ++i)
                        std::cout << (i ? " " : "") << p[i].to_string();
                    std::cout << '\n';
                    return true;
                });
            } else if (query == "slice") {
                Slice u;
                std::stringstream ss(pin_arg);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    if (tok.empty()) continue;
                    auto eq = tok.find('=');
                    if (eq == std::string::npos) throw Error("pin needs label=value");
                    u.pinned.emplace(parse_label(tok.substr(0, eq)),
                                     Scalar::parse(kv->field(), tok.substr(eq + 1)));
                }
                auto sliced = intersect_slice(*kv, u);
                if (!sliced)
                    std::cout << "empty\n";
                else
                    print_variety(std::cout, sliced->rep());
            } else if (query == "project") {
                auto f = IndexInjection::select(kv->space().ground, parse_label_list(select_arg));
                print_variety(std::cout, project(*kv, f).rep());
            } else if (query == "strike-out") {
                std::vector<Scalar> c;
                std::stringstream ss(values_arg);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    if (tok.empty()) continue;
                    c.push_back(Scalar::parse(kv->field(), tok));
                }
                auto out = strike_out_lift(*kv, row_arg, col_arg, c);
                if (!out)
                    std::cout << "empty\n";
                else
                    print_variety(std::cout, out->rep());
            } else if (query == "reduce") {
                print_variety(std::cout, reduce_full_rank(*kv).rep());
            } else {
                throw Error("unknown variety query '" + query + "'");
            }
            return 0;
        }

        if (enum_cmd->parsed()) {
            FieldSpec f = FieldSpec::prime(q);
            verify::SubspaceEnumerator en(cap_n, cap_c, f);
            uint64_t count = 0;
            while (auto m = en.next()) {
                ++count;
                if (do_print) print_matrix(std::cout, *m);
            }
            std::cout << "count " << count << '\n';
            std::cout << "gaussian-binomial "
                      << verify::gaussian_binomial(cap_n, cap_c, q).get_str() << '\n';
            return 0;
        }

        if (vc->parsed()) {
            auto m = mode == "sampled" ? verify::SweepMode::Sampled : verify::SweepMode::Exhaustive;
            if (mode != "sampled" && mode != "exhaustive")
                throw Error("unknown mode '" + mode + "'");
            if (budget == 0) budget = m == verify::SweepMode::Sampled ? 100000 : (uint64_t{1} << 26);
            return emit_report(verify::verify_codim_bound(n, k, q, m, budget, seed, jobs), format);
        }
        if (vch->parsed()) {
            if (budget == 0) budget = uint64_t{1} << 26;
            return emit_report(verify::verify_characterization(n, k, q, budget, jobs), format);
        }
        if (vz->parsed()) return emit_report(verify::verify_z_condition(n, k, q, jobs), format);
        if (vl->parsed()) return emit_report(verify::verify_lemma_suite(seed, jobs), format);

        if (bench_cmd->parsed()) {
            std::vector<std::pair<int, int>> shapes;
            std::stringstream ss(pairs_arg);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                auto x = tok.find('x');
                if (x == std::string::npos) throw Error("bench pair needs the form NxK");
                shapes.emplace_back(std::stoi(tok.substr(0, x)), std::stoi(tok.substr(x + 1)));
            }
            auto rows = run_bench(shapes, FieldSpec::parse(field_arg), reps, seed);
            write_bench_csv(std::cout, rows);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
