// locochrome: exact solvers and theorem checks for local chromatic numbers,
// their directed and fractional variants, and the universal graph families.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcn/fractional.hpp"
#include "lcn/generators.hpp"
#include "lcn/graph_io.hpp"
#include "lcn/orientation.hpp"
#include "lcn/report.hpp"
#include "lcn/sampler.hpp"
#include "lcn/solver.hpp"
#include "lcn/universal.hpp"
#include "lcn/verify.hpp"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CliError : std::runtime_error {
    int code;
    CliError(int code_, const std::string& msg) : std::runtime_error(msg), code(code_) {}
};

struct LoadedGraph {
    lcn::PartialOrientation d;
    std::string hash;
    std::string path;
};

LoadedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError(kExitUsage, "cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    LoadedGraph out;
    out.path = path;
    out.hash = lcn::content_hash(buf.str());
    try {
        out.d = lcn::graph_from_string(buf.str());
    } catch (const lcn::ParseError& e) {
        throw CliError(kExitUsage, path + ": " + e.what());
    }
    return out;
}

lcn::Budget make_budget(std::uint64_t nodes) {
    lcn::Budget b;
    if (nodes > 0) b.max_nodes = nodes;
    if (const char* ms = std::getenv("LOCOCHROME_BUDGET_MS"))
        b = lcn::Budget::wall_ms(std::stod(ms));
    return b;
}

std::uint64_t seed_or_env(std::uint64_t seed) {
    if (const char* s = std::getenv("LOCOCHROME_SEED")) return std::stoull(s);
    return seed;
}

void emit(const json& j, const std::string& format) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else if (j.contains("rows")) {
        for (const auto& r : j["rows"])
            std::cout << "[" << r["status"].get<std::string>() << "] "
                      << r["claim"].get<std::string>() << "\n";
        std::cout << j["status"].get<std::string>() << "\n";
    } else if (j.contains("value")) {
        std::cout << j["value"].dump() << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

json graph_meta(const LoadedGraph& lg) {
    return json{{"file", lg.path}, {"hash", lg.hash}};
}

json psi_result_json(const lcn::PsiResult& r) {
    json j;
    j["exact"] = r.exact;
    if (r.exact)
        j["value"] = r.value;
    else {
        j["status"] = "budget_exhausted";
        j["lower_bound"] = r.lower;
        j["upper_bound"] = r.upper;
    }
    j["nodes"] = r.nodes;
    return j;
}

void attach_witness(json& j, const lcn::Coloring& witness, const std::string& witness_path,
                    const std::vector<int>& per_vertex) {
    if (!witness_path.empty()) {
        std::ofstream out(witness_path);
        lcn::write_coloring(out, witness);
        j["witness_path"] = witness_path;
    }
    j["locality_per_vertex"] = per_vertex;
}

int run(int argc, char** argv) {
    CLI::App app{"exact local chromatic number toolkit"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a graph family");
    std::vector<std::string> gen_args;
    std::string gen_out;
    gen->add_option("family", gen_args, "u m k | ud m k | udm m h r | gap1 | cycle n | complete n | petersen")
        ->required();
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // ---- compute (plus direct aliases) ----
    std::string compute_param, compute_file, witness_path, psid_method = "cg";
    std::uint64_t budget_nodes = 0;
    auto* compute = app.add_subcommand("compute", "compute a parameter of a graph file");
    compute->add_option("parameter", compute_param,
                        "psi | psid | chi | chistar | psidstar | alpha | psidmax")
        ->required()
        ->check(CLI::IsMember({"psi", "psid", "chi", "chistar", "psidstar", "alpha", "psidmax"}));
    compute->add_option("graph", compute_file, "graph file")->required();
    compute->add_option("--budget", budget_nodes, "work-unit budget for exact searches");
    compute->add_option("--witness", witness_path, "write the witness coloring here");
    compute->add_option("--method", psid_method, "psidstar method: enum or cg")
        ->check(CLI::IsMember({"enum", "cg"}));

    struct Alias {
        const char* name;
        const char* param;
        CLI::App* cmd = nullptr;
        std::string file;
    };
    std::vector<Alias> aliases = {{"psi", "psi", nullptr, ""},
                                  {"psid", "psid", nullptr, ""},
                                  {"chi", "chi", nullptr, ""},
                                  {"chistar", "chistar", nullptr, ""},
                                  {"psidstar", "psidstar", nullptr, ""}};
    for (auto& a : aliases) {
        a.cmd = app.add_subcommand(a.name, std::string("compute ") + a.param + " of a graph file");
        a.cmd->add_option("graph", a.file, "graph file")->required();
        a.cmd->add_option("--budget", budget_nodes, "work-unit budget");
        a.cmd->add_option("--witness", witness_path, "write the witness coloring here");
        a.cmd->add_option("--method", psid_method, "psidstar method: enum or cg")
            ->check(CLI::IsMember({"enum", "cg"}));
    }

    // ---- enum-local ----
    std::string enum_file;
    int enum_k = 3, enum_max_colors = 0;
    std::uint64_t enum_cap = 1'000'000;
    auto* enum_local = app.add_subcommand("enum-local", "enumerate local k-coloring classes");
    enum_local->add_option("graph", enum_file)->required();
    enum_local->add_option("--k", enum_k, "locality bound")->required();
    enum_local->add_option("--max-colors", enum_max_colors, "palette cap (default: n)");
    enum_local->add_option("--cap", enum_cap, "maximum number of classes kept");
    enum_local->add_option("--budget", budget_nodes, "work-unit budget");

    // ---- verify-cert ----
    std::string cert_graph, cert_coloring;
    int cert_k = 3;
    auto* verify_cert = app.add_subcommand(
        "verify-cert", "check a coloring is directed local k for every completion");
    verify_cert->add_option("graph", cert_graph)->required();
    verify_cert->add_option("coloring", cert_coloring)->required();
    verify_cert->add_option("--k", cert_k)->required();

    // ---- verify-ratio ----
    std::string ratio_file;
    auto* vratio = app.add_subcommand("verify-ratio", "check chi* <= k^k/(k-1)^(k-1), k = psi_d*");
    vratio->add_option("graph", ratio_file)->required();
    vratio->add_option("--method", psid_method, "psidstar method: enum or cg")
        ->check(CLI::IsMember({"enum", "cg"}));

    // ---- alpha-ud ----
    int aud_m = 5, aud_k = 3;
    bool aud_check = false;
    auto* alpha_ud = app.add_subcommand("alpha-ud", "independence number of U_d(m,k) by formula");
    alpha_ud->add_option("m", aud_m)->required();
    alpha_ud->add_option("k", aud_k)->required();
    alpha_ud->add_flag("--check", aud_check, "confirm against the exact solver");

    // ---- orient-max ----
    std::string orient_file, orient_policy = "lex", orient_out;
    int orient_v0 = 0;
    auto* orient = app.add_subcommand("orient-max", "orientation attaining psi_d* = chi*");
    orient->add_option("graph", orient_file)->required();
    orient->add_option("--v0", orient_v0, "anchor vertex (default 0)");
    orient->add_option("--policy", orient_policy, "lex | free")
        ->check(CLI::IsMember({"lex", "free"}));
    orient->add_option("-o,--output", orient_out, "write the oriented graph here");

    // ---- sample ----
    std::string sample_graph, sample_coloring, sample_gamma = "auto";
    std::uint64_t sample_trials = 10000, sample_seed = 12345;
    int sample_r = 1, sample_h = 0;
    auto* sample = app.add_subcommand("sample", "random independent sets from a multi-coloring");
    sample->add_option("--graph", sample_graph)->required();
    sample->add_option("--coloring", sample_coloring)->required();
    sample->add_option("--gamma", sample_gamma, "rational p/q, or auto for (1-r/h)^(1/r)");
    sample->add_option("--trials", sample_trials);
    sample->add_option("--seed", sample_seed);
    sample->add_option("--r", sample_r, "colors per vertex");
    sample->add_option("--h-local", sample_h, "locality budget h (required)");

    // ---- verify ----
    std::string theorem;
    int verify_m = 5, verify_k = 3;
    std::uint64_t verify_seed = 42, verify_trials = 100000;
    auto* verify = app.add_subcommand("verify", "run a scripted theorem verification");
    verify->add_option("theorem", theorem,
                       "gap1 | unicolor | k1k | ize | frakceq | ratio-a | ratio-b | sampler")
        ->required()
        ->check(CLI::IsMember(
            {"gap1", "unicolor", "k1k", "ize", "frakceq", "ratio-a", "ratio-b", "sampler"}));
    verify->add_option("--m", verify_m);
    verify->add_option("--k", verify_k);
    verify->add_option("--seed", verify_seed);
    verify->add_option("--trials", verify_trials);
    verify->add_option("--budget", budget_nodes, "work-unit budget");

    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->add_option("--format", format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    lcn::Budget budget = make_budget(budget_nodes);

    if (*gen) {
        std::string out_bytes;
        const auto& a = gen_args;
        auto need = [&](size_t n) {
            if (a.size() != n) throw CliError(kExitUsage, "wrong number of arguments for gen " + a[0]);
        };
        if (a.empty()) throw CliError(kExitUsage, "gen needs a family");
        if (a[0] == "u") {
            need(3);
            out_bytes = lcn::graph_to_string(lcn::universal_undirected(std::stoi(a[1]), std::stoi(a[2])));
        } else if (a[0] == "ud") {
            need(3);
            out_bytes = lcn::graph_to_string(lcn::universal_directed(std::stoi(a[1]), std::stoi(a[2])));
        } else if (a[0] == "udm") {
            need(4);
            out_bytes = lcn::graph_to_string(
                lcn::universal_multi(std::stoi(a[1]), std::stoi(a[2]), std::stoi(a[3])));
        } else if (a[0] == "gap1") {
            need(1);
            out_bytes = lcn::graph_to_string(lcn::counterexample_graph().g);
        } else if (a[0] == "cycle") {
            need(2);
            out_bytes = lcn::graph_to_string(lcn::cycle_graph(std::stoi(a[1])));
        } else if (a[0] == "complete") {
            need(2);
            out_bytes = lcn::graph_to_string(lcn::complete_graph(std::stoi(a[1])));
        } else if (a[0] == "petersen") {
            need(1);
            out_bytes = lcn::graph_to_string(lcn::petersen_graph());
        } else {
            throw CliError(kExitUsage, "unknown family: " + a[0]);
        }
        if (gen_out.empty()) {
            std::cout << out_bytes;
        } else {
            std::ofstream out(gen_out);
            if (!out) throw CliError(kExitUsage, "cannot write " + gen_out);
            out << out_bytes;
        }
        return kExitPass;
    }

    for (auto& al : aliases)
        if (*al.cmd) {
            compute_param = al.param;
            compute_file = al.file;
        }

    if (*compute || !compute_param.empty()) {
        LoadedGraph lg = load_graph(compute_file);
        json j;
        j["schema"] = lcn::kReportSchema;
        j["version"] = lcn::kToolVersion;
        j["parameter"] = compute_param;
        j["graph"] = graph_meta(lg);
        if (compute_param == "psi" || compute_param == "chi") {
            lcn::PsiResult r = compute_param == "psi" ? lcn::local_chromatic(lg.d.base, budget)
                                                      : lcn::chromatic(lg.d.base, budget);
            j.update(psi_result_json(r));
            attach_witness(j, r.witness, witness_path,
                           lcn::locality(lg.d.base, r.witness).per_vertex);
            emit(j, format);
            return r.exact ? kExitPass : kExitBudget;
        }
        if (compute_param == "psid") {
            if (!lg.d.fully_forced())
                throw CliError(kExitUsage, "psid needs a fully forced digraph (no free edges)");
            lcn::PsiResult r = lcn::directed_local_chromatic(lg.d, budget);
            j.update(psi_result_json(r));
            attach_witness(j, r.witness, witness_path,
                           lcn::locality_directed(lg.d, r.witness, lcn::OutMode::exact).per_vertex);
            emit(j, format);
            return r.exact ? kExitPass : kExitBudget;
        }
        if (compute_param == "chistar") {
            lcn::ChiStarResult r = lcn::fractional_chromatic(lg.d.base);
            j["value"] = lcn::rat_str(r.value);
            j["dual_total"] = lcn::rat_str(r.dual.total());
            j["column_generation"] = r.used_column_generation;
            if (!witness_path.empty()) {
                std::ofstream out(witness_path);
                lcn::write_fractional_coloring(out, r.primal);
                j["witness_path"] = witness_path;
            }
            emit(j, format);
            return kExitPass;
        }
        if (compute_param == "psidstar") {
            auto method = psid_method == "enum" ? lcn::PsidStarMethod::enumerate
                                                : lcn::PsidStarMethod::column_generation;
            lcn::PsidStarResult r = lcn::psi_d_star(lg.d, method);
            j["value"] = lcn::rat_str(r.value);
            j["support_size"] = r.primal.weights.size();
            if (!witness_path.empty()) {
                std::ofstream out(witness_path);
                lcn::write_fractional_coloring(out, r.primal);
                j["witness_path"] = witness_path;
            }
            emit(j, format);
            return kExitPass;
        }
        if (compute_param == "alpha") {
            lcn::MisResult r = lcn::max_independent_set(lg.d.base);
            j["value"] = r.alpha;
            j["witness"] = r.witness.to_vector();
            emit(j, format);
            return kExitPass;
        }
        // psidmax
        lcn::PsidMaxResult r = lcn::psi_d_max_exhaustive(lg.d.base, budget);
        j["value"] = r.upper;
        j["exact"] = r.exact;
        emit(j, format);
        return kExitPass;
    }

    if (*enum_local) {
        LoadedGraph lg = load_graph(enum_file);
        int max_colors = enum_max_colors > 0 ? enum_max_colors : lg.d.base.n;
        auto r = lcn::enumerate_local_colorings(lg.d.base, enum_k, max_colors, enum_cap, budget);
        json j;
        j["schema"] = lcn::kReportSchema;
        j["version"] = lcn::kToolVersion;
        j["k"] = enum_k;
        j["graph"] = graph_meta(lg);
        j["classes"] = r.classes.size();
        j["complete"] = r.status == lcn::LocalColoringEnum::Status::complete;
        json cl = json::array();
        for (const auto& c : r.classes) cl.push_back(c.color);
        j["representatives"] = cl;
        emit(j, format);
        if (r.status == lcn::LocalColoringEnum::Status::complete) return kExitPass;
        return kExitBudget;
    }

    if (*verify_cert) {
        LoadedGraph lg = load_graph(cert_graph);
        std::ifstream cf(cert_coloring);
        if (!cf) throw CliError(kExitUsage, "cannot open coloring file: " + cert_coloring);
        lcn::Coloring c = lcn::read_coloring(cf, lg.d.base.n);
        bool ok = lcn::verify_orientation_certificate(lg.d, c, cert_k);
        json j;
        j["schema"] = lcn::kReportSchema;
        j["version"] = lcn::kToolVersion;
        j["k"] = cert_k;
        j["graph"] = graph_meta(lg);
        j["holds_for_all_completions"] = ok;
        j["pessimistic_locality"] =
            lcn::locality_directed(lg.d, c, lcn::OutMode::pessimistic).per_vertex;
        emit(j, format);
        return ok ? kExitPass : kExitClaimFailure;
    }

    if (*vratio) {
        LoadedGraph lg = load_graph(ratio_file);
        auto method = psid_method == "enum" ? lcn::PsidStarMethod::enumerate
                                            : lcn::PsidStarMethod::column_generation;
        lcn::VerifyRatioReport r = lcn::verify_ratio(lg.d, method);
        json j;
        j["schema"] = lcn::kReportSchema;
        j["version"] = lcn::kToolVersion;
        j["graph"] = graph_meta(lg);
        j["chi_star"] = lcn::rat_str(r.chi_star);
        j["psi_d_star"] = lcn::rat_str(r.k);
        j["holds"] = r.holds;
        j["degenerate"] = r.degenerate;
        std::ostringstream slack;
        slack.precision(12);
        slack << r.slack_approx;
        j["slack"] = slack.str();
        emit(j, format);
        return r.holds ? kExitPass : kExitClaimFailure;
    }

    if (*alpha_ud) {
        lcn::AlphaFormula f = lcn::alpha_universal_directed(aud_m, aud_k);
        json j;
        j["schema"] = lcn::kReportSchema;
        j["version"] = lcn::kToolVersion;
        j["m"] = aud_m;
        j["k"] = aud_k;
        j["value"] = f.value.get_str();
        j["least_maximizer_l"] = f.best_l;
        if (aud_check) {
            lcn::MisResult mis = lcn::max_independent_set(lcn::universal_directed(aud_m, aud_k).base);
            j["exact_alpha"] = mis.alpha;
            j["matches"] = lcn::Int(mis.alpha) == f.value;
            emit(j, format);
            return j["matches"].get<bool>() ? kExitPass : kExitClaimFailure;
        }
        emit(j, format);
        return kExitPass;
    }

    if (*orient) {
        LoadedGraph lg = load_graph(orient_file);
        auto policy =
            orient_policy == "lex" ? lcn::FreePolicy::lexicographic : lcn::FreePolicy::leave_free;
        lcn::MaxOrientation mo = lcn::max_orientation(lg.d.base, orient_v0, policy);
        std::string bytes = lcn::graph_to_string(mo.d);
        if (!orient_out.empty()) {
            std::ofstream out(orient_out);
            out << bytes;
        }
        json j;
        j["schema"] = lcn::kReportSchema;
        j["version"] = lcn::kToolVersion;
        j["graph"] = graph_meta(lg);
        j["v0"] = mo.cert.v0;
        j["a0"] = mo.cert.a0.to_vector();
        j["chi_star"] = lcn::rat_str(mo.cert.chi_star);
        j["tightness"] = lcn::rat_str(mo.cert.tightness);
        json clique = json::array();
        for (const auto& t : mo.cert.clique.t) clique.push_back(lcn::rat_str(t));
        j["clique"] = clique;
        if (orient_out.empty())
            j["orientation"] = bytes;
        else
            j["orientation_path"] = orient_out;
        emit(j, format);
        return kExitPass;
    }

    if (*sample) {
        if (sample_h <= 0) throw CliError(kExitUsage, "sample needs --h-local");
        LoadedGraph lg = load_graph(sample_graph);
        if (!lg.d.fully_forced())
            throw CliError(kExitUsage, "sampling needs a fully forced digraph");
        std::ifstream cf(sample_coloring);
        if (!cf) throw CliError(kExitUsage, "cannot open coloring file: " + sample_coloring);
        lcn::MultiColoring mc = lcn::read_multicoloring(cf, lg.d.base.n, sample_r, sample_h);
        lcn::Scalar gamma = sample_gamma == "auto"
                                ? lcn::optimal_gamma(sample_h, sample_r)
                                : lcn::Scalar::of(lcn::rat_parse(sample_gamma));
        if (!(gamma.exact ? (gamma.q > 0 && gamma.q < 1) : (gamma.f > 0 && gamma.f < 1)))
            throw CliError(kExitUsage, "gamma must lie strictly between 0 and 1");
        lcn::SamplerConfig cfg{gamma, sample_trials, seed_or_env(sample_seed)};
        lcn::MembershipReport rep = lcn::estimate_membership(lg.d, mc, cfg);
        json j;
        j["schema"] = lcn::kReportSchema;
        j["graph"] = graph_meta(lg);
        j["gamma"] = gamma.exact ? lcn::rat_str(gamma.q) : std::to_string(gamma.to_double());
        j["trials"] = rep.trials;
        j["seed"] = rep.seed;
        j["bound"] = rep.bound.exact ? lcn::rat_str(rep.bound.q) : std::to_string(rep.bound.to_double());
        j["all_meet_bound"] = rep.all_meet_bound;
        j["all_within_4se"] = rep.all_within_4se;
        json rows = json::array();
        for (const auto& row : rep.rows)
            rows.push_back({{"exact", row.exact.exact ? lcn::rat_str(row.exact.q)
                                                      : std::to_string(row.exact.to_double())},
                            {"empirical", row.empirical},
                            {"stderr", row.stderr_est},
                            {"within_4se", row.within_4se},
                            {"meets_bound", row.meets_bound}});
        j["vertices"] = rows;
        emit(j, format);
        return rep.all_meet_bound ? kExitPass : kExitClaimFailure;
    }

    if (*verify) {
        std::uint64_t seed = seed_or_env(verify_seed);
        lcn::VerificationReport rep;
        if (theorem == "gap1")
            rep = lcn::verify_gap1(budget);
        else if (theorem == "unicolor")
            rep = lcn::verify_unicolor(budget);
        else if (theorem == "k1k")
            rep = lcn::verify_k1k(budget);
        else if (theorem == "ize")
            rep = lcn::verify_ize(seed);
        else if (theorem == "frakceq")
            rep = lcn::verify_frakceq(seed);
        else if (theorem == "ratio-a")
            rep = lcn::verify_ratio_a(seed);
        else if (theorem == "ratio-b")
            rep = lcn::verify_ratio_b(verify_m, verify_k, budget);
        else
            rep = lcn::verify_sampler(seed, verify_trials);
        if (format == "json")
            std::cout << rep.to_json().dump(2) << "\n";
        else
            std::cout << rep.to_text();
        return rep.pass() ? kExitPass : kExitClaimFailure;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const lcn::OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return kExitBudget;
    } catch (const lcn::ConvergenceError& e) {
        std::cerr << "no convergence: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
