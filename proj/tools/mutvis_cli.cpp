#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mutvis/constructions.hpp"
#include "mutvis/graph_io.hpp"
#include "mutvis/solvers.hpp"
#include "mutvis/theorems.hpp"
#include "mutvis/version.hpp"
#include "mutvis/zarankiewicz.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitIncomplete = 2;

struct CommonFlags {
    std::string format = "json";
    double timeout_secs = 60.0;
    bool timeout_set_explicitly = false;
    int workers = 1;
    int cap = 64;
    std::uint64_t seed = 1;
    bool stable_output = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--timeout", flags.timeout_secs, "Per-solve timeout in seconds")
        ->each([&flags](const std::string&) { flags.timeout_set_explicitly = true; });
    cmd->add_option("--workers", flags.workers, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--cap", flags.cap, "Solver vertex cap");
    cmd->add_option("--seed", flags.seed, "Seed for sampled instances");
    cmd->add_flag("--stable-output", flags.stable_output,
                  "Omit timing and node counters so reports are byte-stable across runs");
}

// MUTVIS_TIMEOUT_SECS overrides the default timeout unless --timeout was given.
void resolve_timeout(CommonFlags& flags) {
    if (!flags.timeout_set_explicitly) {
        if (const char* env = std::getenv("MUTVIS_TIMEOUT_SECS")) {
            try {
                flags.timeout_secs = std::stod(env);
            } catch (const std::exception&) {
                throw mutvis::ParseError("MUTVIS_TIMEOUT_SECS is not a number: " +
                                         std::string(env));
            }
        }
    }
    if (flags.timeout_secs <= 0)
        throw mutvis::InvalidInputError("timeout must be positive, got " +
                                        std::to_string(flags.timeout_secs));
}

std::chrono::milliseconds to_ms(double secs) {
    return std::chrono::milliseconds(static_cast<long long>(secs * 1000.0));
}

json config_json(const std::string& command, const CommonFlags& flags) {
    json j;
    j["command"] = command;
    j["format"] = flags.format;
    j["timeout_secs"] = flags.timeout_secs;
    // Stable mode omits scheduling details along with timing, so outputs are
    // byte-identical across worker counts.
    if (!flags.stable_output) j["workers"] = flags.workers;
    j["cap"] = flags.cap;
    j["seed"] = flags.seed;
    j["stable_output"] = flags.stable_output;
    return j;
}

json report_envelope(const std::string& command, const CommonFlags& flags) {
    json j;
    j["tool"] = mutvis::kToolName;
    j["version"] = mutvis::kToolVersion;
    j["config"] = config_json(command, flags);
    return j;
}

json solve_json(const mutvis::SolveResult& r, const CommonFlags& flags) {
    json j;
    j["value"] = r.value;
    j["witness"] = r.witness.to_vector();
    j["complete"] = r.complete;
    if (!flags.stable_output) {
        j["nodes"] = r.nodes_explored;
        j["elapsed_us"] = static_cast<long long>(r.elapsed.count());
    }
    return j;
}

std::string witness_string(const mutvis::VertexSet& w) { return w.to_string(); }

// ---------------------------------------------------------------- compute

struct ComputeArgs {
    std::string input;
    std::string input_format = "auto";
    std::string generate;
    bool want_mu = false, want_mu_i = false, want_alpha = false, want_gp = false,
         want_bounds = false;
};

int run_compute(const ComputeArgs& args, CommonFlags flags) {
    resolve_timeout(flags);
    if (args.input.empty() == args.generate.empty())
        throw mutvis::InvalidInputError("exactly one of --input and --generate is required");

    std::vector<mutvis::Graph> graphs;
    if (!args.generate.empty())
        graphs.push_back(mutvis::from_spec(args.generate));
    else
        graphs = mutvis::load_graphs(args.input, args.input_format);

    bool any_flag =
        args.want_mu || args.want_mu_i || args.want_alpha || args.want_gp || args.want_bounds;
    bool mu = args.want_mu || !any_flag;
    bool mu_i = args.want_mu_i || !any_flag;
    bool alpha = args.want_alpha || !any_flag;
    bool gp = args.want_gp || !any_flag;
    bool bounds = args.want_bounds || !any_flag;

    mutvis::SolverOptions so;
    so.vertex_cap = flags.cap;
    so.timeout = to_ms(flags.timeout_secs);
    so.workers = flags.workers;

    bool incomplete = false;
    json out = report_envelope("compute", flags);
    out["config"]["input"] = args.input;
    out["config"]["generate"] = args.generate;
    out["graphs"] = json::array();

    struct Row {
        std::string graph, invariant;
        int value;
        std::string witness;
        bool complete;
    };
    std::vector<Row> rows;

    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const auto& g = graphs[gi];
        mutvis::VisibilityOracle vis(g);
        json jg;
        std::string gname = g.name.empty() ? "graph" + std::to_string(gi) : g.name;
        jg["name"] = gname;
        jg["n"] = g.n;
        jg["m"] = g.m;
        jg["graph6"] = mutvis::to_graph6(g);
        auto record = [&](const char* key, mutvis::SolveResult r) {
            jg[key] = solve_json(r, flags);
            incomplete |= !r.complete;
            rows.push_back({gname, key, r.value, witness_string(r.witness), r.complete});
        };
        if (mu) record("mu", mutvis::solve_mu(vis, so));
        if (mu_i) record("mu_i", mutvis::solve_mu_i(vis, so));
        if (alpha) record("alpha", mutvis::solve_alpha(vis, so));
        if (gp) record("gp", mutvis::solve_gp(vis, so));
        if (bounds) {
            auto b = mutvis::bounds_mu(g);
            jg["bounds"] = {{"lower", b.lower}, {"upper", b.upper}, {"rules", b.rules}};
        }
        out["graphs"].push_back(jg);
    }

    if (flags.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else if (flags.format == "csv") {
        std::cout << "graph,invariant,value,witness,complete\n";
        for (const auto& r : rows)
            std::cout << r.graph << "," << r.invariant << "," << r.value << ",\"" << r.witness
                      << "\"," << (r.complete ? "true" : "false") << "\n";
    } else {
        for (const auto& jg : out["graphs"]) {
            std::cout << jg["name"].get<std::string>() << ": n=" << jg["n"] << " m=" << jg["m"]
                      << " g6=" << jg["graph6"].get<std::string>() << "\n";
            for (const char* key : {"mu", "mu_i", "alpha", "gp"})
                if (jg.contains(key))
                    std::cout << "  " << key << " = " << jg[key]["value"]
                              << (jg[key]["complete"].get<bool>() ? "" : " (incomplete)") << "\n";
            if (jg.contains("bounds"))
                std::cout << "  bounds: " << jg["bounds"]["lower"] << " <= mu <= "
                          << jg["bounds"]["upper"] << "\n";
        }
    }
    return incomplete ? kExitIncomplete : kExitOk;
}

// ---------------------------------------------------------------- generate

int run_generate(const std::string& spec, const std::string& format, const std::string& output) {
    mutvis::Graph g = mutvis::from_spec(spec);
    std::string payload =
        format == "edgelist" ? mutvis::to_edge_list(g) : mutvis::to_graph6(g) + "\n";
    if (output.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(output);
        if (!out) throw mutvis::Error("cannot open output file: " + output);
        out << payload;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- z

struct ZArgs {
    int m = 0, n = 0, s = 2, t = 2;
    bool crosscheck_mu = false;
};

int run_z(const ZArgs& args, CommonFlags flags) {
    resolve_timeout(flags);
    mutvis::ZInstance inst{args.m, args.n, args.s, args.t};
    mutvis::ZOptions zo;
    zo.timeout = to_ms(flags.timeout_secs);
    auto res = mutvis::z_exact(inst, zo);

    json out = report_envelope("z", flags);
    out["config"]["m"] = args.m;
    out["config"]["n"] = args.n;
    out["config"]["s"] = args.s;
    out["config"]["t"] = args.t;
    out["value"] = res.value;
    out["complete"] = res.complete;
    out["witness"] = res.witness.to_strings();
    if (!flags.stable_output) {
        out["nodes"] = res.nodes_explored;
        out["elapsed_us"] = static_cast<long long>(res.elapsed.count());
    }
    if (args.s > 1 && args.t > 1) out["kst_upper"] = mutvis::kst_upper(inst);
    if (args.s * args.t > 1) out["projective_lower"] = mutvis::projective_lower(inst);
    if (args.m == args.n) {
        auto w = mutvis::erdos_window(args.n);
        out["erdos_window"] = {{"lower", w.lower}, {"upper", w.upper}};
    }

    bool crosscheck_failed = false;
    if (args.crosscheck_mu) {
        if (args.s != 2 || args.t != 2)
            throw mutvis::InvalidInputError("--crosscheck-mu requires s = t = 2");
        auto [prod, lab] =
            mutvis::cartesian_product(mutvis::complete_graph(args.m), mutvis::complete_graph(args.n));
        mutvis::VisibilityOracle vis(prod);
        mutvis::SolverOptions so;
        so.vertex_cap = flags.cap;
        so.timeout = to_ms(flags.timeout_secs);
        so.workers = flags.workers;
        auto seed_set = mutvis::matrix_to_mv_set(res.witness, lab);
        if (res.complete && vis.is_mv_set(seed_set)) so.initial_lower_bound = seed_set.size();
        auto mu = mutvis::solve_mu(vis, so);
        out["crosscheck_mu"] = solve_json(mu, flags);
        out["crosscheck_equal"] = mu.complete && res.complete && mu.value == res.value;
        crosscheck_failed = !out["crosscheck_equal"].get<bool>();
    }

    if (flags.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else if (flags.format == "csv") {
        std::cout << "m,n,s,t,value,complete\n"
                  << args.m << "," << args.n << "," << args.s << "," << args.t << "," << res.value
                  << "," << (res.complete ? "true" : "false") << "\n";
    } else {
        std::cout << "z(" << args.m << "," << args.n << ";" << args.s << "," << args.t
                  << ") = " << res.value << (res.complete ? "" : " (incomplete)") << "\n";
        for (const auto& row : res.witness.to_strings()) std::cout << "  " << row << "\n";
    }
    if (!res.complete) return kExitIncomplete;
    return crosscheck_failed ? kExitError : kExitOk;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
    std::vector<std::string> claims;
    bool all = false;
    bool list = false;
    int max_n = -1;
    int samples = -1;
};

int run_check(const CheckArgs& args, CommonFlags flags) {
    resolve_timeout(flags);
    if (args.list) {
        for (const auto& id : mutvis::all_claim_ids())
            std::cout << id << ": " << mutvis::claim_summary(id) << "\n";
        return kExitOk;
    }
    std::vector<std::string> ids = args.claims;
    if (args.all) ids = mutvis::all_claim_ids();
    if (ids.empty())
        throw mutvis::InvalidInputError("no claims given; use --all or name claims (see --list)");
    for (const auto& id : ids)
        if (!mutvis::is_claim_id(id)) {
            std::string valid;
            for (const auto& v : mutvis::all_claim_ids()) valid += " " + v;
            throw mutvis::InvalidInputError("unknown claim id '" + id + "'; valid ids:" + valid);
        }

    mutvis::CheckOptions co;
    co.max_n = args.max_n;
    co.samples = args.samples;
    co.workers = flags.workers;
    co.seed = flags.seed;
    co.timeout = to_ms(flags.timeout_secs);

    json out = report_envelope("check", flags);
    out["config"]["claims"] = ids;
    out["config"]["max_n"] = args.max_n;
    out["config"]["samples"] = args.samples;
    out["reports"] = json::array();

    bool any_fail = false;
    std::vector<mutvis::CheckReport> reports;
    for (const auto& id : ids) {
        auto rep = mutvis::check(id, co);
        any_fail |= rep.status == mutvis::CheckStatus::fail;
        out["reports"].push_back(mutvis::to_json(rep, flags.stable_output));
        reports.push_back(std::move(rep));
    }
    out["all_ok"] = !any_fail;

    if (flags.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else if (flags.format == "csv") {
        std::cout << "claim_id,status,instances_checked,failures\n";
        for (const auto& r : reports) {
            const char* status = r.status == mutvis::CheckStatus::pass      ? "pass"
                                 : r.status == mutvis::CheckStatus::fail    ? "fail"
                                                                            : "skipped";
            std::cout << r.claim_id << "," << status << "," << r.instances_checked << ","
                      << r.failures.size() << "\n";
        }
    } else {
        for (const auto& r : reports) {
            const char* status = r.status == mutvis::CheckStatus::pass      ? "PASS"
                                 : r.status == mutvis::CheckStatus::fail    ? "FAIL"
                                                                            : "SKIP";
            std::cout << status << " " << r.claim_id << " (" << r.instances_checked
                      << " instances";
            if (!flags.stable_output) std::cout << ", " << r.elapsed.count() << " ms";
            std::cout << ")";
            if (r.status == mutvis::CheckStatus::skipped) std::cout << " -- " << r.skip_reason;
            std::cout << "\n";
            for (const auto& f : r.failures)
                std::cout << "  counterexample: " << f.instance << " expected " << f.expected
                          << " got " << f.got << "\n";
        }
    }
    return any_fail ? kExitError : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact mutual-visibility toolkit: solvers, generators, Zarankiewicz search, and "
                 "claim checks"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    CommonFlags compute_flags;
    auto* compute = app.add_subcommand("compute", "Compute invariants of input graphs");
    compute->add_option("--input", compute_args.input, "Graph file (.g6 or edge list)");
    compute->add_option("--input-format", compute_args.input_format, "Input format")
        ->check(CLI::IsMember({"auto", "g6", "edgelist"}));
    compute->add_option("--generate", compute_args.generate, "Generate the input from a spec");
    compute->add_flag("--mu", compute_args.want_mu, "Mutual-visibility number");
    compute->add_flag("--mu-i", compute_args.want_mu_i, "Independent mutual-visibility number");
    compute->add_flag("--alpha", compute_args.want_alpha, "Independence number");
    compute->add_flag("--gp", compute_args.want_gp, "General position number");
    compute->add_flag("--bounds", compute_args.want_bounds, "Cheap certified bounds on mu");
    add_common(compute, compute_flags);

    std::string gen_spec, gen_format = "g6", gen_output;
    auto* generate = app.add_subcommand("generate", "Emit a graph from a family spec");
    generate->add_option("spec", gen_spec, "Family spec, e.g. cycle:8 or frog:6,3,2")->required();
    generate->add_option("--format", gen_format, "Output format")
        ->check(CLI::IsMember({"g6", "edgelist"}));
    generate->add_option("--output", gen_output, "Output file (default stdout)");

    ZArgs z_args;
    CommonFlags z_flags;
    auto* zcmd = app.add_subcommand("z", "Exact Zarankiewicz number with bounds");
    zcmd->add_option("--m", z_args.m, "Rows")->required();
    zcmd->add_option("--n", z_args.n, "Columns")->required();
    zcmd->add_option("--s", z_args.s, "Forbidden block rows");
    zcmd->add_option("--t", z_args.t, "Forbidden block columns");
    zcmd->add_flag("--crosscheck-mu", z_args.crosscheck_mu,
                   "Also solve mu(K_m x K_n) and compare");
    add_common(zcmd, z_flags);

    CheckArgs check_args;
    CommonFlags check_flags;
    check_flags.timeout_secs = 600.0;
    auto* check = app.add_subcommand("check", "Run registered claim checkers");
    check->add_option("claims", check_args.claims, "Claim ids (see --list)");
    check->add_flag("--all", check_args.all, "Run every registered claim");
    check->add_flag("--list", check_args.list, "List claim ids and exit");
    check->add_option("--max-n", check_args.max_n, "Override the per-claim order cap");
    check->add_option("--samples", check_args.samples, "Override the per-claim sample count");
    add_common(check, check_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return run_compute(compute_args, compute_flags);
        if (generate->parsed()) return run_generate(gen_spec, gen_format, gen_output);
        if (zcmd->parsed()) return run_z(z_args, z_flags);
        if (check->parsed()) return run_check(check_args, check_flags);
    } catch (const mutvis::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitError;
    } catch (const mutvis::DisconnectedError& e) {
        std::cerr << "disconnected graph: " << e.what() << "\n";
        return kExitError;
    } catch (const mutvis::CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitError;
    } catch (const mutvis::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
