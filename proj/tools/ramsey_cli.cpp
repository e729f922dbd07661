// Command-line workbench: closed-form bound reports, the six avoidance
// constructions, exhaustive arrow decisions, exact Ramsey / size-Ramsey
// values, and certificate verification.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 resource-limited unknown.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ramsey/bounds.hpp"
#include "ramsey/certificate.hpp"
#include "ramsey/construct.hpp"
#include "ramsey/exact.hpp"
#include "ramsey/json_io.hpp"

namespace {

using namespace ramsey;

struct RunConfig {
    long long node_budget = 50'000'000;
    int threads = 1;
    std::uint64_t seed = 0;
    std::string out_dir = "certs";
};

SearchOptions search_options(const RunConfig& config) {
    SearchOptions opts;
    opts.node_budget = config.node_budget;
    opts.threads = config.threads;
    return opts;
}

std::string store_certificate(Certificate cert, const RunConfig& config,
                              const std::string& command) {
    cert.hash = certificate_hash(cert);
    std::filesystem::create_directories(config.out_dir);
    const std::string name = cert.hash + ".json";
    const std::string path = config.out_dir + "/" + name;
    save_json_file(path, to_json(cert));

    const std::string manifest_path = config.out_dir + "/manifest.json";
    Json manifest;
    if (std::filesystem::exists(manifest_path)) {
        manifest = load_json_file(manifest_path);
    } else {
        manifest["format"] = 1;
        manifest["runs"] = Json::array();
    }
    Json run;
    run["command"] = command;
    run["certificate"] = name;
    run["claim"] = cert.claim;
    run["status"] = cert.status;
    bool already = false;
    for (const auto& r : manifest["runs"])
        if (r.value("certificate", "") == name && r.value("command", "") == command) already = true;
    if (!already) manifest["runs"].push_back(run);
    save_json_file(manifest_path, manifest);
    return path;
}

DesignInput design_from_json(const Json& j) {
    DesignInput d;
    d.N = j.at("N").get<int>();
    d.clique_order = j.at("clique_order").get<int>();
    for (const auto& c : j.at("cliques")) d.cliques.push_back(c.get<std::vector<int>>());
    if (j.contains("resolution") && !j.at("resolution").is_null()) {
        d.resolution = std::vector<std::vector<int>>();
        for (const auto& c : j.at("resolution")) d.resolution->push_back(c.get<std::vector<int>>());
    }
    return d;
}

// verified avoidance certificate for a freshly constructed coloring
int finish_coloring(const Hypergraph& host, const EdgeColoring& coloring, const Target& target,
                    int r, const RunConfig& config, const std::string& command,
                    const std::string& guarantee) {
    if (std::holds_alternative<PathSpec>(target)) {
        auto hit = contains_mono_path(host, coloring, std::get<PathSpec>(target));
        if (hit) {
            std::cerr << "construction self-check failed: monochromatic target found\n";
            return 1;
        }
    }
    Certificate cert = make_avoidance_certificate(host, coloring, target, r);
    cert.status = "verified";
    const std::string path = store_certificate(cert, config, command);
    std::cout << "colors used: " << coloring.colors_used() << "\n";
    std::cout << "guarantee: " << guarantee << "\n";
    std::cout << "certificate: " << path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"size-Ramsey workbench for uniform hypergraph paths"};
    app.require_subcommand(1);

    RunConfig config;
    if (const char* env = std::getenv("RAMSEY_OUT")) config.out_dir = env;
    app.add_option("--out", config.out_dir, "certificate output directory");
    app.add_option("--threads", config.threads, "worker threads for the arrow search");
    app.add_option("--node-budget", config.node_budget, "node budget per search subtree");
    app.add_option("--seed", config.seed, "seed for the component-coloring heuristic");

    // ---- bounds ----
    auto* cmd_bounds = app.add_subcommand("bounds", "evaluate closed-form bounds");
    int b_r = 2, b_k = 2, b_l = 1, b_n = 4;
    bool b_json = false;
    cmd_bounds->add_option("--r", b_r)->required();
    cmd_bounds->add_option("--k", b_k)->required();
    cmd_bounds->add_option("--l", b_l)->required();
    cmd_bounds->add_option("--n", b_n);
    cmd_bounds->add_flag("--json", b_json);

    // ---- color ----
    auto* cmd_color = app.add_subcommand("color", "run an avoidance construction");
    std::string c_kind, c_input, c_fixture;
    int c_r = 2, c_k = 2, c_l = 1, c_n = 4, c_m = 1, c_nprime = 0, c_dhat = 7, c_base_budget = 0;
    cmd_color->add_option("construction", c_kind, "afl|hierarchy|composite|star-arb|loose|design")
        ->required();
    cmd_color->add_option("--input", c_input, "host hypergraph JSON file");
    cmd_color->add_option("--fixture", c_fixture, "built-in design fixture name");
    cmd_color->add_option("--r", c_r);
    cmd_color->add_option("--k", c_k);
    cmd_color->add_option("--l", c_l);
    cmd_color->add_option("--n", c_n);
    cmd_color->add_option("--m", c_m);
    cmd_color->add_option("--n-prime", c_nprime);
    cmd_color->add_option("--d-hat", c_dhat);
    cmd_color->add_option("--base-budget", c_base_budget, "vertex budget of the base oracle");

    // ---- arrow ----
    auto* cmd_arrow = app.add_subcommand("arrow", "decide the arrow relation exhaustively");
    std::string a_host, a_target;
    int a_r = 2;
    cmd_arrow->add_option("--host", a_host)->required();
    cmd_arrow->add_option("--r", a_r)->required();
    cmd_arrow->add_option("--target", a_target)->required();

    // ---- exact ----
    auto* cmd_exact = app.add_subcommand("exact", "exact Ramsey / size-Ramsey values");
    std::string e_kind, e_target;
    int e_r = 2, e_max_n = 0, e_max_edges = 0;
    cmd_exact->add_option("kind", e_kind, "ramsey|size-ramsey")->required();
    cmd_exact->add_option("--target", e_target)->required();
    cmd_exact->add_option("--r", e_r)->required();
    cmd_exact->add_option("--max-n", e_max_n);
    cmd_exact->add_option("--max-edges", e_max_edges);

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "re-verify a certificate file");
    std::string v_file;
    cmd_verify->add_option("file", v_file)->required();

    // ---- fixtures ----
    auto* cmd_fixtures = app.add_subcommand("fixtures", "list built-in designs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_bounds) {
            auto report = full_report(b_r, b_k, b_l, b_n);
            if (b_json)
                std::cout << to_json(report).dump(2) << "\n";
            else
                std::cout << to_table(report);
            return 0;
        }

        if (*cmd_color) {
            const std::string command = "color " + c_kind;
            if (c_kind == "afl") {
                PathSpec spec(c_k, c_l, c_n);
                auto afl = afl_coloring(c_r, spec);
                return finish_coloring(afl.host, afl.coloring, spec, c_r, config, command,
                                       "no monochromatic " + target_to_string(spec) + " in " +
                                           std::to_string(c_r) + " colors; host order " +
                                           std::to_string(afl.host.vertex_count()));
            }
            if (c_kind == "hierarchy") {
                auto host = hypergraph_from_json(load_json_file(c_input));
                auto hc = hierarchy_coloring(host, c_l, c_r, c_m);
                PathSpec guaranteed(host.k(), c_l, c_l + (c_m + 1) * (host.k() - c_l));
                return finish_coloring(host, hc.coloring, guaranteed, hc.coloring.num_colors,
                                       config, command,
                                       "no monochromatic " + target_to_string(guaranteed) +
                                           "; bound 2rf+1 = " +
                                           std::to_string(2 * c_r * hc.trace.f + 1));
            }
            if (c_kind == "composite") {
                auto host = hypergraph_from_json(load_json_file(c_input));
                auto cc = composite_coloring(host, c_l, c_r, c_nprime,
                                             exhaustive_oracle(search_options(config)),
                                             c_base_budget, exhaustive_extension_oracle(), c_dhat);
                PathSpec guaranteed(host.k(), c_l, cc.trace.guaranteed_n);
                return finish_coloring(host, cc.coloring, guaranteed, c_r, config, command,
                                       "no monochromatic " + target_to_string(guaranteed));
            }
            if (c_kind == "star-arb") {
                auto host = hypergraph_from_json(load_json_file(c_input));
                auto coloring = star_arboricity_coloring(host, c_r);
                PathSpec p4(2, 1, 4);
                return finish_coloring(host, coloring, p4, c_r, config, command,
                                       "every class is a star forest; no monochromatic path:2,1,4");
            }
            if (c_kind == "loose") {
                auto host = hypergraph_from_json(load_json_file(c_input));
                PathSpec spec(c_k, c_l, c_n);
                auto lc = loose_path_coloring(host, c_r, spec, exhaustive_oracle(search_options(config)),
                                              config.seed);
                return finish_coloring(host, lc.coloring, spec, c_r, config, command,
                                       "no monochromatic " + target_to_string(spec) +
                                           "; auxiliary max degree " +
                                           std::to_string(lc.aux_max_degree) +
                                           ", max component " + std::to_string(lc.max_component));
            }
            if (c_kind == "design") {
                DesignInput input;
                if (c_fixture == "sts7") input = sts7_fixture();
                else if (c_fixture == "sts9") input = sts9_fixture();
                else if (!c_input.empty()) input = design_from_json(load_json_file(c_input));
                else throw std::invalid_argument("design needs --fixture or --input");
                auto dc = design_coloring(input, c_k);
                PathSpec guaranteed(c_k, c_k - 1, input.clique_order + 1);
                return finish_coloring(dc.host, dc.coloring, guaranteed, dc.coloring.num_colors,
                                       config, command,
                                       "no monochromatic " + target_to_string(guaranteed) +
                                           "; vertex Ramsey above " + std::to_string(input.N) +
                                           " for " + std::to_string(dc.coloring.num_colors) +
                                           " colors");
            }
            throw std::invalid_argument("unknown construction: " + c_kind);
        }

        if (*cmd_arrow) {
            auto host = hypergraph_from_json(load_json_file(a_host));
            auto target = target_from_string(a_target);
            auto decision = arrows(host, a_r, target, search_options(config));
            std::cout << "outcome: " << to_string(decision.outcome)
                      << " (nodes " << decision.stats.nodes << ", prunes "
                      << decision.stats.prunes << ")\n";
            if (decision.outcome == ArrowOutcome::unknown) return 3;
            Certificate cert;
            if (decision.outcome == ArrowOutcome::avoided)
                cert = make_avoidance_certificate(host, *decision.witness, target, a_r);
            else
                cert = make_arrows_certificate(host, target, a_r);
            cert.status = "verified";
            std::cout << "certificate: " << store_certificate(cert, config, "arrow") << "\n";
            return 0;
        }

        if (*cmd_exact) {
            auto target = target_from_string(e_target);
            ExactResult result;
            std::string claim;
            if (e_kind == "ramsey") {
                if (e_max_n <= 0) throw std::invalid_argument("ramsey needs --max-n");
                result = ramsey_number_exact(target, e_r, e_max_n, search_options(config));
                claim = "ramsey_exact";
            } else if (e_kind == "size-ramsey") {
                if (e_max_edges <= 0) throw std::invalid_argument("size-ramsey needs --max-edges");
                result = size_ramsey_exact(target, e_r, e_max_edges, search_options(config));
                claim = "size_ramsey_exact";
            } else {
                throw std::invalid_argument("kind must be ramsey or size-ramsey");
            }
            if (result.status == ExactStatus::unknown) {
                std::cout << "unknown: budget exhausted near " << result.value << "\n";
                return 3;
            }
            if (result.status == ExactStatus::bound_only) {
                std::cout << "no host within budget: value > " << result.value - 1 << "\n";
                return 0;
            }
            std::cout << "value: " << result.value << "\n";
            Certificate cert =
                make_exact_certificate(claim, *result.witness_host, target, e_r, result.value);
            cert.status = "verified";
            std::cout << "certificate: " << store_certificate(cert, config, "exact " + e_kind)
                      << "\n";
            return 0;
        }

        if (*cmd_verify) {
            Certificate cert = certificate_from_json(load_json_file(v_file));
            auto result = verify_certificate(cert, search_options(config));
            std::cout << (result.ok ? "OK: " : "FAIL: ") << result.message << "\n";
            if (result.violation) {
                std::cout << "violating witness (color " << result.violation->color << "):";
                for (int v : result.violation->sequence) std::cout << " " << v;
                std::cout << "\n";
            }
            return result.ok ? 0 : 1;
        }

        if (*cmd_fixtures) {
            std::cout << "sts7: Fano plane, 7 points, 7 lines (not resolvable)\n";
            std::cout << "sts9: 3x3 affine plane, 9 points, 12 lines, 4 parallel classes\n";
            return 0;
        }
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
