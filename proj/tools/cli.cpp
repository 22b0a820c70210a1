#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurlpp/errors.hpp"
#include "schurlpp/greene.hpp"
#include "schurlpp/growth.hpp"
#include "schurlpp/io.hpp"
#include "schurlpp/lpp.hpp"
#include "schurlpp/partition.hpp"
#include "schurlpp/path.hpp"
#include "schurlpp/schur.hpp"
#include "schurlpp/verify.hpp"

using namespace schurlpp;
using nlohmann::json;

namespace {

int g_exit = 0;

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw InputError("cannot write '" + out + "'");
    f << text << "\n";
}

json reparse(const std::string& dumped) { return json::parse(dumped); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"growth-diagram RSK, geometric last passage percolation and exact "
                 "Schur measures"};
    app.require_subcommand(1);

    std::string path_arg, params_arg, matrix_arg, filling_arg, seq_arg, chains_arg, lambda_arg;
    std::string out, mode = "exact";
    uint64_t seed = 0, replica = 0;
    int cols = 1, rows = 1, size = 1, k = 1, cap = 6, trunc = 6, workers = 0;
    long long samples = 100000, fuzz_budget = 2000, enum_budget = 50'000'000;
    bool with_witness = false;

    auto* sf = app.add_subcommand("sample-full",
                                  "Draw the geometric environment on a cols x rows window");
    sf->add_option("--params", params_arg, "full-space params (JSON or file)")->required();
    sf->add_option("--cols", cols)->required();
    sf->add_option("--rows", rows)->required();
    sf->add_option("--seed", seed);
    sf->add_option("--replica", replica);
    sf->callback([&] {
        FsParams p = parse_fs_params(load_json_argument(params_arg));
        emit(dump_matrix(sample_full(p, cols, rows, seed, replica)), out);
    });

    auto* sh = app.add_subcommand("sample-half",
                                  "Draw the symmetric environment on a size x size window");
    sh->add_option("--params", params_arg, "half-space params (JSON or file)")->required();
    sh->add_option("--size", size)->required();
    sh->add_option("--seed", seed);
    sh->add_option("--replica", replica);
    sh->callback([&] {
        HsParams p = parse_hs_params(load_json_argument(params_arg));
        emit(dump_matrix(sample_half(p, size, seed, replica)), out);
    });

    auto* ob = app.add_subcommand("observe",
                                  "Growth observables and passage times along a path");
    ob->add_option("--matrix", matrix_arg, "weight matrix (JSON or file)")->required();
    ob->add_option("--path", path_arg, "down-right path (JSON or file)")->required();
    ob->callback([&] {
        WeightMatrix w = parse_matrix(load_json_argument(matrix_arg));
        DownRightPath gamma = parse_path(load_json_argument(path_arg));
        emit(dump_observation(observe(w, gamma)), out);
    });

    auto* rk = app.add_subcommand("rsk", "Partition sequence of a filling along a path");
    rk->add_option("--filling", filling_arg, "filling of the path shape (JSON or file)")
        ->required();
    rk->add_option("--path", path_arg)->required();
    rk->callback([&] {
        Filling f = parse_filling(load_json_argument(filling_arg));
        DownRightPath gamma = parse_path(load_json_argument(path_arg));
        emit(dump_sequence(rsk_map(f, gamma)), out);
    });

    auto* ri = app.add_subcommand("rsk-inverse", "Recover the filling from a sequence");
    ri->add_option("--sequence", seq_arg, "partition sequence (JSON or file)")->required();
    ri->add_option("--path", path_arg)->required();
    ri->callback([&] {
        std::vector<Partition> seq = parse_sequence(load_json_argument(seq_arg));
        DownRightPath gamma = parse_path(load_json_argument(path_arg));
        emit(dump_filling(rsk_inverse(seq, gamma)), out);
    });

    auto* me = app.add_subcommand("measure", "Exact measure weight of a sequence");
    me->add_option("--path", path_arg)->required();
    me->add_option("--params", params_arg, "full- or half-space params; a \"c\" member "
                                           "selects the half-space measure")
        ->required();
    me->add_option("--sequence", seq_arg)->required();
    me->callback([&] {
        DownRightPath gamma = parse_path(load_json_argument(path_arg));
        std::string ptext = load_json_argument(params_arg);
        std::vector<Partition> seq = parse_sequence(load_json_argument(seq_arg));
        if (params_have_c(ptext))
            emit(dump_weight(hs_weight(gamma, parse_hs_params(ptext), seq)), out);
        else
            emit(dump_weight(fs_weight(gamma, parse_fs_params(ptext), seq)), out);
    });

    auto* en = app.add_subcommand("enumerate",
                                  "All pattern-valid sequences along a path with parts <= cap");
    en->add_option("--path", path_arg)->required();
    en->add_option("--cap", cap)->required();
    en->callback([&] {
        DownRightPath gamma = parse_path(load_json_argument(path_arg));
        json arr = json::array();
        for (const auto& seq : enumerate_sequences(gamma, cap))
            arr.push_back(reparse(dump_sequence(seq)));
        emit(arr.dump(), out);
    });

    auto* gc = app.add_subcommand("greene-check",
                                  "Multi-path and multi-chain optima of a matrix");
    gc->add_option("--matrix", matrix_arg)->required();
    gc->add_option("--k", k)->required();
    gc->add_flag("--witness", with_witness, "also return an optimal chain family and its "
                                            "straightened disjoint paths");
    gc->callback([&] {
        WeightMatrix w = parse_matrix(load_json_argument(matrix_arg));
        json j{{"k", k}, {"g", brute_g(w, k)}, {"h", brute_h(w, k)}};
        if (with_witness) {
            auto [value, family] = brute_h_witness(w, k);
            j["witness"] = reparse(dump_chains(family));
            j["witness_weight"] = value;
            if (k <= std::min(w.cols(), w.rows())) {
                auto paths = straighten(family, w, k);
                long long pw = 0;
                for (const auto& path : paths) pw += chain_weight(w, path);
                j["straightened"] = reparse(dump_chains(paths));
                j["straightened_weight"] = pw;
            }
        }
        emit(j.dump(), out);
    });

    auto* la = app.add_subcommand("layers",
                                  "Nested shapes whose boundaries cover a disjoint chain family");
    la->add_option("--chains", chains_arg, "chain family (JSON or file)")->required();
    la->add_option("--lambda", lambda_arg, "ambient diagram (JSON or file)")->required();
    la->callback([&] {
        auto chains = parse_chains(load_json_argument(chains_arg));
        Partition lambda = parse_partition(load_json_argument(lambda_arg));
        json arr = json::array();
        for (const Partition& s : layers_decompose(chains, lambda))
            arr.push_back(reparse(dump_partition(s)));
        emit(arr.dump(), out);
    });

    auto* ve = app.add_subcommand("verify",
                                  "Compare sampled/enumerated observables with the exact measure");
    ve->add_option("--path", path_arg)->required();
    ve->add_option("--params", params_arg, "a \"c\" member selects the half-space side")
        ->required();
    ve->add_option("--mode", mode, "exact | mc")->check(CLI::IsMember({"exact", "mc"}));
    ve->add_option("--trunc", trunc, "exact mode: per-cell weight truncation");
    ve->add_option("--budget", enum_budget, "exact mode: max assignments to enumerate");
    ve->add_option("--samples", samples, "mc mode: number of replicas");
    ve->add_option("--cap", cap, "mc mode: support cap on parts");
    ve->add_option("--seed", seed);
    ve->add_option("--workers", workers, "mc mode: worker threads (0 = hardware)");
    ve->add_option("--out", out, "write the report to a file instead of stdout");
    ve->callback([&] {
        DownRightPath gamma = parse_path(load_json_argument(path_arg));
        std::string ptext = load_json_argument(params_arg);
        bool half = params_have_c(ptext);
        bool pass = false;
        if (mode == "exact") {
            ExactReport r = half
                                ? exact_compare_half(gamma, parse_hs_params(ptext), trunc,
                                                     enum_budget)
                                : exact_compare_full(gamma, parse_fs_params(ptext), trunc,
                                                     enum_budget);
            pass = r.pass;
            emit(dump_exact_report(r), out);
        } else {
            McReport r = half ? mc_compare_half(gamma, parse_hs_params(ptext), samples, seed,
                                                cap, workers)
                              : mc_compare_full(gamma, parse_fs_params(ptext), samples, seed,
                                                cap, workers);
            pass = r.pass;
            emit(dump_mc_report(r), out);
        }
        if (!pass) g_exit = 1;
    });

    auto* fz = app.add_subcommand("fuzz", "Randomized cross-module property suite");
    fz->add_option("--seed", seed);
    fz->add_option("--budget", fuzz_budget, "total trials split across the properties");
    fz->callback([&] {
        auto results = run_fuzz(seed, fuzz_budget);
        emit(dump_fuzz_results(results), out);
        if (!all_pass(results)) g_exit = 1;
    });

    try {
        app.parse(argc, argv);
        return g_exit;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
