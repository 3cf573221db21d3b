#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "torsioncap/errors.hpp"
#include "torsioncap/runner.hpp"
#include "torsioncap/textio.hpp"

using namespace torsioncap;

namespace {

// exit codes: 0 success, 2 usage, 3 domain error, 4 unsupported range,
// 5 undecided result, 6 golden mismatch
int dispatch(const RunConfig& cfg) {
    try {
        RunResult res = run(cfg);
        if (!cfg.output_path.empty()) {
            write_atomic(cfg.output_path, res.artifact);
        } else {
            std::cout << res.artifact;
        }
        return res.exit_code;
    } catch (const unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 4;
    } catch (const undecided_error& e) {
        std::cerr << "undecided: " << e.what();
        if (e.upper_bound > 0) {
            std::cerr << " (lower " << e.lower_bound << ", upper " << e.upper_bound << ")";
        }
        std::cerr << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for torsion of abelian varieties with potentially good reduction"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--out", cfg.output_path, "write the artifact to a file (atomic)");
    app.add_option("--format", cfg.format, "structured-text (default), csv, or table")
        ->check(CLI::IsMember({"structured-text", "csv", "table"}));
    app.add_option("--workers", cfg.workers, "worker threads (default: all cores)");

    std::string p, f = "1", e = "1", d = "1", dim = "2", primes, cap, j, field, bb, cc, fixtures;
    std::vector<std::string> census_files;
    unsigned N = 0, M = 0;
    bool all_cm = false, caps_mode = false;

    auto* bound = app.add_subcommand("bound", "local torsion bound report");
    bound->add_option("--p", p)->required();
    bound->add_option("--f", f);
    bound->add_option("--e", e);
    bound->add_option("--d", d);

    auto* census = app.add_subcommand("census", "attainable point counts over F_p");
    census->add_option("--p", p)->required();
    census->add_option("--dim", dim);

    auto* collate = app.add_subcommand("collate", "combine per-prime counts into candidate orders");
    collate->add_option("--dim", dim);
    collate->add_option("--primes", primes, "comma-separated primes (computed censuses)");
    collate->add_option("--census", census_files, "census file (repeatable)");
    collate->add_option("--cap", cap);
    collate->add_flag("--caps", caps_mode, "use the full Weil-cap ranges instead of censuses");

    auto* degseq = app.add_subcommand("degseq", "degree sequences of CM fibers");
    degseq->add_option("--N", N, "order of the marked point (4..13)");
    degseq->add_option("--two-torsion-M", M, "full 2-torsion rows: order is 2M (M in 2..4)");
    degseq->add_option("--j", j, "rational j-invariant");
    degseq->add_flag("--all-cm-j", all_cm, "all 13 integral CM j-invariants");

    auto* torsion = app.add_subcommand("torsion", "torsion subgroup over a number field");
    torsion->add_option("--field", field, "monic integer minimal polynomial, e.g. t^3-t^2-2*t+1")
        ->required();
    torsion->add_option("--b", bb, "b as a polynomial in the generator")->required();
    torsion->add_option("--c", cc, "c as a polynomial in the generator")->required();

    app.add_subcommand("report", "full reproduction report");

    auto* verify = app.add_subcommand("verify", "recompute and diff the golden fixtures");
    verify->add_option("--fixtures", fixtures, "fixture directory (default: $TORSIONCAP_GOLDENS)");

    CLI11_PARSE(app, argc, argv);

    if (bound->parsed()) {
        cfg.command = "bound";
        cfg.params = {{"p", p}, {"f", f}, {"e", e}, {"d", d}};
    } else if (census->parsed()) {
        cfg.command = "census";
        cfg.params = {{"p", p}, {"dim", dim}};
    } else if (collate->parsed()) {
        cfg.command = "collate";
        cfg.params["dim"] = dim;
        if (!primes.empty()) cfg.params["primes"] = primes;
        if (!census_files.empty()) cfg.params["census_files"] = join(census_files, ";");
        if (!cap.empty()) cfg.params["cap"] = cap;
        if (caps_mode) cfg.params["caps"] = "1";
    } else if (degseq->parsed()) {
        cfg.command = "degseq";
        if (M > 0) cfg.params["two_torsion_M"] = std::to_string(M);
        else cfg.params["N"] = std::to_string(N);
        if (all_cm) cfg.params["all_cm_j"] = "1";
        else if (!j.empty()) cfg.params["j"] = j;
    } else if (torsion->parsed()) {
        cfg.command = "torsion";
        cfg.params = {{"field", field}, {"b", bb}, {"c", cc}};
    } else if (verify->parsed()) {
        cfg.command = "verify";
        if (fixtures.empty()) {
            const char* env = std::getenv("TORSIONCAP_GOLDENS");
            if (env) fixtures = env;
        }
        if (fixtures.empty()) {
            std::cerr << "verify: no fixture directory (use --fixtures or TORSIONCAP_GOLDENS)\n";
            return 2;
        }
        cfg.params["fixtures"] = fixtures;
    } else {
        cfg.command = "report";
    }
    return dispatch(cfg);
}
