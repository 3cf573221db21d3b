#pragma once

#include <map>
#include <string>
#include <vector>

namespace torsioncap {

struct RunConfig {
    std::string command;  // bound | census | collate | degseq | torsion | report | verify
    std::map<std::string, std::string> params;
    std::string output_path;          // empty: stdout
    std::string format = "structured-text";  // structured-text | csv | table
    unsigned workers = 0;             // 0: all cores
};

struct RunResult {
    int exit_code = 0;
    std::string artifact;   // written to output_path or stdout by the caller
    std::string diagnostic; // human summary for verify failures etc.
};

// executes one command; throws the library's error types for failures that
// map to exit codes 3/4/5; verify failures come back as exit_code 6
RunResult run(const RunConfig& config);

// the individual artifacts (deterministic, structured-text)
std::string bounds_artifact();
std::string census_artifact(long p, unsigned dim);
std::string collate_artifact(unsigned dim, const std::vector<long>& primes, bool caps_mode,
                             const std::string& cap_override,
                             const std::vector<std::string>& census_files);
std::string degseq_artifact(const std::string& kind, unsigned N_or_M,
                            const std::vector<std::string>& js, unsigned workers);
std::string torsion_artifact(const std::string& field, const std::string& b,
                             const std::string& c);
std::string report_artifact(unsigned workers);

// recompute every fixture in the directory and diff; returns (all_ok, summary)
std::pair<bool, std::string> verify_goldens(const std::string& fixture_dir, unsigned workers);

// names and generators of all golden fixtures
std::vector<std::string> golden_names();
std::string golden_content(const std::string& name, unsigned workers);

} // namespace torsioncap
