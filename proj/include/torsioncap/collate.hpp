#pragma once

#include <map>
#include <set>
#include <vector>

#include "torsioncap/intmath.hpp"

namespace torsioncap {

struct CollationInput {
    // attainable full orders D_p per prime
    std::map<Int, std::set<Int>> per_prime;
    unsigned dimension = 2;
};

struct CandidateList {
    std::vector<Int> admissible;  // sorted
    // per admissible N, for each p the witness element of D_p that the
    // prime-to-p part of N divides
    std::map<Int, std::map<Int, Int>> witnesses;
};

// N <= cap is admissible iff for every prime p in the input, the prime-to-p
// part of N divides some element of D_p.
CandidateList admissible_orders(const CollationInput& input, const Int& cap);

// set difference: admissible orders not yet known to be attained
std::vector<Int> undecided_report(const CandidateList& final_list, const std::set<Int>& attained);

} // namespace torsioncap
