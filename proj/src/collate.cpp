#include "torsioncap/collate.hpp"

#include <stdexcept>

namespace torsioncap {

CandidateList admissible_orders(const CollationInput& input, const Int& cap) {
    if (cap < 1) throw std::domain_error("admissible_orders: cap < 1");
    for (const auto& [p, dp] : input.per_prime) {
        if (dp.empty()) throw std::domain_error("admissible_orders: empty attainable set");
        for (const auto& n : dp) {
            if (n < 1) throw std::domain_error("admissible_orders: nonpositive attainable order");
        }
    }
    CandidateList out;
    for (Int N = 1; N <= cap; ++N) {
        bool ok = true;
        std::map<Int, Int> wit;
        for (const auto& [p, dp] : input.per_prime) {
            Int part = prime_to_p_part(N, p);
            bool found = false;
            for (const auto& m : dp) {
                if (m % part == 0) {
                    wit[p] = m;
                    found = true;
                    break;
                }
            }
            if (!found) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.admissible.push_back(N);
            out.witnesses[N] = std::move(wit);
        }
    }
    return out;
}

std::vector<Int> undecided_report(const CandidateList& final_list, const std::set<Int>& attained) {
    std::set<Int> adm(final_list.admissible.begin(), final_list.admissible.end());
    for (const auto& a : attained) {
        if (!adm.count(a)) throw std::domain_error("undecided_report: attained value not admissible");
    }
    std::vector<Int> out;
    for (const auto& n : final_list.admissible) {
        if (!attained.count(n)) out.push_back(n);
    }
    return out;
}

} // namespace torsioncap
