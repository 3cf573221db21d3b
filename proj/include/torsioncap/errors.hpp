#pragma once

#include <stdexcept>
#include <string>

namespace torsioncap {

// Input outside the supported range of an operation (e.g. order-N relations
// for N > 13). Distinct from domain errors so the CLI can map it to its own
// exit code.
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation that refuses to guess: carries the best lower/upper bounds
// established before the search budget ran out.
class undecided_error : public std::runtime_error {
public:
    undecided_error(const std::string& what, unsigned long lower, unsigned long upper)
        : std::runtime_error(what), lower_bound(lower), upper_bound(upper) {}
    unsigned long lower_bound;
    unsigned long upper_bound;
};

// Elimination/verification could not be put into a usable shape after all
// retries. Raised instead of silently emitting a wrong degree sequence.
class elimination_error : public std::runtime_error {
public:
    explicit elimination_error(const std::string& what) : std::runtime_error(what) {}
};

class singular_curve_error : public std::domain_error {
public:
    explicit singular_curve_error(const std::string& what) : std::domain_error(what) {}
};

} // namespace torsioncap
