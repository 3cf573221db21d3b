#pragma once

#include <string>
#include <vector>

#include "torsioncap/intmath.hpp"
#include "torsioncap/qpoly.hpp"

namespace torsioncap {

// "1-16,19,20,25": runs of length >= 3 collapse into a dash range
std::string compact_ranges(const std::vector<Int>& sorted_values);

// a degree sequence rendered as "(2,6)"
std::string render_degseq(const std::vector<unsigned>& degrees);

// a table row in the classical style: consecutive repeats compressed with ^a
std::string render_degseq_row(const std::string& label,
                              const std::vector<std::vector<unsigned>>& entries);

// write-to-temp then rename; no partial files on failure
void write_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

// univariate polynomial with integer or rational coefficients, e.g.
// "t^3-t^2-2*t+1", "14*t^2-12*t-1", "x/2+1/3"
QPoly parse_qpoly(const std::string& text, const std::string& var);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

std::vector<std::string> split(const std::string& text, char sep);

std::string trim(const std::string& s);

} // namespace torsioncap
