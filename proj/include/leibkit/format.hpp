#pragma once

#include <string>

#include "leibkit/theorems.hpp"

namespace leib {

/// Text format, one algebra per file:
///   leibniz-sc 1
///   field Q | field GF <p>
///   dim <n>
///   basis <name ...>          (optional)
///   p <i> <j> : <k>*<coef> [+ <k>*<coef> ...]
/// Indices are 0-based; omitted (i, j) pairs have zero product; `#` starts a
/// comment.  Coefficients are `a/b` in lowest terms over Q and residues over
/// GF(p).
LeibnizAlgebra parse_algebra(const std::string& text, bool unchecked = false);
LeibnizAlgebra parse_algebra_file(const std::string& path,
                                  bool unchecked = false);

/// Canonical emission: product lines sorted lexicographically, nonzero
/// entries only.  parse(emit(a)) reproduces a exactly.
std::string emit_algebra(const LeibnizAlgebra& a);

/// Renders a vector as a combination of basis labels ("e1+2*z", "0").
std::string format_vector(const Vec& v, const std::vector<std::string>& labels);
std::string format_subspace(const Subspace& s,
                            const std::vector<std::string>& labels);

std::string report_text(const StructureReport& rep);
std::string report_json(const StructureReport& rep);

std::string check_results_text(const std::vector<CheckResult>& results);
std::string check_results_json(const std::vector<CheckResult>& results);

}  // namespace leib
