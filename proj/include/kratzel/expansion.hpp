#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "kratzel/numerics.hpp"

namespace kratzel {

/// Output of every truncated asymptotic evaluator:
///   value = prefactor * (terms[0] + ... + terms[truncation_index]).
struct ExpansionResult {
  Scalar value;
  Scalar prefactor;
  Scalar log_prefactor;
  std::vector<Scalar> terms;
  int truncation_index = 0;
  double last_term_ratio = 0.0;  // |last term| / |partial sum|

  /// Value truncated after term k (k <= truncation_index).
  Scalar partial_value(std::size_t k) const {
    Scalar s{};
    for (std::size_t j = 0; j <= k && j < terms.size(); ++j) s += terms[j];
    return prefactor * s;
  }

  static ExpansionResult assemble(Scalar log_prefactor, std::vector<Scalar> terms) {
    ExpansionResult r;
    r.log_prefactor = log_prefactor;
    r.prefactor = std::exp(log_prefactor);
    Scalar sum{};
    for (const auto& t : terms) sum += t;
    r.value = r.prefactor * sum;
    r.truncation_index = static_cast<int>(terms.size()) - 1;
    r.last_term_ratio = std::abs(sum) > 0.0 ? std::abs(terms.back()) / std::abs(sum) : 0.0;
    r.terms = std::move(terms);
    return r;
  }
};

/// |computed / reference - 1| with the complex modulus.
inline double relative_error(Scalar computed, Scalar reference) { return std::abs(computed / reference - 1.0); }

}  // namespace kratzel
