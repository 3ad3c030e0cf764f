#pragma once

#include <cstddef>

#include "epistrict/fp_linalg.hpp"

namespace epistrict {

/// Comparison of the toy theory with its stabilizer quantization over all
/// pure states and all Lagrangian measurements.
struct EquivalenceReport {
  Elem d = 0;
  std::size_t n = 0;
  std::size_t states = 0;
  std::size_t measurements = 0;
  /// Outcome probabilities compared (states x Lagrangians x outcomes).
  std::size_t comparisons = 0;
  /// max |Wigner(Pi_state) - ontic weight| over states and points.
  double max_wigner_deviation = 0;
  /// max |tr(Pi_W Pi_state) - toy probability|.
  double max_born_deviation = 0;
  double min_wigner = 0;
  double tol = 0;
  bool passed = false;
};

EquivalenceReport operational_equivalence_report(const PrimeField& field, std::size_t n, double tol = 1e-9);

}  // namespace epistrict
