#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "solvsym/acs.hpp"
#include "solvsym/confsym.hpp"

namespace solvsym::jsearch {

using algebra::LieAlgebraModel;
using algebra::RationalForm;

struct SearchConfig {
  int restarts = 100;
  int max_iters = 500;
  double step_init = 0.25;     // line search starts here, shrinking by half
  double tol_residual = 1e-8;  // Frobenius residual for structure + both compatibilities
  double tol_posdef = 1e-6;    // minimum eigenvalue of both induced metrics
  std::uint64_t seed = 0;

  void validate() const;
};

struct RestartSummary {
  int index = 0;
  double residual = 0.0;
  double min_eig_omega = 0.0;
  double min_eig_eta = 0.0;
  int iters = 0;
};

/// Outcome of the shared-compatible-J search. `found` requires the residual
/// and positivity gates, plus exact re-verification whenever the candidate
/// rationalizes; on models where an exact certificate is mandatory (see
/// exactness_required) a float-only candidate is not accepted.
struct SearchOutcome {
  bool found = false;
  int found_restart = -1;
  std::vector<double> best_j;  // row-major coframe matrix of the best candidate
  double best_residual = 0.0;
  double min_eig_omega = 0.0;
  double min_eig_eta = 0.0;
  bool exact = false;
  std::optional<acs::AlmostComplexStructure> exact_j;
  bool exactness_required = false;
  std::vector<RestartSummary> trace;
};

/// Gradient-descent search for one J compatible with both forms, over
/// penalized square matrices, with deterministic seeding and restarts.
SearchOutcome find_shared_j(const LieAlgebraModel& model, const RationalForm& omega,
                            const RationalForm& eta, const SearchConfig& cfg);

/// (structure+equivariance residual, min eigenvalue of the induced frame
/// metric) of a float candidate in the coframe convention.
std::pair<double, double> compatibility_residual(const std::vector<double>& j_row_major,
                                                 const RationalForm& tau, int dim);

}  // namespace solvsym::jsearch
