#pragma once

#include "cpsc/types.hpp"

namespace cpsc {

/// Elementwise l1 proximal step: sign(x) * max(|x| - tau, 0).
Mat soft_threshold(const Mat& m, double tau);

/// Nuclear-norm proximal step: U * shrink(S, tau) * V^T for the SVD
/// U S V^T of m.  When `nuclear_out` is given it receives the nuclear
/// norm of the result (sum of the shrunk singular values).
Mat singular_value_threshold(const Mat& m, double tau,
                             double* nuclear_out = nullptr);

/// Elementwise projection onto the nonnegative orthant.
Mat project_nonneg(const Mat& m);

struct SinkhornResult {
  Mat k;       // doubly stochastic, symmetric
  Vec c_diag;  // diagonal of C with k = C^{-1/2} w C^{-1/2}
  int iterations = 0;
};

/// Symmetric Sinkhorn balancing of a nonnegative symmetric matrix.
/// Repeats x <- x / sqrt(row sums of diag(x) w diag(x)) until every row
/// sum lies within `tol` of 1.  Throws DegenerateRowError for a zero row
/// and ConvergenceError when max_iter is exhausted.
SinkhornResult sinkhorn_balance(const Mat& w, double tol = 1e-6,
                                int max_iter = 1000);

}  // namespace cpsc
