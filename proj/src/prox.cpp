#include "cpsc/prox.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <sstream>

#include "cpsc/errors.hpp"

namespace cpsc {

Mat soft_threshold(const Mat& m, double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau))
    throw std::invalid_argument("soft_threshold: tau must be nonnegative");
  if (tau == 0.0) return m;
  return m.unaryExpr([tau](double x) {
    const double a = std::abs(x) - tau;
    return a > 0.0 ? (x > 0.0 ? a : -a) : 0.0;
  });
}

Mat project_nonneg(const Mat& m) { return m.cwiseMax(0.0); }

namespace {

Mat svt_direct(const Mat& m, double tau, double* nuclear_out) {
  Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Vec s = (svd.singularValues().array() - tau).max(0.0).matrix();
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > 0.0) ++rank;
  if (nuclear_out) *nuclear_out = s.head(rank).sum();
  if (rank == 0) return Mat::Zero(m.rows(), m.cols());
  return svd.matrixU().leftCols(rank) * s.head(rank).asDiagonal() *
         svd.matrixV().leftCols(rank).transpose();
}

// Same operator through the eigendecomposition of the Gram matrix on the
// short side.  Much cheaper than a plain SVD for the large square affinity
// matrices inside the LRR solver; the singular values this route resolves
// least accurately are exactly the small ones that the shrink zeroes out.
Mat svt_gram(const Mat& m, double tau, double* nuclear_out) {
  const bool wide = m.cols() > m.rows();
  const Mat gram = wide ? Mat(m * m.transpose()) : Mat(m.transpose() * m);
  Eigen::SelfAdjointEigenSolver<Mat> eig(gram);
  const Vec& lam = eig.eigenvalues();  // ascending
  const Eigen::Index n = lam.size();

  Eigen::Index kept = 0;
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    if (std::sqrt(std::max(lam(i), 0.0)) > tau)
      ++kept;
    else
      break;
  }
  if (nuclear_out) {
    double acc = 0.0;
    for (Eigen::Index i = n - kept; i < n; ++i)
      acc += std::sqrt(std::max(lam(i), 0.0)) - tau;
    *nuclear_out = acc;
  }
  if (kept == 0) return Mat::Zero(m.rows(), m.cols());

  // Shrink as m * V diag(f) V^T (or its transpose-side twin), where
  // f_i = (sigma_i - tau) / sigma_i on the kept block.
  Vec f(kept);
  for (Eigen::Index j = 0; j < kept; ++j) {
    const double sigma = std::sqrt(std::max(lam(n - kept + j), 0.0));
    f(j) = (sigma - tau) / sigma;
  }
  const Mat v = eig.eigenvectors().rightCols(kept);
  if (wide) return v * (f.asDiagonal() * (v.transpose() * m));
  return ((m * v) * f.asDiagonal()) * v.transpose();
}

}  // namespace

Mat singular_value_threshold(const Mat& m, double tau, double* nuclear_out) {
  if (!m.allFinite())
    throw std::invalid_argument("singular_value_threshold: non-finite input");
  if (!(tau >= 0.0) || !std::isfinite(tau))
    throw std::invalid_argument("singular_value_threshold: tau must be nonnegative");
  if (tau == 0.0 && nuclear_out == nullptr) return m;
  if (m.rows() >= 160 && m.cols() >= 160) return svt_gram(m, tau, nuclear_out);
  return svt_direct(m, tau, nuclear_out);
}

SinkhornResult sinkhorn_balance(const Mat& w, double tol, int max_iter) {
  const Eigen::Index n = w.rows();
  if (w.cols() != n)
    throw std::invalid_argument("sinkhorn_balance: matrix must be square");
  if (!w.allFinite() || (w.array() < 0.0).any())
    throw std::invalid_argument("sinkhorn_balance: entries must be finite and nonnegative");
  const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
  if ((w - w.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw std::invalid_argument("sinkhorn_balance: matrix must be symmetric");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (w.row(i).maxCoeff() <= 0.0) {
      std::ostringstream msg;
      msg << "sinkhorn_balance: row " << i << " has no positive entry";
      throw DegenerateRowError(msg.str(), static_cast<long>(i));
    }
  }

  Vec x = Vec::Ones(n);
  double worst = 0.0;
  int it = 0;
  for (;; ++it) {
    const Vec row_sums = x.array() * (w * x).array();
    worst = (row_sums.array() - 1.0).abs().maxCoeff();
    if (worst <= tol) break;
    if (it >= max_iter)
      throw ConvergenceError("sinkhorn_balance: no convergence", worst, it);
    x = x.array() / row_sums.array().sqrt();
  }

  SinkhornResult res;
  res.iterations = it;
  res.c_diag = (x.array() * x.array()).inverse().matrix();
  res.k.resize(n, n);
  // k_ij = w_ij * (x_i * x_j); written symmetrically so the output is
  // bit-exactly symmetric.
  for (Eigen::Index i = 0; i < n; ++i) {
    res.k(i, i) = w(i, i) * (x(i) * x(i));
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = w(i, j) * (x(i) * x(j));
      res.k(i, j) = v;
      res.k(j, i) = v;
    }
  }
  return res;
}

}  // namespace cpsc
