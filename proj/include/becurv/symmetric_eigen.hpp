#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>

#include "becurv/errors.hpp"

namespace becurv {

struct EigenDecomposition {
  Eigen::VectorXd values;   // unsorted, matches columns of `vectors`
  Eigen::MatrixXd vectors;  // orthonormal columns
};

struct EigenPair {
  double value = 0.0;
  Eigen::VectorXd vector;
};

inline constexpr double kSymmetryTolerance = 1e-12;

inline double max_asymmetry(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return m.rows() == 0 ? 0.0 : (m - m.transpose()).cwiseAbs().maxCoeff();
}

/// Cyclic Jacobi eigen-decomposition of a dense symmetric matrix.
inline EigenDecomposition jacobi_eigen(const Eigen::MatrixXd& m) {
  if (const double asym = max_asymmetry(m); asym > kSymmetryTolerance) throw NonSymmetricError(asym);
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd a = 0.5 * (m + m.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  const double norm2 = a.squaredNorm();
  const double stop = norm2 * 1e-32;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off <= stop || off == 0.0) break;

    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }
  return {a.diagonal(), v};
}

/// Smallest eigenvalue and a unit eigenvector.
inline EigenPair min_eigen_symmetric(const Eigen::MatrixXd& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) throw Error("min_eigen_symmetric: need a non-empty square matrix");
  auto [values, vectors] = jacobi_eigen(m);
  Eigen::Index k = 0;
  values.minCoeff(&k);
  EigenPair out{values[k], vectors.col(k)};
  out.vector.normalize();
  return out;
}

}  // namespace becurv
