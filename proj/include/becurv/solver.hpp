#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <optional>
#include <string_view>

#include "becurv/errors.hpp"
#include "becurv/forms.hpp"
#include "becurv/graph.hpp"
#include "becurv/symmetric_eigen.hpp"

// Curvature at x is the largest K with Gamma_2(f)(x) >= K Gamma(f)(x) for all
// f, i.e. the largest K with Q2 - K Q1 positive semidefinite.
//
// Derivation note for the Schur route. Split the coordinates as (u, w) over
// (S1, S2) and Q2 = [[A, B], [B^T, D]]. Q1 is 1/2 I on S1 and zero on S2, so
// Gamma does not see w at all and the infimum over w of Gamma_2 is exact:
//   min_w Gamma_2 = u^T (A - B D^-1 B^T) u = u^T S u,
// attained at w = -D^-1 B^T u. D is positive definite (diagonal, with entry
// |S1 neighbours of w| / 4). The quotient becomes u^T S u / (1/2 |u|^2), hence
//   K = 2 lambda_min(S).

namespace becurv {

enum class SolveMethod { schur, bisection };

inline constexpr std::string_view to_string(SolveMethod m) {
  return m == SolveMethod::schur ? "schur" : "bisection";
}

struct CurvatureResult {
  double kappa = 0.0;
  SolveMethod method = SolveMethod::schur;
  // K = -infinity; kept for completeness, unreachable for valid balls.
  bool unbounded_below = false;
  // Coordinates (in form index order) of a function attaining the infimum.
  std::optional<Eigen::VectorXd> minimizer;
  // |lambda_min(Q2 - kappa Q1)|
  double residual = 0.0;
};

struct SolverTolerances {
  double psd_slack = 1e-13;      // times 1 + max |Q2|
  double bisection_width = 1e-10;
  double agreement = 1e-7;
};

namespace detail {

inline std::size_t checked_s1_size(const QuadraticForm& q1, const QuadraticForm& q2) {
  if (q1.index != q2.index) throw Error("quadratic forms are indexed differently");
  const auto n = static_cast<Eigen::Index>(q1.dimension());
  if (q1.matrix.rows() != n || q1.matrix.cols() != n || q2.matrix.rows() != n || q2.matrix.cols() != n)
    throw Error("quadratic form dimension mismatch");

  Eigen::Index n1 = 0;
  while (n1 < n && q1.matrix(n1, n1) == 0.5) ++n1;
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(n, n);
  expected.topLeftCorner(n1, n1).diagonal().setConstant(0.5);
  if (n1 == 0 || q1.matrix != expected)
    throw Error("gamma form must be diag(1/2 on S1, 0 on S2) with S1 non-empty");
  return static_cast<std::size_t>(n1);
}

inline double pencil_min_eigenvalue(const QuadraticForm& q1, const QuadraticForm& q2, double k) {
  return min_eigen_symmetric(q2.matrix - k * q1.matrix).value;
}

}  // namespace detail

/// Exact elimination of the outer-sphere coordinates via the Schur complement.
inline CurvatureResult curvature_schur(const QuadraticForm& q1, const QuadraticForm& q2) {
  const auto n1 = static_cast<Eigen::Index>(detail::checked_s1_size(q1, q2));
  const Eigen::Index n2 = static_cast<Eigen::Index>(q2.dimension()) - n1;

  const Eigen::MatrixXd a = q2.matrix.topLeftCorner(n1, n1);
  Eigen::MatrixXd s = a;
  Eigen::MatrixXd d_inv_bt;  // D^-1 B^T, n2 x n1
  if (n2 > 0) {
    const Eigen::MatrixXd b = q2.matrix.topRightCorner(n1, n2);
    const Eigen::MatrixXd d = q2.matrix.bottomRightCorner(n2, n2);
    for (Eigen::Index i = 0; i < n2; ++i)
      if (d(i, i) <= 1e-12) throw SingularS2BlockError(q2.index[n1 + i]);
    Eigen::LLT<Eigen::MatrixXd> chol(d);
    if (chol.info() != Eigen::Success) throw SingularS2BlockError(q2.index[n1]);
    d_inv_bt = chol.solve(b.transpose());
    s -= b * d_inv_bt;
    s = 0.5 * (s + s.transpose()).eval();
  }

  const EigenPair low = min_eigen_symmetric(s);
  CurvatureResult r;
  r.method = SolveMethod::schur;
  r.kappa = 2.0 * low.value;

  Eigen::VectorXd f(n1 + n2);
  f.head(n1) = low.vector;
  if (n2 > 0) f.tail(n2) = -d_inv_bt * low.vector;
  r.minimizer = std::move(f);
  r.residual = std::abs(detail::pencil_min_eigenvalue(q1, q2, r.kappa));
  return r;
}

/// Largest K with lambda_min(Q2 - K Q1) >= -slack, by bracketing and bisection.
/// Feasibility is monotone in K because Q1 is positive semidefinite.
inline CurvatureResult curvature_bisection(const QuadraticForm& q1, const QuadraticForm& q2,
                                           const SolverTolerances& tol = {}) {
  detail::checked_s1_size(q1, q2);
  const double scale = 1.0 + q2.matrix.cwiseAbs().maxCoeff();
  const double slack = tol.psd_slack * scale;
  auto feasible = [&](double k) { return detail::pencil_min_eigenvalue(q1, q2, k) >= -slack; };

  CurvatureResult r;
  r.method = SolveMethod::bisection;

  // The quotient at the first S1 indicator is an upper bound for K.
  double hi = q2.matrix(0, 0) / q1.matrix(0, 0);
  double lo = hi;
  if (!feasible(hi)) {
    double step = std::max(1.0, std::abs(hi));
    for (;;) {
      lo = hi - step;
      if (feasible(lo)) break;
      if (!std::isfinite(lo) || step > 1e300) {
        r.kappa = -std::numeric_limits<double>::infinity();
        r.unbounded_below = true;
        return r;
      }
      hi = lo;
      step *= 2.0;
    }
    while (hi - lo > tol.bisection_width) {
      const double mid = 0.5 * (lo + hi);
      (feasible(mid) ? lo : hi) = mid;
    }
  }

  r.kappa = lo;
  const EigenPair low = min_eigen_symmetric(q2.matrix - lo * q1.matrix);
  r.minimizer = low.vector;
  r.residual = std::abs(low.value);
  return r;
}

inline CurvatureResult curvature_at(const LocalBall& ball) {
  return curvature_schur(assemble_gamma_form(ball), assemble_gamma2_form(ball));
}

inline CurvatureResult curvature_at(const Graph& g, std::string_view x) {
  return curvature_at(two_ball(g, x));
}

struct VerifiedCurvature {
  CurvatureResult schur;
  CurvatureResult bisection;
  double discrepancy = 0.0;
};

/// Runs both methods and throws MethodDisagreementError if they differ by
/// more than `tol.agreement`.
inline VerifiedCurvature curvature_at_verified(const LocalBall& ball, const SolverTolerances& tol = {}) {
  const auto q1 = assemble_gamma_form(ball);
  const auto q2 = assemble_gamma2_form(ball);
  VerifiedCurvature v{curvature_schur(q1, q2), curvature_bisection(q1, q2, tol), 0.0};
  v.discrepancy = std::abs(v.schur.kappa - v.bisection.kappa);
  if (!(v.discrepancy <= tol.agreement)) throw MethodDisagreementError(v.schur.kappa, v.bisection.kappa);
  return v;
}

inline VerifiedCurvature curvature_at_verified(const Graph& g, std::string_view x,
                                               const SolverTolerances& tol = {}) {
  return curvature_at_verified(two_ball(g, x), tol);
}

}  // namespace becurv
