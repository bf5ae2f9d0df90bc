#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "becurv/errors.hpp"
#include "becurv/graph.hpp"

namespace becurv {

/// Real function on the vertices of a LocalBall, stored in the ball's local
/// numbering (index 0 is the center).
class FunctionOnBall {
 public:
  using Index = LocalBall::Index;

  explicit FunctionOnBall(const LocalBall& ball) : values_(ball.size(), 0.0) {}

  /// Lifts quadratic-form coordinates to the ball with f(center) = 0.
  static FunctionOnBall from_coordinates(const LocalBall& ball,
                                         const Eigen::Ref<const Eigen::VectorXd>& coords) {
    if (static_cast<std::size_t>(coords.size()) != ball.coordinate_count())
      throw Error("coordinate vector has wrong dimension");
    FunctionOnBall f(ball);
    for (std::size_t i = 0; i < ball.coordinate_count(); ++i) f.values_[i + 1] = coords[i];
    return f;
  }

  static FunctionOnBall indicator(const LocalBall& ball, Index i) {
    FunctionOnBall f(ball);
    f.values_.at(i) = 1.0;
    return f;
  }

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](Index i) const { return values_[i]; }
  double& operator[](Index i) { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

  Eigen::VectorXd coordinates() const {
    Eigen::VectorXd c(values_.size() - 1);
    for (std::size_t i = 1; i < values_.size(); ++i) c[i - 1] = values_[i];
    return c;
  }

 private:
  std::vector<double> values_;
};

/// Symmetric quadratic form over the coordinates f(v), v in B2(x) \ {x}.
struct QuadraticForm {
  std::vector<std::string> index;  // S1 labels, then S2 labels
  Eigen::MatrixXd matrix;

  std::size_t dimension() const noexcept { return index.size(); }
  double evaluate(const Eigen::Ref<const Eigen::VectorXd>& f) const { return f.dot(matrix * f); }
};

namespace detail {

inline void check_domain(const LocalBall& ball, const FunctionOnBall& f) {
  if (f.size() != ball.size()) throw Error("function domain does not match ball");
}

inline void check_interior(const LocalBall& ball, LocalBall::Index v) {
  if (v >= ball.size()) throw UnknownVertexError(std::to_string(v));
  if (!ball.is_interior(v)) throw OutOfScopeVertexError(ball.label(v));
}

inline double laplacian(const LocalBall& ball, std::span<const double> f, LocalBall::Index v) {
  double sum = 0.0;
  for (auto w : ball.neighbors(v)) sum += f[w] - f[v];
  return sum;
}

inline double gamma(const LocalBall& ball, std::span<const double> f, std::span<const double> g,
                    LocalBall::Index v) {
  double sum = 0.0;
  for (auto w : ball.neighbors(v)) sum += (f[w] - f[v]) * (g[w] - g[v]);
  return 0.5 * sum;
}

inline LocalBall::Index resolve(const LocalBall& ball, std::string_view label) {
  if (auto i = ball.find(label)) return *i;
  throw UnknownVertexError(std::string(label));
}

}  // namespace detail

/// Delta f(v) = sum over neighbours w of (f(w) - f(v)). Defined for the
/// center and the inner sphere only.
inline double laplacian_at(const LocalBall& ball, const FunctionOnBall& f, LocalBall::Index v) {
  detail::check_domain(ball, f);
  detail::check_interior(ball, v);
  return detail::laplacian(ball, f.values(), v);
}

inline double laplacian_at(const LocalBall& ball, const FunctionOnBall& f, std::string_view v) {
  return laplacian_at(ball, f, detail::resolve(ball, v));
}

/// Gamma(f, g)(v) = 1/2 sum over neighbours w of (f(w) - f(v))(g(w) - g(v)).
inline double gamma_at(const LocalBall& ball, const FunctionOnBall& f, const FunctionOnBall& g,
                       LocalBall::Index v) {
  detail::check_domain(ball, f);
  detail::check_domain(ball, g);
  detail::check_interior(ball, v);
  return detail::gamma(ball, f.values(), g.values(), v);
}

inline double gamma_at(const LocalBall& ball, const FunctionOnBall& f, const FunctionOnBall& g,
                       std::string_view v) {
  return gamma_at(ball, f, g, detail::resolve(ball, v));
}

/// Gamma_2(f, g) at the center:
///   1/2 [ Delta Gamma(f,g) - Gamma(f, Delta g) - Gamma(g, Delta f) ].
/// Delta f and Delta g are only needed on the center and inner sphere, and
/// Gamma(f,g) only on the inner sphere, so everything stays inside the ball.
inline double gamma2_at(const LocalBall& ball, const FunctionOnBall& f, const FunctionOnBall& g) {
  detail::check_domain(ball, f);
  detail::check_domain(ball, g);
  const std::size_t interior = ball.s1_size() + 1;

  std::vector<double> lap_f(ball.size(), 0.0), lap_g(ball.size(), 0.0);
  for (std::size_t v = 0; v < interior; ++v) {
    lap_f[v] = detail::laplacian(ball, f.values(), v);
    lap_g[v] = detail::laplacian(ball, g.values(), v);
  }

  const double gamma_center = detail::gamma(ball, f.values(), g.values(), 0);
  double lap_gamma = 0.0;
  for (auto v : ball.neighbors(0))
    lap_gamma += detail::gamma(ball, f.values(), g.values(), v) - gamma_center;

  const double gamma_f_lap_g = detail::gamma(ball, f.values(), lap_g, 0);
  const double gamma_g_lap_f = detail::gamma(ball, g.values(), lap_f, 0);
  return 0.5 * (lap_gamma - gamma_f_lap_g - gamma_g_lap_f);
}

inline double gamma2_at(const LocalBall& ball, const FunctionOnBall& f) { return gamma2_at(ball, f, f); }

namespace detail {

inline QuadraticForm empty_form(const LocalBall& ball) {
  QuadraticForm q;
  q.index.assign(ball.labels().begin() + 1, ball.labels().end());
  q.matrix = Eigen::MatrixXd::Zero(q.index.size(), q.index.size());
  return q;
}

inline void symmetrize(Eigen::MatrixXd& m) {
  const Eigen::MatrixXd t = m.transpose();
  m = 0.5 * (m + t);
}

}  // namespace detail

/// Q1 with f^T Q1 f = Gamma(f)(x) for f(x) = 0: 1/2 on S1, 0 on S2.
inline QuadraticForm assemble_gamma_form(const LocalBall& ball) {
  auto q = detail::empty_form(ball);
  for (std::size_t i = 0; i < ball.s1_size(); ++i) q.matrix(i, i) = 0.5;
  return q;
}

/// Q2 with f^T Q2 f = Gamma_2(f)(x) for f(x) = 0, built entry by entry from
/// Gamma_2 evaluated on pairs of coordinate indicators.
inline QuadraticForm assemble_gamma2_form(const LocalBall& ball) {
  auto q = detail::empty_form(ball);
  const std::size_t n = ball.coordinate_count();
  std::vector<FunctionOnBall> indicators;
  indicators.reserve(n);
  for (std::size_t i = 0; i < n; ++i) indicators.push_back(FunctionOnBall::indicator(ball, i + 1));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      q.matrix(i, j) = gamma2_at(ball, indicators[i], indicators[j]);
      if (j != i) q.matrix(j, i) = gamma2_at(ball, indicators[j], indicators[i]);
    }
  detail::symmetrize(q.matrix);
  return q;
}

}  // namespace becurv
