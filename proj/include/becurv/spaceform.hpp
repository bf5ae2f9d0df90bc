#pragma once

#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string_view>
#include <utility>

#include "becurv/errors.hpp"
#include "becurv/tilings.hpp"

namespace becurv {

enum class SpaceFormClass { spherical, euclidean, hyperbolic };

inline constexpr std::string_view to_string(SpaceFormClass c) {
  switch (c) {
    case SpaceFormClass::spherical: return "spherical";
    case SpaceFormClass::euclidean: return "euclidean";
    case SpaceFormClass::hyperbolic: return "hyperbolic";
  }
  return "";
}

/// Constant-curvature surface on which the {3,k} tiling has unit edges.
struct SpaceFormCurvature {
  SpaceFormClass space = SpaceFormClass::euclidean;
  double kappa = 0.0;
  std::optional<double> radius;  // spherical only, kappa = 1 / R^2
  double interior_angle = 0.0;   // 2 pi / k, radians
};

inline double interior_angle(TilingOrder k) { return 2.0 * std::numbers::pi / k.value(); }

// Unit-edge equilateral triangle with angle alpha, side a = edge / curvature
// radius. Spherical law of cosines:  cos a = cos^2 a + sin^2 a cos alpha.
// Hyperbolic:                      cosh a = cosh^2 a - sinh^2 a cos alpha.
// Dividing out the trivial root a = 0 leaves, in both cases,
//   cos a  = cos alpha / (1 - cos alpha)     (spherical)
//   cosh a = cos alpha / (1 - cos alpha)     (hyperbolic).

inline double spherical_relation_residual(double a, double alpha) {
  const double c = std::cos(a), s = std::sin(a);
  return c * c + s * s * std::cos(alpha) - c;
}

inline double hyperbolic_relation_residual(double a, double alpha) {
  const double c = std::cosh(a), s = std::sinh(a);
  return c * c - s * s * std::cos(alpha) - c;
}

/// Closed-form curvature of the space form carrying the unit-edge {3,k} tiling.
inline SpaceFormCurvature smooth_curvature(TilingOrder k) {
  SpaceFormCurvature out;
  out.interior_angle = interior_angle(k);
  const double ca = std::cos(out.interior_angle);
  const double ratio = ca / (1.0 - ca);
  if (k.value() < 6) {
    const double a = std::acos(ratio);
    out.space = SpaceFormClass::spherical;
    out.kappa = a * a;
    out.radius = 1.0 / a;
  } else if (k.value() == 6) {
    out.space = SpaceFormClass::euclidean;
    out.kappa = 0.0;
  } else {
    const double a = std::acosh(ratio);
    out.space = SpaceFormClass::hyperbolic;
    out.kappa = -a * a;
  }
  return out;
}

inline SpaceFormCurvature smooth_curvature(int k) { return smooth_curvature(TilingOrder(k)); }

/// Same quantity by bracketing the non-trivial root of the unreduced
/// law-of-cosines relation. Near a = 0 the relation behaves like
/// a^2 (cos alpha - 1/2) up to sign, which fixes the sign on the left end.
inline SpaceFormCurvature smooth_curvature_by_root(TilingOrder k) {
  SpaceFormCurvature out;
  out.interior_angle = interior_angle(k);
  if (k.value() == 6) return out;

  const double alpha = out.interior_angle;
  const bool spherical = k.value() < 6;
  auto relation = [&](double a) {
    return spherical ? spherical_relation_residual(a, alpha) : hyperbolic_relation_residual(a, alpha);
  };

  double lo = 1e-3;
  double hi = spherical ? std::numbers::pi : 1.0;
  while (!spherical && relation(hi) < 0.0) hi *= 2.0;

  std::uintmax_t iterations = 200;
  const auto [left, right] = boost::math::tools::toms748_solve(
      relation, lo, hi, boost::math::tools::eps_tolerance<double>(), iterations);
  const double a = 0.5 * (left + right);

  out.space = spherical ? SpaceFormClass::spherical : SpaceFormClass::hyperbolic;
  out.kappa = spherical ? a * a : -a * a;
  if (spherical) out.radius = 1.0 / a;
  return out;
}

}  // namespace becurv
