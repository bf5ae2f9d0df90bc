#pragma once

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "becurv/solver.hpp"
#include "becurv/spaceform.hpp"
#include "becurv/tilings.hpp"

namespace becurv {

/// One row of the smooth-vs-discrete comparison for the {3,k} tiling.
struct TableRow {
  int k = 0;
  std::string label;
  double smooth_kappa = 0.0;
  double discrete_k = 0.0;
};

inline constexpr int kTableFirstOrder = 3;
inline constexpr int kTableLastOrder = 9;
// Values within this distance of zero count as zero when comparing signs.
inline constexpr double kSignZeroTolerance = 1e-9;

inline int sign_with_tolerance(double v, double zero_tol = kSignZeroTolerance) {
  if (std::abs(v) <= zero_tol) return 0;
  return v > 0 ? 1 : -1;
}

inline std::string tiling_label(int k) {
  const char* where = k < 6 ? "sphere" : (k == 6 ? "plane" : "hyperbolic plane");
  return "Order-" + std::to_string(k) + " regular triangular tiling of the " + where;
}

inline TableRow table_row(int k) {
  return {k, tiling_label(k), smooth_curvature(k).kappa, curvature_at(two_ball_of_order(k), "x").kappa};
}

inline std::vector<TableRow> comparison_table() {
  std::vector<TableRow> rows;
  for (int k = kTableFirstOrder; k <= kTableLastOrder; ++k) rows.push_back(table_row(k));
  return rows;
}

inline bool row_signs_match(const TableRow& r) {
  return sign_with_tolerance(r.smooth_kappa) == sign_with_tolerance(r.discrete_k);
}

inline bool signs_agree(const std::vector<TableRow>& rows) {
  for (const auto& r : rows)
    if (!row_signs_match(r)) return false;
  return true;
}

enum class Monotonicity { decreasing, non_increasing, not_monotone };

inline constexpr std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::decreasing: return "decreasing";
    case Monotonicity::non_increasing: return "non-increasing";
    case Monotonicity::not_monotone: return "not monotone";
  }
  return "";
}

// Consecutive values closer than `tie` count as equal.
template <typename Column>
Monotonicity monotonicity(const std::vector<TableRow>& rows, Column column, double tie = kSignZeroTolerance) {
  auto result = Monotonicity::decreasing;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double step = column(rows[i]) - column(rows[i - 1]);
    if (step > tie) return Monotonicity::not_monotone;
    if (step >= -tie) result = Monotonicity::non_increasing;
  }
  return result;
}

inline Monotonicity smooth_monotonicity(const std::vector<TableRow>& rows) {
  return monotonicity(rows, [](const TableRow& r) { return r.smooth_kappa; });
}

inline Monotonicity discrete_monotonicity(const std::vector<TableRow>& rows) {
  return monotonicity(rows, [](const TableRow& r) { return r.discrete_k; });
}

/// Fixed three-decimal rendering; never prints "-0.000".
inline std::string format_fixed(double v, int decimals = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

inline std::string verdict_lines(const std::vector<TableRow>& rows, const std::string& prefix) {
  std::ostringstream out;
  out << prefix << "sign_agreement: " << (signs_agree(rows) ? "yes" : "no") << '\n';
  out << prefix << "smooth_monotonicity: " << to_string(smooth_monotonicity(rows)) << '\n';
  out << prefix << "discrete_monotonicity: " << to_string(discrete_monotonicity(rows)) << '\n';
  return out.str();
}

inline std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "order,smooth_curvature,discrete_curvature\n";
  for (const auto& r : rows)
    out << r.k << ',' << format_fixed(r.smooth_kappa) << ',' << format_fixed(r.discrete_k) << '\n';
  out << verdict_lines(rows, "# ");
  return out.str();
}

inline std::string table_text(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-58s %10s %10s\n", "graph", "smooth", "discrete");
  out << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-58s %10s %10s\n", r.label.c_str(), format_fixed(r.smooth_kappa).c_str(),
                  format_fixed(r.discrete_k).c_str());
    out << line;
  }
  out << '\n' << verdict_lines(rows, "");
  return out.str();
}

inline nlohmann::json table_json(const std::vector<TableRow>& rows) {
  auto out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"order", r.k},
                   {"smooth_curvature", r.smooth_kappa},
                   {"discrete_curvature", r.discrete_k},
                   {"sign_match", row_signs_match(r)}});
  return out;
}

}  // namespace becurv
