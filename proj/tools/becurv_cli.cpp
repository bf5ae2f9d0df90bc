// becurv: Bakry-Emery curvature of graph vertices and the {3,k} tiling comparison.
//
//   becurv curvature <file> --vertex <label> [--verify] [--format text|json]
//   becurv tiling --order <k> [--emit <file>]
//   becurv table [--format text|csv|json]
//   becurv ball --order <k> --emit <file>
//
// Exit codes: 0 success, 2 input error, 3 numerical failure.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "becurv/becurv.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

becurv::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return becurv::read_edge_list(in);
}

void write_graph(const std::string& path, const becurv::Graph& g) {
  if (path == "-") {
    becurv::write_edge_list(std::cout, g);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  becurv::write_edge_list(out, g);
}

void dump_form(const std::string& path, const becurv::QuadraticForm& q) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  for (std::size_t i = 0; i < q.index.size(); ++i) out << (i ? "," : "") << q.index[i];
  out << '\n' << std::setprecision(17);
  for (Eigen::Index r = 0; r < q.matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < q.matrix.cols(); ++c) out << (c ? "," : "") << q.matrix(r, c);
    out << '\n';
  }
}

std::string fixed6(double v) { return becurv::format_fixed(v, 6); }

int run_curvature(const std::string& file, const std::string& vertex, bool verify, const std::string& format,
                  const std::string& dump_prefix) {
  const auto g = load_graph(file);
  const auto ball = becurv::two_ball(g, vertex);
  const auto q1 = becurv::assemble_gamma_form(ball);
  const auto q2 = becurv::assemble_gamma2_form(ball);
  if (!dump_prefix.empty()) {
    dump_form(dump_prefix + "gamma.csv", q1);
    dump_form(dump_prefix + "gamma2.csv", q2);
  }

  const auto schur = becurv::curvature_schur(q1, q2);
  std::optional<becurv::CurvatureResult> bisection;
  double discrepancy = 0.0;
  if (verify) {
    bisection = becurv::curvature_bisection(q1, q2);
    discrepancy = std::abs(schur.kappa - bisection->kappa);
  }
  const bool agree = !verify || discrepancy <= becurv::SolverTolerances{}.agreement;

  if (format == "json") {
    nlohmann::json out{{"vertex", vertex},
                       {"curvature", schur.kappa},
                       {"method", becurv::to_string(schur.method)},
                       {"residual", schur.residual}};
    auto minimizer = nlohmann::json::object();
    for (std::size_t i = 0; i < q2.index.size(); ++i) minimizer[q2.index[i]] = (*schur.minimizer)[i];
    out["minimizer"] = minimizer;
    if (verify) {
      out["bisection"] = bisection->kappa;
      out["discrepancy"] = discrepancy;
      out["agreement"] = agree;
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << fixed6(schur.kappa) << '\n';
    if (verify) {
      std::cout << "schur " << fixed6(schur.kappa) << '\n'
                << "bisection " << fixed6(bisection->kappa) << '\n'
                << "discrepancy " << std::scientific << std::setprecision(2) << discrepancy << '\n';
    }
  }
  if (!agree) {
    std::cerr << "error: curvature methods disagree\n";
    return kExitNumerical;
  }
  return 0;
}

int run_tiling(int k, const std::string& emit) {
  const becurv::TilingOrder order(k);
  const auto smooth = becurv::smooth_curvature(order);
  const auto ball = becurv::two_ball_of_order(order);
  const double discrete = becurv::curvature_at(ball, "x").kappa;
  std::cout << "order " << k << '\n'
            << "space " << becurv::to_string(smooth.space) << '\n'
            << "smooth_curvature " << becurv::format_fixed(smooth.kappa) << '\n'
            << "discrete_curvature " << becurv::format_fixed(discrete) << '\n';
  if (!emit.empty()) write_graph(emit, ball);
  return 0;
}

int run_table(const std::string& format) {
  const auto rows = becurv::comparison_table();
  if (format == "csv")
    std::cout << becurv::table_csv(rows);
  else if (format == "json")
    std::cout << becurv::table_json(rows).dump(2) << '\n';
  else
    std::cout << becurv::table_text(rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bakry-Emery curvature of graphs and regular triangular tilings"};
  app.require_subcommand(1);

  std::string file, vertex, format = "text", dump_prefix, emit;
  bool verify = false;
  int order = 0;

  auto* curvature = app.add_subcommand("curvature", "Curvature at one vertex of an edge-list graph");
  curvature->add_option("file", file, "Edge-list file")->required();
  curvature->add_option("--vertex", vertex, "Vertex label")->required();
  curvature->add_flag("--verify", verify, "Cross-check with the bisection solver");
  curvature->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  curvature->add_option("--dump-forms", dump_prefix, "Write <prefix>gamma.csv and <prefix>gamma2.csv");

  auto* tiling = app.add_subcommand("tiling", "Smooth and discrete curvature of one {3,k} tiling");
  tiling->add_option("--order", order, "Vertex degree k")->required();
  tiling->add_option("--emit", emit, "Write the 2-ball edge list ('-' for stdout)");

  auto* table = app.add_subcommand("table", "Comparison table for k = 3..9");
  table->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* ball = app.add_subcommand("ball", "Emit the 2-ball of a {3,k} tiling");
  ball->add_option("--order", order, "Vertex degree k")->required();
  ball->add_option("--emit", emit, "Output file ('-' for stdout)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*curvature) return run_curvature(file, vertex, verify, format, dump_prefix);
    if (*tiling) return run_tiling(order, emit);
    if (*table) return run_table(format);
    if (*ball) {
      write_graph(emit, becurv::two_ball_of_order(order));
      return 0;
    }
  } catch (const becurv::MethodDisagreementError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const becurv::SingularS2BlockError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const becurv::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
