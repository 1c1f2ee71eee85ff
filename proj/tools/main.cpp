// Command-line front end: mesh generation, polyline snapping, flat norm and
// median solves, total-unimodularity checks, and cozy graph utilities.
//
// Exit codes: 0 success, 2 usage/validation, 3 infeasible geometry,
// 4 fractional LP optimum.

#include "medianshape/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ms = medianshape;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitGeometry = 3;
constexpr int kExitFractional = 4;

int sig_digits_from_env() {
  if (const char* s = std::getenv("MEDIANSHAPE_SIG_DIGITS")) {
    int v = std::atoi(s);
    if (v >= 1 && v <= 17) return v;
  }
  return 12;
}

ms::SimplicialComplex load_mesh(const std::string& path, bool auto_close) {
  std::ifstream is(path);
  if (!is) throw ms::ParseError("cannot open mesh file: " + path);
  return ms::read_mesh(is, auto_close);
}

ms::Chain load_chain(const std::string& path, const ms::SimplicialComplex& K) {
  std::ifstream is(path);
  if (!is) throw ms::ParseError("cannot open chain file: " + path);
  return ms::read_chain(is, K);
}

void save(const std::string& path, const std::string& contents) {
  ms::atomic_write_file(path, contents);
}

std::string solution_text(const ms::MedianProblem& prob, const ms::MedianSolution& sol) {
  ms::SolutionFileData data;
  data.lambda = prob.lambda;
  data.mu = prob.mu;
  data.alpha = prob.effective_alpha();
  data.objective = sol.objective;
  data.integral = sol.integral;
  data.t_hat = sol.t_hat;
  data.per_input = sol.per_input;
  std::ostringstream os;
  ms::write_solution(os, data);
  return os.str();
}

std::string sweep_path(const std::string& base, int k) {
  auto dot = base.find_last_of('.');
  if (dot == std::string::npos || dot == 0) return base + "." + std::to_string(k);
  return base.substr(0, dot) + "." + std::to_string(k) + base.substr(dot);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"median shapes of integer chains on simplicial complexes"};
  app.require_subcommand(1);
  const int sig_digits = sig_digits_from_env();

  // ---- mesh ----
  auto* mesh = app.add_subcommand("mesh", "generate meshes");
  mesh->require_subcommand(1);
  struct {
    int nx = 1, ny = 1, nz = 1;
    double width = 1.0, height = 1.0, depth = 1.0;
    std::string out;
  } mesh_opt;
  auto* grid2d = mesh->add_subcommand("grid2d", "triangulated rectangle");
  grid2d->add_option("--nx", mesh_opt.nx)->required();
  grid2d->add_option("--ny", mesh_opt.ny)->required();
  grid2d->add_option("--width", mesh_opt.width);
  grid2d->add_option("--height", mesh_opt.height);
  grid2d->add_option("-o,--output", mesh_opt.out)->required();
  auto* grid3d = mesh->add_subcommand("grid3d", "tetrahedralized box");
  grid3d->add_option("--nx", mesh_opt.nx)->required();
  grid3d->add_option("--ny", mesh_opt.ny)->required();
  grid3d->add_option("--nz", mesh_opt.nz)->required();
  grid3d->add_option("--width", mesh_opt.width);
  grid3d->add_option("--height", mesh_opt.height);
  grid3d->add_option("--depth", mesh_opt.depth);
  grid3d->add_option("-o,--output", mesh_opt.out)->required();

  // ---- snap ----
  auto* snap = app.add_subcommand("snap", "snap a polyline onto a mesh as a 1-chain");
  struct {
    std::string mesh, points, out;
  } snap_opt;
  snap->add_option("--mesh", snap_opt.mesh)->required();
  snap->add_option("--points", snap_opt.points)->required();
  snap->add_option("-o,--output", snap_opt.out)->required();

  // ---- median ----
  auto* median = app.add_subcommand("median", "solve the median shape LP");
  struct {
    std::string mesh, out, plot;
    std::vector<std::string> inputs;
    double lambda = 1e-3, mu = 1e-5;
    std::vector<double> alpha;
    int sweep = -1;
  } med_opt;
  median->add_option("--mesh", med_opt.mesh)->required();
  median->add_option("--input", med_opt.inputs)->required()->expected(-1);
  median->add_option("--lambda", med_opt.lambda);
  median->add_option("--mu", med_opt.mu);
  median->add_option("--alpha", med_opt.alpha)->expected(-1);
  median->add_option("--sweep", med_opt.sweep);
  median->add_option("-o,--output", med_opt.out)->required();
  median->add_option("--plot-data", med_opt.plot);

  // ---- flatnorm ----
  auto* flatnorm = app.add_subcommand("flatnorm", "multiscale simplicial flat norm");
  struct {
    std::string mesh, input, out;
    double lambda = 1e-3;
  } fn_opt;
  flatnorm->add_option("--mesh", fn_opt.mesh)->required();
  flatnorm->add_option("--input", fn_opt.input)->required();
  flatnorm->add_option("--lambda", fn_opt.lambda);
  flatnorm->add_option("-o,--output", fn_opt.out)->required();

  // ---- tu ----
  auto* tu = app.add_subcommand("tu", "total unimodularity analysis");
  tu->require_subcommand(1);
  struct {
    std::string matrix, out;
    int n_fold = 2;
    long long samples = 100000;
    unsigned long long seed = 1;
  } tu_opt;
  auto* tu_check = tu->add_subcommand("check", "test total unimodularity");
  tu_check->add_option("--matrix", tu_opt.matrix)->required();
  tu_check->add_option("--samples", tu_opt.samples);
  tu_check->add_option("--seed", tu_opt.seed);
  auto* tu_isum = tu->add_subcommand("isum", "N-fold I-sum of a matrix");
  tu_isum->add_option("--matrix", tu_opt.matrix)->required();
  tu_isum->add_option("--n,-n", tu_opt.n_fold)->required();
  tu_isum->add_option("-o,--output", tu_opt.out);

  // ---- cozy ----
  auto* cozy = app.add_subcommand("cozy", "edge-colored regular graph utilities");
  cozy->require_subcommand(1);
  struct {
    std::string graph, out;
    bool comfortable = false;
    int k = 2, n = 4;
    unsigned long long seed = 1;
  } cz_opt;
  auto* cz_verify = cozy->add_subcommand("verify", "check coziness (and comfortability)");
  cz_verify->add_option("--graph", cz_opt.graph)->required();
  cz_verify->add_flag("--comfortable", cz_opt.comfortable);
  auto* cz_random = cozy->add_subcommand("random", "seeded random cozy graph");
  cz_random->add_option("--k", cz_opt.k)->required();
  cz_random->add_option("--n", cz_opt.n)->required();
  cz_random->add_option("--seed", cz_opt.seed);
  cz_random->add_option("-o,--output", cz_opt.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (grid2d->parsed() || grid3d->parsed()) {
      ms::SimplicialComplex K =
          grid2d->parsed()
              ? ms::build_grid_2d(mesh_opt.nx, mesh_opt.ny, mesh_opt.width, mesh_opt.height)
              : ms::build_grid_3d(mesh_opt.nx, mesh_opt.ny, mesh_opt.nz, mesh_opt.width,
                                  mesh_opt.height, mesh_opt.depth);
      std::ostringstream os;
      ms::write_mesh(os, K);
      save(mesh_opt.out, os.str());
      std::cout << "wrote " << mesh_opt.out << "\n";
    } else if (snap->parsed()) {
      ms::SimplicialComplex K = load_mesh(snap_opt.mesh, false);
      std::ifstream ps(snap_opt.points);
      if (!ps) throw ms::ParseError("cannot open points file: " + snap_opt.points);
      ms::Chain c = ms::snap_polyline(K, ms::read_points(ps));
      std::ostringstream os;
      ms::write_chain(os, c);
      save(snap_opt.out, os.str());
      std::cout << "wrote " << snap_opt.out << "\n";
    } else if (median->parsed()) {
      ms::MedianProblem prob;
      ms::SimplicialComplex K = load_mesh(med_opt.mesh, false);
      prob.K = &K;
      for (const auto& path : med_opt.inputs) prob.inputs.push_back(load_chain(path, K));
      prob.lambda = med_opt.lambda;
      prob.mu = med_opt.mu;
      prob.alpha = med_opt.alpha;
      prob.sig_digits = sig_digits;
      if (med_opt.sweep >= 1) {
        auto runs = ms::interpolation_sweep(prob, med_opt.sweep);
        for (int k = 0; k < static_cast<int>(runs.size()); ++k) {
          ms::MedianProblem sub = prob;
          sub.alpha = runs[k].first;
          save(sweep_path(med_opt.out, k), solution_text(sub, runs[k].second));
        }
        std::cout << "wrote " << runs.size() << " solution files\n";
      } else {
        ms::MedianSolution sol = ms::solve_median(prob);
        save(med_opt.out, solution_text(prob, sol));
        if (!med_opt.plot.empty()) {
          std::ostringstream os;
          ms::write_plot_data(os, K, prob.inputs, sol);
          save(med_opt.plot, os.str());
        }
        std::cout << "objective " << sol.objective << " integral "
                  << (sol.integral ? "yes" : "no") << "\n";
      }
    } else if (flatnorm->parsed()) {
      ms::SimplicialComplex K = load_mesh(fn_opt.mesh, false);
      ms::Chain t = load_chain(fn_opt.input, K);
      ms::FlatNormDecomposition d = ms::flat_norm(K, t, fn_opt.lambda, sig_digits);
      std::ostringstream os;
      os << "FLATNORM\nLAMBDA " << fn_opt.lambda << "\nVALUE " << numerator(d.value) << "/"
         << denominator(d.value) << " " << ms::to_double(d.value) << "\nX\n";
      ms::write_chain(os, d.x);
      os << "S\n";
      ms::write_chain(os, d.s);
      os << "END\n";
      save(fn_opt.out, os.str());
      std::cout << "value " << ms::to_double(d.value) << "\n";
    } else if (tu_check->parsed()) {
      std::ifstream is(tu_opt.matrix);
      if (!is) throw ms::ParseError("cannot open matrix file: " + tu_opt.matrix);
      ms::IntMatrix M = ms::read_matrix(is);
      ms::TUReport rep;
      bool sampled = false;
      try {
        rep = ms::is_totally_unimodular(M);
      } catch (const std::invalid_argument&) {
        rep = ms::is_tu_sampled(M, tu_opt.samples, tu_opt.seed);
        sampled = true;
      }
      if (rep.tu) {
        std::cout << "TU" << (sampled ? " (sampled, not a proof)" : "") << "\n";
      } else {
        std::cout << "NOT TU, witness det " << rep.witness->det << ", rows";
        for (int r : rep.witness->row_set) std::cout << " " << r + 1;
        std::cout << ", cols";
        for (int c : rep.witness->col_set) std::cout << " " << c + 1;
        std::cout << "\n";
      }
    } else if (tu_isum->parsed()) {
      std::ifstream is(tu_opt.matrix);
      if (!is) throw ms::ParseError("cannot open matrix file: " + tu_opt.matrix);
      ms::IntMatrix R = ms::i_sum(ms::read_matrix(is), tu_opt.n_fold);
      std::ostringstream os;
      ms::write_matrix(os, R);
      if (tu_opt.out.empty())
        std::cout << os.str();
      else
        save(tu_opt.out, os.str());
    } else if (cz_verify->parsed()) {
      std::ifstream is(cz_opt.graph);
      if (!is) throw ms::ParseError("cannot open graph file: " + cz_opt.graph);
      ms::EdgeColoredGraph g = ms::read_graph(is);
      ms::CozyCheck chk = ms::is_cozy(g);
      if (chk.ok)
        std::cout << "cozy (k=" << g.k << ")\n";
      else
        std::cout << "not cozy: " << chk.reason << "\n";
      if (cz_opt.comfortable && chk.ok)
        std::cout << (ms::is_comfortable(g, g.k) ? "comfortable" : "not comfortable") << "\n";
    } else if (cz_random->parsed()) {
      ms::EdgeColoredGraph g = ms::random_cozy(cz_opt.k, cz_opt.n, cz_opt.seed);
      std::ostringstream os;
      ms::write_graph(os, g);
      if (cz_opt.out.empty())
        std::cout << os.str();
      else
        save(cz_opt.out, os.str());
    }
  } catch (const ms::FractionalOptimumError& e) {
    std::cerr << "fractional LP optimum; exact solution:\n";
    for (size_t i = 0; i < e.x.size(); ++i)
      if (e.x[i] != 0) std::cerr << "  x[" << i << "] = " << e.x[i] << "\n";
    return kExitFractional;
  } catch (const ms::UnreachableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGeometry;
  } catch (const ms::EnvelopeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGeometry;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
