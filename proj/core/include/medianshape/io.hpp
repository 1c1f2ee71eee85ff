#pragma once

#include "medianshape/chain.hpp"
#include "medianshape/complex.hpp"
#include "medianshape/cozy.hpp"
#include "medianshape/median.hpp"
#include "medianshape/tu.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace medianshape {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mesh text format:
//   DIM d
//   VERTICES count
//   <d coordinates per line>
//   SIMPLICES q count        (one block per dimension, ascending)
//   <q+1 vertex indices per line>
void write_mesh(std::ostream& os, const SimplicialComplex& K);
SimplicialComplex read_mesh(std::istream& is, bool auto_close = false);

// Chain text format: "CHAIN p count" then "simplex_index coefficient" lines.
void write_chain(std::ostream& os, const Chain& c);
Chain read_chain(std::istream& is, const SimplicialComplex& K);

// Median solution file: parameter echo, exact + decimal objective,
// integrality flag, median chain, then per-input r/s blocks.
struct SolutionFileData {
  double lambda = 0, mu = 0;
  std::vector<double> alpha;
  Rational objective;
  bool integral = true;
  Chain t_hat;
  std::vector<std::pair<Chain, Chain>> per_input;
};
void write_solution(std::ostream& os, const SolutionFileData& sol);
SolutionFileData read_solution(std::istream& is, const SimplicialComplex& K);

// Integer matrix: "rows cols" then one row per line.
void write_matrix(std::ostream& os, const IntMatrix& M);
IntMatrix read_matrix(std::istream& is);

// Edge-colored graph: "k n_vertices n_edges" then "u v color" per line.
void write_graph(std::ostream& os, const EdgeColoredGraph& g);
EdgeColoredGraph read_graph(std::istream& is);

// Points file: one "x y [z]" per line.
std::vector<std::vector<double>> read_points(std::istream& is);

// Plot data: "tag x1 y1 [z1] x2 y2 [z2] coeff" per nonzero edge, tags
// input_h / median / fill_h (fill triangles are emitted edge by edge).
void write_plot_data(std::ostream& os, const SimplicialComplex& K,
                     const std::vector<Chain>& inputs, const MedianSolution& sol);

/// Write via a temp file in the same directory, then rename into place.
void atomic_write_file(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

}  // namespace medianshape
