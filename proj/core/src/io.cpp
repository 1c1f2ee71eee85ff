#include "medianshape/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace medianshape {

namespace {

void expect_word(std::istream& is, const std::string& word, const char* what) {
  std::string tok;
  if (!(is >> tok) || tok != word)
    throw ParseError(std::string(what) + ": expected '" + word + "', got '" + tok + "'");
}

template <typename T>
T expect_value(std::istream& is, const char* what) {
  T v;
  if (!(is >> v)) throw ParseError(std::string(what) + ": malformed value");
  return v;
}

}  // namespace

void write_mesh(std::ostream& os, const SimplicialComplex& K) {
  os << "DIM " << K.dim_ambient << "\n";
  os << "VERTICES " << K.vertices.size() << "\n";
  os << std::setprecision(17);
  for (const auto& v : K.vertices) {
    for (size_t c = 0; c < v.size(); ++c) os << (c ? " " : "") << v[c];
    os << "\n";
  }
  for (int q = 0; q <= K.dim(); ++q) {
    os << "SIMPLICES " << q << " " << K.count(q) << "\n";
    for (const auto& s : K.simplices_by_dim[q]) {
      for (size_t t = 0; t < s.size(); ++t) os << (t ? " " : "") << s[t];
      os << "\n";
    }
  }
}

SimplicialComplex read_mesh(std::istream& is, bool auto_close) {
  SimplicialComplex K;
  expect_word(is, "DIM", "mesh");
  K.dim_ambient = expect_value<int>(is, "mesh DIM");
  expect_word(is, "VERTICES", "mesh");
  int nv = expect_value<int>(is, "mesh VERTICES");
  K.vertices.resize(nv, std::vector<double>(K.dim_ambient));
  for (auto& v : K.vertices)
    for (auto& c : v) c = expect_value<double>(is, "mesh vertex");
  std::string tok;
  while (is >> tok) {
    if (tok != "SIMPLICES") throw ParseError("mesh: expected SIMPLICES block");
    int q = expect_value<int>(is, "mesh SIMPLICES dim");
    int count = expect_value<int>(is, "mesh SIMPLICES count");
    if (q < 0) throw ParseError("mesh: negative simplex dimension");
    if (static_cast<int>(K.simplices_by_dim.size()) <= q) K.simplices_by_dim.resize(q + 1);
    for (int i = 0; i < count; ++i) {
      std::vector<int> s(q + 1);
      for (auto& v : s) v = expect_value<int>(is, "mesh simplex vertex");
      K.simplices_by_dim[q].push_back(std::move(s));
    }
  }
  if (auto_close) {
    complete_closure(K);
  } else {
    K.finalize();
    if (!K.closed()) throw ParseError("mesh: not closed (missing faces); pass auto-close");
  }
  return K;
}

void write_chain(std::ostream& os, const Chain& c) {
  auto support = c.support();
  os << "CHAIN " << c.dim << " " << support.size() << "\n";
  for (int i : support) os << i << " " << c.coeffs[i] << "\n";
}

Chain read_chain(std::istream& is, const SimplicialComplex& K) {
  expect_word(is, "CHAIN", "chain");
  int p = expect_value<int>(is, "chain dim");
  int count = expect_value<int>(is, "chain count");
  if (p < 0 || p > K.dim()) throw ParseError("chain: dimension out of range for mesh");
  Chain c = zero_chain(K, p);
  for (int k = 0; k < count; ++k) {
    int idx = expect_value<int>(is, "chain index");
    auto coeff = expect_value<std::int64_t>(is, "chain coefficient");
    if (idx < 0 || idx >= K.count(p)) throw ParseError("chain: simplex index out of range");
    c.coeffs[idx] = coeff;
  }
  return c;
}

void write_solution(std::ostream& os, const SolutionFileData& sol) {
  os << "MEDIANSOLUTION\n";
  os << std::setprecision(17);
  os << "LAMBDA " << sol.lambda << "\n";
  os << "MU " << sol.mu << "\n";
  os << "ALPHA";
  for (double a : sol.alpha) os << " " << a;
  os << "\n";
  os << "OBJECTIVE " << numerator(sol.objective) << "/" << denominator(sol.objective) << " "
     << to_double(sol.objective) << "\n";
  os << "INTEGRAL " << (sol.integral ? 1 : 0) << "\n";
  os << "MEDIAN\n";
  write_chain(os, sol.t_hat);
  for (size_t h = 0; h < sol.per_input.size(); ++h) {
    os << "INPUT " << h + 1 << "\n";
    os << "R\n";
    write_chain(os, sol.per_input[h].first);
    os << "S\n";
    write_chain(os, sol.per_input[h].second);
  }
  os << "END\n";
}

SolutionFileData read_solution(std::istream& is, const SimplicialComplex& K) {
  SolutionFileData sol;
  expect_word(is, "MEDIANSOLUTION", "solution");
  expect_word(is, "LAMBDA", "solution");
  sol.lambda = expect_value<double>(is, "solution lambda");
  expect_word(is, "MU", "solution");
  sol.mu = expect_value<double>(is, "solution mu");
  expect_word(is, "ALPHA", "solution");
  std::string line;
  std::getline(is, line);
  std::istringstream als(line);
  double a;
  while (als >> a) sol.alpha.push_back(a);
  expect_word(is, "OBJECTIVE", "solution");
  std::string frac;
  is >> frac;
  auto slash = frac.find('/');
  if (slash == std::string::npos) throw ParseError("solution: objective not a fraction");
  sol.objective = Rational(Integer(frac.substr(0, slash)), Integer(frac.substr(slash + 1)));
  expect_value<double>(is, "solution objective decimal");
  expect_word(is, "INTEGRAL", "solution");
  sol.integral = expect_value<int>(is, "solution integral") != 0;
  expect_word(is, "MEDIAN", "solution");
  sol.t_hat = read_chain(is, K);
  std::string tok;
  while (is >> tok && tok != "END") {
    if (tok != "INPUT") throw ParseError("solution: expected INPUT or END");
    expect_value<int>(is, "solution input index");
    expect_word(is, "R", "solution");
    Chain r = read_chain(is, K);
    expect_word(is, "S", "solution");
    Chain s = read_chain(is, K);
    sol.per_input.emplace_back(std::move(r), std::move(s));
  }
  return sol;
}

void write_matrix(std::ostream& os, const IntMatrix& M) {
  os << M.rows << " " << M.cols << "\n";
  for (const auto& row : M.a) {
    for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "\n";
  }
}

IntMatrix read_matrix(std::istream& is) {
  int rows = expect_value<int>(is, "matrix rows");
  int cols = expect_value<int>(is, "matrix cols");
  if (rows < 0 || cols < 0) throw ParseError("matrix: negative dimensions");
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (auto& row : a)
    for (auto& v : row) v = expect_value<std::int64_t>(is, "matrix entry");
  return IntMatrix::make(std::move(a));
}

void write_graph(std::ostream& os, const EdgeColoredGraph& g) {
  os << g.k << " " << g.n_vertices << " " << g.edges.size() << "\n";
  for (const auto& e : g.edges) os << e.u << " " << e.v << " " << e.color << "\n";
}

EdgeColoredGraph read_graph(std::istream& is) {
  EdgeColoredGraph g;
  g.k = expect_value<int>(is, "graph k");
  g.n_vertices = expect_value<int>(is, "graph n_vertices");
  int ne = expect_value<int>(is, "graph n_edges");
  for (int i = 0; i < ne; ++i) {
    EdgeColoredGraph::Edge e;
    e.u = expect_value<int>(is, "graph edge u");
    e.v = expect_value<int>(is, "graph edge v");
    e.color = expect_value<int>(is, "graph edge color");
    g.edges.push_back(e);
  }
  return g;
}

std::vector<std::vector<double>> read_points(std::istream& is) {
  std::vector<std::vector<double>> pts;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<double> p;
    double v;
    while (ls >> v) p.push_back(v);
    if (!p.empty()) pts.push_back(std::move(p));
  }
  return pts;
}

namespace {

void plot_edge(std::ostream& os, const SimplicialComplex& K, const std::string& tag, int edge,
               std::int64_t coeff) {
  const auto& e = K.simplices_by_dim[1][edge];
  os << tag;
  for (int v : {e[0], e[1]})
    for (double c : K.vertices[v]) os << " " << c;
  os << " " << coeff << "\n";
}

}  // namespace

void write_plot_data(std::ostream& os, const SimplicialComplex& K,
                     const std::vector<Chain>& inputs, const MedianSolution& sol) {
  os << std::setprecision(17);
  for (size_t h = 0; h < inputs.size(); ++h)
    for (int e : inputs[h].support())
      plot_edge(os, K, "input_" + std::to_string(h + 1), e, inputs[h].coeffs[e]);
  for (int e : sol.t_hat.support()) plot_edge(os, K, "median", e, sol.t_hat.coeffs[e]);
  for (size_t h = 0; h < sol.per_input.size(); ++h) {
    const Chain& s = sol.per_input[h].second;
    for (int tri : s.support()) {
      const auto& t = K.simplices_by_dim[s.dim][tri];
      for (size_t drop = 0; drop < t.size(); ++drop) {
        std::vector<int> face;
        for (size_t k = 0; k < t.size(); ++k)
          if (k != drop) face.push_back(t[k]);
        int e = K.find(s.dim - 1, face);
        if (e >= 0) plot_edge(os, K, "fill_" + std::to_string(h + 1), e, s.coeffs[tri]);
      }
    }
  }
}

void atomic_write_file(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open for writing: " + tmp);
    os << contents;
    if (!os.flush()) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace medianshape
