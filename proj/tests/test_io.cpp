#include "doctest.h"

#include "medianshape/io.hpp"

#include <stdexcept>
#include <cstdio>
#include <sstream>

using namespace medianshape;

TEST_CASE("mesh round trip") {
  for (auto K : {build_grid_2d(2, 3, 1.0, 0.9), build_grid_2d(1, 1, 2.0, 2.0)}) {
    std::stringstream ss;
    write_mesh(ss, K);
    auto K2 = read_mesh(ss);
    CHECK(K2.dim_ambient == K.dim_ambient);
    CHECK(K2.vertices == K.vertices);
    CHECK(K2.simplices_by_dim == K.simplices_by_dim);
    REQUIRE(K2.volumes_by_dim.size() == K.volumes_by_dim.size());
    for (size_t q = 0; q < K.volumes_by_dim.size(); ++q)
      for (size_t i = 0; i < K.volumes_by_dim[q].size(); ++i)
        CHECK(K2.volumes_by_dim[q][i] == doctest::Approx(K.volumes_by_dim[q][i]).epsilon(1e-14));
  }

  auto K3 = build_grid_3d(1, 1, 1, 1.0, 1.0, 1.0);
  std::stringstream ss;
  write_mesh(ss, K3);
  auto K3b = read_mesh(ss);
  CHECK(K3b.simplices_by_dim == K3.simplices_by_dim);
}

TEST_CASE("mesh reader rejects non-closed input unless auto-close") {
  std::string text =
      "DIM 2\n"
      "VERTICES 3\n"
      "0 0\n1 0\n0 1\n"
      "SIMPLICES 2 1\n"
      "0 1 2\n";
  {
    std::istringstream is(text);
    CHECK_THROWS_AS(read_mesh(is), ParseError);
  }
  std::istringstream is(text);
  auto K = read_mesh(is, true);
  CHECK(K.closed());
  CHECK(K.count(0) == 3);
  CHECK(K.count(1) == 3);
  CHECK(K.count(2) == 1);
}

TEST_CASE("mesh reader reports malformed input") {
  std::istringstream a("DIMS 2\n");
  CHECK_THROWS_AS(read_mesh(a), ParseError);
  std::istringstream b("DIM 2\nVERTICES 2\n0 0\n1\n");
  CHECK_THROWS_AS(read_mesh(b), ParseError);
}

TEST_CASE("chain round trip") {
  auto K = build_grid_2d(2, 2, 1.0, 1.0);
  Chain c = snap_polyline(K, {{0, 0}, {1, 0}, {1, 1}});
  std::stringstream ss;
  write_chain(ss, c);
  Chain c2 = read_chain(ss, K);
  CHECK(c2 == c);

  std::istringstream bad("CHAIN 1 1\n999 1\n");
  CHECK_THROWS_AS(read_chain(bad, K), ParseError);
  std::istringstream bad_dim("CHAIN 7 0\n");
  CHECK_THROWS_AS(read_chain(bad_dim, K), ParseError);
}

TEST_CASE("solution round trip preserves the exact objective") {
  auto K = build_grid_2d(2, 2, 1.0, 1.0);
  MedianProblem prob;
  prob.K = &K;
  prob.inputs = {snap_polyline(K, {{0, 0}, {1, 0}, {1, 1}}),
                 snap_polyline(K, {{0, 0}, {0, 1}, {1, 1}})};
  prob.lambda = 0.5;
  prob.mu = 1e-3;
  auto sol = solve_median(prob);

  SolutionFileData out;
  out.lambda = prob.lambda;
  out.mu = prob.mu;
  out.alpha = prob.effective_alpha();
  out.objective = sol.objective;
  out.integral = sol.integral;
  out.t_hat = sol.t_hat;
  out.per_input = sol.per_input;

  std::stringstream ss;
  write_solution(ss, out);
  auto in = read_solution(ss, K);
  CHECK(in.lambda == out.lambda);
  CHECK(in.mu == out.mu);
  CHECK(in.alpha == out.alpha);
  CHECK(in.objective == out.objective);
  CHECK(in.integral == out.integral);
  CHECK(in.t_hat == out.t_hat);
  REQUIRE(in.per_input.size() == out.per_input.size());
  for (size_t h = 0; h < out.per_input.size(); ++h) {
    CHECK(in.per_input[h].first == out.per_input[h].first);
    CHECK(in.per_input[h].second == out.per_input[h].second);
  }
  // Round-tripped pieces still satisfy the exact objective identity.
  CHECK(evaluate_objective(prob, in.t_hat, in.per_input) == sol.objective);
}

TEST_CASE("matrix round trip") {
  auto M = IntMatrix::make({{0, 1, -1, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}});
  std::stringstream ss;
  write_matrix(ss, M);
  CHECK(read_matrix(ss) == M);

  std::istringstream bad("2 2\n1 2\n3\n");
  CHECK_THROWS_AS(read_matrix(bad), ParseError);
}

TEST_CASE("graph round trip") {
  EdgeColoredGraph g;
  g.n_vertices = 4;
  g.k = 3;
  g.edges = {{0, 1, 1}, {2, 3, 1}, {0, 2, 2}, {1, 3, 2}, {0, 3, 3}, {1, 2, 3}};
  std::stringstream ss;
  write_graph(ss, g);
  auto g2 = read_graph(ss);
  CHECK(g2.n_vertices == g.n_vertices);
  CHECK(g2.k == g.k);
  REQUIRE(g2.edges.size() == g.edges.size());
  for (size_t i = 0; i < g.edges.size(); ++i) {
    CHECK(g2.edges[i].u == g.edges[i].u);
    CHECK(g2.edges[i].v == g.edges[i].v);
    CHECK(g2.edges[i].color == g.edges[i].color);
  }
}

TEST_CASE("points reader") {
  std::istringstream is("0 0\n0.5 1.25\n\n2 3\n");
  auto pts = read_points(is);
  REQUIRE(pts.size() == 3);
  CHECK(pts[1] == std::vector<double>{0.5, 1.25});
}

TEST_CASE("plot data lists inputs, median, and fills") {
  auto K = build_grid_2d(1, 1, 1.0, 1.0);
  MedianProblem prob;
  prob.K = &K;
  prob.inputs = {snap_polyline(K, {{0, 0}, {1, 0}, {1, 1}}),
                 snap_polyline(K, {{0, 0}, {0, 1}, {1, 1}})};
  prob.lambda = 1e-3;
  prob.mu = 1e-5;
  auto sol = solve_median(prob);
  std::stringstream ss;
  write_plot_data(ss, K, prob.inputs, sol);
  int input_lines = 0, median_lines = 0;
  std::string line;
  while (std::getline(ss, line)) {
    if (line.rfind("input_", 0) == 0) ++input_lines;
    if (line.rfind("median", 0) == 0) ++median_lines;
    // Tag plus two endpoints plus a coefficient: 6 fields in 2d.
    std::istringstream ls(line);
    int fields = 0;
    std::string tok;
    while (ls >> tok) ++fields;
    CHECK(fields == 6);
  }
  CHECK(input_lines == 4);
  CHECK(median_lines == (int)sol.t_hat.support().size());
}

TEST_CASE("atomic file write") {
  std::string path = "/tmp/medianshape_io_test.txt";
  atomic_write_file(path, "hello\n");
  CHECK(read_file(path) == "hello\n");
  atomic_write_file(path, "replaced\n");
  CHECK(read_file(path) == "replaced\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_file(path), std::runtime_error);
}
