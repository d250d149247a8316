#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "netband/generators.hpp"
#include "netband/instance.hpp"

using namespace netband;

namespace {

std::string write_temp(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << contents;
  return path.string();
}

}  // namespace

TEST_CASE("mixed signal model basics") {
  SUBCASE("beta = 0 gives the zero matrix") {
    SignalModelParams params;
    params.d = 20;
    params.beta = 0.0;
    params.seed = 5;
    CHECK(generate_mixed_signal(params).effects().isZero(0.0));
  }
  SUBCASE("fixed seed is bit-identical") {
    SignalModelParams params;
    params.d = 30;
    params.seed = 99;
    const InterferenceInstance a = generate_mixed_signal(params);
    const InterferenceInstance b = generate_mixed_signal(params);
    CHECK(a.effects() == b.effects());
  }
  SUBCASE("rejects s0 > d") {
    SignalModelParams params;
    params.d = 10;
    params.s0 = 11;
    CHECK_THROWS_AS(generate_mixed_signal(params), std::invalid_argument);
  }
}

TEST_CASE("mixed signal row occupancy matches the binomial expectation") {
  // Per row: the diagonal plus Binomial(d-1, s0/d) off-diagonal entries.
  SignalModelParams params;
  params.d = 100;
  params.s0 = 20.0;
  const int seeds = 100;
  double total = 0.0;
  for (int seed = 0; seed < seeds; ++seed) {
    params.seed = static_cast<std::uint64_t>(seed);
    const InterferenceInstance instance = generate_mixed_signal(params);
    total += static_cast<double>(instance.support().count());
  }
  const double mean_per_row = total / (seeds * params.d);
  const double expected = 1.0 + 99.0 * 0.2;
  // sigma of the grand mean: sqrt(99 * p(1-p)) over 100*100 row samples.
  const double sigma = std::sqrt(99.0 * 0.2 * 0.8 / (seeds * params.d));
  CHECK(std::abs(mean_per_row - expected) <= 3.0 * sigma);
}

TEST_CASE("mixed signal off-diagonal inclusion probability") {
  SignalModelParams params;
  params.d = 50;
  params.s0 = 10.0;
  const int seeds = 200;
  long nonzero = 0;
  long cells = 0;
  for (int seed = 0; seed < seeds; ++seed) {
    params.seed = static_cast<std::uint64_t>(seed) + 1000;
    const InterferenceInstance instance = generate_mixed_signal(params);
    for (int i = 0; i < params.d; ++i) {
      for (int j = 0; j < params.d; ++j) {
        if (i == j) continue;
        ++cells;
        if (instance.support()(i, j)) ++nonzero;
      }
    }
  }
  const double p_hat = static_cast<double>(nonzero) / cells;
  const double p = params.s0 / params.d;
  const double sigma = std::sqrt(p * (1 - p) / cells);
  CHECK(std::abs(p_hat - p) <= 4.0 * sigma);
}

TEST_CASE("circulant generator") {
  SUBCASE("d=4 s=2 support pattern") {
    const InterferenceInstance instance = generate_circulant(4, 2, 0.1);
    const auto& support = instance.support();
    const bool expected[4][4] = {{true, true, false, false},
                                 {false, true, true, false},
                                 {false, false, true, true},
                                 {true, false, false, true}};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) CHECK(support(i, j) == expected[i][j]);
    }
  }
  SUBCASE("column profile is constant s") {
    for (int s : {1, 3, 7}) {
      const InterferenceInstance instance = generate_circulant(10, s, 0.2);
      const ColumnProfile rho = column_profile(instance);
      for (int j = 0; j < 10; ++j) CHECK(rho[j] == s);
      CHECK(row_sparsity(instance) == s);
    }
  }
  SUBCASE("delta = 1/s is assumption-compliant") {
    const InterferenceInstance instance = generate_circulant(12, 4, 0.25);
    CHECK(instance.assumption_compliant());
    const ThetaVector theta = theta_of(instance);
    for (int j = 0; j < 12; ++j) CHECK(theta[j] == doctest::Approx(1.0));
  }
  SUBCASE("rejects s out of range") {
    CHECK_THROWS_AS(generate_circulant(5, 6, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(generate_circulant(5, 0, 0.1), std::invalid_argument);
  }
}

TEST_CASE("adjacency loading") {
  SUBCASE("path graph parses") {
    const std::string path =
        write_temp("nb_path3.csv", "0,1,0\n1,0,1\n0,1,0\n");
    const AdjacencyMatrix adj = load_adjacency(path);
    CHECK(adj.n() == 3);
    CHECK(adj.adj(0, 1));
    CHECK_FALSE(adj.adj(0, 2));
    const AdjacencyStats stats = summary_stats(adj);
    CHECK(stats.d == 3);
    CHECK(stats.fractional_sparsity == doctest::Approx(2.0 / 3.0));
  }
  SUBCASE("whitespace separators work") {
    const std::string path = write_temp("nb_ws.txt", "0 1\n1 0\n");
    CHECK(load_adjacency(path).n() == 2);
  }
  SUBCASE("non-square file is rejected") {
    const std::string path = write_temp("nb_nonsq.csv", "0,1,0\n1,0,1\n");
    CHECK_THROWS_AS(load_adjacency(path), NonSquare);
  }
  SUBCASE("non-boolean entry is rejected with its location") {
    const std::string path = write_temp("nb_nonbool.csv", "0,1\n2,0\n");
    try {
      load_adjacency(path);
      FAIL("expected NonBooleanEntry");
    } catch (const NonBooleanEntry& e) {
      const std::string message = e.what();
      CHECK(message.find("row 2") != std::string::npos);
      CHECK(message.find("column 1") != std::string::npos);
    }
  }
  SUBCASE("missing file raises IoFailure") {
    CHECK_THROWS_AS(load_adjacency("/nonexistent/nb.csv"), IoFailure);
  }
}

TEST_CASE("summary stats on a complete graph") {
  AdjacencyMatrix adj;
  adj.adj.setConstant(10, 10, true);
  for (int i = 0; i < 10; ++i) adj.adj(i, i) = false;
  const AdjacencyStats stats = summary_stats(adj);
  CHECK(stats.d == 10);
  CHECK(stats.fractional_sparsity == doctest::Approx(0.9));
}

TEST_CASE("overlay signal") {
  SignalModelParams params;
  params.beta = 0.1;
  params.seed = 3;

  SUBCASE("empty graph gives a diagonal-only instance") {
    AdjacencyMatrix adj;
    adj.adj.setConstant(6, 6, false);
    const InterferenceInstance instance = overlay_signal(adj, params);
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        CHECK(instance.support()(i, j) == (i == j));
      }
    }
  }
  SUBCASE("support is exactly adjacency plus diagonal") {
    AdjacencyMatrix adj;
    adj.adj.setConstant(5, 5, false);
    adj.adj(0, 3) = adj.adj(3, 0) = true;
    adj.adj(1, 4) = adj.adj(4, 1) = true;
    const InterferenceInstance instance = overlay_signal(adj, params);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        const bool expected = (i == j) || adj.adj(i, j);
        CHECK(instance.support()(i, j) == expected);
      }
    }
  }
  SUBCASE("complete graph fills every column") {
    AdjacencyMatrix adj;
    adj.adj.setConstant(5, 5, true);
    const InterferenceInstance instance = overlay_signal(adj, params);
    const ColumnProfile rho = column_profile(instance);
    for (int j = 0; j < 5; ++j) CHECK(rho[j] == 5);
  }
  SUBCASE("deterministic given seed") {
    AdjacencyMatrix adj;
    adj.adj.setConstant(4, 4, true);
    const InterferenceInstance a = overlay_signal(adj, params);
    const InterferenceInstance b = overlay_signal(adj, params);
    CHECK(a.effects() == b.effects());
  }
}
