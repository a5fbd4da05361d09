#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace maci::tsp {

struct DistanceMatrix {
  int n = 0;
  std::vector<int> d;  // row-major n*n, zero diagonal, entries >= 0

  static DistanceMatrix from_rows(const std::vector<std::vector<int>>& rows);
  int at(int i, int j) const { return d[static_cast<size_t>(i) * n + j]; }
  bool symmetric() const;
};

// Parses the matrix file format: first line n, then n rows of integers.
DistanceMatrix load_matrix(const std::string& path);
DistanceMatrix parse_matrix(const std::string& text);

// The two campus instances used throughout the test suite.
DistanceMatrix campus5();                // 5 sites, symmetric, optimum 24
DistanceMatrix campus10();               // 10 sites, asymmetric, optimum 60

struct Tour {
  std::vector<int> order;  // permutation of 0..n-1, order[0] = depot
  long length = 0;
};

// Cycle length of an arbitrary visit sequence (no validity requirement).
long evaluate(const std::vector<int>& order, const DistanceMatrix& m);

bool valid_tour(const std::vector<int>& order, int n, int depot = 0);

// -length if the sequence is a valid tour from the depot, -infinity otherwise.
double validation_value(const std::vector<int>& order, const DistanceMatrix& m,
                        int depot = 0);

// length + lambda * (missing + repeated cities); lambda <= 0 selects the
// default n * max-entry, which dominates any valid-tour length.
double penalized_fitness(const std::vector<int>& order, const DistanceMatrix& m,
                         double lambda = 0.0);
double default_penalty_lambda(const DistanceMatrix& m);

struct BruteForceResult {
  long optimal_length = 0;
  std::vector<Tour> optimal_tours;  // every optimal directed tour from depot
  long evaluations = 0;
};

// Exhaustive (n-1)! search; guarded to n <= 11.
BruteForceResult brute_force(const DistanceMatrix& m, int depot = 0);

// Subset DP, length only; guarded to n <= 20.
long held_karp(const DistanceMatrix& m, int depot = 0);

// Greedy closest-unvisited; ties resolved toward the lowest city index.
Tour nearest_neighbor(const DistanceMatrix& m, int depot = 0);

struct AcoParams {
  int ants = 100;
  int iterations = 50;
  double rho = 0.1;        // evaporation rate, tau *= (1 - rho)
  double alpha = 1.0;
  double beta = 2.0;
  double deposit_q = 10.0;
  double tau0 = 0.1;
  int stagnation_k = 5;    // early stop after this many non-improving iterations
  std::uint32_t seed = 1;

  static AcoParams small_preset(std::uint32_t seed = 1);  // 50 ants, 20 iterations
  static AcoParams large_preset(std::uint32_t seed = 1);  // 100 ants, 50 iterations
};

struct GaParams {
  int population = 100;  // must be even
  int generations = 200;
  int tournament_size = 3;
  double mutation_rate = 0.2;
  std::uint32_t seed = 1;
};

struct SaParams {
  double t0 = 0.0;  // <= 0 selects 10 x mean off-diagonal edge weight
  double cooling = 0.95;
  double t_min = 0.1;
  std::uint32_t seed = 1;
};

struct SolveResult {
  Tour tour;
  long evaluations = 0;
};

SolveResult aco(const DistanceMatrix& m, const AcoParams& p);
SolveResult ga(const DistanceMatrix& m, const GaParams& p);
SolveResult sa(const DistanceMatrix& m, const SaParams& p);

// Repair operator used by the GA and exposed for direct testing: drop repeated
// cities (keeping first occurrences), then append missing ones in index order.
std::vector<int> repair_tour(std::vector<int> order, int n, int depot = 0);

enum class Algorithm { brute_force, held_karp, nearest_neighbor, aco, ga, sa };

// n <= 8 -> brute force; 9..15 -> held-karp; larger -> aco.
Algorithm select_algorithm(int n);

std::string to_string(Algorithm a);

}  // namespace maci::tsp
