#include "maci/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace maci::tsp {

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  DistanceMatrix m;
  m.n = static_cast<int>(rows.size());
  if (m.n < 2) throw std::invalid_argument("distance matrix needs n >= 2");
  m.d.reserve(static_cast<size_t>(m.n) * m.n);
  for (int i = 0; i < m.n; ++i) {
    if (static_cast<int>(rows[i].size()) != m.n)
      throw std::invalid_argument("distance matrix is not square");
    for (int j = 0; j < m.n; ++j) {
      int v = rows[i][j];
      if (v < 0) throw std::invalid_argument("negative distance entry");
      if (i == j && v != 0) throw std::invalid_argument("nonzero diagonal entry");
      m.d.push_back(v);
    }
  }
  return m;
}

bool DistanceMatrix::symmetric() const {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

DistanceMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n) || n < 2) throw std::invalid_argument("matrix file: bad size line");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> rows[i][j]))
        throw std::invalid_argument("matrix file: expected " + std::to_string(n * n) +
                                    " entries");
  return DistanceMatrix::from_rows(rows);
}

DistanceMatrix load_matrix(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open matrix file: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_matrix(buf.str());
}

DistanceMatrix campus5() {
  return DistanceMatrix::from_rows({{0, 5, 8, 4, 7},
                                    {5, 0, 6, 3, 8},
                                    {8, 6, 0, 5, 4},
                                    {4, 3, 5, 0, 6},
                                    {7, 8, 4, 6, 0}});
}

DistanceMatrix campus10() {
  return DistanceMatrix::from_rows({{0, 12, 8, 15, 9, 14, 7, 11, 10, 6},
                                    {10, 0, 7, 14, 6, 16, 9, 13, 5, 8},
                                    {9, 5, 0, 11, 8, 12, 10, 7, 15, 4},
                                    {14, 8, 12, 0, 10, 9, 13, 6, 11, 7},
                                    {7, 13, 6, 9, 0, 8, 5, 12, 14, 10},
                                    {11, 9, 15, 8, 12, 0, 7, 10, 13, 5},
                                    {5, 7, 10, 6, 11, 9, 0, 8, 12, 15},
                                    {8, 14, 4, 10, 7, 13, 6, 0, 9, 11},
                                    {12, 6, 9, 7, 15, 10, 8, 5, 0, 14},
                                    {9, 10, 7, 13, 5, 11, 14, 8, 12, 0}});
}

long evaluate(const std::vector<int>& order, const DistanceMatrix& m) {
  if (order.empty()) return 0;
  long total = 0;
  for (size_t i = 0; i < order.size(); ++i)
    total += m.at(order[i], order[(i + 1) % order.size()]);
  return total;
}

bool valid_tour(const std::vector<int>& order, int n, int depot) {
  if (static_cast<int>(order.size()) != n) return false;
  if (order.empty() || order[0] != depot) return false;
  std::vector<bool> seen(n, false);
  for (int c : order) {
    if (c < 0 || c >= n || seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

double validation_value(const std::vector<int>& order, const DistanceMatrix& m,
                        int depot) {
  if (!valid_tour(order, m.n, depot))
    return -std::numeric_limits<double>::infinity();
  return -static_cast<double>(evaluate(order, m));
}

double default_penalty_lambda(const DistanceMatrix& m) {
  int mx = 0;
  for (int v : m.d) mx = std::max(mx, v);
  return static_cast<double>(m.n) * mx;
}

double penalized_fitness(const std::vector<int>& order, const DistanceMatrix& m,
                         double lambda) {
  if (lambda <= 0.0) lambda = default_penalty_lambda(m);
  std::vector<int> count(m.n, 0);
  int repeated = 0;
  for (int c : order) {
    if (c < 0 || c >= m.n) {
      ++repeated;  // out-of-range counts as a repeat-class defect
      continue;
    }
    if (++count[c] > 1) ++repeated;
  }
  int missing = 0;
  for (int c = 0; c < m.n; ++c)
    if (count[c] == 0) ++missing;
  return static_cast<double>(evaluate(order, m)) + lambda * (missing + repeated);
}

BruteForceResult brute_force(const DistanceMatrix& m, int depot) {
  if (m.n > 11) throw std::invalid_argument("brute_force guarded to n <= 11");
  BruteForceResult res;
  std::vector<int> rest;
  for (int c = 0; c < m.n; ++c)
    if (c != depot) rest.push_back(c);
  std::sort(rest.begin(), rest.end());

  long best = std::numeric_limits<long>::max();
  do {
    std::vector<int> order;
    order.reserve(m.n);
    order.push_back(depot);
    order.insert(order.end(), rest.begin(), rest.end());
    long len = evaluate(order, m);
    ++res.evaluations;
    if (len < best) {
      best = len;
      res.optimal_tours.clear();
    }
    if (len == best) res.optimal_tours.push_back(Tour{order, len});
  } while (std::next_permutation(rest.begin(), rest.end()));
  res.optimal_length = best;
  return res;
}

long held_karp(const DistanceMatrix& m, int depot) {
  if (m.n > 20) throw std::invalid_argument("held_karp guarded to n <= 20");
  const int n = m.n;
  std::vector<int> cities;  // non-depot cities, indexed 0..k-1
  for (int c = 0; c < n; ++c)
    if (c != depot) cities.push_back(c);
  const int k = n - 1;
  const long INF = std::numeric_limits<long>::max() / 4;
  // dp[mask][j]: shortest path depot -> (visit mask) ending at cities[j]
  std::vector<std::vector<long>> dp(1u << k, std::vector<long>(k, INF));
  for (int j = 0; j < k; ++j) dp[1u << j][j] = m.at(depot, cities[j]);
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    for (int j = 0; j < k; ++j) {
      if (!(mask & (1u << j)) || dp[mask][j] >= INF) continue;
      for (int t = 0; t < k; ++t) {
        if (mask & (1u << t)) continue;
        unsigned nm = mask | (1u << t);
        long cand = dp[mask][j] + m.at(cities[j], cities[t]);
        if (cand < dp[nm][t]) dp[nm][t] = cand;
      }
    }
  }
  long best = INF;
  unsigned full = (1u << k) - 1;
  for (int j = 0; j < k; ++j)
    if (dp[full][j] < INF)
      best = std::min(best, dp[full][j] + m.at(cities[j], depot));
  return best;
}

Tour nearest_neighbor(const DistanceMatrix& m, int depot) {
  Tour t;
  std::vector<bool> seen(m.n, false);
  int cur = depot;
  seen[cur] = true;
  t.order.push_back(cur);
  for (int step = 1; step < m.n; ++step) {
    int best = -1;
    for (int c = 0; c < m.n; ++c) {
      if (seen[c]) continue;
      if (best < 0 || m.at(cur, c) < m.at(cur, best)) best = c;  // ties: lowest index
    }
    seen[best] = true;
    t.order.push_back(best);
    cur = best;
  }
  t.length = evaluate(t.order, m);
  return t;
}

AcoParams AcoParams::small_preset(std::uint32_t seed) {
  AcoParams p;
  p.ants = 50;
  p.iterations = 20;
  p.seed = seed;
  return p;
}

AcoParams AcoParams::large_preset(std::uint32_t seed) {
  AcoParams p;
  p.ants = 100;
  p.iterations = 50;
  p.seed = seed;
  return p;
}

namespace {

// Substream RNG keyed on (seed, iteration, ant) so ant construction order —
// or a future parallel schedule — cannot change results.
std::mt19937 substream(std::uint32_t seed, int iteration, int ant) {
  std::seed_seq seq{seed, static_cast<std::uint32_t>(iteration),
                    static_cast<std::uint32_t>(ant)};
  return std::mt19937(seq);
}

}  // namespace

SolveResult aco(const DistanceMatrix& m, const AcoParams& p) {
  if (p.ants < 1 || p.iterations < 1)
    throw std::invalid_argument("aco: ants and iterations must be >= 1");
  if (p.rho <= 0.0 || p.rho > 1.0)
    throw std::invalid_argument("aco: rho out of (0,1]");
  const int n = m.n;
  constexpr double kVisibilityCap = 1e6;  // finite stand-in for 1/0

  std::vector<double> eta(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        eta[static_cast<size_t>(i) * n + j] =
            m.at(i, j) > 0 ? 1.0 / m.at(i, j) : kVisibilityCap;

  std::vector<double> tau(static_cast<size_t>(n) * n, p.tau0);

  SolveResult res;
  long best = std::numeric_limits<long>::max();
  std::vector<int> best_order;
  int stagnant = 0;

  std::vector<std::vector<int>> tours(p.ants);
  std::vector<long> lengths(p.ants);

  for (int it = 0; it < p.iterations; ++it) {
    bool improved = false;
    for (int a = 0; a < p.ants; ++a) {
      auto rng = substream(p.seed, it, a);
      std::uniform_real_distribution<double> uni(0.0, 1.0);
      std::vector<int>& order = tours[a];
      order.assign(1, 0);
      std::vector<bool> seen(n, false);
      seen[0] = true;
      int cur = 0;
      std::vector<double> w(n);
      for (int step = 1; step < n; ++step) {
        double total = 0.0;
        for (int c = 0; c < n; ++c) {
          if (seen[c]) {
            w[c] = 0.0;
            continue;
          }
          w[c] = std::pow(tau[static_cast<size_t>(cur) * n + c], p.alpha) *
                 std::pow(eta[static_cast<size_t>(cur) * n + c], p.beta);
          total += w[c];
        }
        int pick = -1;
        double r = uni(rng) * total;
        for (int c = 0; c < n; ++c) {
          if (seen[c]) continue;
          r -= w[c];
          if (r <= 0.0) {
            pick = c;
            break;
          }
        }
        if (pick < 0)  // numeric tail: fall back to last unvisited
          for (int c = n - 1; c >= 0; --c)
            if (!seen[c]) {
              pick = c;
              break;
            }
        seen[pick] = true;
        order.push_back(pick);
        cur = pick;
      }
      lengths[a] = evaluate(order, m);
      ++res.evaluations;
      if (lengths[a] < best) {
        best = lengths[a];
        best_order = order;
        improved = true;
      }
    }

    for (double& t : tau) t *= (1.0 - p.rho);
    for (int a = 0; a < p.ants; ++a) {
      const double deposit = p.deposit_q / static_cast<double>(lengths[a]);
      const auto& order = tours[a];
      for (int i = 0; i < n; ++i)
        tau[static_cast<size_t>(order[i]) * n + order[(i + 1) % n]] += deposit;
    }

    stagnant = improved ? 0 : stagnant + 1;
    if (stagnant >= p.stagnation_k) break;
  }

  res.tour = Tour{best_order, best};
  return res;
}

std::vector<int> repair_tour(std::vector<int> order, int n, int depot) {
  std::vector<bool> seen(n, false);
  std::vector<int> out;
  out.reserve(n);
  out.push_back(depot);
  seen[depot] = true;
  for (int c : order) {
    if (c < 0 || c >= n || seen[c]) continue;
    seen[c] = true;
    out.push_back(c);
  }
  for (int c = 0; c < n; ++c)
    if (!seen[c]) out.push_back(c);
  return out;
}

namespace {

// Deterministic edge-recombination crossover: neighbors pooled from both
// parents' cycles; always extend to the unvisited neighbor with the smallest
// remaining neighborhood, lowest index on ties.
std::vector<int> edge_recombination(const std::vector<int>& p1,
                                    const std::vector<int>& p2, int n) {
  std::vector<std::set<int>> adj(n);
  auto add_cycle = [&](const std::vector<int>& t) {
    for (int i = 0; i < n; ++i) {
      int a = t[i], b = t[(i + 1) % n];
      adj[a].insert(b);
      adj[b].insert(a);
    }
  };
  add_cycle(p1);
  add_cycle(p2);

  std::vector<bool> seen(n, false);
  std::vector<int> child{0};
  seen[0] = true;
  int cur = 0;
  while (static_cast<int>(child.size()) < n) {
    for (auto& s : adj) s.erase(cur);
    int next = -1;
    size_t best_deg = 0;
    for (int c : adj[cur]) {
      if (seen[c]) continue;
      if (next < 0 || adj[c].size() < best_deg ||
          (adj[c].size() == best_deg && c < next)) {
        next = c;
        best_deg = adj[c].size();
      }
    }
    if (next < 0)
      for (int c = 0; c < n; ++c)
        if (!seen[c]) {
          next = c;
          break;
        }
    seen[next] = true;
    child.push_back(next);
    cur = next;
  }
  return child;
}

// First-improvement 2-opt, repeated to a local optimum. Depot stays fixed.
void two_opt(std::vector<int>& order, const DistanceMatrix& m, long& evals) {
  const int n = static_cast<int>(order.size());
  bool improved = true;
  long len = evaluate(order, m);
  ++evals;
  while (improved) {
    improved = false;
    for (int i = 1; i < n - 1 && !improved; ++i) {
      for (int j = i + 1; j < n && !improved; ++j) {
        std::vector<int> cand = order;
        std::reverse(cand.begin() + i, cand.begin() + j + 1);
        long cl = evaluate(cand, m);
        ++evals;
        if (cl < len) {
          order = std::move(cand);
          len = cl;
          improved = true;
        }
      }
    }
  }
}

}  // namespace

SolveResult ga(const DistanceMatrix& m, const GaParams& p) {
  if (p.population < 2 || p.population % 2 != 0)
    throw std::invalid_argument("ga: population must be even and >= 2");
  if (p.generations < 1) throw std::invalid_argument("ga: generations must be >= 1");
  const int n = m.n;
  std::mt19937 rng(p.seed);
  SolveResult res;

  std::vector<std::vector<int>> pop(p.population);
  std::vector<long> len(p.population);
  for (int i = 0; i < p.population; ++i) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin() + 1, order.end(), rng);
    pop[i] = std::move(order);
    len[i] = evaluate(pop[i], m);
    ++res.evaluations;
  }

  auto best_index = [&]() {
    int b = 0;
    for (int i = 1; i < p.population; ++i)
      if (len[i] < len[b]) b = i;
    return b;
  };

  std::uniform_int_distribution<int> pick(0, p.population - 1);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  auto tournament = [&]() {
    int winner = pick(rng);
    for (int t = 1; t < p.tournament_size; ++t) {
      int c = pick(rng);
      if (len[c] < len[winner]) winner = c;
    }
    return winner;
  };

  for (int gen = 0; gen < p.generations; ++gen) {
    int elite = best_index();
    std::vector<std::vector<int>> next;
    std::vector<long> next_len;
    next.reserve(p.population);
    next.push_back(pop[elite]);
    next_len.push_back(len[elite]);
    while (static_cast<int>(next.size()) < p.population) {
      const auto& p1 = pop[tournament()];
      const auto& p2 = pop[tournament()];
      std::vector<int> child = repair_tour(edge_recombination(p1, p2, n), n);
      if (uni(rng) < p.mutation_rate) two_opt(child, m, res.evaluations);
      long cl = evaluate(child, m);
      ++res.evaluations;
      next.push_back(std::move(child));
      next_len.push_back(cl);
    }
    pop = std::move(next);
    len = std::move(next_len);
  }

  int b = best_index();
  res.tour = Tour{pop[b], len[b]};
  return res;
}

SolveResult sa(const DistanceMatrix& m, const SaParams& p) {
  if (p.cooling <= 0.0 || p.cooling >= 1.0)
    throw std::invalid_argument("sa: cooling out of (0,1)");
  if (p.t_min <= 0.0) throw std::invalid_argument("sa: t_min must be positive");
  const int n = m.n;
  std::mt19937 rng(p.seed);
  SolveResult res;

  double t = p.t0;
  if (t <= 0.0) {
    long sum = 0;
    int cnt = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) {
          sum += m.at(i, j);
          ++cnt;
        }
    t = 10.0 * static_cast<double>(sum) / cnt;
  }

  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  std::shuffle(cur.begin() + 1, cur.end(), rng);
  long cur_len = evaluate(cur, m);
  ++res.evaluations;
  Tour best{cur, cur_len};

  std::uniform_int_distribution<int> pos(1, n - 1);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  while (t >= p.t_min) {
    int i = pos(rng), j = pos(rng);
    if (i > j) std::swap(i, j);
    if (i != j) {
      std::vector<int> cand = cur;
      std::reverse(cand.begin() + i, cand.begin() + j + 1);
      long cl = evaluate(cand, m);
      ++res.evaluations;
      long delta = cl - cur_len;
      if (delta <= 0 || uni(rng) < std::exp(-static_cast<double>(delta) / t)) {
        cur = std::move(cand);
        cur_len = cl;
        if (cur_len < best.length) best = Tour{cur, cur_len};
      }
    }
    t *= p.cooling;
  }
  res.tour = best;
  return res;
}

Algorithm select_algorithm(int n) {
  if (n <= 8) return Algorithm::brute_force;
  if (n <= 15) return Algorithm::held_karp;
  return Algorithm::aco;
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::brute_force: return "brute";
    case Algorithm::held_karp: return "hk";
    case Algorithm::nearest_neighbor: return "nn";
    case Algorithm::aco: return "aco";
    case Algorithm::ga: return "ga";
    case Algorithm::sa: return "sa";
  }
  return "brute";
}

}  // namespace maci::tsp
