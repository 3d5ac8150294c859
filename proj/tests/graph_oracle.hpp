#pragma once

// Small explicit graphs and floating-point adjacency spectra, used as
// independent oracles for the exact pipeline.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <queue>
#include <string>
#include <vector>

namespace oracle {

using Graph = std::vector<std::vector<int>>;

inline void add_edge(Graph& g, int a, int b) {
  g[a].push_back(b);
  g[b].push_back(a);
}

inline Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) add_edge(g, i, j);
  return g;
}

inline Graph complete_bipartite(int n) {
  Graph g(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) add_edge(g, i, n + j);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    add_edge(g, i, (i + 1) % 5);
    add_edge(g, i, 5 + i);
    add_edge(g, 5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

inline Graph hypercube(int d) {
  Graph g(1 << d);
  for (int v = 0; v < (1 << d); ++v)
    for (int b = 0; b < d; ++b)
      if (v < (v ^ (1 << b))) add_edge(g, v, v ^ (1 << b));
  return g;
}

// Cycle 0..n-1 plus chords given by the LCF shifts, repeated around the cycle.
inline Graph lcf(const std::vector<int>& shifts, int repeats) {
  const int n = static_cast<int>(shifts.size()) * repeats;
  Graph g(n);
  for (int i = 0; i < n; ++i) add_edge(g, i, (i + 1) % n);
  for (int i = 0; i < n; ++i) {
    int j = ((i + shifts[i % shifts.size()]) % n + n) % n;
    if (i < j) add_edge(g, i, j);
  }
  return g;
}

inline Graph heawood() { return lcf({5, -5}, 7); }
inline Graph pappus() { return lcf({5, 7, -7, 7, -7, -5}, 3); }

inline std::vector<int> distances_from(const Graph& g, int s) {
  std::vector<int> d(g.size(), -1);
  std::queue<int> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g[v])
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        q.push(w);
      }
  }
  return d;
}

struct Array {
  std::vector<long> b, c;
};

// Intersection array when the graph is distance-regular.
inline std::optional<Array> intersection_array(const Graph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<std::vector<int>> dist;
  for (int v = 0; v < n; ++v) dist.push_back(distances_from(g, v));
  int D = 0;
  for (auto& row : dist)
    for (int x : row) {
      if (x < 0) return std::nullopt;
      D = std::max(D, x);
    }
  std::vector<long> b(D + 1, -1), c(D + 1, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int i = dist[x][y];
      long bi = 0, ci = 0;
      for (int z : g[y]) {
        if (dist[x][z] == i + 1) ++bi;
        if (dist[x][z] == i - 1) ++ci;
      }
      if (b[i] < 0) {
        b[i] = bi;
        c[i] = ci;
      } else if (b[i] != bi || c[i] != ci) {
        return std::nullopt;
      }
    }
  Array a;
  a.b.assign(b.begin(), b.begin() + D);
  a.c.assign(c.begin() + 1, c.end());
  return a;
}

inline std::string array_string(const Array& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.b.size(); ++i) s += (i ? "," : "") + std::to_string(a.b[i]);
  s += ";";
  for (std::size_t i = 0; i < a.c.size(); ++i) s += (i ? "," : "") + std::to_string(a.c[i]);
  return s + "}";
}

struct Eigen1 {
  double value;
  int multiplicity;
};

// Distinct adjacency eigenvalues (descending) with multiplicities, merged at
// the given tolerance.
inline std::vector<Eigen1> adjacency_spectrum(const Graph& g, double tol = 1e-7) {
  const int n = static_cast<int>(g.size());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v)
    for (int w : g[v]) A(v, w) = 1;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(ev.rbegin(), ev.rend());
  std::vector<Eigen1> out;
  for (double x : ev) {
    if (!out.empty() && std::abs(out.back().value - x) < tol)
      ++out.back().multiplicity;
    else
      out.push_back({x, 1});
  }
  return out;
}

// Eigenvalues of a general tridiagonal matrix via its symmetrization
// (off-diagonal sqrt(b_i c_{i+1})), descending.
inline std::vector<double> tridiagonal_eigenvalues(const std::vector<long>& diag, const std::vector<long>& super,
                                                   const std::vector<long>& sub) {
  const int n = static_cast<int>(diag.size());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) M(i, i) = static_cast<double>(diag[i]);
  for (int i = 0; i + 1 < n; ++i) {
    double s = std::sqrt(static_cast<double>(super[i]) * static_cast<double>(sub[i]));
    M(i, i + 1) = M(i + 1, i) = s;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

}  // namespace oracle
