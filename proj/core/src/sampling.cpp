#include "drg/sampling.hpp"

#include <algorithm>

namespace drg::sampling {

long uniform(std::mt19937& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

GraphicalSequence random_graphical(std::mt19937& rng, long kappa, long lambda, int max_g) {
  for (;;) {
    GraphicalSequence g;
    g.kappa = kappa;
    g.lambda = lambda;
    g.triples.push_back({1, lambda, kappa - lambda - 1});
    while (static_cast<int>(g.triples.size()) < max_g && uniform(rng, 0, 3) != 0) {
      const Triple& p = g.triples.back();
      std::vector<Triple> options;
      for (long beta = 1; beta <= p.beta; ++beta) {
        for (long gamma = p.gamma; gamma + beta <= kappa; ++gamma) {
          const long alpha = kappa - beta - gamma;
          if (alpha < lambda + 1 - beta || alpha < lambda + 1 - gamma) continue;
          const Triple t{gamma, alpha, beta};
          if (std::find(g.triples.begin(), g.triples.end(), t) == g.triples.end()) options.push_back(t);
        }
      }
      if (options.empty()) break;
      g.triples.push_back(options[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(options.size()) - 1))]);
    }
    const long gamma = uniform(rng, g.triples.back().gamma, kappa);
    g.triples.push_back({gamma, kappa - gamma, 0});
    try {
      validate_graphical(g);
      return g;
    } catch (const InvalidSequence&) {
    }
  }
}

Quadruple random_quadruple(std::mt19937& rng, const GraphicalSequence& g, int max_L, int max_ell) {
  for (;;) {
    Quadruple q;
    q.g = g;
    const int n = g.g();
    q.delta.push_back(1);
    for (int i = 2; i <= n; ++i) {
      if (uniform(rng, 0, 2) == 0) q.delta.push_back(i);
    }
    for (int i = 1; i <= n + 1; ++i) {
      const bool in = std::find(q.delta.begin(), q.delta.end(), i) != q.delta.end();
      const int L = i == n + 1 ? 1 : static_cast<int>(uniform(rng, 1, max_L));
      q.L.push_back(L);
      q.ell.push_back(in ? static_cast<int>(uniform(rng, 1, max_ell)) : L);
    }
    try {
      validate_quadruple(q);
      return q;
    } catch (const InvalidSequence&) {
    }
  }
}

namespace {

Poly random_poly(std::mt19937& rng, int max_degree) {
  const int d = static_cast<int>(uniform(rng, 0, max_degree));
  std::vector<Rational> c;
  for (int i = 0; i <= d; ++i) c.emplace_back(uniform(rng, -6, 6));
  return Poly(c);
}

Poly shifted_quadratic(long r, long d) { return Poly({r * r - d, -2 * r, 1}); }

}  // namespace

SurdSample random_surd(std::mt19937& rng, int max_degree) {
  SurdSample s;
  const long r1 = uniform(rng, -3, 3), d1 = uniform(rng, 1, 9);
  const long r2 = uniform(rng, -3, 3), d2 = uniform(rng, 1, 9);
  s.expr.q1 = shifted_quadratic(r1, d1);
  if (uniform(rng, 0, 7) == 0) {
    // P2 + P3 = 0 and P1 + q P4 = 0 with q1 = q2.
    s.planted_degenerate = true;
    s.expr.q2 = s.expr.q1;
    s.expr.P2 = random_poly(rng, max_degree);
    s.expr.P3 = -s.expr.P2;
    s.expr.P4 = random_poly(rng, std::max(0, max_degree - 2));
    s.expr.P1 = -(s.expr.q1 * s.expr.P4);
  } else {
    s.expr.q2 = uniform(rng, 0, 3) == 0 ? s.expr.q1 : shifted_quadratic(r2, d2);
    s.expr.P1 = random_poly(rng, max_degree);
    s.expr.P2 = random_poly(rng, max_degree);
    s.expr.P3 = random_poly(rng, max_degree);
    s.expr.P4 = random_poly(rng, max_degree);
  }
  // Past both larger roots r + sqrt(d) <= r + 3.
  s.lo = Rational(std::max(r1, r2) + 4);
  s.hi = s.lo + Rational(uniform(rng, 1, 40));
  return s;
}

}  // namespace drg::sampling
