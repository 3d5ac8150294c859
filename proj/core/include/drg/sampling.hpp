#pragma once

// Seeded generators for graphical sequences, quadruples and surd
// expressions. Every returned sequence has passed the library validators.

#include <random>

#include "drg/array_model.hpp"
#include "drg/surd.hpp"

namespace drg::sampling {

long uniform(std::mt19937& rng, long lo, long hi);

// Random walk through V_{kappa,lambda}: beta never increases, gamma never
// decreases, each step changes the triple, and the walk stops at a terminal
// triple (gamma, kappa - gamma, 0). At most max_g interior triples.
GraphicalSequence random_graphical(std::mt19937& rng, long kappa, long lambda, int max_g);

// Delta holds triple 1 and a random subset of 2..g; L is random off Delta,
// ell agrees with L there and is random on Delta.
Quadruple random_quadruple(std::mt19937& rng, const GraphicalSequence& g, int max_L, int max_ell);

struct SurdSample {
  SurdExpression expr;
  Rational lo, hi;        // both quadratics are positive on [lo, hi]
  bool planted_degenerate = false;
};

// Numerators of degree <= max_degree with small integer coefficients and
// q_j = (x - r_j)^2 - d_j, d_j > 0. About one sample in eight shares q and is
// built to vanish identically.
SurdSample random_surd(std::mt19937& rng, int max_degree);

}  // namespace drg::sampling
