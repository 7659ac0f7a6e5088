#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rigcon/partition.hpp"
#include "rigcon/qpoly.hpp"
#include "rigcon/rigged.hpp"

namespace rigcon {

struct Contribution {
  Configuration config;
  long charge;
  std::vector<Configuration::Factor> factors;  // [vacancy + m choose m]_q each
  QPolynomial term;
};

struct KostkaResult {
  QPolynomial polynomial;
  std::vector<Contribution> contributions;  // empty unless requested
  std::vector<std::string> warnings;
};

/// Sum over admissible configurations of q^charge times the q-binomials.
/// Non-dominant R is evaluated as given and flagged in warnings.
KostkaResult parabolic_kostka(const Partition& lambda, const RectangleSequence& rects,
                              bool keep_contributions = true);

/// The same sum at q = 1, without expanding polynomials.
mpz_class parabolic_kostka_at_one(const Partition& lambda, const RectangleSequence& rects);

/// R = one row per part of mu.
KostkaResult kostka_foulkes(const Partition& lambda, const Partition& mu, bool keep_contributions = true);

/// Compares K_{lambda,R}(q) with q^{n(R)} K_{lambda',R'}(q^{-1}).
bool verify_duality(const Partition& lambda, const RectangleSequence& rects);

/// (a, b) with K = b q^a + higher terms. Throws ZeroKostka if K = 0.
std::pair<int, mpz_class> min_degree_and_leading(const Partition& lambda, const RectangleSequence& rects);

/// c^nu_{lambda,mu}: the multiplicity of s_nu in s_lambda s_mu. Solved from
/// skew Kostka numbers of nu/lambda against the unitriangular Kostka matrix.
/// Throws SizeMismatch unless |lambda| + |mu| = |nu|.
mpz_class lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Partitions Lambda > M with Lambda/M the rectangles of R placed disjointly,
/// the first at the top right and each next one below and to the left.
std::pair<Partition, Partition> lr_realization(const RectangleSequence& rects);

/// Lambda = (N + lambda_1, ..., N + lambda_N, mu_1, mu_2, ...) and M the dominant
/// rearrangement of an N x N square together with the rows of nu. Requires
/// N >= max(length(lambda), mu_1); throws TooSmallN otherwise.
std::pair<Partition, RectangleSequence> lr_embedding(int N, const Partition& lambda, const Partition& mu,
                                                     const Partition& nu);

}  // namespace rigcon
