#pragma once

#include <vector>

#include <gmpxx.h>

#include "rigcon/partition.hpp"

namespace rigcon {

/// Integer Gelfand-Tsetlin patterns with top row lambda (padded to the length
/// n of mu) whose row j sums to mu_1 + ... + mu_j. Equals the Kostka number.
/// Throws SizeMismatch if |lambda| != |mu|; zero if lambda has more than n parts.
mpz_class count_gt_points(const Partition& lambda, const std::vector<int>& mu);

/// count_gt_points(N lambda, N mu) for N = 0 .. n_max.
std::vector<mpz_class> stretched_gt_series(const Partition& lambda, const std::vector<int>& mu, int n_max);

}  // namespace rigcon
