#pragma once

#include <map>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "rigcon/partition.hpp"
#include "rigcon/qpoly.hpp"
#include "rigcon/rigged.hpp"

namespace rigcon {

/// Irreducible characters of S_n. Rows and columns share the index order of
/// partitions_of(n).
struct CharacterTable {
  int n = 0;
  std::vector<Partition> partitions;
  std::vector<std::vector<long>> chi;  // chi[lambda][rho]
  std::vector<mpz_class> class_sizes;  // n! / z_rho

  std::size_t index(const Partition& p) const;
  long at(const Partition& lambda, const Partition& rho) const { return chi[index(lambda)][index(rho)]; }
};

inline constexpr int kDefaultCharacterCap = 10;

/// Murnaghan-Nakayama; built once per n and shared. Throws CapExceeded for n > cap.
std::shared_ptr<const CharacterTable> character_table(int n, int cap = kDefaultCharacterCap);

/// z_rho = prod_i i^{m_i} m_i!
mpz_class z_factor(const Partition& rho);

/// Nonzero g_{alpha beta gamma}, gamma |- n. Throws SizeMismatch, NonIntegral.
std::map<Partition, mpz_class> kronecker_coefficients(const Partition& alpha, const Partition& beta);

/// s_alpha * s_beta (q, q^2, ..., q^{N-1}) from the class sum; N >= 2.
QPolynomial principal_specialization_character(const Partition& alpha, const Partition& beta, int N);

/// (alpha_1+beta_1, ..., alpha_r+beta_1, beta_1^{N-r-s}, beta_1-beta_s, ..., beta_1-beta_2);
/// throws TooSmallN unless r + s < N.
Partition bracket_partition(const Partition& alpha, const Partition& beta, int N);

struct InternalFactor {
  int k;
  int j;
  long vacancy;
  int multiplicity;
  long augment;  // N(k-1) for j = beta_1 and 2 <= k <= r, else 0
};

struct InternalContribution {
  Configuration config;
  long charge;
  std::vector<InternalFactor> factors;  // every (k, j) with multiplicity + augment > 0
  QPolynomial term;
};

struct InternalResult {
  Partition lambda;  // [alpha, beta]_N
  QPolynomial polynomial;
  std::vector<InternalContribution> contributions;
};

/// Sum over admissible configurations of type ([alpha,beta]_N, (beta_1)^N) of
/// q^charge prod [P + m + augment choose P]_q.
InternalResult internal_fermionic(const Partition& alpha, const Partition& beta, int N);

/// 2 c + sum P_j^(k) (m_j^(k) + augment) = N |alpha| for every configuration.
bool symmetry_center_identity(const Partition& alpha, const Partition& beta, int N);

/// lambda_N = (rN - beta'_k, ..., rN - beta'_1, alpha') and N rectangles r^k.
/// Throws InvalidInput unless alpha_1 <= r, beta_1 <= k and alpha_1 + beta_1 <= Nr.
std::pair<Partition, RectangleSequence> dual_form_type(const Partition& alpha, const Partition& beta, int r,
                                                       int k, int N);

/// K_{lambda_N, R_N}(q) equals the character-side specialization up to a power of q.
bool verify_dual_form(const Partition& alpha, const Partition& beta, int r, int k, int N);

struct StableLimit {
  int N = 0;  // first N at which the prefix was seen to repeat
  int min_degree = 0;
  std::vector<mpz_class> prefix;
  // prefix times H_alpha(q) = prod over cells of (1 - q^hook), truncated to depth
  std::vector<mpz_class> hook_scaled;
};

/// Raises N from r + s + 1 until the leading `depth` coefficients of the
/// fermionic sum (and its minimal degree) agree for three consecutive N.
/// Throws NoStabilization past n_max.
StableLimit stable_limit(const Partition& alpha, const Partition& beta, int depth, int n_max = 30);

/// L^mu = sum_gamma g_{alpha beta gamma} K_{gamma mu}(q), nonzero entries only.
std::map<Partition, QPolynomial> liskova(const Partition& alpha, const Partition& beta);

}  // namespace rigcon
