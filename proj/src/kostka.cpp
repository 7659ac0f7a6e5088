#include "rigcon/kostka.hpp"

#include <map>

#include "rigcon/error.hpp"
#include "rigcon/tableaux.hpp"

namespace rigcon {

namespace {

void check_sizes(const Partition& lambda, const RectangleSequence& rects) {
  if (lambda.size() != rects.size()) {
    throw Error(ErrorKind::SizeMismatch, "|lambda| = " + std::to_string(lambda.size()) +
                                             " but |R| = " + std::to_string(rects.size()));
  }
}

// Empty if some mandated level size is negative: then K = 0.
std::optional<TypePtr> make_type(const Partition& lambda, const RectangleSequence& rects) {
  check_sizes(lambda, rects);
  try {
    return ConfigurationType::make(lambda, rects);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NegativeLevel) return std::nullopt;
    throw;
  }
}

}  // namespace

KostkaResult parabolic_kostka(const Partition& lambda, const RectangleSequence& rects, bool keep_contributions) {
  KostkaResult result;
  if (!rects.is_dominant()) {
    result.warnings.push_back("R = " + rects.to_string() + " is not dominant");
  }
  auto type = make_type(lambda, rects);
  if (!type) return result;
  for_each_admissible(*type, [&](const Configuration& cfg) {
    QPolynomial term = cfg.weight();
    result.polynomial += term;
    if (keep_contributions) {
      result.contributions.push_back({cfg, cfg.charge(), cfg.factors(), std::move(term)});
    }
  });
  if (keep_contributions) {
    std::sort(result.contributions.begin(), result.contributions.end(),
              [](const Contribution& a, const Contribution& b) { return a.config < b.config; });
  }
  return result;
}

mpz_class parabolic_kostka_at_one(const Partition& lambda, const RectangleSequence& rects) {
  mpz_class total = 0;
  auto type = make_type(lambda, rects);
  if (!type) return total;
  for_each_admissible(*type, [&](const Configuration& cfg) { total += cfg.weight_at_one(); });
  return total;
}

KostkaResult kostka_foulkes(const Partition& lambda, const Partition& mu, bool keep_contributions) {
  return parabolic_kostka(lambda, RectangleSequence::unit_rows(mu), keep_contributions);
}

bool verify_duality(const Partition& lambda, const RectangleSequence& rects) {
  QPolynomial left = parabolic_kostka(lambda, rects, false).polynomial;
  RectangleSequence dual = rects.transposed().dominant_rearrangement();
  QPolynomial right = parabolic_kostka(lambda.conjugate(), dual, false).polynomial;
  return left == right.reflected(static_cast<int>(rects.n_of_rectangles()));
}

std::pair<int, mpz_class> min_degree_and_leading(const Partition& lambda, const RectangleSequence& rects) {
  QPolynomial k = parabolic_kostka(lambda, rects, false).polynomial;
  if (k.is_zero()) {
    throw Error(ErrorKind::ZeroKostka, "no admissible configuration of type (" + lambda.to_string() + "; " +
                                           rects.to_string() + ")");
  }
  return {k.min_degree(), k.coeff(k.min_degree())};
}

mpz_class lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) {
    throw Error(ErrorKind::SizeMismatch, "|lambda| + |mu| != |nu|");
  }
  // skew_kostka(nu/lambda, rho) = sum_kappa c^nu_{lambda,kappa} K_{kappa,rho};
  // K is unitriangular for dominance, and partitions_of lists a linear extension
  std::vector<Partition> above;
  for (const auto& p : partitions_of(mu.size())) {
    if (p.dominates(mu)) above.push_back(p);
  }
  std::vector<mpz_class> c(above.size());
  for (std::size_t r = 0; r < above.size(); ++r) {
    mpz_class value = skew_kostka(nu, lambda, above[r].parts());
    for (std::size_t k = 0; k < r; ++k) {
      if (c[k] != 0) value -= c[k] * skew_kostka(above[k], {}, above[r].parts());
    }
    c[r] = value;
  }
  return c.back();
}

std::pair<Partition, Partition> lr_realization(const RectangleSequence& rects) {
  std::vector<int> outer;
  std::vector<int> inner;
  const auto& rs = rects.rects();
  for (std::size_t a = 0; a < rs.size(); ++a) {
    int after = 0;
    for (std::size_t b = a + 1; b < rs.size(); ++b) after += rs[b].width;
    for (int h = 0; h < rs[a].height; ++h) {
      outer.push_back(after + rs[a].width);
      inner.push_back(after);
    }
  }
  return {Partition(std::move(outer)), Partition(std::move(inner))};
}

std::pair<Partition, RectangleSequence> lr_embedding(int N, const Partition& lambda, const Partition& mu,
                                                     const Partition& nu) {
  if (N < lambda.length() || N < mu.largest() || N < 1) {
    throw Error(ErrorKind::TooSmallN, "need N >= max(length(lambda), mu_1), got N = " + std::to_string(N));
  }
  std::vector<int> big;
  for (int i = 1; i <= N; ++i) big.push_back(N + lambda.part(i));
  for (int p : mu.parts()) big.push_back(p);
  std::vector<Rect> rects{{N, N}};
  for (int p : nu.parts()) rects.push_back({p, 1});
  return {Partition(std::move(big)), RectangleSequence(std::move(rects)).dominant_rearrangement()};
}

}  // namespace rigcon
