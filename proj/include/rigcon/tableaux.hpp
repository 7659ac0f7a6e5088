#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "rigcon/partition.hpp"

namespace rigcon {

/// Semistandard tableau stored row by row (English notation).
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  /// content[i] = number of entries equal to i + 1
  std::vector<int> content() const;
  /// Rows read left to right, from the bottom row up.
  std::vector<int> reading_word() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// All semistandard tableaux of the given shape and content (a composition).
/// Throws SizeMismatch if the sizes differ; ticks the enumeration cap.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const std::vector<int>& content);

/// Lascoux-Schutzenberger charge of a word whose content is a partition.
/// Throws ContentNotPartition otherwise.
long word_charge(const std::vector<int>& word);

/// Charge of the reading word of t.
long charge_statistic(const Tableau& t);

struct LatticeWord {
  std::vector<int> letters;
  int maj = 0;  // sum of i with a_i > a_{i+1}, positions 1-based
  int des = 0;  // number of such i
};

/// Every lattice word of the given weight (every prefix has at least as many
/// j as j+1), in lexicographic order.
std::vector<LatticeWord> lattice_words(const Partition& weight);

/// Paths from 0 to (n,...,n) in Z^d with unit steps staying in
/// x_1 <= x_2 <= ... <= x_d, counted by the number of ascents X_k X_l, k < l.
std::map<int, mpz_class> lattice_paths_asc(int d, int n);

/// Number of semistandard fillings of outer/inner with the given content,
/// counted as chains of horizontal strips. Zero if inner is not inside outer.
mpz_class skew_kostka(const Partition& outer, const Partition& inner, const std::vector<int>& content);

/// LR fillings of outer/inner with the given content whose reverse reading
/// word is a lattice word. Throws ShapeNotContained if inner is not inside outer.
mpz_class count_lr_tableaux(const Partition& outer, const Partition& inner, const Partition& content);

}  // namespace rigcon
