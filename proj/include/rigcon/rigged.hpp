#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rigcon/partition.hpp"
#include "rigcon/qpoly.hpp"

namespace rigcon {

/// The pair (lambda, R) together with the data every configuration of that
/// type shares: mandated level sizes and the rectangle source terms.
class ConfigurationType {
 public:
  /// Throws SizeMismatch if |lambda| != |R| and NegativeLevel if some
  /// mandated level size is negative.
  ConfigurationType(Partition lambda, RectangleSequence rects);

  static std::shared_ptr<const ConfigurationType> make(Partition lambda, RectangleSequence rects) {
    return std::make_shared<const ConfigurationType>(std::move(lambda), std::move(rects));
  }

  const Partition& lambda() const noexcept { return lambda_; }
  const RectangleSequence& rects() const noexcept { return rects_; }

  /// |nu^(k)| for k = 1..levels(), with trailing zero levels dropped.
  const std::vector<int>& sizes() const noexcept { return sizes_; }
  int levels() const noexcept { return static_cast<int>(sizes_.size()); }
  int size_at(int k) const noexcept {
    return (k >= 1 && k <= levels()) ? sizes_[static_cast<std::size_t>(k - 1)] : 0;
  }

  /// sum_a min(mu_a, j) [eta_a == k]
  int source(int k, int j) const noexcept;
  /// sum_a [eta_a >= k][mu_a >= j]
  int overlap(int k, int j) const noexcept;
  /// Column index past which every vacancy number is constant in j.
  int column_bound() const noexcept { return column_bound_; }

 private:
  Partition lambda_;
  RectangleSequence rects_;
  std::vector<int> sizes_;
  int column_bound_ = 1;
};

using TypePtr = std::shared_ptr<const ConfigurationType>;

/// Mandated level sizes; errors as for ConfigurationType.
std::vector<int> level_sizes(const Partition& lambda, const RectangleSequence& rects);

/// A sequence of partitions nu^(1), nu^(2), ... of the mandated sizes.
class Configuration {
 public:
  /// Throws InvalidInput if the level sizes do not match the type.
  Configuration(TypePtr type, std::vector<Partition> levels);

  const ConfigurationType& type() const noexcept { return *type_; }
  const TypePtr& type_ptr() const noexcept { return type_; }
  const std::vector<Partition>& levels() const noexcept { return levels_; }
  /// nu^(k); empty for k = 0 and beyond the last level.
  const Partition& level(int k) const noexcept;

  /// P_j^(k) with nu^(0) empty.
  long vacancy(int k, int j) const;
  /// m_j(nu^(k))
  int multiplicity(int k, int j) const { return level(k).multiplicity(j); }

  long charge() const;
  long cocharge() const;

  /// q^charge times the product of [P + m choose m]_q over (k, j) with m > 0.
  QPolynomial weight() const;
  /// The same at q = 1.
  mpz_class weight_at_one() const;

  struct Factor {
    int k;
    int j;
    long vacancy;
    int multiplicity;
  };
  /// One entry per (k, j) with m_j(nu^(k)) > 0.
  std::vector<Factor> factors() const;

  std::string to_string() const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.levels_ == b.levels_;
  }
  friend bool operator<(const Configuration& a, const Configuration& b) {
    return a.levels_ < b.levels_;
  }

 private:
  TypePtr type_;
  std::vector<Partition> levels_;
};

/// Every P_j^(k) >= 0.
bool is_admissible(const Configuration& cfg);

/// Visits every admissible configuration in a fixed depth-first order. Ticks
/// the enumeration cap once per configuration. Empty if a level size is negative.
void for_each_admissible(const TypePtr& type, const std::function<void(const Configuration&)>& visit);

/// All admissible configurations sorted lexicographically by levels.
std::vector<Configuration> enumerate_admissible(const Partition& lambda, const RectangleSequence& rects);
std::vector<Configuration> enumerate_admissible(const TypePtr& type);

inline long charge(const Configuration& cfg) { return cfg.charge(); }
inline long cocharge(const Configuration& cfg) { return cfg.cocharge(); }
inline long vacancy(const Configuration& cfg, int k, int j) { return cfg.vacancy(k, j); }

/// Integer matrix m_ij (1-based in the accessors) attached to a type.
struct ConfigMatrix {
  TypePtr type;
  std::vector<std::vector<long>> entries;  // entries[i-1][j-1]

  int rows() const { return static_cast<int>(entries.size()); }
  int cols() const { return entries.empty() ? 0 : static_cast<int>(entries.front().size()); }
  long at(int i, int j) const;

  /// Equality ignoring zero padding.
  bool same_entries(const std::vector<std::vector<long>>& other) const;
};

ConfigMatrix to_matrix(const Configuration& cfg);

/// Conditions violated by the matrix, as labels "(1)".."(4)"; empty if valid.
std::vector<std::string> matrix_violations(const ConfigMatrix& m);

/// Throws InvalidMatrix if (0)-(2) fail, or (4) fails so that the levels are
/// not partitions. Condition (3) failing yields a non-admissible configuration.
Configuration from_matrix(const ConfigMatrix& m);

long matrix_charge(const ConfigMatrix& m);

/// The matrix for type (lambda', R') with R' the dominant rearrangement of
/// the transposed rectangles.
ConfigMatrix duality_map(const ConfigMatrix& m);

/// Levels (lambda_{k+1}, lambda_{k+2}, ...) for type (lambda, unit rows of mu).
Configuration maximal_configuration(const Partition& lambda, const Partition& mu);

/// q^{c} times the product over j <= lambda_2 of the binomials attached to
/// the maximal configuration.
QPolynomial max_config_contribution(const Partition& lambda, const Partition& mu);

}  // namespace rigcon
