#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace rigcon {

/// Integer partition stored as weakly decreasing positive parts.
///
/// Trailing zeros are stripped on construction, and every accessor treats
/// parts beyond the length as 0. Values are immutable after construction.
class Partition {
 public:
  Partition() = default;

  /// Throws NotAPartition if `parts` is not weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "4,4,3,3,2"; the empty string and "0" give the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  /// i-th part, 1-based; 0 beyond the length.
  int part(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  /// Length of the j-th column (lambda'_j), 1-based.
  int column(int j) const noexcept;
  /// Number of parts equal to j.
  int multiplicity(int j) const noexcept;
  /// Q_j: number of cells in the first j columns.
  int column_sum(int j) const noexcept;

  Partition conjugate() const;
  Partition scaled(int factor) const;
  long n_stat() const noexcept;

  /// Dominance order: every partial row sum of *this is >= that of other.
  bool dominates(const Partition& other) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

inline Partition conjugate(const Partition& p) { return p.conjugate(); }
inline int column_sum(const Partition& p, int j) { return p.column_sum(j); }
inline long n_stat(const Partition& p) { return p.n_stat(); }

/// Number of standard Young tableaux of shape p (hook-length formula).
mpz_class syt_count(const Partition& p);

/// (p_1, q_1, p_2, q_2, ...); throws NotAPartition if not weakly decreasing.
Partition interleave(const Partition& p, const Partition& q);

/// All partitions of n in lexicographically decreasing order, optionally
/// bounded by the largest part and the number of parts.
std::vector<Partition> partitions_of(int n, int max_part = -1, int max_length = -1);

struct Rect {
  int width = 0;   // mu_a
  int height = 0;  // eta_a

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Ordered sequence of rectangles (width^height); the R of parabolic Kostka.
class RectangleSequence {
 public:
  RectangleSequence() = default;
  explicit RectangleSequence(std::vector<Rect> rects);

  /// Parses "2^3,2^2,2^2,1,1"; "^1" may be omitted.
  static RectangleSequence parse(std::string_view text);
  /// One row rectangle (mu_i^1) per part of mu.
  static RectangleSequence unit_rows(const Partition& mu);

  const std::vector<Rect>& rects() const noexcept { return rects_; }
  std::size_t count() const noexcept { return rects_.size(); }
  bool empty() const noexcept { return rects_.empty(); }

  int size() const noexcept;
  int max_width() const noexcept;
  int max_height() const noexcept;

  /// Sum over pairs a<b of min(width) * min(height).
  long n_of_rectangles() const noexcept;
  RectangleSequence dominant_rearrangement() const;
  bool is_dominant() const noexcept;
  /// Rectangles (height^width): the R' of the duality theorem, unsorted.
  RectangleSequence transposed() const;
  /// Widths multiplied by factor (the NR of stretched Kostka).
  RectangleSequence scaled(int factor) const;

  std::string to_string() const;

  friend bool operator==(const RectangleSequence&, const RectangleSequence&) = default;

 private:
  std::vector<Rect> rects_;
};

inline long n_of_rectangles(const RectangleSequence& r) { return r.n_of_rectangles(); }
inline RectangleSequence dominant_rearrangement(const RectangleSequence& r) {
  return r.dominant_rearrangement();
}

/// Every dominant rectangle sequence of total size n with at most max_count rectangles.
std::vector<RectangleSequence> dominant_sequences(int n, int max_count);

}  // namespace rigcon
