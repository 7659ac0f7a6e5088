#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rigcon {

enum class ErrorKind {
  NotAPartition,
  SizeMismatch,
  NegativeLevel,
  InvalidMatrix,
  ZeroPolynomial,
  FitFailure,
  RangeError,
  EnumerationCapExceeded,
  ContentNotPartition,
  ShapeNotContained,
  CapExceeded,
  NonIntegral,
  TooSmallN,
  UnsupportedN,
  ZeroKostka,
  NoStabilization,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Process-wide bound on the number of objects any enumerator may produce
// before failing with EnumerationCapExceeded. Never truncates silently.
std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Counts produced objects against a cap and throws once it is exceeded.
class CapCounter {
 public:
  explicit CapCounter(std::uint64_t cap = enumeration_cap()) : cap_(cap) {}

  void tick(std::string_view what) {
    if (++count_ > cap_) {
      throw Error(ErrorKind::EnumerationCapExceeded,
                  std::string(what) + " exceeded cap of " + std::to_string(cap_));
    }
  }

  std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t cap_;
  std::uint64_t count_ = 0;
};

}  // namespace rigcon
