#include "rigcon/error.hpp"

#include <atomic>

namespace rigcon {

namespace {
std::atomic<std::uint64_t> g_cap{kDefaultEnumerationCap};
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NegativeLevel: return "NegativeLevel";
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::FitFailure: return "FitFailure";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::ContentNotPartition: return "ContentNotPartition";
    case ErrorKind::ShapeNotContained: return "ShapeNotContained";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::TooSmallN: return "TooSmallN";
    case ErrorKind::UnsupportedN: return "UnsupportedN";
    case ErrorKind::ZeroKostka: return "ZeroKostka";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

std::uint64_t enumeration_cap() { return g_cap.load(std::memory_order_relaxed); }

void set_enumeration_cap(std::uint64_t cap) { g_cap.store(cap, std::memory_order_relaxed); }

}  // namespace rigcon
