#pragma once

#include <stdexcept>
#include <string>

namespace acyclic {

/// Selects between the serial reference loop and the OpenMP variant of an
/// enumeration kernel. Both produce identical results; the reductions used
/// (gcd, max, min, ordered merge) do not depend on iteration order.
enum class Exec { Serial, Parallel };

/// Thrown when an exhaustive strategy is asked to run above its size cap.
class SizeCapExceeded : public std::runtime_error {
 public:
  SizeCapExceeded(const std::string& what, int size, int cap)
      : std::runtime_error(what + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}
  int size() const { return size_; }
  int cap() const { return cap_; }

 private:
  int size_;
  int cap_;
};

/// Size cap for brute-force strategies. ACYCLIC_SPECTRA_MAX_N, when set to a
/// positive integer, replaces every default cap.
int brute_force_cap(int default_cap);

inline constexpr int kMinorEnumerationCap = 7;
inline constexpr int kCycleCoverCap = 8;
inline constexpr int kPathEnumerationCap = 14;

/// Number of OpenMP threads available (1 when built without OpenMP).
int parallel_threads();

}  // namespace acyclic
