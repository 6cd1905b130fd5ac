#pragma once

#include <cstdint>

// Bulk verification kernels. Each comes as an OpenMP version and a serial
// reference; both return identical tallies for identical inputs.
namespace cryst::bulk {

/// Every non-identity p in S_n: torsion_witness(p) exists iff order(p) is
/// odd, and a witness lifts to an element of order exactly order(p).
struct DichotomyTally {
  std::uint64_t checked = 0;
  std::uint64_t odd = 0;
  std::uint64_t witnessed = 0;
  std::uint64_t failures = 0;
  friend bool operator==(const DichotomyTally&, const DichotomyTally&) = default;
};
DichotomyTally torsion_dichotomy_serial(int n);
DichotomyTally torsion_dichotomy_parallel(int n);

/// Random pairs of finite-order elements: the verdict is Yes exactly when the
/// cycle types agree, and every witness conjugates g onto h.
struct ConjugacyTally {
  std::uint64_t pairs = 0;
  std::uint64_t conjugate = 0;
  std::uint64_t verified = 0;
  std::uint64_t failures = 0;
  friend bool operator==(const ConjugacyTally&, const ConjugacyTally&) = default;
};
ConjugacyTally conjugacy_sampling_serial(int n, std::uint64_t pairs, std::uint64_t seed);
ConjugacyTally conjugacy_sampling_parallel(int n, std::uint64_t pairs, std::uint64_t seed);

/// Random members N of the Frobenius family (parameters in [-3,3]^6): the
/// witness certifies and the standardization chain reaches <x, v0>.
struct FrobeniusTally {
  std::uint64_t samples = 0;
  std::uint64_t certified = 0;
  std::uint64_t standardized = 0;
  std::uint64_t failures = 0;
  friend bool operator==(const FrobeniusTally&, const FrobeniusTally&) = default;
};
FrobeniusTally frobenius_sampling_serial(std::uint64_t samples, std::uint64_t seed);
FrobeniusTally frobenius_sampling_parallel(std::uint64_t samples, std::uint64_t seed);

}  // namespace cryst::bulk
