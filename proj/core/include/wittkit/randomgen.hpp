#pragma once

#include "wittkit/hermitian.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace wittkit {

// Bounded random instances: squarefree parts drawn from a small pool so the
// relevant place sets stay small, optionally dressed with a square.
struct GenConfig {
  std::vector<Int> pool;

  static GenConfig defaults();
  static GenConfig with_pool(std::vector<Int> pool);
};

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial);

class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi);  // inclusive
  bool coin() { return uniform(0, 1) == 1; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 eng_;
};

Rat random_rat(TrialRng& rng, const GenConfig& cfg);
DiagForm random_form(TrialRng& rng, const GenConfig& cfg, int dim);
QuaternionAlgebra random_algebra(TrialRng& rng, const GenConfig& cfg);
Quat random_pure(TrialRng& rng, const QuaternionAlgebra& alg);  // invertible
HermDiagForm random_herm(TrialRng& rng, const QuaternionAlgebra& alg, int ngens);

}  // namespace wittkit
