#include "wittkit/randomgen.hpp"

#include <stdexcept>

namespace wittkit {

GenConfig GenConfig::defaults() {
  return with_pool({Int(1), Int(-1), Int(2), Int(-2), Int(3), Int(-3), Int(5), Int(-5), Int(7),
                    Int(-7), Int(10), Int(-10), Int(15), Int(-15)});
}

GenConfig GenConfig::with_pool(std::vector<Int> pool) {
  if (pool.empty()) throw std::domain_error("GenConfig: empty pool");
  for (const auto& p : pool) {
    if (p == 0) throw std::domain_error("GenConfig: zero in pool");
  }
  GenConfig cfg;
  cfg.pool = std::move(pool);
  return cfg;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial) {
  // splitmix64 over master + trial offset
  std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int TrialRng::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(eng_);
}

Rat random_rat(TrialRng& rng, const GenConfig& cfg) {
  Rat base(rng.pick(cfg.pool));
  int m = rng.uniform(1, 3);
  int n = rng.uniform(1, 3);
  Rat sq(m, n);
  return base * sq * sq;
}

DiagForm random_form(TrialRng& rng, const GenConfig& cfg, int dim) {
  std::vector<Rat> entries;
  entries.reserve(dim);
  for (int i = 0; i < dim; ++i) entries.push_back(random_rat(rng, cfg));
  return DiagForm(std::move(entries));
}

QuaternionAlgebra random_algebra(TrialRng& rng, const GenConfig& cfg) {
  return QuaternionAlgebra(Rat(rng.pick(cfg.pool)), Rat(rng.pick(cfg.pool)));
}

Quat random_pure(TrialRng& rng, const QuaternionAlgebra& alg) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    Quat z = Quat::pure(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
    if (!(z.c[1] == 0 && z.c[2] == 0 && z.c[3] == 0) && alg.nrd(z) != 0) return z;
  }
  throw std::logic_error("random_pure: no invertible pure quaternion found");
}

HermDiagForm random_herm(TrialRng& rng, const QuaternionAlgebra& alg, int ngens) {
  std::vector<Quat> gens;
  gens.reserve(ngens);
  for (int i = 0; i < ngens; ++i) gens.push_back(random_pure(rng, alg));
  return HermDiagForm(alg, std::move(gens));
}

}  // namespace wittkit
