#pragma once

// Seeded monomial ideal corpus: up to 4 variables, up to 5 generators, total
// degree up to 6.

#include <random>
#include <vector>

#include "ivlab/ivlab.hpp"

namespace corpus {

using namespace ivlab;

struct MonomialCase {
  std::size_t nvars;
  MonomialModule ideal;
};

inline Monomial randomMonomial(std::mt19937_64& rng, std::size_t nvars, int maxDegree) {
  Monomial m(nvars, 0);
  const int deg = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(maxDegree));
  for (int i = 0; i < deg; ++i) ++m[rng() % nvars];
  return m;
}

inline std::vector<MonomialCase> monomialIdeals(std::size_t count, std::uint64_t seed, std::size_t maxVars = 4,
                                                std::size_t maxGens = 5, int maxDegree = 6) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialCase> out;
  while (out.size() < count) {
    const std::size_t nvars = 1 + rng() % maxVars;
    const std::size_t ngens = 1 + rng() % maxGens;
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < ngens; ++i) gens.push_back(randomMonomial(rng, nvars, maxDegree));
    out.push_back({nvars, MonomialModule::generated(std::move(gens))});
  }
  return out;
}

inline Ring monomialRing(std::size_t nvars) {
  static const char* names[] = {"x", "y", "z", "w", "u", "v"};
  std::vector<std::string> vs(names, names + nvars);
  return MonomialRing(vs);
}

}  // namespace corpus
