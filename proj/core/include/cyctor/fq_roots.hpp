#pragma once
#include <random>
#include <vector>

#include "cyctor/fq.hpp"

namespace cyctor {

struct FqRoot {
  FqElem value;
  int multiplicity;
};

// Squarefree decomposition in characteristic q (Yun's algorithm with the
// p-th-power branch): returns pairwise coprime squarefree monic g_i with
// multiplicity m_i such that f = lc * prod g_i^{m_i}.
std::vector<std::pair<FqPoly, int>> squarefree_decomposition(const FqPoly& f);

// All roots of f in its coefficient field, with multiplicities, sorted by
// coordinate vector so output is independent of the RNG path.
// Pipeline: squarefree decomposition, gcd with x^Q - x, seeded equal-degree
// splitting down to linear factors.
std::vector<FqRoot> roots_in_finite_field(const FqPoly& f, std::mt19937_64& rng);

}  // namespace cyctor
