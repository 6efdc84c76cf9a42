#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "cyctor/numfield.hpp"

namespace cyctor {

struct RootsConfig {
  // first rational-reconstruction attempt happens once q^e exceeds 2^first_bits
  int first_bits = 128;
  // lifting gives up once q^e exceeds 2^hensel_max_bits; surviving unverified
  // candidates are reported as undecided, never silently dropped
  int hensel_max_bits = 4096;
  // auxiliary-prime search range (min lets callers force a fresh prime)
  std::uint64_t aux_prime_min = 2;
  std::uint64_t aux_prime_cap = 1000000;
  // drives the randomized equal-degree splitting in the residue field only;
  // the returned roots are independent of it
  std::uint64_t seed = 0;
};

// A residue-field root that Newton-lifted fine but never produced a verified
// element of the number field before the precision cap. Such a candidate is a
// root over the q-adic completion; whether it comes from a global root is
// unresolved at this precision (for an actual global root of moderate height
// it would have reconstructed long before the cap).
struct UndecidedCandidate {
  std::vector<std::uint64_t> residue_coords;
  int reached_bits;
};

struct RootsReport {
  std::vector<FieldElement> roots;  // verified exactly, sorted by coords
  std::vector<UndecidedCandidate> undecided;
  std::uint64_t aux_prime = 0;
  int residue_root_count = 0;  // roots of the squarefree part mod aux_prime
};

// Roots of f that lie in the coefficient field K. Pipeline: squarefree part
// over K, clear denominators, pick an auxiliary prime q inert in K with good
// squarefree reduction, find residue-field roots, Newton-lift each with
// precision doubling, rational-reconstruct coordinates, verify exactly in K.
RootsReport roots_in_field_report(const KPoly& f, const RootsConfig& cfg = {});
RootsReport roots_in_field_report(const Polynomial<mpq_class>& f,
                                  const FieldPtr& K, const RootsConfig& cfg = {});

// verified roots only; consult the report variant for undecided candidates
std::vector<FieldElement> roots_in_field(const KPoly& f,
                                         const RootsConfig& cfg = {});
std::vector<FieldElement> roots_in_field(const Polynomial<mpq_class>& f,
                                         const FieldPtr& K,
                                         const RootsConfig& cfg = {});

// Square root of beta in its own field, if one exists: the coordinate-wise
// lexicographically largest verified root of x^2 - beta.
std::optional<FieldElement> is_square(const FieldElement& beta,
                                      const RootsConfig& cfg = {});

// roots_in_field plus cross-prime screening: the number of roots in K never
// exceeds the number of residue-field roots at any usable auxiliary prime, so
// once some prime's residue count matches the verified roots, the remaining
// candidates are provably non-global and the list is complete. Probing is
// interleaved with the precision ladder, so easy certificates are found before
// any expensive high-precision lifting.
struct CertifiedRoots {
  std::vector<FieldElement> roots;
  bool certified = false;  // the root list is provably complete
  std::vector<UndecidedCandidate> undecided;  // nonempty only when uncertified
  std::uint64_t aux_prime = 0;
  std::vector<std::uint64_t> probe_primes;  // extra primes actually consulted
};

CertifiedRoots roots_in_field_certified(const KPoly& f,
                                        const RootsConfig& cfg = {},
                                        int max_probes = 6);
CertifiedRoots roots_in_field_certified(const Polynomial<mpq_class>& f,
                                        const FieldPtr& K,
                                        const RootsConfig& cfg = {},
                                        int max_probes = 6);

// Square-root test with an exactness guarantee wherever one is available:
// rational arguments and quadratic fields are settled by elementary identities,
// cyclotomic monomials through the quadratic subfield, and everything else by
// the lifting pipeline with cross-prime screening. `certified` is false only
// when no root was found and no probe could rule one out.
struct SquareCheck {
  std::optional<FieldElement> root;
  bool certified = false;
};

SquareCheck is_square_certified(const FieldElement& beta,
                                const RootsConfig& cfg = {},
                                int max_probes = 6);

}  // namespace cyctor
