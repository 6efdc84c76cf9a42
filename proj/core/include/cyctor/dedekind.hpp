#pragma once
#include <cstdint>

#include "cyctor/poly.hpp"

namespace cyctor {

enum class Ramification { ramified, unramified, indeterminate };

const char* to_string(Ramification r);

// Dedekind's criterion at p for the field defined by a monic integral
// irreducible g (irreducibility is the caller's responsibility). If g mod p is
// squarefree, p is unramified. Otherwise compute the index test
// U = gcd((g1*h1 - g)/p, radical, cofactor) mod p: when U is constant p does
// not divide the index [O_K : Z[x]/(g)], so ramification is read off the
// repeated factors (ramified); when U is nonconstant the criterion cannot
// decide (indeterminate).
Ramification dedekind_ramified(const Polynomial<mpz_class>& g, std::uint64_t p);

}  // namespace cyctor
