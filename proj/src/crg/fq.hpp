#pragma once

#include <vector>

#include "crg/common.hpp"
#include "crg/cyclotomic.hpp"

namespace crg {

// Arithmetic in F_{p^f} realized as F_p[y]/(g), where g is the canonical
// (lexicographically least, comparing coefficients from the leading end)
// monic irreducible degree-f factor of the de-th cyclotomic polynomial
// modulo p, and f is the multiplicative order of p modulo de.  Reducing a
// cyclotomic integer through zeta_de -> y realizes reduction modulo a fixed
// prime ideal above p.
struct FqContext {
  int de = 1;
  int p = 2;
  int f = 1;
  std::vector<int> g;  // ascending coefficients, length f + 1, monic
};

// Throws bad_prime_error when p is not prime or p divides de.
FqContext make_fq_context(int de, int p);

// Elements are ascending coefficient vectors of length f.
using FqElement = std::vector<int>;

FqElement fq_zero(const FqContext& ctx);
FqElement fq_one(const FqContext& ctx);
FqElement fq_add(const FqElement& a, const FqElement& b, const FqContext& ctx);
FqElement fq_mul(const FqElement& a, const FqElement& b, const FqContext& ctx);

// Image of an integral cyclotomic value (conductor dividing de) under
// zeta_de -> y.  Throws not_integral_error on non-integer coordinates.
FqElement reduce_cyc(const Cyc& x, const FqContext& ctx);

}  // namespace crg
