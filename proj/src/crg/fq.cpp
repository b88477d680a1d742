#include "crg/fq.hpp"

#include <algorithm>

namespace crg {

namespace {

// Remainder of num / den over F_p (ascending coefficients, den monic).
std::vector<int> poly_rem_mod_p(std::vector<int> num, const std::vector<int>& den,
                                int p) {
  const int dd = static_cast<int>(den.size()) - 1;
  while (static_cast<int>(num.size()) > dd) {
    const int lead = num.back();
    const int off = static_cast<int>(num.size()) - 1 - dd;
    if (lead != 0)
      for (int i = 0; i <= dd; ++i)
        num[off + i] = mod(num[off + i] - static_cast<long long>(lead) * den[i], p);
    num.pop_back();
  }
  return num;
}

bool is_zero_poly(const std::vector<int>& v) {
  for (int x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

FqContext make_fq_context(int de, int p) {
  if (!is_prime(p)) throw bad_prime_error(std::to_string(p) + " is not prime");
  if (de > 1 && de % p == 0)
    throw bad_prime_error(std::to_string(p) + " divides " + std::to_string(de));
  FqContext ctx;
  ctx.de = de;
  ctx.p = p;
  if (de == 1) {
    ctx.f = 1;
    ctx.g = {mod(-1, p), 1};  // y - 1: zeta_1 = 1
    return ctx;
  }
  int f = 1;
  {
    long long pw = p % de;
    while (pw != 1 % de) {
      pw = (pw * p) % de;
      ++f;
    }
  }
  ctx.f = f;

  // Phi_de reduced mod p, ascending integer coefficients.
  const auto& phi = Cyc::cyclotomic_poly(de);
  std::vector<int> phi_p(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) {
    Rat c = phi[i];
    phi_p[i] = mod(static_cast<long long>(numerator(c) % p), p);
  }

  // Every monic degree-f divisor of Phi_de mod p is irreducible (all

  // irreducible factors share the degree f), so the first divisor in the
  // enumeration order is the canonical factor.
  long long total = 1;
  for (int i = 0; i < f; ++i) {
    total *= p;
    if (total > 2000000)
      throw error("canonical-factor search space too large (p^f > 2e6)");
  }
  for (long long code = 0; code < total; ++code) {
    // Decode so that the leading non-unit coefficient varies slowest: the
    // enumeration is lexicographic on (a_{f-1}, ..., a_0).
    std::vector<int> cand(f + 1, 0);
    cand[f] = 1;
    long long c = code;
    for (int i = 0; i < f; ++i) {
      cand[i] = static_cast<int>(c % p);
      c /= p;
    }
    if (is_zero_poly(poly_rem_mod_p(phi_p, cand, p))) {
      ctx.g = std::move(cand);
      return ctx;
    }
  }
  throw error("no canonical factor found (unreachable)");
}

FqElement fq_zero(const FqContext& ctx) { return FqElement(ctx.f, 0); }

FqElement fq_one(const FqContext& ctx) {
  FqElement e(ctx.f, 0);
  e[0] = 1 % ctx.p;
  return e;
}

FqElement fq_add(const FqElement& a, const FqElement& b, const FqContext& ctx) {
  FqElement out(ctx.f);
  for (int i = 0; i < ctx.f; ++i) out[i] = mod(a[i] + b[i], ctx.p);
  return out;
}

FqElement fq_mul(const FqElement& a, const FqElement& b, const FqContext& ctx) {
  const int f = ctx.f, p = ctx.p;
  std::vector<int> prod(2 * f - 1, 0);
  for (int i = 0; i < f; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < f; ++j)
      prod[i + j] = mod(prod[i + j] + static_cast<long long>(a[i]) * b[j], p);
  }
  for (int i = 2 * f - 2; i >= f; --i) {
    const int c = prod[i];
    if (c == 0) continue;
    for (int j = 0; j < f; ++j)
      prod[i - f + j] = mod(prod[i - f + j] - static_cast<long long>(c) * ctx.g[j], p);
    prod[i] = 0;
  }
  prod.resize(f);
  return prod;
}

FqElement reduce_cyc(const Cyc& x, const FqContext& ctx) {
  Cyc v = x.embed(ctx.de);
  FqElement acc = fq_zero(ctx);
  FqElement ypow = fq_one(ctx);
  FqElement y(ctx.f, 0);
  if (ctx.f > 1)
    y[1] = 1;
  else
    y[0] = mod(-ctx.g[0], ctx.p);
  const auto& coords = v.coords();
  for (size_t i = 0; i < coords.size(); ++i) {
    if (denominator(coords[i]) != 1)
      throw not_integral_error("cyclotomic value is not integral");
    if (i > 0) ypow = fq_mul(ypow, y, ctx);
    const int c = mod(static_cast<long long>(numerator(coords[i]) % ctx.p), ctx.p);
    if (c == 0) continue;
    for (int j = 0; j < ctx.f; ++j)
      acc[j] = mod(acc[j] + static_cast<long long>(c) * ypow[j], ctx.p);
  }
  return acc;
}

}  // namespace crg
