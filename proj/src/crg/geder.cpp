#include "crg/geder.hpp"

#include <algorithm>
#include <numeric>

#include "crg/jobs.hpp"

namespace crg {

int eps_exp(int d, int e, const GroupElement& g) {
  (void)d;
  long long s = 0;
  for (int zi : g.z) s += zi;
  return mod(s, e);
}

Cyc epsilon_value(int d, int e, const GroupElement& g, int conductor) {
  const int de = d * e;
  if (conductor % de != 0)
    throw error("epsilon_value: conductor must be a multiple of de");
  long long s = 0;
  for (int zi : g.z) s += zi;
  return Cyc::zeta(conductor, mod(static_cast<long long>(d) * s, de) *
                                  (conductor / de));
}

bool is_member(int d, int e, const GroupElement& g) {
  return eps_exp(d, e, g) == 0;
}

StabilizerData stabilizer(int d, int e, const MultiPartition& la) {
  for (int b : divisors(e)) {
    if (shift_label(la, d * b) == la) return {b, e / b};
  }
  throw error("stabilizer: no period found");  // unreachable: b = e always works
}

ConjugatingElement find_gfrak(int d, int e, int r) {
  const int de = d * e;
  if (r < 1) throw error("find_gfrak: rank must be positive");
  // Stage 1: diagonal elements with a single nonzero entry.
  for (int m = 1; m < de; ++m) {
    if (m % e == 1 && std::gcd(m, de) == d) {
      GroupElement g = g_identity(de, r);
      g.z[0] = m;
      return {g, "diagonal-order-e", e};
    }
  }
  // Stage 2: bounded search over single-cycle supports.
  for (int len = 2; len <= r; ++len) {
    for (int m = 0; m < de; ++m) {
      if (m % e != 1) continue;
      GroupElement g = g_identity(de, r);
      for (int i = 0; i + 1 < len; ++i) g.sigma[i] = i + 1;
      g.sigma[len - 1] = 0;
      g.z[0] = m;
      if (element_order(de, g) == e) return {g, "cycle-order-e", e};
    }
  }
  // Stage 3: fall back to the full-order diagonal generator; its
  // twisting-character value is still a primitive e-th root of unity.
  GroupElement g = g_identity(de, r);
  g.z[0] = 1;
  return {g, "diagonal-order-de", de};
}

int split_count(int e, const CycleStructure& eta) {
  int g = e;
  for (int u = 0; u < static_cast<int>(eta.size()); ++u) {
    if (eta[u].empty()) continue;
    g = std::gcd(g, u);
    for (int part : eta[u]) g = std::gcd(g, part);
  }
  return g;
}

std::vector<NClassLabel> n_classes(int d, int e, int r) {
  const int de = d * e;
  std::vector<NClassLabel> out;
  for (const auto& eta : multipartitions(r, de)) {
    long long tot = 0;
    for (int u = 0; u < de; ++u)
      tot += static_cast<long long>(u) * eta[u].size();
    if (mod(tot, e) != 0) continue;
    const int split = split_count(e, eta);
    for (int j = 0; j < split; ++j) out.push_back({eta, j, split});
  }
  return out;
}

GroupElement n_class_rep(int d, int e, int r, const CycleStructure& eta,
                         int j) {
  const int de = d * e;
  GroupElement g = class_rep(de, eta, r);
  if (j == 0) return g;
  const ConjugatingElement cj = find_gfrak(d, e, r);
  GroupElement x = g_identity(de, r);
  for (int i = 0; i < j; ++i) x = g_mul(de, x, cj.g);
  return g_conj(de, x, g);
}

BigInt centralizer_order_n(int d, int e, const CycleStructure& eta) {
  return centralizer_order_g(d * e, eta) * split_count(e, eta) / e;
}

bool class_p_singular(const CycleStructure& eta, int p) {
  for (const auto& parts : eta)
    for (int part : parts)
      if (part % p == 0) return true;
  return false;
}

std::vector<std::pair<CycleStructure, int>> classes_geder_param(int d, int e,
                                                                int r) {
  const int de = d * e;
  std::vector<std::pair<CycleStructure, int>> out;
  for (int q : divisors(e)) {
    if (r % q != 0) continue;
    for (const auto& mu : multipartitions(r / q, de / q)) {
      CycleStructure eta(de);
      for (int c = 0; c < de / q; ++c) {
        for (int part : mu[c]) eta[q * c].push_back(q * part);
        std::sort(eta[q * c].begin(), eta[q * c].end(), std::greater<int>());
      }
      long long tot = 0;
      for (int u = 0; u < de; ++u)
        tot += static_cast<long long>(u) * eta[u].size();
      if (mod(tot, e) != 0) continue;
      if (split_count(e, eta) != q) continue;
      for (int j = 0; j < q; ++j) out.emplace_back(eta, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

MultiPartition orbit_rep(const MultiPartition& la, int d) {
  const int e = static_cast<int>(la.size()) / d;
  MultiPartition best = la;
  for (int t = 1; t < e; ++t) {
    MultiPartition cand = shift_label(la, d * t);
    if (cand < best) best = cand;
  }
  return best;
}

std::vector<MultiPartition> orbit_transversal(int d, int e, int r) {
  std::vector<MultiPartition> out;
  for (const auto& la : multipartitions(r, d * e))
    if (orbit_rep(la, d) == la) out.push_back(la);
  return out;
}

GederModel::GederModel(int d, int e, MultiPartition la, int conductor)
    : IrrepModel(d * e, std::move(la), conductor), d_(d), e_(e) {
  const StabilizerData st = stabilizer(d_, e_, la_);
  b_ = st.b;
  csize_ = st.orbit_count;
}

int GederModel::m_image(int idx, int k) const {
  const auto& [x, ts] = basis_[idx];
  const int s = mod(static_cast<long long>(k) * d_ * b_, de_);
  SetTuple xp(de_);
  std::vector<Tableau> tsp(de_);
  for (int i = 0; i < de_; ++i) {
    xp[i] = x[(i + s) % de_];
    tsp[i] = ts[(i + s) % de_];
  }
  return basis_index(xp, tsp);
}

Cyc GederModel::delta_trace(const GroupElement& g, int k) const {
  if (!is_member(d_, e_, g))
    throw not_in_subgroup_error("delta_trace: element lies outside the subgroup");
  const int s = mod(static_cast<long long>(k) * d_ * b_, de_);
  int tdim = 1;
  for (int c = 0; c < de_; ++c) tdim *= static_cast<int>(sts_[c].size());
  Cyc total = Cyc::zero(cond_);
  std::vector<int> tau(r_);
  for (int g0 = 0; g0 < dim_; g0 += tdim) {
    const SetTuple& x = basis_[g0].first;
    const std::vector<int> tx = coset_rep(x, r_);
    for (int i = 0; i < r_; ++i) tau[i] = g.sigma[tx[i]];
    auto [xp, locals] = decompose_perm(tau, comp_);
    bool match = true;
    for (int i = 0; i < de_ && match; ++i)
      if (xp[i] != x[mod(i - s, de_)]) match = false;
    if (!match) continue;
    long long ex = 0;
    for (int c = 0; c < de_; ++c)
      for (int v : xp[c]) ex += static_cast<long long>(c) * g.z[v];
    const Cyc phase = Cyc::zeta(cond_, mod(ex, de_) * (cond_ / de_));
    Cyc prod = Cyc::one(cond_);
    std::vector<char> visited(de_, 0);
    for (int c = 0; c < de_; ++c) {
      if (visited[c]) continue;
      visited[c] = 1;
      CMat acc = specht(c, locals[c]);
      int cc = (c + s) % de_;
      while (cc != c) {
        acc = mat_mul(acc, specht(cc, locals[cc]));
        visited[cc] = 1;
        cc = (cc + s) % de_;
      }
      prod = prod * mat_trace(acc);
    }
    total = total + phase * prod;
  }
  return total;
}

Cyc GederModel::delta_trace_direct(const GroupElement& g, int k) const {
  if (!is_member(d_, e_, g))
    throw not_in_subgroup_error("delta_trace: element lies outside the subgroup");
  Cyc total = Cyc::zero(cond_);
  for (int i = 0; i < dim_; ++i) {
    for (const auto& [tgt, c] : act(g, i))
      if (m_image(tgt, k) == i) total = total + c;
  }
  return total;
}

bool GederModel::intertwine_holds(const GroupElement& g) const {
  const Cyc omega_pow = Cyc::zeta(
      cond_, mod(static_cast<long long>(d_) * b_ * eps_exp(d_, e_, g), de_) *
                 (cond_ / de_));
  for (int idx = 0; idx < dim_; ++idx) {
    std::map<int, Cyc> lhs;
    for (const auto& [tgt, c] : act(g, idx)) lhs[m_image(tgt, 1)] = c;
    std::map<int, Cyc> rhs;
    for (const auto& [tgt, c] : act(g, m_image(idx, 1)))
      rhs[tgt] = omega_pow * c;
    for (const auto& [tgt, c] : lhs) {
      const auto it = rhs.find(tgt);
      const Cyc other = (it == rhs.end()) ? Cyc() : it->second;
      if (!(c == other)) return false;
    }
    for (const auto& [tgt, c] : rhs)
      if (!lhs.count(tgt) && !c.is_zero()) return false;
  }
  return true;
}

Cyc delta_fast(int d, int e, const MultiPartition& la, int k,
               const CycleStructure& eta, int j, int conductor) {
  const int de = d * e;
  if (conductor % de != 0)
    throw error("delta_fast: conductor must be a multiple of de");
  const int b = stabilizer(d, e, la).b;
  const int csize = e / b;
  const int kk = mod(k, csize);
  const int bp = (kk == 0) ? csize : std::gcd(kk, csize);
  const int q = csize / bp;
  for (int u = 0; u < de; ++u) {
    if (eta[u].empty()) continue;
    if (u % q != 0) return Cyc::zero(conductor);
    for (int part : eta[u])
      if (part % q != 0) return Cyc::zero(conductor);
  }
  const MultiPartition mu(la.begin(), la.begin() + de / q);
  CycleStructure eta_q(de / q);
  for (int u = 0; u < de / q; ++u)
    for (int part : eta[u * q]) eta_q[u].push_back(part / q);
  const int ell = total_length(eta);
  const Cyc val = Cyc::from_rat(Rat(bigint_pow(BigInt(q), ell))) *
                  character_value(de / q, mu, eta_q, conductor);
  long long w = (static_cast<long long>(d) * b) % de;
  w = (w * mod(static_cast<long long>(k), de)) % de;
  w = (w * mod(static_cast<long long>(j), de)) % de;
  return Cyc::zeta(conductor, mod(w, de) * (conductor / de)) * val;
}

Cyc chi_value(int d, int e, const MultiPartition& la, int k,
              const CycleStructure& eta, int j, int conductor) {
  const int de = d * e;
  const int b = stabilizer(d, e, la).b;
  const int csize = e / b;
  Cyc total = Cyc::zero(conductor);
  for (int m = 0; m < csize; ++m) {
    const Cyc ph = Cyc::zeta(
        conductor,
        mod(-static_cast<long long>(d) * b * k % de * m, de) * (conductor / de));
    total = total + ph * delta_fast(d, e, la, m, eta, j, conductor);
  }
  return total * Cyc::from_rat(Rat(1, csize));
}

NCharacterTable character_table_n(int d, int e, int r, int threads) {
  const int de = d * e;
  NCharacterTable t;
  t.d = d;
  t.e = e;
  t.r = r;
  t.conductor = de;
  for (const auto& la : orbit_transversal(d, e, r)) {
    const int csize = stabilizer(d, e, la).orbit_count;
    for (int k = 0; k < csize; ++k) t.labels.emplace_back(la, k);
  }
  t.classes = n_classes(d, e, r);
  t.centralizer_orders.reserve(t.classes.size());
  for (const auto& cl : t.classes)
    t.centralizer_orders.push_back(centralizer_order_n(d, e, cl.eta));
  const int ncls = static_cast<int>(t.classes.size());
  t.values.assign(t.labels.size(), std::vector<Cyc>(ncls, Cyc::zero(de)));
  const int ncells = static_cast<int>(t.labels.size()) * ncls;
  parallel_for(ncells, threads, [&](int cell) {
    const int i = cell / ncls;
    const int j = cell % ncls;
    t.values[i][j] = chi_value(d, e, t.labels[i].first, t.labels[i].second,
                               t.classes[j].eta, t.classes[j].j, de);
  });
  return t;
}

}  // namespace crg
