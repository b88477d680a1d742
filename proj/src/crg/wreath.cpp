#include "crg/wreath.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace crg {

namespace {

std::vector<int> perm_inverse(const std::vector<int>& s) {
  std::vector<int> inv(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) inv[s[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace

GroupElement g_identity(int de, int r) {
  (void)de;
  GroupElement g;
  g.z.assign(r, 0);
  g.sigma.resize(r);
  for (int i = 0; i < r; ++i) g.sigma[i] = i;
  return g;
}

GroupElement g_mul(int de, const GroupElement& a, const GroupElement& b) {
  const int r = static_cast<int>(a.z.size());
  if (static_cast<int>(b.z.size()) != r)
    throw error("g_mul: rank mismatch");
  const std::vector<int> si = perm_inverse(a.sigma);
  GroupElement out;
  out.z.resize(r);
  out.sigma.resize(r);
  for (int i = 0; i < r; ++i) {
    out.z[i] = mod(a.z[i] + b.z[si[i]], de);
    out.sigma[i] = a.sigma[b.sigma[i]];
  }
  return out;
}

GroupElement g_inv(int de, const GroupElement& a) {
  const int r = static_cast<int>(a.z.size());
  GroupElement out;
  out.z.resize(r);
  out.sigma = perm_inverse(a.sigma);
  for (int i = 0; i < r; ++i) out.z[i] = mod(-a.z[a.sigma[i]], de);
  return out;
}

GroupElement g_conj(int de, const GroupElement& g, const GroupElement& x) {
  return g_mul(de, g_mul(de, g, x), g_inv(de, g));
}

long long element_order(int de, const GroupElement& g) {
  const int r = static_cast<int>(g.z.size());
  const GroupElement id = g_identity(de, r);
  GroupElement cur = g;
  long long n = 1;
  while (!(cur == id)) {
    cur = g_mul(de, cur, g);
    ++n;
    if (n > 4000000LL) throw error("element_order: runaway loop");
  }
  return n;
}

CycleStructure cycle_structure(int de, const GroupElement& g) {
  const int r = static_cast<int>(g.z.size());
  CycleStructure eta(de);
  std::vector<char> seen(r, 0);
  for (int i = 0; i < r; ++i) {
    if (seen[i]) continue;
    int len = 0;
    long long usum = 0;
    int j = i;
    do {
      seen[j] = 1;
      usum += g.z[j];
      ++len;
      j = g.sigma[j];
    } while (j != i);
    eta[mod(usum, de)].push_back(len);
  }
  for (auto& parts : eta)
    std::sort(parts.begin(), parts.end(), std::greater<int>());
  return eta;
}

GroupElement class_rep(int de, const CycleStructure& eta, int r) {
  if (static_cast<int>(eta.size()) != de)
    throw error("class_rep: label has wrong number of components");
  GroupElement g = g_identity(de, r);
  int pos = 0;
  for (int u = 0; u < de; ++u) {
    for (int part : eta[u]) {
      for (int i = 0; i + 1 < part; ++i) g.sigma[pos + i] = pos + i + 1;
      g.sigma[pos + part - 1] = pos;
      g.z[pos] = u;
      pos += part;
    }
  }
  if (pos != r) throw error("class_rep: label size does not match rank");
  return g;
}

BigInt group_order(int de, int r) {
  return bigint_pow(BigInt(de), r) * factorial(r);
}

BigInt centralizer_order_g(int de, const CycleStructure& eta) {
  BigInt res = 1;
  for (const auto& parts : eta) {
    std::map<int, int> mult;
    for (int k : parts) ++mult[k];
    for (const auto& [k, m] : mult)
      res *= factorial(m) * bigint_pow(BigInt(k) * de, m);
  }
  return res;
}

std::vector<int> composition_of(const MultiPartition& la) {
  std::vector<int> c(la.size());
  for (std::size_t i = 0; i < la.size(); ++i) c[i] = size_of(la[i]);
  return c;
}

std::vector<int> coset_rep(const SetTuple& x, int r) {
  std::vector<int> tx;
  tx.reserve(r);
  for (const auto& block : x) tx.insert(tx.end(), block.begin(), block.end());
  if (static_cast<int>(tx.size()) != r)
    throw error("coset_rep: blocks do not cover the rank");
  return tx;
}

std::pair<SetTuple, std::vector<std::vector<int>>> decompose_perm(
    const std::vector<int>& tau, const std::vector<int>& comp) {
  SetTuple xp(comp.size());
  std::vector<std::vector<int>> locals(comp.size());
  int off = 0;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    std::vector<int> vals(tau.begin() + off, tau.begin() + off + comp[i]);
    xp[i] = vals;
    std::sort(xp[i].begin(), xp[i].end());
    locals[i].resize(comp[i]);
    for (int j = 0; j < comp[i]; ++j) {
      const auto it = std::lower_bound(xp[i].begin(), xp[i].end(), vals[j]);
      locals[i][j] = static_cast<int>(it - xp[i].begin());
    }
    off += comp[i];
  }
  return {xp, locals};
}

BigInt wreath_dim(const MultiPartition& la) {
  const int r = size_of(la);
  BigInt d = factorial(r);
  for (const auto& part : la) {
    d /= factorial(size_of(part));
    d *= hook_length_count(part);
  }
  return d;
}

namespace {

// Lexicographic enumeration of the block tuples X: block i runs over the
// c_i-subsets of what the earlier blocks left, in combination order.
void enumerate_set_tuples(const std::vector<int>& comp, std::size_t i,
                          std::vector<int>& remaining, SetTuple& acc,
                          std::vector<SetTuple>& out) {
  if (i == comp.size()) {
    out.push_back(acc);
    return;
  }
  const int k = comp[i];
  const int n = static_cast<int>(remaining.size());
  std::vector<int> idx(k);
  for (int j = 0; j < k; ++j) idx[j] = j;
  while (true) {
    std::vector<int> block(k), rest;
    for (int j = 0; j < k; ++j) block[j] = remaining[idx[j]];
    std::set<int> chosen(idx.begin(), idx.end());
    for (int j = 0; j < n; ++j)
      if (!chosen.count(j)) rest.push_back(remaining[j]);
    acc.push_back(block);
    enumerate_set_tuples(comp, i + 1, rest, acc, out);
    acc.pop_back();
    // next combination
    int j = k - 1;
    while (j >= 0 && idx[j] == n - k + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace

IrrepModel::IrrepModel(int de, MultiPartition la, int conductor)
    : de_(de), cond_(conductor), la_(std::move(la)) {
  if (static_cast<int>(la_.size()) != de_)
    throw error("irrep label must have one component per diagonal order");
  if (cond_ < 1 || cond_ % de_ != 0)
    throw error("model conductor must be a positive multiple of the group order parameter");
  comp_ = composition_of(la_);
  r_ = size_of(la_);
  sts_.resize(de_);
  st_index_.resize(de_);
  for (int c = 0; c < de_; ++c) {
    sts_[c] = standard_tableaux(la_[c]);
    for (std::size_t i = 0; i < sts_[c].size(); ++i)
      st_index_[c][sts_[c][i]] = static_cast<int>(i);
  }
  std::vector<int> remaining(r_);
  for (int i = 0; i < r_; ++i) remaining[i] = i;
  std::vector<SetTuple> xs;
  SetTuple acc;
  enumerate_set_tuples(comp_, 0, remaining, acc, xs);
  for (const auto& x : xs) {
    // cartesian product of per-component tableaux, last component fastest
    std::vector<std::size_t> pick(de_, 0);
    while (true) {
      std::vector<Tableau> ts(de_);
      for (int c = 0; c < de_; ++c) ts[c] = sts_[c][pick[c]];
      index_[{x, ts}] = static_cast<int>(basis_.size());
      basis_.emplace_back(x, std::move(ts));
      int c = de_ - 1;
      while (c >= 0 && pick[c] + 1 == sts_[c].size()) {
        pick[c] = 0;
        --c;
      }
      if (c < 0) break;
      ++pick[c];
    }
  }
  dim_ = static_cast<int>(basis_.size());
}

int IrrepModel::basis_index(const SetTuple& x,
                            const std::vector<Tableau>& ts) const {
  const auto it = index_.find({x, ts});
  if (it == index_.end()) throw error("basis_index: unknown basis label");
  return it->second;
}

const CMat& IrrepModel::specht(int comp, const std::vector<int>& w) const {
  const std::pair<int, std::vector<int>> key{comp, w};
  std::lock_guard<std::mutex> lock(specht_mutex_);
  auto it = specht_cache_.find(key);
  if (it != specht_cache_.end()) return it->second;
  CMat m = specht_perm_matrix(la_[comp], w, cond_);
  return specht_cache_.emplace(key, std::move(m)).first->second;
}

int IrrepModel::component_tableau_index(int comp, const Tableau& t) const {
  return st_index_[comp].at(t);
}

std::map<int, Cyc> IrrepModel::act(const GroupElement& g, int idx) const {
  const auto& [x, ts] = basis_[idx];
  const std::vector<int> tx = coset_rep(x, r_);
  std::vector<int> tau(r_);
  for (int i = 0; i < r_; ++i) tau[i] = g.sigma[tx[i]];
  auto [xp, locals] = decompose_perm(tau, comp_);
  long long ex = 0;
  for (int c = 0; c < de_; ++c)
    for (int v : xp[c]) ex += static_cast<long long>(c) * g.z[v];
  const Cyc phase = Cyc::zeta(cond_, mod(ex, de_) * (cond_ / de_));
  std::vector<std::vector<std::pair<int, Cyc>>> cols(de_);
  for (int c = 0; c < de_; ++c) {
    const CMat& m = specht(c, locals[c]);
    const int j = st_index_[c].at(ts[c]);
    for (std::size_t a = 0; a < m.size(); ++a)
      if (!m[a][j].is_zero()) cols[c].emplace_back(static_cast<int>(a), m[a][j]);
  }
  std::map<int, Cyc> out;
  std::vector<std::size_t> pick(de_, 0);
  std::vector<Tableau> ts2(de_);
  while (true) {
    Cyc coeff = phase;
    for (int c = 0; c < de_; ++c) coeff = coeff * cols[c][pick[c]].second;
    for (int c = 0; c < de_; ++c) ts2[c] = sts_[c][cols[c][pick[c]].first];
    const int tgt = basis_index(xp, ts2);
    auto it = out.find(tgt);
    if (it == out.end())
      out.emplace(tgt, coeff);
    else
      it->second = it->second + coeff;
    int c = de_ - 1;
    while (c >= 0 && pick[c] + 1 == cols[c].size()) {
      pick[c] = 0;
      --c;
    }
    if (c < 0) break;
    ++pick[c];
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<int, Cyc> IrrepModel::act(const GroupElement& g,
                                   const std::map<int, Cyc>& v) const {
  std::map<int, Cyc> out;
  for (const auto& [idx, coef] : v) {
    if (coef.is_zero()) continue;
    for (const auto& [tgt, c] : act(g, idx)) {
      const Cyc add = coef * c;
      auto it = out.find(tgt);
      if (it == out.end())
        out.emplace(tgt, add);
      else
        it->second = it->second + add;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

CMat IrrepModel::rep_matrix(const GroupElement& g) const {
  CMat m(dim_, std::vector<Cyc>(dim_, Cyc::zero(cond_)));
  for (int j = 0; j < dim_; ++j)
    for (const auto& [i, c] : act(g, j)) m[i][j] = c;
  return m;
}

Cyc IrrepModel::trace(const GroupElement& g) const {
  Cyc total = Cyc::zero(cond_);
  for (int j = 0; j < dim_; ++j) {
    const auto col = act(g, j);
    const auto it = col.find(j);
    if (it != col.end()) total = total + it->second;
  }
  return total;
}

namespace {

using SparseVec = std::map<int, Cyc>;

SparseVec unit_vec(int j) {
  SparseVec v;
  v.emplace(j, Cyc::from_rat(Rat(1)));
  return v;
}

bool sparse_equal(const SparseVec& a, const SparseVec& b) {
  for (const auto& [k, c] : a) {
    const auto it = b.find(k);
    const Cyc other = (it == b.end()) ? Cyc() : it->second;
    if (!(c == other)) return false;
  }
  for (const auto& [k, c] : b)
    if (!a.count(k) && !c.is_zero()) return false;
  return true;
}

SparseVec apply_word(const IrrepModel& m,
                     const std::vector<GroupElement>& word, int start) {
  SparseVec v = unit_vec(start);
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = m.act(*it, v);
  return v;
}

bool words_agree(const IrrepModel& m, const std::vector<GroupElement>& lhs,
                 const std::vector<GroupElement>& rhs) {
  for (int j = 0; j < m.dim(); ++j)
    if (!sparse_equal(apply_word(m, lhs, j), apply_word(m, rhs, j)))
      return false;
  return true;
}

}  // namespace

bool check_defining_relations(const IrrepModel& model) {
  const int de = model.de();
  const int r = model.rank();
  if (r == 0) return true;
  GroupElement t = g_identity(de, r);
  t.z[0] = 1;
  std::vector<GroupElement> s;
  for (int i = 0; i + 1 < r; ++i) {
    GroupElement si = g_identity(de, r);
    std::swap(si.sigma[i], si.sigma[i + 1]);
    s.push_back(si);
  }
  if (!words_agree(model, std::vector<GroupElement>(de, t), {})) return false;
  for (const auto& si : s)
    if (!words_agree(model, {si, si}, {})) return false;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (!words_agree(model, {s[i], s[i + 1], s[i]}, {s[i + 1], s[i], s[i + 1]}))
      return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 2; j < s.size(); ++j)
      if (!words_agree(model, {s[i], s[j]}, {s[j], s[i]})) return false;
  if (!s.empty() &&
      !words_agree(model, {t, s[0], t, s[0]}, {s[0], t, s[0], t}))
    return false;
  return true;
}

namespace {

void multitableaux_rec(const MultiPartition& la, int k, int r,
                       MultiTableau& cur, std::vector<MultiTableau>& out) {
  if (k == r) {
    out.push_back(cur);
    return;
  }
  for (std::size_t c = 0; c < la.size(); ++c) {
    const Partition& shape = la[c];
    for (std::size_t row = 0; row <= cur[c].size() && row < shape.size();
         ++row) {
      const int filled =
          row < cur[c].size() ? static_cast<int>(cur[c][row].size()) : 0;
      if (filled >= shape[row]) continue;
      if (row > 0 &&
          filled >= static_cast<int>(cur[c][row - 1].size()))
        continue;
      if (row == cur[c].size()) cur[c].emplace_back();
      cur[c][row].push_back(k);
      multitableaux_rec(la, k + 1, r, cur, out);
      cur[c][row].pop_back();
      if (cur[c][row].empty() && row + 1 == cur[c].size()) cur[c].pop_back();
    }
  }
}

struct EntryPos {
  int comp, row, col;
};

EntryPos find_entry(const MultiTableau& mt, int v) {
  for (std::size_t c = 0; c < mt.size(); ++c)
    for (std::size_t i = 0; i < mt[c].size(); ++i)
      for (std::size_t j = 0; j < mt[c][i].size(); ++j)
        if (mt[c][i][j] == v)
          return {static_cast<int>(c), static_cast<int>(i),
                  static_cast<int>(j)};
  throw error("find_entry: value not present");
}

MultiTableau swap_entries(const MultiTableau& mt, int v) {
  MultiTableau out = mt;
  const EntryPos a = find_entry(mt, v);
  const EntryPos b = find_entry(mt, v + 1);
  out[a.comp][a.row][a.col] = v + 1;
  out[b.comp][b.row][b.col] = v;
  return out;
}

// Action of a generator on the standard-multitableau basis: a list of
// (coefficient, image index) pairs.
std::vector<std::pair<Cyc, int>> mm_gen_action(
    int de, const std::vector<MultiTableau>& mts,
    const std::map<MultiTableau, int>& mt_index, int idx, int gen_s, int cond) {
  const MultiTableau& mt = mts[idx];
  std::vector<std::pair<Cyc, int>> out;
  if (gen_s < 0) {
    const EntryPos p = find_entry(mt, 0);
    out.emplace_back(Cyc::zeta(cond, p.comp * (cond / de)), idx);
    return out;
  }
  const int i = gen_s;
  const EntryPos a = find_entry(mt, i);
  const EntryPos b = find_entry(mt, i + 1);
  if (a.comp != b.comp) {
    out.emplace_back(Cyc::from_rat(Rat(1)), mt_index.at(swap_entries(mt, i)));
    return out;
  }
  const int axial = (b.col - b.row) - (a.col - a.row);
  const Cyc inv_a = Cyc::from_rat(rat_frac(1, axial));
  out.emplace_back(inv_a, idx);
  const MultiTableau sw = swap_entries(mt, i);
  if (tableau_is_standard(sw[a.comp])) {
    out.emplace_back(Cyc::from_rat(Rat(1)) + inv_a, mt_index.at(sw));
  }
  return out;
}

}  // namespace

std::vector<MultiTableau> multitableaux(const MultiPartition& la) {
  const int r = size_of(la);
  std::vector<MultiTableau> out;
  MultiTableau cur(la.size());
  multitableaux_rec(la, 0, r, cur, out);
  return out;
}

bool mm_isomorphism_check(int de, const MultiPartition& la) {
  const IrrepModel model(de, la, de);
  const int r = model.rank();
  const std::vector<MultiTableau> mts = multitableaux(la);
  if (static_cast<int>(mts.size()) != model.dim()) return false;
  std::map<MultiTableau, int> mt_index;
  for (std::size_t i = 0; i < mts.size(); ++i)
    mt_index[mts[i]] = static_cast<int>(i);
  // Basis map: sort each component's entries into a block, standardize.
  std::vector<int> f_idx(mts.size());
  std::set<int> hit;
  for (std::size_t m = 0; m < mts.size(); ++m) {
    SetTuple x(la.size());
    std::vector<Tableau> ts(la.size());
    for (std::size_t c = 0; c < la.size(); ++c) {
      for (const auto& row : mts[m][c])
        x[c].insert(x[c].end(), row.begin(), row.end());
      std::sort(x[c].begin(), x[c].end());
      ts[c] = theta_standardize(mts[m][c]);
    }
    f_idx[m] = model.basis_index(x, ts);
    hit.insert(f_idx[m]);
  }
  if (static_cast<int>(hit.size()) != model.dim()) return false;
  std::vector<int> gens;
  if (r >= 1) gens.push_back(-1);
  for (int i = 0; i + 1 < r; ++i) gens.push_back(i);
  for (int gen : gens) {
    GroupElement ge = g_identity(de, r);
    if (gen < 0)
      ge.z[0] = 1;
    else
      std::swap(ge.sigma[gen], ge.sigma[gen + 1]);
    for (std::size_t m = 0; m < mts.size(); ++m) {
      const std::map<int, Cyc> lhs = model.act(ge, f_idx[m]);
      std::map<int, Cyc> rhs;
      for (const auto& [coeff, m2] :
           mm_gen_action(de, mts, mt_index, static_cast<int>(m), gen, de)) {
        auto it = rhs.find(f_idx[m2]);
        if (it == rhs.end())
          rhs.emplace(f_idx[m2], coeff);
        else
          it->second = it->second + coeff;
      }
      if (!sparse_equal(lhs, rhs)) return false;
    }
  }
  return true;
}

namespace {

using MnKey = std::pair<MultiPartition, std::vector<std::pair<int, int>>>;

std::map<std::pair<int, int>, std::map<MnKey, Cyc>> g_mn_cache;
std::mutex g_mn_mutex;

Cyc mn_rec(int de, int cond, const MultiPartition& la,
           const std::vector<std::pair<int, int>>& cycles) {
  if (cycles.empty()) return Cyc::one(cond);
  const std::pair<int, int> ctx{de, cond};
  const MnKey key{la, cycles};
  {
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    const auto& m = g_mn_cache[ctx];
    const auto it = m.find(key);
    if (it != m.end()) return it->second;
  }
  const auto [len, color] = cycles.front();
  const std::vector<std::pair<int, int>> rest(cycles.begin() + 1,
                                              cycles.end());
  Cyc total = Cyc::zero(cond);
  for (int c = 0; c < de; ++c) {
    const auto hooks = hooks_of_length(la[c], len);
    if (hooks.empty()) continue;
    Cyc sub = Cyc::zero(cond);
    for (const auto& [smaller, leg] : hooks) {
      MultiPartition la2 = la;
      la2[c] = smaller;
      const Cyc term = mn_rec(de, cond, la2, rest);
      sub = (leg % 2 != 0) ? sub - term : sub + term;
    }
    total = total + Cyc::zeta(cond, mod(static_cast<long long>(c) * color, de) *
                                        (cond / de)) *
                        sub;
  }
  {
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    g_mn_cache[ctx].emplace(key, total);
  }
  return total;
}

}  // namespace

Cyc character_value(int de, const MultiPartition& la, const CycleStructure& eta,
                    int conductor) {
  if (conductor % de != 0)
    throw error("character conductor must be a multiple of the group order parameter");
  if (size_of(la) != size_of(eta))
    throw error("character_value: size mismatch between label and class");
  std::vector<std::pair<int, int>> cycles;
  for (int u = 0; u < static_cast<int>(eta.size()); ++u)
    for (int part : eta[u]) cycles.emplace_back(part, u);
  std::sort(cycles.begin(), cycles.end(),
            std::greater<std::pair<int, int>>());
  return mn_rec(de, conductor, la, cycles).embed(conductor);
}

GCharacterTable character_table_g(int de, int r, int threads) {
  (void)threads;
  GCharacterTable t;
  t.de = de;
  t.r = r;
  t.conductor = de;
  t.classes = multipartitions(r, de);
  t.irreps = multipartitions(r, de);
  t.centralizer_orders.reserve(t.classes.size());
  for (const auto& eta : t.classes)
    t.centralizer_orders.push_back(centralizer_order_g(de, eta));
  t.values.assign(t.irreps.size(),
                  std::vector<Cyc>(t.classes.size(), Cyc::zero(de)));
  for (std::size_t i = 0; i < t.irreps.size(); ++i)
    for (std::size_t j = 0; j < t.classes.size(); ++j)
      t.values[i][j] = character_value(de, t.irreps[i], t.classes[j], de);
  return t;
}

}  // namespace crg
