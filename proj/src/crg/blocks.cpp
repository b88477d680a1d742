#include "crg/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace crg {

namespace {

void require_good_prime(int de, int p) {
  if (!is_prime(p))
    throw bad_prime_error("the block parameter must be a prime");
  if (de % p == 0)
    throw bad_prime_error("the block prime must not divide de");
}

std::vector<int> shift_vec(const std::vector<int>& v, int s) {
  const int n = static_cast<int>(v.size());
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = v[(i + s) % n];
  return out;
}

}  // namespace

std::pair<MultiPartition, std::vector<int>> block_label_g(
    const MultiPartition& la, int p) {
  MultiPartition core(la.size());
  std::vector<int> weight(la.size());
  for (std::size_t i = 0; i < la.size(); ++i) {
    const CoreQuotientData cq = core_quotient(la[i], p);
    core[i] = cq.core;
    weight[i] = cq.weight;
  }
  return {core, weight};
}

std::vector<GBlock> g_blocks(int de, int r, int p) {
  require_good_prime(de, p);
  std::map<std::pair<MultiPartition, std::vector<int>>, GBlock> by_label;
  for (const auto& la : multipartitions(r, de)) {
    const auto key = block_label_g(la, p);
    auto it = by_label.find(key);
    if (it == by_label.end()) {
      GBlock b;
      b.core = key.first;
      b.weight = key.second;
      b.defect_zero = std::all_of(key.second.begin(), key.second.end(),
                                  [](int w) { return w == 0; });
      it = by_label.emplace(key, std::move(b)).first;
    }
    it->second.members.push_back(la);
  }
  std::vector<GBlock> out;
  out.reserve(by_label.size());
  for (auto& [key, b] : by_label) out.push_back(std::move(b));
  return out;
}

std::vector<MultiPartition> enumerate_block(const MultiPartition& gamma,
                                            const std::vector<int>& weight,
                                            int p) {
  const std::size_t n = gamma.size();
  if (weight.size() != n)
    throw error("enumerate_block: core and weight sizes differ");
  std::vector<std::vector<Partition>> lists(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& q : multipartitions(weight[i], p))
      lists[i].push_back(from_core_quotient(gamma[i], q, p));
  std::vector<MultiPartition> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    MultiPartition la(n);
    for (std::size_t i = 0; i < n; ++i) la[i] = lists[i][pick[i]];
    out.push_back(std::move(la));
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && pick[i] + 1 == lists[i].size()) {
      pick[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++pick[i];
  }
  return out;
}

std::vector<NBlock> n_blocks(int d, int e, int r, int p) {
  const int de = d * e;
  require_good_prime(de, p);
  const std::vector<GBlock> gbs = g_blocks(de, r, p);
  std::map<std::pair<MultiPartition, std::vector<int>>, int> gidx;
  for (std::size_t i = 0; i < gbs.size(); ++i)
    gidx[{gbs[i].core, gbs[i].weight}] = static_cast<int>(i);
  std::vector<NBlock> out;
  std::set<int> used;
  for (std::size_t i = 0; i < gbs.size(); ++i) {
    if (used.count(static_cast<int>(i))) continue;
    std::pair<MultiPartition, std::vector<int>> least{gbs[i].core,
                                                      gbs[i].weight};
    std::set<int> orbit;
    for (int t = 0; t < e; ++t) {
      const std::pair<MultiPartition, std::vector<int>> lab{
          shift_label(gbs[i].core, d * t), shift_vec(gbs[i].weight, d * t)};
      least = std::min(least, lab);
      orbit.insert(gidx.at(lab));
    }
    for (int idx : orbit) used.insert(idx);
    const std::vector<int> covered(orbit.begin(), orbit.end());
    if (!gbs[i].defect_zero) {
      NBlock nb;
      nb.core = least.first;
      nb.weight = least.second;
      nb.defect_zero = false;
      nb.members = irr_b_labels(d, e, gbs[i].members);
      nb.covered_by = covered;
      out.push_back(std::move(nb));
    } else {
      for (const auto& lab : irr_b_labels(d, e, gbs[i].members)) {
        NBlock nb;
        nb.core = least.first;
        nb.weight = least.second;
        nb.defect_zero = true;
        nb.members = {lab};
        nb.covered_by = covered;
        out.push_back(std::move(nb));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const NBlock& a, const NBlock& b) {
    return std::tie(a.core, a.weight, a.members) <
           std::tie(b.core, b.weight, b.members);
  });
  return out;
}

MultiPartition psi_label(const MultiPartition& la, const MultiPartition& gammap,
                         int p) {
  if (gammap.size() != la.size())
    throw weight_mismatch_error("psi_label: component counts differ");
  MultiPartition out(la.size());
  for (std::size_t i = 0; i < la.size(); ++i) {
    const CoreQuotientData cq = core_quotient(la[i], p);
    out[i] = from_core_quotient(gammap[i], cq.quotient, p);
  }
  return out;
}

int delta_p_sign(const MultiPartition& la, int p) {
  int s = 1;
  for (const auto& part : la) s *= core_quotient(part, p).sign;
  return s;
}

std::vector<std::pair<MultiPartition, int>> irr_b_labels(
    int d, int e, const std::vector<MultiPartition>& labels) {
  std::set<std::pair<MultiPartition, int>> s;
  for (const auto& la : labels) {
    const MultiPartition rep = orbit_rep(la, d);
    const int csize = stabilizer(d, e, la).orbit_count;
    for (int k = 0; k < csize; ++k) s.insert({rep, k});
  }
  return {s.begin(), s.end()};
}

std::map<MultiPartition, MultiPartition> saturate_block(
    int d, int e, int p, const MultiPartition& gamma,
    const std::vector<int>& weight, const MultiPartition& gammap) {
  std::map<MultiPartition, MultiPartition> f;
  for (int jj = 0; jj < e; ++jj) {
    const MultiPartition g2 = shift_label(gamma, d * jj);
    const std::vector<int> w2 = shift_vec(weight, d * jj);
    if (jj > 0 && g2 == gamma && w2 == weight) break;
    const MultiPartition gp2 = shift_label(gammap, d * jj);
    for (const auto& la : enumerate_block(g2, w2, p))
      f[la] = psi_label(la, gp2, p);
  }
  return f;
}

IsometryTable isometry(int d, int e, int p, int r, const NBlock& src, int r2,
                       const NBlock& dst) {
  require_good_prime(d * e, p);
  if (src.defect_zero != dst.defect_zero)
    throw mixed_defect_error(
        "isometry: one block has defect zero and the other does not");
  IsometryTable t;
  t.d = d;
  t.e = e;
  t.p = p;
  t.r = r;
  t.r2 = r2;
  t.defect_zero = src.defect_zero;
  if (t.defect_zero) {
    if (src.members.size() != 1 || dst.members.size() != 1)
      throw error("isometry: defect-zero block with several members");
    t.gamma = src.core;
    t.gammap = dst.core;
    t.weight = src.weight;
    t.label_map[src.members[0].first] = dst.members[0].first;
    t.entries.push_back({src.members[0].first, src.members[0].second, 1,
                         dst.members[0].first, dst.members[0].second});
    return t;
  }
  int align = -1;
  for (int jj = 0; jj < e; ++jj) {
    if (shift_vec(dst.weight, d * jj) == src.weight) {
      align = jj;
      break;
    }
  }
  if (align < 0)
    throw weight_mismatch_error(
        "isometry: no shift of the target block matches the source weights");
  t.gamma = src.core;
  t.weight = src.weight;
  t.gammap = shift_label(dst.core, d * align);
  t.label_map = saturate_block(d, e, p, t.gamma, t.weight, t.gammap);
  std::vector<MultiPartition> keys;
  keys.reserve(t.label_map.size());
  for (const auto& [la, im] : t.label_map) keys.push_back(la);
  for (const auto& [rep, k] : irr_b_labels(d, e, keys)) {
    const MultiPartition& psila = t.label_map.at(rep);
    const int csize = stabilizer(d, e, rep).orbit_count;
    const int sign = delta_p_sign(rep, p) * delta_p_sign(psila, p);
    int kk = k;
    if (csize % 2 == 0) {
      const int tw = delta_p_sign(unstack_label(rep, csize), p) *
                     delta_p_sign(unstack_label(psila, csize), p);
      if (tw == -1) kk = mod(k - csize / 2, csize);
    }
    t.entries.push_back({rep, k, sign, orbit_rep(psila, d), kk});
  }
  return t;
}

int delta_image_sign(int d, int e, int p, const MultiPartition& la,
                     const MultiPartition& psila, int k) {
  const int csize = stabilizer(d, e, la).orbit_count;
  const int q = csize / std::gcd(csize, mod(k, csize) == 0 ? csize : mod(k, csize));
  return delta_p_sign(unstack_label(la, q), p) *
         delta_p_sign(unstack_label(psila, q), p);
}

}  // namespace crg
