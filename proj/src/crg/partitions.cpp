#include "crg/partitions.hpp"

#include <algorithm>
#include <set>

namespace crg {

static void partitions_rec(int n, int maxpart, Partition& cur,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int first = std::min(n, maxpart); first >= 1; --first) {
    cur.push_back(first);
    partitions_rec(n - first, first, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n, int maxpart) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, maxpart, cur, out);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

std::vector<MultiPartition> multipartitions(int r, int k) {
  std::vector<MultiPartition> out;
  if (k == 1) {
    for (auto& p : partitions_of(r)) out.push_back({std::move(p)});
    return out;
  }
  for (int first_sz = r; first_sz >= 0; --first_sz) {
    for (const auto& p : partitions_of(first_sz)) {
      for (const auto& rest : multipartitions(r - first_sz, k - 1)) {
        MultiPartition mp;
        mp.reserve(k);
        mp.push_back(p);
        mp.insert(mp.end(), rest.begin(), rest.end());
        out.push_back(std::move(mp));
      }
    }
  }
  return out;
}

Partition q_star(int q, const Partition& pi) {
  Partition out(pi);
  for (int& x : out) x *= q;
  return out;
}

Partition q_unstar(int q, const Partition& pi) {
  Partition out(pi);
  for (int& x : out) {
    if (x % q != 0)
      throw not_divisible_error("part " + std::to_string(x) +
                                " is not a multiple of " + std::to_string(q));
    x /= q;
  }
  return out;
}

MultiPartition shift_label(const MultiPartition& mp, int d) {
  const int n = static_cast<int>(mp.size());
  MultiPartition out(n);
  for (int i = 0; i < n; ++i) out[i] = mp[mod(i + d, n)];
  return out;
}

MultiPartition stack_label(const MultiPartition& alpha, int t) {
  MultiPartition out;
  out.reserve(alpha.size() * t);
  for (int i = 0; i < t; ++i) out.insert(out.end(), alpha.begin(), alpha.end());
  return out;
}

MultiPartition unstack_label(const MultiPartition& mp, int q) {
  const int n = static_cast<int>(mp.size());
  if (n % q != 0)
    throw not_divisible_error("length not divisible by " + std::to_string(q));
  const int m = n / q;
  MultiPartition head(mp.begin(), mp.begin() + m);
  for (int i = m; i < n; ++i)
    if (mp[i] != head[i % m])
      throw not_divisible_error("label is not a repeated stack");
  return head;
}

std::pair<std::vector<int>, int> beta_set(const Partition& la, int p) {
  const int l = static_cast<int>(la.size());
  const int k = l > 0 ? ((l + p - 1) / p) * p : 0;
  std::vector<int> beta(k);
  for (int i = 0; i < k; ++i) beta[i] = (i < l ? la[i] : 0) + (k - 1 - i);
  return {beta, k};
}

CoreQuotientData core_quotient(const Partition& la, int p) {
  auto [beta, k] = beta_set(la, p);
  // Runner heights: bead b sits on runner b mod p at height b div p.
  std::vector<std::vector<int>> runners(p);
  for (int b : beta) runners[b % p].push_back(b / p);

  CoreQuotientData out;
  out.quotient.resize(p);
  for (int j = 0; j < p; ++j) {
    auto hs = runners[j];
    std::sort(hs.begin(), hs.end());
    const int s = static_cast<int>(hs.size());
    Partition parts;
    for (int i = 0; i < s; ++i) parts.push_back(hs[s - 1 - i] - (s - 1 - i));
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    out.quotient[j] = std::move(parts);
  }

  // Sign: push beads down one step at a time, smallest movable bead first;
  // each move contributes the number of beads strictly between the two slots.
  std::set<int> cur(beta.begin(), beta.end());
  long long legs = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int b : cur) {
      if (b - p >= 0 && cur.find(b - p) == cur.end()) {
        for (int x : cur)
          if (b - p < x && x < b) ++legs;
        cur.erase(b);
        cur.insert(b - p);
        changed = true;
        break;
      }
    }
  }
  std::vector<int> core_beta(cur.rbegin(), cur.rend());
  for (int i = 0; i < k; ++i) {
    const int part = core_beta[i] - (k - 1 - i);
    if (part > 0) out.core.push_back(part);
  }
  int w = 0;
  for (const auto& q : out.quotient) w += size_of(q);
  out.weight = w;
  out.sign = (legs % 2 == 0) ? 1 : -1;
  return out;
}

Partition from_core_quotient(const Partition& core,
                             const std::vector<Partition>& quotient, int p) {
  int w = 0;
  for (const auto& q : quotient) w += size_of(q);
  const int need = static_cast<int>(core.size()) + p * w;
  const int k = need > 0 ? ((need + p - 1) / p) * p : 0;
  std::vector<int> beta(k);
  for (int i = 0; i < k; ++i)
    beta[i] = (i < static_cast<int>(core.size()) ? core[i] : 0) + (k - 1 - i);
  std::vector<std::vector<int>> runners(p);
  for (int b : beta) runners[b % p].push_back(b / p);

  std::vector<int> out_beta;
  for (int j = 0; j < p; ++j) {
    auto hs = runners[j];
    std::sort(hs.begin(), hs.end());
    const int s = static_cast<int>(hs.size());
    std::vector<int> q(quotient[j]);
    q.resize(s, 0);
    // Largest quotient part raises the highest bead.
    std::vector<int> newh(s);
    for (int i = 0; i < s; ++i) newh[i] = hs[i] + q[s - 1 - i];
    std::sort(newh.begin(), newh.end());
    for (int h : newh) out_beta.push_back(h * p + j);
  }
  std::sort(out_beta.begin(), out_beta.end(), std::greater<int>());
  Partition la;
  for (int i = 0; i < k; ++i) {
    const int part = out_beta[i] - (k - 1 - i);
    if (part > 0) la.push_back(part);
  }
  return la;
}

std::vector<std::pair<Partition, int>> hooks_of_length(const Partition& la,
                                                       int l) {
  if (l == 0) return {{la, 0}};
  const int n = static_cast<int>(la.size());
  if (n == 0) return {};
  std::vector<int> beta(n);
  for (int i = 0; i < n; ++i) beta[i] = la[i] + (n - 1 - i);
  std::set<int> bs(beta.begin(), beta.end());
  std::vector<std::pair<Partition, int>> res;
  for (int b : beta) {
    if (b - l >= 0 && bs.find(b - l) == bs.end()) {
      int leg = 0;
      for (int x : bs)
        if (b - l < x && x < b) ++leg;
      std::vector<int> nb;
      for (int x : bs)
        if (x != b) nb.push_back(x);
      nb.push_back(b - l);
      std::sort(nb.begin(), nb.end(), std::greater<int>());
      Partition nl;
      for (int j = 0; j < n; ++j) {
        const int part = nb[j] - (n - 1 - j);
        if (part > 0) nl.push_back(part);
      }
      res.emplace_back(std::move(nl), leg);
    }
  }
  return res;
}

BigInt hook_length_count(const Partition& la) {
  const int n = size_of(la);
  if (n == 0) return 1;
  std::vector<int> conj(la[0], 0);
  for (int i = 0; i < static_cast<int>(la.size()); ++i)
    for (int j = 0; j < la[i]; ++j) ++conj[j];
  BigInt num = factorial(n);
  BigInt den = 1;
  for (int i = 0; i < static_cast<int>(la.size()); ++i)
    for (int j = 0; j < la[i]; ++j)
      den *= (la[i] - j) + (conj[j] - i) - 1;
  return num / den;
}

}  // namespace crg
