#include "crg/perfiso.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "crg/jobs.hpp"

namespace crg {

namespace {

int p_exponent(BigInt n, int p) {
  int a = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++a;
  }
  return a;
}

bool class_q_good(const CycleStructure& eta, int q) {
  for (int u = 0; u < static_cast<int>(eta.size()); ++u) {
    if (eta[u].empty()) continue;
    if (u % q != 0) return false;
    for (int part : eta[u])
      if (part % q != 0) return false;
  }
  return true;
}

CycleStructure compress_class(const CycleStructure& eta, int q) {
  const int de = static_cast<int>(eta.size());
  CycleStructure out(de / q);
  for (int u = 0; u < de / q; ++u)
    for (int part : eta[u * q]) out[u].push_back(part / q);
  return out;
}

}  // namespace

PairingSide block_side_values(
    int d, int e, int r,
    const std::vector<std::pair<MultiPartition, int>>& labels, int conductor,
    int threads) {
  PairingSide s;
  s.d = d;
  s.e = e;
  s.r = r;
  s.conductor = conductor;
  s.classes = n_classes(d, e, r);
  s.centralizers.reserve(s.classes.size());
  for (const auto& cl : s.classes)
    s.centralizers.push_back(centralizer_order_n(d, e, cl.eta));
  s.labels = labels;
  for (std::size_t i = 0; i < labels.size(); ++i)
    s.label_index[labels[i]] = static_cast<int>(i);
  const int ncls = static_cast<int>(s.classes.size());
  s.values.assign(labels.size(), std::vector<Cyc>(ncls, Cyc::zero(conductor)));
  const int ncells = static_cast<int>(labels.size()) * ncls;
  parallel_for(ncells, threads, [&](int cell) {
    const int i = cell / ncls;
    const int j = cell % ncls;
    s.values[i][j] =
        chi_value(d, e, labels[i].first, labels[i].second, s.classes[j].eta,
                  s.classes[j].j, conductor);
  });
  return s;
}

bool slice_check(const IsometryTable& iso, const NClassLabel& x,
                 const NClassLabel& xp, const Cyc& ihat_value, int conductor) {
  const int d = iso.d, e = iso.e, p = iso.p;
  const int de = d * e;
  const Cyc lhs = Cyc::from_rat(Rat(e)) * ihat_value;
  Cyc rhs = Cyc::zero(conductor);
  for (int q : divisors(e)) {
    if (!class_q_good(x.eta, q) || !class_q_good(xp.eta, q)) continue;
    Cyc ksum = Cyc::zero(conductor);
    for (int k = 0; k < e; ++k) {
      if (e / std::gcd(e, k) != q) continue;
      ksum = ksum + Cyc::zeta(conductor,
                              mod(static_cast<long long>(d) * k * (xp.j - x.j),
                                  de) *
                                  (conductor / de));
    }
    Cyc jq = Cyc::zero(conductor);
    for (const auto& [la, psila] : iso.label_map) {
      const int csize = stabilizer(d, e, la).orbit_count;
      if (csize % q != 0) continue;
      const MultiPartition mu = unstack_label(la, q);
      const MultiPartition mup = unstack_label(psila, q);
      const int sgn = delta_p_sign(mu, p) * delta_p_sign(mup, p);
      const Cyc val =
          character_value(de / q, mu, compress_class(x.eta, q), conductor)
              .conj() *
          character_value(de / q, mup, compress_class(xp.eta, q), conductor);
      jq = (sgn == 1) ? jq + val : jq - val;
    }
    const int ell = total_length(x.eta) + total_length(xp.eta);
    rhs = rhs + Cyc::from_rat(Rat(bigint_pow(BigInt(q), ell))) * ksum * jq;
  }
  return lhs == rhs;
}

VerificationReport verify_isometry(int d, int e, int p, int r,
                                   const NBlock& src, int r2, const NBlock& dst,
                                   bool with_slices, int threads) {
  VerificationReport rep;
  rep.iso = isometry(d, e, p, r, src, r2, dst);
  const int de = d * e;
  const int conductor = de;
  std::set<std::pair<MultiPartition, int>> src_labels, dst_labels;
  for (const auto& en : rep.iso.entries) {
    src_labels.insert({en.src, en.k});
    dst_labels.insert({en.dst, en.kk});
  }
  rep.src_side = block_side_values(
      d, e, r, {src_labels.begin(), src_labels.end()}, conductor, threads);
  rep.dst_side = block_side_values(
      d, e, r2, {dst_labels.begin(), dst_labels.end()}, conductor, threads);
  const int na = static_cast<int>(rep.src_side.classes.size());
  const int nb = static_cast<int>(rep.dst_side.classes.size());
  rep.ihat.assign(na, std::vector<Cyc>(nb, Cyc::zero(conductor)));
  parallel_for(na * nb, threads, [&](int cell) {
    const int i = cell / nb;
    const int j = cell % nb;
    Cyc total = Cyc::zero(conductor);
    for (const auto& en : rep.iso.entries) {
      const Cyc a =
          rep.src_side.values[rep.src_side.label_index.at({en.src, en.k})][i];
      const Cyc b =
          rep.dst_side.values[rep.dst_side.label_index.at({en.dst, en.kk})][j];
      const Cyc term = a.conj() * b;
      total = (en.sign == 1) ? total + term : total - term;
    }
    rep.ihat[i][j] = total;
  });

  rep.condition1 = "PASS";
  rep.condition2 = "PASS";
  for (int i = 0; i < na; ++i) {
    const int ai = p_exponent(rep.src_side.centralizers[i], p);
    const bool sing_i = class_p_singular(rep.src_side.classes[i].eta, p);
    for (int j = 0; j < nb; ++j) {
      const int aj = p_exponent(rep.dst_side.centralizers[j], p);
      try {
        if (!divisible_by_p_power(rep.ihat[i][j], p, std::max(ai, aj))) {
          rep.condition1 = "INDETERMINATE";
          rep.witnesses_condition1.push_back(
              {i, j, "value not divisible by both centralizer p-parts"});
        }
      } catch (const not_integral_error&) {
        rep.condition1 = "INDETERMINATE";
        rep.witnesses_condition1.push_back(
            {i, j, "value is not an algebraic integer"});
      }
      if (!rep.ihat[i][j].is_zero() &&
          sing_i != class_p_singular(rep.dst_side.classes[j].eta, p)) {
        rep.condition2 = "FAIL";
        rep.witnesses_condition2.push_back(
            {i, j, "nonzero value between classes of different p-singularity"});
      }
    }
  }

  if (with_slices && !rep.iso.defect_zero) {
    rep.slice = "PASS";
    std::vector<char> ok(static_cast<std::size_t>(na) * nb, 1);
    parallel_for(na * nb, threads, [&](int cell) {
      const int i = cell / nb;
      const int j = cell % nb;
      ok[cell] = slice_check(rep.iso, rep.src_side.classes[i],
                             rep.dst_side.classes[j], rep.ihat[i][j], conductor)
                     ? 1
                     : 0;
    });
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j)
        if (!ok[static_cast<std::size_t>(i) * nb + j]) {
          rep.slice = "FAIL";
          rep.witnesses_slice.push_back(
              {i, j, "classwise decomposition identity violated"});
        }
  } else {
    rep.slice = "SKIPPED";
  }

  if (rep.condition2 == "FAIL" || rep.slice == "FAIL")
    rep.overall = "FAIL";
  else if (rep.condition1 == "INDETERMINATE")
    rep.overall = "INDETERMINATE";
  else
    rep.overall = "PASS";
  return rep;
}

std::vector<std::vector<int>> canonical_partition(
    std::vector<std::vector<int>> parts) {
  for (auto& part : parts) std::sort(part.begin(), part.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

namespace {

std::vector<std::vector<int>> group_by_key(
    const std::vector<std::vector<FqElement>>& keys) {
  std::map<std::vector<FqElement>, std::vector<int>> fibers;
  for (std::size_t i = 0; i < keys.size(); ++i)
    fibers[keys[i]].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  out.reserve(fibers.size());
  for (auto& [k, v] : fibers) out.push_back(std::move(v));
  return canonical_partition(out);
}

}  // namespace

std::vector<std::vector<int>> central_character_fibers_g(int de, int r, int p) {
  const FqContext ctx = make_fq_context(de, p);
  const GCharacterTable tab = character_table_g(de, r, 1);
  const BigInt order = group_order(de, r);
  std::vector<std::vector<FqElement>> keys(tab.irreps.size());
  for (std::size_t i = 0; i < tab.irreps.size(); ++i) {
    const BigInt dim = wreath_dim(tab.irreps[i]);
    for (std::size_t j = 0; j < tab.classes.size(); ++j) {
      const BigInt class_size = order / tab.centralizer_orders[j];
      const Cyc omega =
          tab.values[i][j] * Cyc::from_rat(Rat(class_size, dim));
      keys[i].push_back(reduce_cyc(omega, ctx));
    }
  }
  return group_by_key(keys);
}

std::vector<std::vector<int>> central_character_fibers_n(int d, int e, int r,
                                                         int p) {
  const int de = d * e;
  const FqContext ctx = make_fq_context(de, p);
  const NCharacterTable tab = character_table_n(d, e, r, 1);
  const BigInt order = group_order(de, r) / e;
  std::vector<std::vector<FqElement>> keys(tab.labels.size());
  for (std::size_t i = 0; i < tab.labels.size(); ++i) {
    const BigInt dim = wreath_dim(tab.labels[i].first) /
                       stabilizer(d, e, tab.labels[i].first).orbit_count;
    for (std::size_t j = 0; j < tab.classes.size(); ++j) {
      const BigInt class_size = order / tab.centralizer_orders[j];
      const Cyc omega =
          tab.values[i][j] * Cyc::from_rat(Rat(class_size, dim));
      keys[i].push_back(reduce_cyc(omega, ctx));
    }
  }
  return group_by_key(keys);
}

}  // namespace crg
