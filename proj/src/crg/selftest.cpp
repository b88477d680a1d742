#include "crg/selftest.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <string>

#include "crg/perfiso.hpp"

namespace crg {

namespace {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int uniform(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(eng);
  }
};

Partition random_partition(Rng& rng, int max_n) {
  const int n = rng.uniform(0, max_n);
  const auto ps = partitions_of(n);
  return ps[rng.uniform(0, static_cast<int>(ps.size()) - 1)];
}

MultiPartition random_label(Rng& rng, int r, int k) {
  const auto all = multipartitions(r, k);
  return all[rng.uniform(0, static_cast<int>(all.size()) - 1)];
}

Cyc random_cyc(Rng& rng, int conductor) {
  std::vector<Rat> coords;
  const int deg = Cyc::phi(conductor);
  coords.reserve(deg);
  for (int i = 0; i < deg; ++i)
    coords.emplace_back(rng.uniform(-3, 3), rng.uniform(1, 3));
  return Cyc::from_coords(conductor, coords);
}

GroupElement random_element(Rng& rng, int de, int r) {
  GroupElement g = g_identity(de, r);
  for (int i = 0; i < r; ++i) g.z[i] = rng.uniform(0, de - 1);
  std::shuffle(g.sigma.begin(), g.sigma.end(), rng.eng);
  return g;
}

bool suite_partition_abacus(Rng& rng) {
  const int primes[] = {2, 3, 5};
  for (int it = 0; it < 200; ++it) {
    const Partition la = random_partition(rng, 12);
    const int p = primes[rng.uniform(0, 2)];
    const CoreQuotientData cq = core_quotient(la, p);
    if (!is_p_core(cq.core, p)) return false;
    if (size_of(la) != size_of(cq.core) + p * cq.weight) return false;
    int qsz = 0;
    for (const auto& part : cq.quotient) qsz += size_of(part);
    if (qsz != cq.weight) return false;
    if (cq.sign != 1 && cq.sign != -1) return false;
    if (from_core_quotient(cq.core, cq.quotient, p) != la) return false;
    for (int l = 1; l <= size_of(la); ++l)
      for (const auto& [smaller, leg] : hooks_of_length(la, l)) {
        (void)leg;
        if (size_of(smaller) != size_of(la) - l) return false;
      }
  }
  return true;
}

bool suite_cyclotomic_ring(Rng& rng) {
  const int conductors[] = {1, 2, 3, 4, 6, 8, 12};
  for (int it = 0; it < 120; ++it) {
    const Cyc a = random_cyc(rng, conductors[rng.uniform(0, 6)]);
    const Cyc b = random_cyc(rng, conductors[rng.uniform(0, 6)]);
    const Cyc c = random_cyc(rng, conductors[rng.uniform(0, 6)]);
    if (!((a * b) * c == a * (b * c))) return false;
    if (!(a * (b + c) == a * b + a * c)) return false;
    if (!(a.conj() * b.conj() == (a * b).conj())) return false;
    if (!a.is_zero()) {
      if (!(a * a.inv() == Cyc::one(a.conductor()))) return false;
    }
  }
  for (int n = 1; n <= 16; ++n) {
    if (!(Cyc::zeta(n, n) == Cyc::one(n))) return false;
    // The minimal polynomial vanishes on the primitive root.
    const auto phi_n = Cyc::cyclotomic_poly(n);
    Cyc acc = Cyc::zero(n);
    for (std::size_t i = 0; i < phi_n.size(); ++i)
      acc = acc + Cyc::from_rat(phi_n[i]) * Cyc::zeta(n, static_cast<int>(i));
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool suite_finite_field(Rng& rng) {
  for (int de : {1, 2, 3, 4, 6}) {
    for (int p : {5, 7, 11}) {
      if (de % p == 0) continue;
      const FqContext ctx = make_fq_context(de, p);
      if (static_cast<int>(ctx.g.size()) != ctx.f + 1) return false;
      if (ctx.g.back() != 1) return false;
      // zeta reduces to an element of multiplicative order dividing de
      FqElement z = reduce_cyc(Cyc::zeta(de, 1), ctx);
      FqElement acc = fq_one(ctx);
      for (int i = 0; i < de; ++i) acc = fq_mul(acc, z, ctx);
      if (acc != fq_one(ctx)) return false;
      for (int it = 0; it < 20; ++it) {
        std::vector<Rat> ca, cb;
        for (int i = 0; i < Cyc::phi(de); ++i) {
          ca.emplace_back(rng.uniform(-4, 4));
          cb.emplace_back(rng.uniform(-4, 4));
        }
        const Cyc a = Cyc::from_coords(de, ca);
        const Cyc b = Cyc::from_coords(de, cb);
        if (reduce_cyc(a * b, ctx) !=
            fq_mul(reduce_cyc(a, ctx), reduce_cyc(b, ctx), ctx))
          return false;
        if (reduce_cyc(a + b, ctx) !=
            fq_add(reduce_cyc(a, ctx), reduce_cyc(b, ctx), ctx))
          return false;
      }
    }
  }
  return true;
}

bool suite_group_ops(Rng& rng) {
  for (const auto& [de, r] : std::vector<std::pair<int, int>>{
           {2, 3}, {3, 2}, {4, 2}, {6, 2}}) {
    for (int it = 0; it < 60; ++it) {
      const GroupElement x = random_element(rng, de, r);
      const GroupElement y = random_element(rng, de, r);
      const GroupElement z = random_element(rng, de, r);
      if (!(g_mul(de, g_mul(de, x, y), z) == g_mul(de, x, g_mul(de, y, z))))
        return false;
      if (!(g_mul(de, x, g_inv(de, x)) == g_identity(de, r))) return false;
      if (cycle_structure(de, g_conj(de, x, y)) != cycle_structure(de, y))
        return false;
    }
    for (const auto& eta : multipartitions(r, de))
      if (cycle_structure(de, class_rep(de, eta, r)) != eta) return false;
    BigInt total = 0;
    for (const auto& eta : multipartitions(r, de))
      total += group_order(de, r) / centralizer_order_g(de, eta);
    if (total != group_order(de, r)) return false;
  }
  return true;
}

bool suite_model_relations(Rng& rng) {
  for (const auto& [de, r] :
       std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
    const auto labels = multipartitions(r, de);
    BigInt sq = 0;
    for (const auto& la : labels) sq += wreath_dim(la) * wreath_dim(la);
    if (sq != group_order(de, r)) return false;
    for (int it = 0; it < 4; ++it) {
      const MultiPartition la = labels[rng.uniform(
          0, static_cast<int>(labels.size()) - 1)];
      const IrrepModel model(de, la, de);
      if (BigInt(model.dim()) != wreath_dim(la)) return false;
      if (!check_defining_relations(model)) return false;
      const auto classes = multipartitions(r, de);
      for (int jt = 0; jt < 3; ++jt) {
        const auto& eta =
            classes[rng.uniform(0, static_cast<int>(classes.size()) - 1)];
        if (!(model.trace(class_rep(de, eta, r)) ==
              character_value(de, la, eta, de)))
          return false;
      }
    }
  }
  return true;
}

bool suite_subgroup(Rng& rng) {
  for (const auto& [d, e, r] : std::vector<std::array<int, 3>>{
           {1, 2, 3}, {1, 3, 3}, {2, 2, 2}}) {
    const int de = d * e;
    const auto classes = n_classes(d, e, r);
    BigInt total = 0;
    const BigInt n_order = group_order(de, r) / e;
    for (const auto& cl : classes) total += n_order / centralizer_order_n(d, e, cl.eta);
    if (total != n_order) return false;
    std::vector<std::pair<CycleStructure, int>> flat;
    for (const auto& cl : classes) flat.emplace_back(cl.eta, cl.j);
    std::sort(flat.begin(), flat.end());
    if (flat != classes_geder_param(d, e, r)) return false;
    const auto transversal = orbit_transversal(d, e, r);
    for (int it = 0; it < 3; ++it) {
      const MultiPartition la = transversal[rng.uniform(
          0, static_cast<int>(transversal.size()) - 1)];
      const GederModel model(d, e, la, de);
      GroupElement t = g_identity(de, r);
      t.z[0] = 1;
      if (!model.intertwine_holds(t)) return false;
      for (int i = 0; i + 1 < r; ++i) {
        GroupElement si = g_identity(de, r);
        std::swap(si.sigma[i], si.sigma[i + 1]);
        if (!model.intertwine_holds(si)) return false;
      }
      for (int jt = 0; jt < 3; ++jt) {
        const auto& cl =
            classes[rng.uniform(0, static_cast<int>(classes.size()) - 1)];
        const int k = rng.uniform(0, model.extension_count() - 1);
        const GroupElement g = n_class_rep(d, e, r, cl.eta, cl.j);
        const Cyc v1 = model.delta_trace(g, k);
        const Cyc v2 = model.delta_trace_direct(g, k);
        const Cyc v3 = delta_fast(d, e, la, k, cl.eta, cl.j, de);
        if (!(v1 == v2) || !(v1 == v3)) return false;
      }
    }
  }
  return true;
}

bool suite_blocks(Rng& rng) {
  {
    const auto blocks = g_blocks(3, 3, 2);
    const auto labels = multipartitions(3, 3);
    std::map<MultiPartition, int> idx;
    for (std::size_t i = 0; i < labels.size(); ++i)
      idx[labels[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> predicted;
    for (const auto& b : blocks) {
      std::vector<int> part;
      for (const auto& la : b.members) part.push_back(idx.at(la));
      predicted.push_back(part);
    }
    if (canonical_partition(predicted) != central_character_fibers_g(3, 3, 2))
      return false;
  }
  {
    const auto blocks = n_blocks(1, 2, 3, 3);
    const auto tab = character_table_n(1, 2, 3, 1);
    std::map<std::pair<MultiPartition, int>, int> idx;
    for (std::size_t i = 0; i < tab.labels.size(); ++i)
      idx[tab.labels[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> predicted;
    for (const auto& b : blocks) {
      std::vector<int> part;
      for (const auto& lab : b.members) part.push_back(idx.at(lab));
      predicted.push_back(part);
    }
    if (canonical_partition(predicted) !=
        central_character_fibers_n(1, 2, 3, 3))
      return false;
  }
  for (int it = 0; it < 40; ++it) {
    const MultiPartition la = random_label(rng, rng.uniform(0, 6), 2);
    const int p = (rng.uniform(0, 1) == 0) ? 3 : 5;
    const auto [gamma, w] = block_label_g(la, p);
    const MultiPartition nu = random_label(rng, rng.uniform(0, 4), 2);
    const auto [gammap, wp] = block_label_g(nu, p);
    (void)wp;
    const MultiPartition image = psi_label(la, gammap, p);
    if (block_label_g(image, p).second != w) return false;
    if (psi_label(image, gamma, p) != la) return false;
  }
  return true;
}

bool suite_pairing(Rng&) {
  const auto src_blocks = n_blocks(1, 2, 3, 3);
  const auto dst_blocks = n_blocks(1, 2, 4, 3);
  bool found = false;
  for (const auto& src : src_blocks) {
    if (src.defect_zero) continue;
    for (const auto& dst : dst_blocks) {
      if (dst.defect_zero) continue;
      const VerificationReport rep =
          verify_isometry(1, 2, 3, 3, src, 4, dst, true, 1);
      if (rep.overall != "PASS") return false;
      found = true;
    }
  }
  return found;
}

}  // namespace

int run_selftest(std::uint64_t seed, std::ostream& os) {
  Rng rng(seed);
  int failures = 0;
  const auto run = [&](const char* name, auto&& fn) {
    bool ok = false;
    std::string msg;
    try {
      ok = fn(rng);
    } catch (const std::exception& ex) {
      msg = ex.what();
      ok = false;
    }
    os << name << ": " << (ok ? "ok" : "FAIL");
    if (!ok && !msg.empty()) os << " (" << msg << ")";
    os << "\n";
    if (!ok) ++failures;
  };
  run("partition-abacus", suite_partition_abacus);
  run("cyclotomic-ring", suite_cyclotomic_ring);
  run("finite-field", suite_finite_field);
  run("group-ops", suite_group_ops);
  run("model-relations", suite_model_relations);
  run("subgroup", suite_subgroup);
  run("blocks", suite_blocks);
  run("pairing", suite_pairing);
  return failures;
}

}  // namespace crg
