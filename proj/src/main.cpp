#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "crg/cache.hpp"
#include "crg/jobs.hpp"
#include "crg/report.hpp"
#include "crg/selftest.hpp"

namespace {

using namespace crg;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_bounds(int de, int e, int r, int r2, bool allow_large) {
  if (de < 1 || e < 1 || de % e != 0)
    throw UsageError("--e must be a positive divisor of --de");
  if (r < 0 || r2 < 0) throw UsageError("--r/--r2 must be non-negative");
  if (e > 1 && r < 1)
    throw UsageError("--r must be positive when --e exceeds 1");
  if (!allow_large && (de > 8 || r > 7 || r2 > 7))
    throw desk_bound_error(
        "parameters exceed the desk-size bounds (de <= 8, r <= 7); pass "
        "--allow-large to override");
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::trunc);
  if (!out) throw error("cannot open output file: " + output);
  out << text;
}

std::string cyc_to_cache(const Cyc& v) {
  std::string s = std::to_string(v.conductor()) + ";";
  const auto coords = v.coord_strings();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += coords[i];
  }
  return s;
}

Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

std::optional<Cyc> cyc_from_cache(const std::string& line) {
  const auto semi = line.find(';');
  if (semi == std::string::npos) return std::nullopt;
  try {
    const int conductor = std::stoi(line.substr(0, semi));
    std::vector<Rat> coords;
    std::string rest = line.substr(semi + 1);
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) coords.push_back(rat_from_string(tok));
    if (static_cast<int>(coords.size()) != Cyc::phi(conductor))
      return std::nullopt;
    return Cyc::from_coords(conductor, coords);
  } catch (...) {
    return std::nullopt;
  }
}

// Loads or computes the value rows of a table, one cache entry per row.
template <typename RowKeyFn, typename CellFn>
void fill_rows_cached(std::vector<std::vector<Cyc>>& values, int ncls,
                      int threads, const std::string& dir, RowKeyFn row_key,
                      CellFn cell) {
  const int nrows = static_cast<int>(values.size());
  std::vector<int> missing;
  for (int i = 0; i < nrows; ++i) {
    bool loaded = false;
    if (!dir.empty()) {
      if (const auto payload = cache_load(dir, row_key(i))) {
        std::stringstream ss(*payload);
        std::string line;
        std::vector<Cyc> row;
        while (std::getline(ss, line)) {
          if (line.empty()) continue;
          if (const auto v = cyc_from_cache(line)) row.push_back(*v);
        }
        if (static_cast<int>(row.size()) == ncls) {
          values[i] = std::move(row);
          loaded = true;
        }
      }
    }
    if (!loaded) missing.push_back(i);
  }
  const int ncells = static_cast<int>(missing.size()) * ncls;
  parallel_for(ncells, threads, [&](int c) {
    const int i = missing[c / ncls];
    const int j = c % ncls;
    values[i][j] = cell(i, j);
  });
  if (!dir.empty()) {
    for (int i : missing) {
      std::string payload;
      for (int j = 0; j < ncls; ++j) payload += cyc_to_cache(values[i][j]) + "\n";
      cache_store(dir, row_key(i), payload);
    }
  }
}

GCharacterTable build_g_table(int de, int r, int threads) {
  GCharacterTable t;
  t.de = de;
  t.r = r;
  t.conductor = de;
  t.classes = multipartitions(r, de);
  t.irreps = multipartitions(r, de);
  for (const auto& eta : t.classes)
    t.centralizer_orders.push_back(centralizer_order_g(de, eta));
  const int ncls = static_cast<int>(t.classes.size());
  t.values.assign(t.irreps.size(), std::vector<Cyc>(ncls, Cyc::zero(de)));
  const std::string dir = cache_dir_from_env();
  fill_rows_cached(
      t.values, ncls, threads, dir,
      [&](int i) {
        return "crg1|g-row|de=" + std::to_string(de) + "|r=" +
               std::to_string(r) + "|la=" + label_string(t.irreps[i]);
      },
      [&](int i, int j) {
        return character_value(de, t.irreps[i], t.classes[j], de);
      });
  return t;
}

NCharacterTable build_n_table(int d, int e, int r, int threads) {
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
  for (const auto& cl : t.classes)
    t.centralizer_orders.push_back(centralizer_order_n(d, e, cl.eta));
  const int ncls = static_cast<int>(t.classes.size());
  t.values.assign(t.labels.size(), std::vector<Cyc>(ncls, Cyc::zero(de)));
  const std::string dir = cache_dir_from_env();
  fill_rows_cached(
      t.values, ncls, threads, dir,
      [&](int i) {
        return "crg1|n-row|d=" + std::to_string(d) + "|e=" + std::to_string(e) +
               "|r=" + std::to_string(r) +
               "|la=" + label_string(t.labels[i].first) +
               "|k=" + std::to_string(t.labels[i].second);
      },
      [&](int i, int j) {
        return chi_value(d, e, t.labels[i].first, t.labels[i].second,
                         t.classes[j].eta, t.classes[j].j, de);
      });
  return t;
}

MultiPartition mp_from_json(const Json& j) {
  MultiPartition mp;
  for (const auto& part : j) {
    Partition p;
    for (const auto& x : part) p.push_back(x.get<int>());
    mp.push_back(p);
  }
  return mp;
}

int resolve_block_selector(const std::string& sel,
                           const std::vector<NBlock>& blocks,
                           const char* which) {
  const bool numeric =
      !sel.empty() && sel.find_first_not_of("0123456789") == std::string::npos;
  if (numeric) {
    const int idx = std::stoi(sel);
    if (idx < 0 || idx >= static_cast<int>(blocks.size()))
      throw UsageError(std::string(which) + ": block index out of range (" +
                       std::to_string(blocks.size()) + " blocks)");
    return idx;
  }
  Json j;
  try {
    j = Json::parse(sel);
  } catch (...) {
    throw UsageError(std::string(which) +
                     ": selector must be an index or a JSON object with "
                     "\"core\" and \"weight\"");
  }
  if (!j.is_object() || !j.contains("core") || !j.contains("weight"))
    throw UsageError(std::string(which) +
                     ": selector object needs \"core\" and \"weight\"");
  const MultiPartition core = mp_from_json(j["core"]);
  const std::vector<int> weight = j["weight"].get<std::vector<int>>();
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].core == core && blocks[i].weight == weight)
      return static_cast<int>(i);
  throw UsageError(std::string(which) + ": no block with the given label");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact character tables, block decompositions and verified block "
      "pairings for the complex reflection groups G(de,e,r)"};
  app.require_subcommand(1);

  int de = 1, e = 1, r = 0, r2 = 0, p = 0, threads = 1;
  bool allow_large = false, no_slices = false;
  std::string format = "json", output, block_sel, block2_sel;
  std::uint64_t seed = 20260814ULL;

  auto add_common = [&](CLI::App* sub, bool with_r2) {
    sub->add_option("--de", de, "order of the cyclic part")->required();
    sub->add_option("--e", e, "index parameter (divides de)");
    sub->add_option("--r", r, "rank")->required();
    if (with_r2) sub->add_option("--r2", r2, "rank of the second group")->required();
    sub->add_option("--threads", threads, "worker threads");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", output, "write to file instead of stdout");
    sub->add_flag("--allow-large", allow_large,
                  "lift the desk-size parameter bounds");
  };

  CLI::App* ct = app.add_subcommand("chartable",
                                    "exact character table of G(de,e,r)");
  add_common(ct, false);
  ct->add_option("--p", p, "annotate classes with p-regularity");

  CLI::App* bl = app.add_subcommand("blocks", "p-block decomposition");
  add_common(bl, false);
  bl->add_option("--p", p, "prime")->required();

  CLI::App* pf = app.add_subcommand(
      "perfiso", "pair two equal-weight blocks and verify the pairing");
  add_common(pf, true);
  pf->add_option("--p", p, "prime")->required();
  pf->add_option("--block", block_sel,
                 "source block: index or {\"core\":...,\"weight\":...}")
      ->required();
  pf->add_option("--block2", block2_sel, "target block selector")->required();
  pf->add_flag("--no-slices", no_slices,
               "skip the classwise decomposition identity");

  CLI::App* st = app.add_subcommand("selftest", "seeded invariant suites");
  st->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return 64;
  }

  try {
    if (ct->parsed()) {
      check_bounds(de, e, r, 0, allow_large);
      const int d = de / e;
      std::ostringstream buf;
      if (e == 1) {
        const GCharacterTable t = build_g_table(de, r, threads);
        if (format == "json")
          write_g_table_json(buf, t);
        else
          write_g_table_csv(buf, t);
      } else {
        const NCharacterTable t = build_n_table(d, e, r, threads);
        if (format == "json")
          write_n_table_json(buf, t, p);
        else
          write_n_table_csv(buf, t);
      }
      emit(buf.str(), output);
      return 0;
    }
    if (bl->parsed()) {
      check_bounds(de, e, r, 0, allow_large);
      const int d = de / e;
      std::ostringstream buf;
      if (e == 1) {
        const auto blocks = g_blocks(de, r, p);
        if (format == "json")
          buf << g_blocks_json(de, r, p, blocks).dump(2) << "\n";
        else
          write_g_blocks_csv(buf, blocks);
      } else {
        const auto blocks = n_blocks(d, e, r, p);
        if (format == "json")
          buf << n_blocks_json(d, e, r, p, blocks).dump(2) << "\n";
        else
          write_n_blocks_csv(buf, blocks);
      }
      emit(buf.str(), output);
      return 0;
    }
    if (pf->parsed()) {
      check_bounds(de, e, r, r2, allow_large);
      const int d = de / e;
      const auto src_blocks = n_blocks(d, e, r, p);
      const auto dst_blocks = n_blocks(d, e, r2, p);
      const int bi = resolve_block_selector(block_sel, src_blocks, "--block");
      const int bj =
          resolve_block_selector(block2_sel, dst_blocks, "--block2");
      const VerificationReport rep = verify_isometry(
          d, e, p, r, src_blocks[bi], r2, dst_blocks[bj], !no_slices, threads);
      std::ostringstream buf;
      if (format == "json")
        buf << report_json(rep).dump(2) << "\n";
      else
        write_report_csv(buf, rep);
      emit(buf.str(), output);
      if (rep.overall == "FAIL") return 1;
      if (rep.overall == "INDETERMINATE") return 2;
      return 0;
    }
    if (st->parsed()) {
      const int failures = run_selftest(seed, std::cout);
      return failures == 0 ? 0 : 1;
    }
  } catch (const UsageError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return 64;
  } catch (const desk_bound_error& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return 64;
  } catch (const bad_prime_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 65;
  } catch (const weight_mismatch_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 65;
  } catch (const mixed_defect_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 65;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 70;
  }
  return 0;
}
