#include "crg/tableaux.hpp"

#include <algorithm>
#include <map>

namespace crg {

namespace {

void standard_rec(const Partition& shape, int n, std::vector<std::vector<int>>& rows,
                  int k, std::vector<Tableau>& out) {
  if (k == n) {
    out.emplace_back(rows.begin(), rows.end());
    return;
  }
  for (size_t i = 0; i < shape.size(); ++i) {
    if (static_cast<int>(rows[i].size()) < shape[i] &&
        (i == 0 || rows[i - 1].size() > rows[i].size())) {
      rows[i].push_back(k);
      standard_rec(shape, n, rows, k + 1, out);
      rows[i].pop_back();
    }
  }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  const int n = size_of(shape);
  std::vector<Tableau> out;
  if (n == 0) {
    out.push_back(Tableau{});
    return out;
  }
  std::vector<std::vector<int>> rows(shape.size());
  standard_rec(shape, n, rows, 0, out);
  return out;
}

std::pair<int, int> tableau_pos(const Tableau& t, int entry) {
  for (size_t r = 0; r < t.size(); ++r)
    for (size_t c = 0; c < t[r].size(); ++c)
      if (t[r][c] == entry) return {static_cast<int>(r), static_cast<int>(c)};
  throw error("entry not found in tableau");
}

bool tableau_is_standard(const Tableau& t) {
  for (size_t r = 0; r < t.size(); ++r)
    for (size_t c = 0; c < t[r].size(); ++c) {
      if (c + 1 < t[r].size() && t[r][c] > t[r][c + 1]) return false;
      if (r + 1 < t.size() && c < t[r + 1].size() && t[r][c] > t[r + 1][c])
        return false;
    }
  return true;
}

Tableau theta_standardize(const Tableau& t) {
  std::vector<int> entries;
  for (const auto& row : t) entries.insert(entries.end(), row.begin(), row.end());
  std::sort(entries.begin(), entries.end());
  std::map<int, int> rank;
  for (size_t i = 0; i < entries.size(); ++i) rank[entries[i]] = static_cast<int>(i);
  Tableau out(t);
  for (auto& row : out)
    for (int& v : row) v = rank[v];
  return out;
}

CMat specht_gen_matrix(const Partition& shape, int i, int conductor) {
  const auto sts = standard_tableaux(shape);
  std::map<Tableau, int> index;
  for (size_t j = 0; j < sts.size(); ++j) index[sts[j]] = static_cast<int>(j);
  const int dim = static_cast<int>(sts.size());
  CMat m(dim, std::vector<Cyc>(dim, Cyc::zero(conductor)));
  for (int j = 0; j < dim; ++j) {
    const Tableau& t = sts[j];
    auto [r1, c1] = tableau_pos(t, i);
    auto [r2, c2] = tableau_pos(t, i + 1);
    const int a = (c2 - r2) - (c1 - r1);  // axial distance, content(i+1)-content(i)
    if (r1 == r2) {
      m[j][j] = Cyc::one(conductor);  // same row: degenerate +1
    } else if (c1 == c2) {
      m[j][j] = -Cyc::one(conductor);  // same column: degenerate -1
    } else {
      Tableau sw(t);
      for (auto& row : sw)
        for (int& v : row) v = (v == i ? i + 1 : (v == i + 1 ? i : v));
      const Rat inv_a = rat_frac(1, a);
      m[index[sw]][j] = Cyc::from_rat(conductor, Rat(1) + inv_a);
      m[j][j] = Cyc::from_rat(conductor, inv_a);
    }
  }
  return m;
}

std::vector<int> perm_to_adjacent(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<int> arr(sigma);
  std::vector<int> word;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + 1 < n; ++j)
      if (arr[j] > arr[j + 1]) {
        std::swap(arr[j], arr[j + 1]);
        word.push_back(j);
      }
  std::reverse(word.begin(), word.end());
  // Verify: sigma equals the left-to-right product of value swaps.
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int j = *it;
    for (int& v : cur) v = (v == j ? j + 1 : (v == j + 1 ? j : v));
  }
  if (cur != sigma) throw error("adjacent-transposition decomposition failed");
  return word;
}

CMat specht_perm_matrix(const Partition& shape, const std::vector<int>& sigma,
                        int conductor) {
  const int dim = static_cast<int>(standard_tableaux(shape).size());
  CMat m = mat_identity(dim, conductor);
  for (int j : perm_to_adjacent(sigma))
    m = mat_mul(m, specht_gen_matrix(shape, j, conductor));
  return m;
}

CMat mat_mul(const CMat& a, const CMat& b) {
  const int n = static_cast<int>(a.size());
  const int kk = static_cast<int>(b.size());
  const int mcols = kk ? static_cast<int>(b[0].size()) : 0;
  const int cond = n ? a[0][0].conductor() : 1;
  CMat c(n, std::vector<Cyc>(mcols, Cyc::zero(cond)));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < kk; ++t) {
      if (a[i][t].is_zero()) continue;
      for (int j = 0; j < mcols; ++j)
        if (!b[t][j].is_zero()) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

CMat mat_identity(int dim, int conductor) {
  CMat m(dim, std::vector<Cyc>(dim, Cyc::zero(conductor)));
  for (int i = 0; i < dim; ++i) m[i][i] = Cyc::one(conductor);
  return m;
}

Cyc mat_trace(const CMat& m) {
  if (m.empty()) return Cyc();
  Cyc s = Cyc::zero(m[0][0].conductor());
  for (size_t i = 0; i < m.size(); ++i) s += m[i][i];
  return s;
}

bool mat_equal(const CMat& a, const CMat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

}  // namespace crg
