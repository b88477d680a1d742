#include "crg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace crg {

namespace {

std::mutex g_table_mutex;

// Exact polynomial division (ascending coefficients); remainder must vanish.
std::vector<Rat> poly_div_exact(std::vector<Rat> num,
                                const std::vector<Rat>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  std::vector<Rat> quot(dn - dd + 1, Rat(0));
  for (int k = dn - dd; k >= 0; --k) {
    Rat c = num[k + dd] / den[dd];
    quot[k] = c;
    if (c != 0)
      for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  for (const Rat& c : num)
    if (c != 0) throw error("polynomial division is not exact");
  return quot;
}

std::map<int, std::vector<Rat>>& phi_cache() {
  static std::map<int, std::vector<Rat>> cache;
  return cache;
}

const std::vector<Rat>& cyclotomic_poly_locked(int n) {
  auto& cache = phi_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by the cyclotomic polynomials of all proper divisors.
  std::vector<Rat> poly(n + 1, Rat(0));
  poly[0] = Rat(-1);
  poly[n] = Rat(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) poly = poly_div_exact(std::move(poly), cyclotomic_poly_locked(d));
  return cache.emplace(n, std::move(poly)).first->second;
}

// Reduce an ascending-coefficient polynomial modulo Phi_n (monic).
std::vector<Rat> poly_mod(std::vector<Rat> p, const std::vector<Rat>& ph) {
  const int deg = static_cast<int>(ph.size()) - 1;
  while (static_cast<int>(p.size()) > deg) {
    Rat top = p.back();
    p.pop_back();
    if (top != 0) {
      const int off = static_cast<int>(p.size()) - deg;
      for (int i = 0; i < deg; ++i) p[off + i] -= top * ph[i];
    }
  }
  p.resize(deg, Rat(0));
  return p;
}

// zeta_n^k reduced mod Phi_n, for 0 <= k < n; memoized per conductor.
const std::vector<std::vector<Rat>>& zeta_table_locked(int n) {
  static std::map<int, std::vector<std::vector<Rat>>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const auto& ph = cyclotomic_poly_locked(n);
  const int deg = static_cast<int>(ph.size()) - 1;
  std::vector<std::vector<Rat>> table(n);
  std::vector<Rat> cur(deg, Rat(0));
  cur[0] = Rat(1);
  for (int k = 0; k < n; ++k) {
    table[k] = cur;
    // multiply by x, then reduce
    cur.insert(cur.begin(), Rat(0));
    cur = poly_mod(std::move(cur), ph);
  }
  return cache.emplace(n, std::move(table)).first->second;
}

std::string rat_string(const Rat& v) {
  std::ostringstream os;
  os << numerator(v) << '/' << denominator(v);
  return os.str();
}

}  // namespace

int Cyc::phi(int n) {
  std::lock_guard<std::mutex> lk(g_table_mutex);
  return static_cast<int>(cyclotomic_poly_locked(n).size()) - 1;
}

const std::vector<Rat>& Cyc::cyclotomic_poly(int n) {
  std::lock_guard<std::mutex> lk(g_table_mutex);
  return cyclotomic_poly_locked(n);
}

Cyc Cyc::zero(int n) { return Cyc(n, std::vector<Rat>(phi(n), Rat(0))); }

Cyc Cyc::from_rat(int n, const Rat& v) {
  std::vector<Rat> c(phi(n), Rat(0));
  c[0] = v;
  return Cyc(n, std::move(c));
}

Cyc Cyc::from_coords(int n, std::vector<Rat> coords) {
  if (static_cast<int>(coords.size()) != phi(n))
    throw error("coordinate count does not match the conductor");
  return Cyc(n, std::move(coords));
}

Cyc Cyc::zeta(int n, long long k) {
  std::lock_guard<std::mutex> lk(g_table_mutex);
  const auto& table = zeta_table_locked(n);
  return Cyc(n, table[mod(k, n)]);
}

bool Cyc::is_zero() const {
  for (const Rat& v : c_)
    if (v != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyc::rational_value() const {
  if (!is_rational()) throw error("value is not rational");
  return c_[0];
}

bool Cyc::is_integral() const {
  for (const Rat& v : c_)
    if (denominator(v) != 1) return false;
  return true;
}

Cyc Cyc::conj() const {
  std::lock_guard<std::mutex> lk(g_table_mutex);
  const auto& table = zeta_table_locked(n_);
  std::vector<Rat> out(c_.size(), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& pw = table[mod(-static_cast<long long>(i), n_)];
    for (size_t j = 0; j < out.size(); ++j) out[j] += c_[i] * pw[j];
  }
  return Cyc(n_, std::move(out));
}

Cyc Cyc::inv() const {
  if (is_zero()) throw division_by_zero_error("inverse of zero");
  const int deg = static_cast<int>(c_.size());
  // Solve (x * sum_j y_j zeta^j) = 1 as a linear system in the y_j.
  std::vector<std::vector<Rat>> a(deg, std::vector<Rat>(deg + 1, Rat(0)));
  for (int j = 0; j < deg; ++j) {
    Cyc col = *this * Cyc::zeta(n_, j);
    for (int i = 0; i < deg; ++i) a[i][j] = col.c_[i];
  }
  a[0][deg] = Rat(1);
  for (int col = 0, row = 0; col < deg && row < deg; ++col) {
    int piv = -1;
    for (int i = row; i < deg; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    const Rat lead = a[row][col];
    for (int j = col; j <= deg; ++j) a[row][j] /= lead;
    for (int i = 0; i < deg; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rat f = a[i][col];
      for (int j = col; j <= deg; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
  }
  std::vector<Rat> y(deg, Rat(0));
  for (int i = 0; i < deg; ++i) y[i] = a[i][deg];
  return Cyc(n_, std::move(y));
}

Cyc Cyc::embed(int m) const {
  if (m % n_ != 0)
    throw not_divisible_error("conductor " + std::to_string(n_) +
                              " does not divide " + std::to_string(m));
  if (m == n_) return *this;
  std::lock_guard<std::mutex> lk(g_table_mutex);
  const auto& table = zeta_table_locked(m);
  const int k = m / n_;
  std::vector<Rat> out(table[0].size(), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& pw = table[mod(static_cast<long long>(i) * k, m)];
    for (size_t j = 0; j < out.size(); ++j) out[j] += c_[i] * pw[j];
  }
  return Cyc(m, std::move(out));
}

void Cyc::align(Cyc& a, Cyc& b) {
  if (a.n_ == b.n_) return;
  const int m = std::lcm(a.n_, b.n_);
  a = a.embed(m);
  b = b.embed(m);
}

Cyc Cyc::operator-() const {
  Cyc out(*this);
  for (Rat& v : out.c_) v = -v;
  return out;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (n_ != o.n_) {
    Cyc b = o;
    align(*this, b);
    return *this += b;
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  if (n_ != o.n_) {
    Cyc b = o;
    align(*this, b);
    return *this -= b;
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  if (n_ != o.n_) {
    Cyc b = o;
    align(*this, b);
    return *this *= b;
  }
  const size_t da = c_.size(), db = o.c_.size();
  std::vector<Rat> m(da + db - 1, Rat(0));
  for (size_t i = 0; i < da; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < db; ++j)
      if (o.c_[j] != 0) m[i + j] += c_[i] * o.c_[j];
  }
  {
    std::lock_guard<std::mutex> lk(g_table_mutex);
    c_ = poly_mod(std::move(m), cyclotomic_poly_locked(n_));
  }
  return *this;
}

Cyc& Cyc::operator*=(const Rat& s) {
  for (Rat& v : c_) v *= s;
  return *this;
}

bool Cyc::operator==(const Cyc& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  Cyc a = *this, b = o;
  align(a, b);
  return a.c_ == b.c_;
}

std::vector<std::string> Cyc::coord_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const Rat& v : c_) out.push_back(rat_string(v));
  return out;
}

std::string Cyc::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat v = c_[i];
    if (first) {
      if (v < 0) {
        os << '-';
        v = -v;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    const bool unit = (v == 1) && i > 0;
    if (!unit) {
      os << numerator(v);
      if (denominator(v) != 1) os << '/' << denominator(v);
    }
    if (i > 0) {
      if (!unit) os << '*';
      os << 'z' << n_;
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

bool divisible_by_p_power(const Cyc& x, int p, int a) {
  BigInt pa = bigint_pow(p, a);
  for (const Rat& v : x.coords()) {
    if (denominator(v) != 1)
      throw not_integral_error("coordinate " + rat_string(v) +
                               " is not an integer");
    if (numerator(v) % pa != 0) return false;
  }
  return true;
}

}  // namespace crg
