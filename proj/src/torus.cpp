#include "torus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lch {

TorusElt TorusElt::zero(int rank) {
  TorusElt t;
  t.a.assign(rank, mpq_class(0));
  return t;
}

mpq_class TorusElt::mod1(const mpq_class& x) {
  mpz_class num = x.get_num(), den = x.get_den();
  mpz_class m = num % den;
  if (m < 0) m += den;
  mpq_class r(m, den);
  r.canonicalize();
  return r;
}

TorusElt TorusElt::add(const TorusElt& o) const {
  TorusElt t;
  t.a.resize(a.size());
  for (size_t i = 0; i < a.size(); ++i) t.a[i] = mod1(a[i] + o.a[i]);
  return t;
}

TorusElt TorusElt::neg() const {
  TorusElt t;
  t.a.resize(a.size());
  for (size_t i = 0; i < a.size(); ++i) t.a[i] = mod1(-a[i]);
  return t;
}

TorusElt TorusElt::scaled(const mpz_class& k) const {
  TorusElt t;
  t.a.resize(a.size());
  for (size_t i = 0; i < a.size(); ++i) t.a[i] = mod1(a[i] * k);
  return t;
}

bool TorusElt::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

long TorusElt::element_order() const {
  mpz_class l = 1;
  for (const auto& x : a) {
    mpz_class den(x.get_den());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  if (!l.fits_slong_p()) throw value_error("element order too large");
  return l.get_si();
}

namespace {
std::string entry_str(const mpq_class& x) {
  if (x == 0) return "1";
  if (x == mpq_class(1, 2)) return "-1";
  long n = mpz_class(x.get_den()).get_si();
  long k = mpz_class(x.get_num()).get_si();
  std::string s = "E(" + std::to_string(n) + ")";
  if (k != 1) s += "^" + std::to_string(k);
  return s;
}
}  // namespace

std::string TorusElt::h_str() const {
  std::string s = "h(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += entry_str(a[i]);
  }
  return s + ")";
}

std::string TorusElt::h_str_symbolic(long n) const {
  std::string s = "h(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    const mpq_class& x = a[i];
    if (x == 0) {
      s += "1";
      continue;
    }
    mpq_class scaled = x * n;
    if (scaled.get_den() != 1) throw value_error("entry not a power of the symbol");
    long k = mpz_class(scaled.get_num()).get_si() % n;
    if (k > n / 2) k -= n;  // prefer x^-1 over x^(n-1)
    if (k == 1)
      s += "x";
    else
      s += "x^" + std::to_string(k);
  }
  return s + ")";
}

mpq_class root_value(const RootSystem& rs, int root_index, const TorusElt& t) {
  mpq_class v = 0;
  for (int j = 0; j < rs.rank(); ++j)
    v += t.a[j] * rs.pairing_with_simple_coroot(root_index, j);
  return TorusElt::mod1(v);
}

TorusElt weyl_action(const WeylGroup& w, const WeylElt& elt, const TorusElt& t) {
  IMat m = w.matrix_on_coroots(elt);
  TorusElt r = TorusElt::zero(t.rank());
  for (int i = 0; i < m.rows; ++i) {
    mpq_class s = 0;
    for (int j = 0; j < m.cols; ++j) s += t.a[j] * mpq_class(m.at(i, j));
    r.a[i] = TorusElt::mod1(s);
  }
  return r;
}

TorusElt frobenius(const RootSystem& rs, const TorusElt& t, long q,
                   const Automorphism& delta) {
  // F(sum a_i alpha_i^vee) = q * sum a_i (delta alpha_i)^vee
  TorusElt r = TorusElt::zero(t.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    int img = delta.apply_root(i);  // simple roots are indices 0..rank-1
    const RootVec& cv = rs.coroot(img);
    for (int j = 0; j < rs.rank(); ++j) r.a[j] += t.a[i] * q * cv[j];
  }
  for (auto& x : r.a) x = TorusElt::mod1(x);
  return r;
}

// ---------------------------------------------------------------------------

namespace {
// exact inverse of a unimodular integer matrix
IMat unimodular_inverse(const IMat& v) {
  int n = v.rows;
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = mpq_class(v.at(i, j));
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (a[i][col] != 0) { p = i; break; }
    if (p < 0) throw std::logic_error("singular unimodular matrix");
    std::swap(a[p], a[col]);
    mpq_class inv = a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] /= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  IMat r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a[i][n + j].get_den() != 1) throw std::logic_error("inverse not integral");
      r.at(i, j) = a[i][n + j].get_num();
    }
  return r;
}
}  // namespace

TorusSubgroup TorusSubgroup::kernel(const RootSystem& rs, const IMat& k) {
  TorusSubgroup g;
  g.rs_ = &rs;
  g.k_ = k;
  SmithResult s = smith_normal_form(k);
  int r = k.cols;
  int m = std::min(k.rows, k.cols);
  // K a = 0 mod 1 <=> D (V^{-1} a) = 0 mod 1; b_i ranges over (1/d_i)Z/Z,
  // coordinates of V beyond the diagonal block are free (torus part).
  g.finite_ = true;
  for (int i = m; i < r; ++i) {
    (void)i;
    g.finite_ = false;  // more columns than constraints: free circle factors
  }
  std::vector<std::pair<mpz_class, int>> fact;
  for (int i = 0; i < m; ++i) {
    mpz_class d = s.d.at(i, i);
    if (d == 0) {
      g.finite_ = false;
      continue;
    }
    if (d > 1) fact.emplace_back(d, i);
  }
  for (auto& [d, i] : fact) {
    g.factors_.push_back(d);
    g.cols_.push_back(i);
    TorusElt gen = TorusElt::zero(r);
    for (int row = 0; row < r; ++row)
      gen.a[row] = TorusElt::mod1(mpq_class(s.v.at(row, i), d));
    g.gens_.push_back(gen);
  }
  g.vinv_ = unimodular_inverse(s.v);
  return g;
}

TorusSubgroup TorusSubgroup::center_of(const WeylGroup& w, const Subsystem& sub) {
  const RootSystem& rs = w.root_system();
  const auto& simples = sub.simple_system();
  IMat k(static_cast<int>(simples.size()), rs.rank());
  for (size_t i = 0; i < simples.size(); ++i)
    for (int j = 0; j < rs.rank(); ++j)
      k.at(static_cast<int>(i), j) = rs.pairing_with_simple_coroot(simples[i], j);
  return kernel(rs, k);
}

TorusSubgroup TorusSubgroup::fixed_points(const WeylGroup& w, const WeylElt& elt,
                                          long q, const Automorphism& delta) {
  const RootSystem& rs = w.root_system();
  int r = rs.rank();
  // F(t) = w^{-1} t w  <=>  (q P - M_{w^{-1}}) a = 0 mod 1, where P is the
  // coroot matrix of the diagram permutation
  IMat p(r, r);
  for (int i = 0; i < r; ++i) {
    int img = delta.apply_root(i);
    const RootVec& cv = rs.coroot(img);
    for (int j = 0; j < r; ++j) p.at(j, i) = cv[j];
  }
  IMat m = w.matrix_on_coroots(w.inverse(elt));
  IMat k(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) k.at(i, j) = q * p.at(i, j) - m.at(i, j);
  return kernel(rs, k);
}

mpz_class TorusSubgroup::order() const {
  if (!finite_) throw value_error("infinite torus subgroup");
  mpz_class o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

std::string TorusSubgroup::structure_str() const {
  if (!finite_) return "positive-dimensional";
  if (factors_.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + factors_[i].get_str();
  }
  return s;
}

bool TorusSubgroup::contains(const TorusElt& t) const {
  for (int i = 0; i < k_.rows; ++i) {
    mpq_class v = 0;
    for (int j = 0; j < k_.cols; ++j) v += t.a[j] * mpq_class(k_.at(i, j));
    if (TorusElt::mod1(v) != 0) return false;
  }
  return true;
}

std::vector<mpz_class> TorusSubgroup::coordinates(const TorusElt& t) const {
  if (!contains(t)) throw value_error("element not in subgroup");
  // b = V^{-1} a has b_col = c/d at a factor column and integral elsewhere
  std::vector<mpz_class> out(factors_.size(), 0);
  for (size_t i = 0; i < factors_.size(); ++i) {
    mpq_class b = 0;
    for (int j = 0; j < vinv_.rows; ++j)
      b += mpq_class(vinv_.at(cols_[i], j)) * t.a[j];
    mpq_class c = TorusElt::mod1(b) * factors_[i];
    if (c.get_den() != 1) throw std::logic_error("coordinate not integral");
    out[i] = c.get_num();
  }
  return out;
}

std::vector<TorusElt> TorusSubgroup::elements(uint64_t limit) const {
  mpz_class o = order();
  if (o > limit) throw value_error("torus subgroup too large to enumerate");
  std::vector<TorusElt> out;
  std::vector<mpz_class> cur(factors_.size(), 0);
  for (;;) {
    TorusElt x = TorusElt::zero(k_.cols);
    for (size_t i = 0; i < cur.size(); ++i) x = x.add(gens_[i].scaled(cur[i]));
    out.push_back(x);
    size_t i = 0;
    for (; i < cur.size(); ++i) {
      cur[i] += 1;
      if (cur[i] < factors_[i]) break;
      cur[i] = 0;
    }
    if (i == cur.size()) break;
    if (cur.empty()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (mpz_class(static_cast<unsigned long>(out.size())) != o)
    throw std::logic_error("generator redundancy in torus subgroup");
  return out;
}

Cyc TorusChar::value(const TorusElt& t) const {
  auto c = group->coordinates(t);
  Cyc v(1);
  const auto& f = group->invariant_factors();
  for (size_t i = 0; i < c.size(); ++i) {
    mpz_class e = (exps[i] * c[i]) % f[i];
    v *= Cyc::root_of_unity(f[i].get_si(), e.get_si());
  }
  return v;
}

bool TorusChar::is_trivial() const {
  const auto& f = group->invariant_factors();
  for (size_t i = 0; i < exps.size(); ++i)
    if (exps[i] % f[i] != 0) return false;
  return true;
}

Cyc character_sum(const WeylGroup& w, const std::vector<WeylElt>& centralizer,
                  const TorusChar& theta, const TorusElt& t) {
  Cyc s;
  for (const auto& c : centralizer) {
    TorusElt u = weyl_action(w, w.inverse(c), t);
    s += theta.value(u);
  }
  return s;
}

}  // namespace lch
