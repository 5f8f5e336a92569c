#include "cyc.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace lch {

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

std::mutex g_cyc_mutex;

// exact division of polynomials over Z, divisor monic-ish (exact by theory)
std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num,
                                         const std::vector<mpz_class>& den) {
  std::vector<mpz_class> q(num.size() - den.size() + 1);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    mpz_class c = num[i + den.size() - 1] / den.back();
    q[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return q;
}

}  // namespace

namespace {

const std::vector<mpz_class>& cyclotomic_poly_nolock(long n) {
  static std::map<long, std::vector<mpz_class>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<long> todo{n};
  while (!todo.empty()) {
    long m = todo.back();
    bool ready = true;
    for (long d = 1; d < m; ++d)
      if (m % d == 0 && cache.find(d) == cache.end()) {
        todo.push_back(d);
        ready = false;
      }
    if (!ready) continue;
    todo.pop_back();
    if (cache.count(m)) continue;
    std::vector<mpz_class> num(static_cast<size_t>(m) + 1);
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d)
      if (m % d == 0) num = poly_divide_exact(std::move(num), cache[d]);
    cache[m] = std::move(num);
  }
  return cache[n];
}

// reduced images of zeta_L^k for k in [0, L): vectors over the power basis
const std::vector<std::vector<mpq_class>>& power_table_nolock(long order) {
  static std::map<long, std::vector<std::vector<mpq_class>>> cache;
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  const auto& phi = cyclotomic_poly_nolock(order);
  long deg = static_cast<long>(phi.size()) - 1;
  std::vector<std::vector<mpq_class>> tab(order, std::vector<mpq_class>(deg));
  // x^k mod Phi: iterated multiply-by-x
  std::vector<mpq_class> cur(deg);
  cur[0] = 1;
  for (long k = 0; k < order; ++k) {
    tab[k] = cur;
    std::vector<mpq_class> nxt(deg);
    for (long i = 0; i < deg - 1; ++i) nxt[i + 1] = cur[i];
    mpq_class top = cur[deg - 1];
    if (top != 0)
      for (long i = 0; i < deg; ++i) nxt[i] -= top * mpq_class(phi[i]);
    cur = std::move(nxt);
  }
  auto [pos, ok] = cache.emplace(order, std::move(tab));
  (void)ok;
  return pos->second;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_poly(long n) {
  std::lock_guard<std::mutex> lock(g_cyc_mutex);
  return cyclotomic_poly_nolock(n);
}

namespace {

// Entries are never mutated once inserted, so the reference stays valid
// after the lock is released.
const std::vector<std::vector<mpq_class>>& power_table(long order) {
  std::lock_guard<std::mutex> lock(g_cyc_mutex);
  return power_table_nolock(order);
}

}  // namespace

Cyc Cyc::from_poly(long order, std::vector<mpq_class> poly) {
  long deg = euler_phi(order);
  const auto& tab = power_table(order);
  std::vector<mpq_class> red(deg);
  for (size_t k = 0; k < poly.size(); ++k) {
    if (poly[k] == 0) continue;
    const auto& img = tab[k % order];
    for (long i = 0; i < deg; ++i) red[i] += poly[k] * img[i];
  }
  Cyc r;
  r.order_ = order;
  r.c_ = std::move(red);
  r.normalize();
  return r;
}

Cyc Cyc::root_of_unity(long order, long power) {
  if (order <= 0) throw value_error("root_of_unity: order must be positive");
  power %= order;
  if (power < 0) power += order;
  std::vector<mpq_class> poly(static_cast<size_t>(power) + 1);
  poly[power] = 1;
  return from_poly(order, std::move(poly));
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

mpq_class Cyc::rational_value() const {
  if (order_ != 1) throw value_error("not a rational value");
  return c_[0];
}

bool Cyc::is_integral() const {
  for (const auto& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

void Cyc::normalize() {
  // descend to the smallest cyclotomic field containing the value
  if (order_ == 1) return;
  if (is_zero()) {
    order_ = 1;
    c_.assign(1, mpq_class(0));
    return;
  }
  long n = order_;
  for (long m = 1; m < n; ++m) {
    if (n % m != 0) continue;
    if (m % 2 == 0 && m % 4 != 0 && m > 2) continue;  // Q(zeta_m)=Q(zeta_{m/2})
    if (m == 2) continue;                             // Q(zeta_2)=Q
    long dm = euler_phi(m);
    long dn = euler_phi(n);
    // solve sum_j x_j * b_j = c_ where b_j = zeta_n^{j*(n/m)} reduced
    const auto& tab = power_table(n);
    // columns: dm basis vectors; rows: dn coords
    std::vector<std::vector<mpq_class>> a(dn, std::vector<mpq_class>(dm + 1));
    for (long j = 0; j < dm; ++j) {
      const auto& img = tab[(j * (n / m)) % n];
      for (long i = 0; i < dn; ++i) a[i][j] = img[i];
    }
    for (long i = 0; i < dn; ++i) a[i][dm] = c_[i];
    // Gaussian elimination
    long row = 0;
    std::vector<long> pivot_col(dm, -1);
    for (long col = 0; col < dm && row < dn; ++col) {
      long p = -1;
      for (long i = row; i < dn; ++i)
        if (a[i][col] != 0) { p = i; break; }
      if (p < 0) continue;
      std::swap(a[p], a[row]);
      mpq_class inv = a[row][col];
      for (long j = col; j <= dm; ++j) a[row][j] /= inv;
      for (long i = 0; i < dn; ++i) {
        if (i == row || a[i][col] == 0) continue;
        mpq_class f = a[i][col];
        for (long j = col; j <= dm; ++j) a[i][j] -= f * a[row][j];
      }
      pivot_col[col] = row;
      ++row;
    }
    bool consistent = true;
    for (long i = row; i < dn; ++i)
      if (a[i][dm] != 0) { consistent = false; break; }
    if (!consistent) continue;
    std::vector<mpq_class> sol(dm);
    for (long col = 0; col < dm; ++col)
      if (pivot_col[col] >= 0) sol[col] = a[pivot_col[col]][dm];
    order_ = m;
    c_ = std::move(sol);
    return;  // m ascending, so the first hit is minimal
  }
}

namespace {
// lift a value to order L (L a multiple of its order), as a poly in zeta_L
std::vector<mpq_class> lift_poly(const Cyc& x, long l) {
  long n = x.order();
  long f = l / n;
  std::vector<mpq_class> p(static_cast<size_t>(l), mpq_class(0));
  const auto& c = x.coeffs();
  for (size_t j = 0; j < c.size(); ++j) p[(j * f) % l] += c[j];
  return p;
}
}  // namespace

Cyc Cyc::operator+(const Cyc& o) const {
  long l = std::lcm(order_, o.order_);
  auto pa = lift_poly(*this, l);
  auto pb = lift_poly(o, l);
  for (size_t i = 0; i < pa.size(); ++i) pa[i] += pb[i];
  return from_poly(l, std::move(pa));
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  if (is_rational()) {
    if (c_[0] == 0) return Cyc();
    Cyc r = o;
    for (auto& x : r.c_) x *= c_[0];
    return r;  // nonzero rational scaling preserves the minimal field
  }
  if (o.is_rational()) return o * *this;
  long l = std::lcm(order_, o.order_);
  auto pa = lift_poly(*this, l);
  auto pb = lift_poly(o, l);
  std::vector<mpq_class> prod(2 * static_cast<size_t>(l));
  for (size_t i = 0; i < pa.size(); ++i) {
    if (pa[i] == 0) continue;
    for (size_t j = 0; j < pb.size(); ++j) {
      if (pb[j] == 0) continue;
      prod[i + j] += pa[i] * pb[j];
    }
  }
  return from_poly(l, std::move(prod));
}

Cyc Cyc::conj() const {
  if (order_ == 1) return *this;
  std::vector<mpq_class> p(static_cast<size_t>(order_));
  for (size_t j = 0; j < c_.size(); ++j) {
    long k = static_cast<long>(j) == 0 ? 0 : order_ - static_cast<long>(j);
    p[k] += c_[j];
  }
  return from_poly(order_, std::move(p));
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw value_error("division by zero");
  if (order_ == 1) {
    Cyc r;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // solve (this) * x = 1 over the power basis
  long deg = euler_phi(order_);
  const auto& tab = power_table(order_);
  // columns: images of basis vectors under multiplication by *this
  std::vector<std::vector<mpq_class>> a(deg, std::vector<mpq_class>(deg + 1));
  for (long j = 0; j < deg; ++j) {
    // this * zeta^j as a vector
    for (long i = 0; i < deg; ++i)
      if (c_[i] != 0) {
        const auto& img = tab[(i + j) % order_];
        for (long r2 = 0; r2 < deg; ++r2) a[r2][j] += c_[i] * img[r2];
      }
  }
  a[0][deg] = 1;
  for (long col = 0; col < deg; ++col) {
    long p = -1;
    for (long i = col; i < deg; ++i)
      if (a[i][col] != 0) { p = i; break; }
    if (p < 0) throw value_error("inverse: singular multiplication matrix");
    std::swap(a[p], a[col]);
    mpq_class inv = a[col][col];
    for (long j = col; j <= deg; ++j) a[col][j] /= inv;
    for (long i = 0; i < deg; ++i) {
      if (i == col || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (long j = col; j <= deg; ++j) a[i][j] -= f * a[col][j];
    }
  }
  Cyc r;
  r.order_ = order_;
  r.c_.assign(deg, mpq_class(0));
  for (long i = 0; i < deg; ++i) r.c_[i] = a[i][deg];
  r.normalize();
  return r;
}

bool Cyc::key_less(const Cyc& o) const {
  if (order_ != o.order_) return order_ < o.order_;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

namespace {

std::string q_str(const mpq_class& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// one basis monomial c * E(n)^j
void append_cyc_term(std::string& out, bool& first, const mpq_class& c, long n, long j) {
  if (c == 0) return;
  mpq_class a = c;
  bool neg = a < 0;
  if (neg) a = -a;
  if (first) {
    if (neg) out += "-";
    first = false;
  } else {
    out += neg ? " - " : " + ";
  }
  if (j == 0) {
    out += q_str(a);
    return;
  }
  if (a != 1) {
    out += q_str(a);
    out += "*";
  }
  out += "E(" + std::to_string(n) + ")";
  if (j != 1) out += "^" + std::to_string(j);
}

}  // namespace

std::string Cyc::str() const {
  if (is_zero()) return "0";
  if (order_ == 1) return q_str(c_[0]);
  std::string out;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j)
    append_cyc_term(out, first, c_[j], order_, static_cast<long>(j));
  return out;
}

// ---------------------------------------------------------------------------
// CycVal

void CycVal::strip() {
  for (auto it = t_.begin(); it != t_.end();)
    it = it->second.is_zero() ? t_.erase(it) : std::next(it);
}

CycVal CycVal::monomial(const Cyc& c, int num2) {
  CycVal v;
  if (!c.is_zero()) v.t_[num2] = c;
  return v;
}

CycVal CycVal::operator+(const CycVal& o) const {
  CycVal r = *this;
  for (const auto& [e, c] : o.t_) {
    auto it = r.t_.find(e);
    if (it == r.t_.end())
      r.t_[e] = c;
    else
      it->second += c;
  }
  r.strip();
  return r;
}

CycVal CycVal::operator-() const {
  CycVal r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

CycVal CycVal::operator-(const CycVal& o) const { return *this + (-o); }

CycVal CycVal::operator*(const CycVal& o) const {
  CycVal r;
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) {
      Cyc p = c1 * c2;
      if (p.is_zero()) continue;
      auto it = r.t_.find(e1 + e2);
      if (it == r.t_.end())
        r.t_[e1 + e2] = p;
      else
        it->second += p;
    }
  r.strip();
  return r;
}

CycVal CycVal::conj() const {
  CycVal r;
  for (const auto& [e, c] : t_) r.t_[e] = c.conj();
  r.strip();
  return r;
}

EvalResult CycVal::evaluate(long q0) const {
  if (q0 < 2) throw value_error("evaluate: q0 must be at least 2");
  EvalResult res;
  res.q0 = q0;
  long s = static_cast<long>(std::sqrt(static_cast<double>(q0)));
  while (s * s > q0) --s;
  while ((s + 1) * (s + 1) <= q0) ++s;
  bool square = (s * s == q0);
  for (const auto& [e, c] : t_) {
    int k = e;
    // negative odd exponents like q^(-1/2) would need 1/sqrt(q0); the ring
    // never produces them here but reject them rather than mis-evaluate
    if (k < 0 && k % 2 != 0) throw value_error("evaluate: negative half power");
    bool odd = (k % 2) != 0;
    long base = odd ? (k - 1) / 2 : k / 2;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q0),
                  static_cast<unsigned long>(base < 0 ? -base : base));
    Cyc term = base >= 0 ? c * Cyc(pw) : c * Cyc(mpq_class(1, pw));
    if (!odd)
      res.plain += term;
    else
      res.surd += term;
  }
  if (!res.surd.is_zero() && square) {
    res.plain += res.surd * Cyc(mpz_class(s));
    res.surd = Cyc();
  }
  res.needs_sqrt = !res.surd.is_zero();
  return res;
}

bool CycVal::is_algebraic_integer_for_residue(long m, long r) const {
  if (m <= 0) throw value_error("residue modulus must be positive");
  r %= m;
  if (r < 0) r += m;
  if (std::gcd(r, m) != 1) throw value_error("residue not coprime to modulus");
  // collect coefficient polynomials per power-basis coordinate
  long big = 1;
  for (const auto& [e, c] : t_) {
    if (e % 2 != 0 || e < 0)
      throw value_error("unsupported shape for integrality analysis");
    big = std::lcm(big, c.order());
  }
  long deg = euler_phi(big);
  // coordinate polynomials in q, as maps exponent -> rational
  std::vector<std::map<int, mpq_class>> coord(deg);
  for (const auto& [e, c] : t_) {
    auto lifted = Cyc::from_poly(big, lift_poly(c, big));
    const auto& cc = lifted.coeffs();
    for (long j = 0; j < static_cast<long>(cc.size()); ++j)
      if (cc[j] != 0) coord[j][e / 2] += cc[j];
  }
  mpz_class d = 1;
  for (const auto& poly : coord)
    for (const auto& [e, c] : poly) {
      mpz_class den(c.get_den());
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    }
  if (d == 1) return true;
  if (!d.fits_slong_p()) throw value_error("unsupported denominator");
  long dd = d.get_si();
  long l = std::lcm(m, dd);
  for (long c0 = 0; c0 < l; ++c0) {
    if (c0 % m != r % m) continue;
    if (std::gcd(c0, l) != 1) continue;
    for (const auto& poly : coord) {
      mpz_class acc = 0;
      for (const auto& [e, co] : poly) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(c0),
                      static_cast<unsigned long>(e));
        acc += mpq_class(co * d).get_num() * pw;
      }
      if (acc % d != 0) return false;
    }
  }
  return true;
}

std::string CycVal::str() const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    int e = it->first;
    const Cyc& c = it->second;
    std::string cs = c.str();
    bool simple_neg = !cs.empty() && cs[0] == '-' &&
                      cs.find(" + ") == std::string::npos &&
                      cs.find(" - ") == std::string::npos;
    bool composite = cs.find(" + ") != std::string::npos ||
                     cs.find(" - ") != std::string::npos;
    if (e == 0) {
      if (first) {
        out += cs;
        first = false;
      } else if (simple_neg) {
        out += " - " + cs.substr(1);
      } else {
        out += " + " + (composite ? "(" + cs + ")" : cs);
      }
      continue;
    }
    std::string qpart;
    if (e == 2)
      qpart = "q";
    else if (e % 2 == 0)
      qpart = (e < 0) ? "q^(" + std::to_string(e / 2) + ")"
                      : "q^" + std::to_string(e / 2);
    else
      qpart = "q^(" + std::to_string(e) + "/2)";
    std::string coefpart;
    bool neg = false;
    if (cs == "1") {
      coefpart = "";
    } else if (cs == "-1") {
      neg = true;
      coefpart = "";
    } else if (composite) {
      coefpart = "(" + cs + ")*";
    } else if (simple_neg) {
      neg = true;
      coefpart = cs.substr(1) + "*";
    } else {
      coefpart = cs + "*";
    }
    if (first) {
      out += (neg ? "-" : "") + coefpart + qpart;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + coefpart + qpart;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// shared parser for Cyc / CycVal expressions

struct CycParser {
  const std::string& s;
  size_t pos = 0;

  explicit CycParser(const std::string& str) : s(str) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw value_error("parse error: expected '" + std::string(1, c) +
                                   "' at position " + std::to_string(pos));
  }
  long integer() {
    skip();
    bool neg = eat('-');
    skip();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw value_error("parse error: expected integer at position " + std::to_string(pos));
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return neg ? -v : v;
  }

  CycVal expr() {
    skip();
    bool neg = eat('-');
    CycVal v = term();
    if (neg) v = -v;
    for (;;) {
      skip();
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        break;
      }
    }
    return v;
  }

  CycVal term() {
    CycVal v = factor();
    for (;;) {
      skip();
      if (eat('*'))
        v *= factor();
      else
        break;
    }
    return v;
  }

  // exponent of q in half units
  int q_exponent() {
    skip();
    if (!eat('^')) return 2;  // plain q
    skip();
    if (eat('(')) {
      long a = integer();
      skip();
      if (eat('/')) {
        long b = integer();
        if (b != 2) throw value_error("parse error: only halves allowed in q exponents");
        expect(')');
        return static_cast<int>(a);
      }
      expect(')');
      return static_cast<int>(2 * a);
    }
    return static_cast<int>(2 * integer());
  }

  CycVal factor() {
    skip();
    if (eat('(')) {
      CycVal v = expr();
      expect(')');
      return v;
    }
    if (pos < s.size() && (s[pos] == 'q')) {
      ++pos;
      return CycVal::q_power(q_exponent());
    }
    if (pos < s.size() && s[pos] == 'E') {
      ++pos;
      expect('(');
      long n = integer();
      expect(')');
      long k = 1;
      skip();
      if (eat('^')) k = integer();
      return CycVal(Cyc::root_of_unity(n, k));
    }
    // rational number
    long a = integer();
    skip();
    size_t save = pos;
    if (eat('/')) {
      skip();
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        long b = integer();
        return CycVal(Cyc(mpq_class(a, b)));
      }
      pos = save;
    }
    return CycVal(Cyc(mpq_class(a)));
  }
};

CycVal CycVal::parse(const std::string& str) {
  CycParser p(str);
  CycVal v = p.expr();
  p.skip();
  if (p.pos != str.size())
    throw value_error("parse error: trailing input at position " + std::to_string(p.pos));
  return v;
}

Cyc Cyc::parse(const std::string& str) {
  CycVal v = CycVal::parse(str);
  if (v.is_zero()) return Cyc();
  if (v.terms().size() != 1 || v.terms().begin()->first != 0)
    throw value_error("parse error: expected a constant value");
  return v.terms().begin()->second;
}

}  // namespace lch
