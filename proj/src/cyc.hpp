#pragma once

#include <gmpxx.h>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lch {

struct value_error : std::runtime_error {
  explicit value_error(const std::string& w) : std::runtime_error(w) {}
};

// Element of a cyclotomic field Q(zeta_N), exact.
//
// A value is stored at the smallest order N containing it, with rational
// coefficients over the power basis 1, z, ..., z^{phi(N)-1} (reduced mod the
// N-th cyclotomic polynomial). Since Z[zeta_N] is the full ring of integers,
// "all coefficients integral" is the algebraic-integer test, and equality is
// plain comparison.
class Cyc {
 public:
  Cyc() : order_(1), c_(1, mpq_class(0)) {}
  Cyc(long v) : order_(1), c_(1, mpq_class(v)) {}
  Cyc(const mpz_class& v) : order_(1), c_(1, mpq_class(v)) {}
  Cyc(const mpq_class& v) : order_(1), c_(1, v) { c_[0].canonicalize(); }

  // E(order)^power
  static Cyc root_of_unity(long order, long power = 1);

  long order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return order_ == 1; }
  mpq_class rational_value() const;  // throws if not rational
  bool is_integral() const;          // algebraic integer?

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o) { *this = *this + o; return *this; }
  Cyc& operator-=(const Cyc& o) { *this = *this - o; return *this; }
  Cyc& operator*=(const Cyc& o) { *this = *this * o; return *this; }
  bool operator==(const Cyc& o) const { return order_ == o.order_ && c_ == o.c_; }
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  Cyc conj() const;  // complex conjugation z -> z^{-1}
  Cyc inverse() const;  // multiplicative inverse (throws on zero)

  std::string str() const;
  static Cyc parse(const std::string& s);

  // Strict total order usable as a map key (no numeric meaning).
  bool key_less(const Cyc& o) const;

 private:
  long order_;                 // minimal, hence never 2 mod 4
  std::vector<mpq_class> c_;   // size phi(order_)

  static Cyc from_poly(long order, std::vector<mpq_class> poly);
  void normalize();
  friend struct CycParser;
  friend class CycVal;
};

// Cyclotomic polynomial Phi_n, coefficients ascending degree.
const std::vector<mpz_class>& cyclotomic_poly(long n);
long euler_phi(long n);

// Result of substituting a concrete prime power q0 into a value with
// half-integral exponents: plain + surd * sqrt(q0). If q0 is a perfect
// square the surd part is folded away and needs_sqrt is false.
struct EvalResult {
  Cyc plain;
  Cyc surd;
  long q0 = 0;
  bool needs_sqrt = false;
  bool is_plain() const { return !needs_sqrt; }
};

// Laurent polynomial in a formal square root of q with Cyc coefficients.
// Keys of the internal map are twice the q-exponent, so key 7 is q^(7/2).
class CycVal {
 public:
  CycVal() = default;
  CycVal(long v) { if (v != 0) t_[0] = Cyc(v); }
  CycVal(const Cyc& c) { if (!c.is_zero()) t_[0] = c; }

  // c * q^(num2/2)
  static CycVal monomial(const Cyc& c, int num2);
  static CycVal q_power(int num2) { return monomial(Cyc(1), num2); }

  bool is_zero() const { return t_.empty(); }
  const std::map<int, Cyc>& terms() const { return t_; }

  CycVal operator+(const CycVal& o) const;
  CycVal operator-(const CycVal& o) const;
  CycVal operator*(const CycVal& o) const;
  CycVal operator-() const;
  CycVal& operator+=(const CycVal& o) { *this = *this + o; return *this; }
  CycVal& operator-=(const CycVal& o) { *this = *this - o; return *this; }
  CycVal& operator*=(const CycVal& o) { *this = *this * o; return *this; }
  bool operator==(const CycVal& o) const { return t_ == o.t_; }
  bool operator!=(const CycVal& o) const { return !(*this == o); }

  CycVal conj() const;  // conjugate coefficients; q is treated as real

  // Exact substitution q = q0 (q0 >= 2, the positive root is taken for
  // q^(1/2)); see EvalResult for the non-square case.
  EvalResult evaluate(long q0) const;

  // True iff the value lies in Z[zeta] for every prime power q0 = r (mod m),
  // decided by exact congruence analysis of the coefficient polynomials.
  // Only integral powers of q are supported here.
  bool is_algebraic_integer_for_residue(long m, long r) const;

  std::string str() const;
  static CycVal parse(const std::string& s);

 private:
  std::map<int, Cyc> t_;
  void strip();
};

inline CycVal operator*(long a, const CycVal& v) { return CycVal(a) * v; }

}  // namespace lch
