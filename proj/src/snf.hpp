#pragma once

#include <gmpxx.h>
#include <vector>

namespace lch {

// Dense integer matrix, row major.
struct IMat {
  int rows = 0, cols = 0;
  std::vector<mpz_class> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  mpz_class& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const mpz_class& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IMat identity(int n);
  IMat mul(const IMat& o) const;
  std::vector<mpz_class> mul_vec(const std::vector<mpz_class>& v) const;
};

// Smith normal form D = U * A * V with U, V unimodular and
// D diagonal, d_1 | d_2 | ..., all d_i >= 0.
struct SmithResult {
  IMat d, u, v;
  std::vector<mpz_class> diag() const;
};

SmithResult smith_normal_form(const IMat& m);

mpz_class det(const IMat& m);

// Characteristic polynomial coefficients of a square integer matrix,
// leading coefficient first (monic).
std::vector<mpz_class> char_poly(const IMat& m);

}  // namespace lch
