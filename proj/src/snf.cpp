#include "snf.hpp"

#include <cstdlib>
#include <stdexcept>

namespace lch {

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::mul(const IMat& o) const {
  if (cols != o.rows) throw std::invalid_argument("IMat::mul shape mismatch");
  IMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const mpz_class& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

std::vector<mpz_class> IMat::mul_vec(const std::vector<mpz_class>& v) const {
  if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("IMat::mul_vec shape");
  std::vector<mpz_class> r(rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
  return r;
}

std::vector<mpz_class> SmithResult::diag() const {
  int n = std::min(d.rows, d.cols);
  std::vector<mpz_class> r(n);
  for (int i = 0; i < n; ++i) r[i] = d.at(i, i);
  return r;
}

namespace {

void swap_rows(IMat& m, IMat& u, int i, int j) {
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
  for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
}

void swap_cols(IMat& m, IMat& v, int i, int j) {
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
  for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
}

// row i -= q * row j
void row_op(IMat& m, IMat& u, int i, int j, const mpz_class& q) {
  if (q == 0) return;
  for (int c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(j, c);
  for (int c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(j, c);
}

void col_op(IMat& m, IMat& v, int i, int j, const mpz_class& q) {
  if (q == 0) return;
  for (int r = 0; r < m.rows; ++r) m.at(r, i) -= q * m.at(r, j);
  for (int r = 0; r < v.rows; ++r) v.at(r, i) -= q * v.at(r, j);
}

void negate_row(IMat& m, IMat& u, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
  for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
}

}  // namespace

SmithResult smith_normal_form(const IMat& in) {
  SmithResult res;
  res.d = in;
  res.u = IMat::identity(in.rows);
  res.v = IMat::identity(in.cols);
  IMat& d = res.d;
  IMat& u = res.u;
  IMat& v = res.v;

  int n = std::min(d.rows, d.cols);
  for (int s = 0; s < n; ++s) {
    // find a pivot of minimal absolute value in the lower-right block
    for (;;) {
      int pi = -1, pj = -1;
      mpz_class best;
      for (int i = s; i < d.rows; ++i)
        for (int j = s; j < d.cols; ++j) {
          if (d.at(i, j) == 0) continue;
          mpz_class av = abs(d.at(i, j));
          if (pi < 0 || av < best) {
            best = av;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) { pi = s; pj = s; }  // all zero, done with this block
      if (pi != s) swap_rows(d, u, s, pi);
      if (pj != s) swap_cols(d, v, s, pj);
      if (d.at(s, s) == 0) break;

      bool again = false;
      for (int i = s + 1; i < d.rows; ++i) {
        mpz_class q = d.at(i, s) / d.at(s, s);
        row_op(d, u, i, s, q);
        if (d.at(i, s) != 0) again = true;
      }
      for (int j = s + 1; j < d.cols; ++j) {
        mpz_class q = d.at(s, j) / d.at(s, s);
        col_op(d, v, j, s, q);
        if (d.at(s, j) != 0) again = true;
      }
      if (again) continue;

      // enforce divisibility of the remaining block by the pivot
      bool fixed = true;
      for (int i = s + 1; i < d.rows && fixed; ++i)
        for (int j = s + 1; j < d.cols && fixed; ++j)
          if (d.at(i, j) % d.at(s, s) != 0) {
            // add row i to row s, creating a smaller remainder
            row_op(d, u, s, i, mpz_class(-1));
            fixed = false;
          }
      if (fixed) break;
    }
    if (d.at(s, s) < 0) negate_row(d, u, s);
  }
  return res;
}

mpz_class det(const IMat& in) {
  if (in.rows != in.cols) throw std::invalid_argument("det: not square");
  // fraction-free Gaussian elimination (Bareiss)
  IMat m = in;
  int n = m.rows;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = q;
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::vector<mpz_class> char_poly(const IMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("char_poly: not square");
  // Faddeev-LeVerrier: exact over Z since the matrix is integral
  int n = m.rows;
  std::vector<mpz_class> c(static_cast<size_t>(n) + 1);
  c[0] = 1;
  IMat mk(n, n);  // starts at zero
  for (int k = 1; k <= n; ++k) {
    // mk = m * (mk + c[k-1] * I)
    IMat t = mk;
    for (int i = 0; i < n; ++i) t.at(i, i) += c[k - 1];
    mk = m.mul(t);
    mpz_class tr = 0;
    for (int i = 0; i < n; ++i) tr += mk.at(i, i);
    mpz_class ck = -tr / k;
    c[k] = ck;
  }
  return c;
}

}  // namespace lch
