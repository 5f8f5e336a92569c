#include "chartab.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lch {

namespace {

// ---------------------------------------------------------------------------
// modular arithmetic

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((__uint128_t)a * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using ModVec = std::vector<uint64_t>;
using ModMat = std::vector<ModVec>;

// determinant mod p (destroys a copy)
uint64_t det_mod(ModMat m, uint64_t p) {
  int n = static_cast<int>(m.size());
  uint64_t det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] % p != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = (p - det) % p;
    }
    det = mulmod(det, m[c][c], p);
    uint64_t inv = invmod(m[c][c], p);
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      uint64_t f = mulmod(m[r][c], inv, p);
      for (int cc = c; cc < n; ++cc)
        m[r][cc] = (m[r][cc] + p - mulmod(f, m[c][cc], p)) % p;
    }
  }
  return det % p;
}

// char poly of m mod p by interpolation of det(xI - m) at x = 0..n
ModVec char_poly_mod(const ModMat& m, uint64_t p) {
  int n = static_cast<int>(m.size());
  std::vector<uint64_t> xs(n + 1), ys(n + 1);
  for (int t = 0; t <= n; ++t) {
    ModMat a(n, ModVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        a[i][j] = (p - m[i][j] % p) % p;
        if (i == j) a[i][j] = (a[i][j] + t) % p;
      }
    xs[t] = t % p;
    ys[t] = det_mod(std::move(a), p);
  }
  ModVec poly(n + 1, 0);
  for (int t = 0; t <= n; ++t) {
    ModVec basis(1, 1);
    uint64_t denom = 1;
    for (int s = 0; s <= n; ++s) {
      if (s == t) continue;
      ModVec nxt(basis.size() + 1, 0);
      for (size_t i = 0; i < basis.size(); ++i) {
        nxt[i + 1] = (nxt[i + 1] + basis[i]) % p;
        nxt[i] = (nxt[i] + mulmod(basis[i], (p - xs[s] % p) % p, p)) % p;
      }
      basis = std::move(nxt);
      denom = mulmod(denom, (xs[t] + p - xs[s]) % p, p);
    }
    uint64_t f = mulmod(ys[t], invmod(denom, p), p);
    for (size_t i = 0; i < basis.size(); ++i)
      poly[i] = (poly[i] + mulmod(basis[i], f, p)) % p;
  }
  return poly;
}

uint64_t eval_poly_mod(const ModVec& poly, uint64_t x, uint64_t p) {
  uint64_t r = 0;
  for (size_t i = poly.size(); i-- > 0;) r = (mulmod(r, x, p) + poly[i]) % p;
  return r;
}

// nullspace basis of m mod p
std::vector<ModVec> nullspace_mod(ModMat m, uint64_t p) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> pivot_of_col(cols, -1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] % p != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    uint64_t inv = invmod(m[rank][c], p);
    for (int cc = 0; cc < cols; ++cc) m[rank][cc] = mulmod(m[rank][cc], inv, p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      uint64_t f = m[r][c];
      for (int cc = 0; cc < cols; ++cc)
        m[r][cc] = (m[r][cc] + p - mulmod(f, m[rank][cc], p)) % p;
    }
    pivot_of_col[c] = rank;
    ++rank;
  }
  std::vector<ModVec> basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    ModVec v(cols, 0);
    v[c] = 1;
    for (int cc = 0; cc < cols; ++cc)
      if (pivot_of_col[cc] >= 0) v[cc] = (p - m[pivot_of_col[cc]][c] % p) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

// ---------------------------------------------------------------------------
// fingerprints

ClassFingerprint ClassFingerprint::of(const WeylGroup& w, const WeylElt& e) {
  ClassFingerprint fp;
  IMat m = w.matrix_on_roots(e);
  for (const auto& c : char_poly(m)) {
    if (!c.fits_slong_p()) throw std::logic_error("charpoly overflow");
    fp.charpoly.push_back(c.get_si());
  }
  WeylElt cur = e;
  for (int pw = 0; pw < 3; ++pw) {
    if (pw > 0) cur = w.mul(cur, e);
    std::vector<bool> seen(cur.p.size(), false);
    std::vector<int> cyc;
    for (size_t i = 0; i < cur.p.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (size_t j = i; !seen[j]; j = cur.p[j]) {
        seen[j] = true;
        ++len;
      }
      cyc.push_back(len);
    }
    std::sort(cyc.begin(), cyc.end());
    fp.cycles[pw] = std::move(cyc);
  }
  // cycle type on the +- root pairs separates involution classes that the
  // root cycle type alone does not
  const RootSystem& rs = w.root_system();
  int np = rs.num_positive();
  std::vector<int> lp(np);
  for (int k = 0; k < np; ++k) {
    int img = e.p[k];
    lp[k] = img < np ? img : rs.negative_of(img);
  }
  std::vector<bool> seen(np, false);
  for (int k = 0; k < np; ++k) {
    if (seen[k]) continue;
    int len = 0;
    for (int j = k; !seen[j]; j = lp[j]) {
      seen[j] = true;
      ++len;
    }
    fp.line_cycles.push_back(len);
  }
  std::sort(fp.line_cycles.begin(), fp.line_cycles.end());
  return fp;
}

bool ClassFingerprint::operator==(const ClassFingerprint& o) const {
  return charpoly == o.charpoly && cycles == o.cycles && line_cycles == o.line_cycles;
}

std::string ClassFingerprint::str() const {
  std::ostringstream os;
  os << "cp";
  for (long c : charpoly) os << "," << c;
  for (int pw = 0; pw < 3; ++pw) {
    os << ";cy";
    for (int c : cycles[pw]) os << "," << c;
  }
  os << ";ln";
  for (int c : line_cycles) os << "," << c;
  return os.str();
}

ClassFingerprint ClassFingerprint::parse(const std::string& s) {
  ClassFingerprint fp;
  std::stringstream ss(s);
  std::string part;
  int idx = -1;
  while (std::getline(ss, part, ';')) {
    ++idx;
    std::stringstream ps(part);
    std::string tok;
    bool first = true;
    while (std::getline(ps, tok, ',')) {
      if (first) {
        first = false;
        continue;  // "cp" or "cy"
      }
      long v = std::stol(tok);
      if (idx == 0)
        fp.charpoly.push_back(v);
      else if (idx <= 3)
        fp.cycles[idx - 1].push_back(static_cast<int>(v));
      else
        fp.line_cycles.push_back(static_cast<int>(v));
    }
  }
  return fp;
}

int FingerprintIdentifier::identify(const WeylElt& e) const {
  ClassFingerprint fp = ClassFingerprint::of(*w, e);
  int found = -1;
  for (size_t i = 0; i < fps.size(); ++i)
    if (fps[i] == fp) {
      if (found >= 0) throw std::runtime_error("ambiguous class fingerprint");
      found = static_cast<int>(i);
    }
  if (found < 0) throw std::runtime_error("class fingerprint not found");
  return found;
}

// ---------------------------------------------------------------------------
// Dixon-Schneider

namespace {

long perm_order(const WeylElt& e) {
  std::vector<bool> seen(e.p.size(), false);
  long ord = 1;
  for (size_t i = 0; i < e.p.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (size_t j = i; !seen[j]; j = e.p[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

// class matrices -> integer character rows; classes[0] must be the identity
std::vector<std::vector<long long>> dixon_rows(
    const std::vector<std::vector<std::vector<uint64_t>>>& cmats,
    const std::vector<uint64_t>& sizes, const std::vector<int>& inv_class,
    uint64_t group_order, uint64_t max_degree, uint64_t p) {
  int k = static_cast<int>(sizes.size());
  std::vector<std::vector<ModVec>> spaces;
  {
    std::vector<ModVec> full;
    for (int i = 0; i < k; ++i) {
      ModVec e(k, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<ModVec>> next;
    bool split_any = false;
    for (auto& basis : spaces) {
      int dim = static_cast<int>(basis.size());
      if (dim == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      split_any = true;
      // express M_i * b_j over the basis
      ModMat images(dim, ModVec(k, 0));
      for (int j = 0; j < dim; ++j)
        for (int r = 0; r < k; ++r) {
          uint64_t s = 0;
          for (int c = 0; c < k; ++c) {
            uint64_t mv = cmats[i][r][c] % p;
            if (mv && basis[j][c]) s = (s + mulmod(mv, basis[j][c], p)) % p;
          }
          images[j][r] = s;
        }
      ModMat a(k, ModVec(2 * static_cast<size_t>(dim), 0));
      for (int r = 0; r < k; ++r)
        for (int j = 0; j < dim; ++j) {
          a[r][j] = basis[j][r];
          a[r][dim + j] = images[j][r];
        }
      std::vector<int> prow(dim, -1);
      int rank = 0;
      for (int c = 0; c < dim && rank < k; ++c) {
        int piv = -1;
        for (int r = rank; r < k; ++r)
          if (a[r][c] % p != 0) { piv = r; break; }
        if (piv < 0) throw std::logic_error("dixon: dependent basis");
        std::swap(a[piv], a[rank]);
        uint64_t inv = invmod(a[rank][c], p);
        for (int cc = 0; cc < 2 * dim; ++cc) a[rank][cc] = mulmod(a[rank][cc], inv, p);
        for (int r = 0; r < k; ++r) {
          if (r == rank || a[r][c] == 0) continue;
          uint64_t f = a[r][c];
          for (int cc = 0; cc < 2 * dim; ++cc)
            a[r][cc] = (a[r][cc] + p - mulmod(f, a[rank][cc], p)) % p;
        }
        prow[c] = rank;
        ++rank;
      }
      ModMat rmat(dim, ModVec(dim, 0));
      for (int c = 0; c < dim; ++c)
        for (int j = 0; j < dim; ++j) rmat[c][j] = a[prow[c]][dim + j];
      ModVec cp = char_poly_mod(rmat, p);
      std::vector<uint64_t> lambdas;
      for (uint64_t x = 0; x < p && lambdas.size() < static_cast<size_t>(dim); ++x)
        if (eval_poly_mod(cp, x, p) == 0) lambdas.push_back(x);
      if (lambdas.empty()) throw std::logic_error("dixon: no eigenvalues found");
      for (uint64_t lam : lambdas) {
        ModMat shifted = rmat;
        for (int d2 = 0; d2 < dim; ++d2)
          shifted[d2][d2] = (shifted[d2][d2] + p - lam) % p;
        auto null_basis = nullspace_mod(std::move(shifted), p);
        if (null_basis.empty()) continue;
        std::vector<ModVec> sub;
        for (auto& coords : null_basis) {
          ModVec v(k, 0);
          for (int j = 0; j < dim; ++j) {
            if (!coords[j]) continue;
            for (int r = 0; r < k; ++r)
              v[r] = (v[r] + mulmod(coords[j], basis[j][r], p)) % p;
          }
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
    if (!split_any) break;
    bool all1 = true;
    for (auto& s : spaces) all1 &= s.size() == 1;
    if (all1) break;
  }
  for (auto& s : spaces)
    if (s.size() != 1) throw std::logic_error("dixon: splitting incomplete");
  if (static_cast<int>(spaces.size()) != k)
    throw std::logic_error("dixon: wrong number of eigenspaces");

  const int id_class = 0;  // classes are sorted by rep word; identity first
  std::vector<std::vector<long long>> rows;
  for (auto& s : spaces) {
    ModVec omega = s[0];
    uint64_t scale = omega[id_class];
    if (scale == 0) throw std::logic_error("dixon: eigenvector vanishes at 1");
    uint64_t inv = invmod(scale, p);
    for (auto& x : omega) x = mulmod(x, inv, p);
    uint64_t denom = 0;
    for (int j = 0; j < k; ++j) {
      uint64_t t = mulmod(omega[j], omega[inv_class[j]], p);
      denom = (denom + mulmod(t, invmod(sizes[j] % p, p), p)) % p;
    }
    uint64_t d2 = mulmod(group_order % p, invmod(denom, p), p);
    uint64_t degree = 0;
    for (uint64_t d = 1; d <= max_degree; ++d)
      if (mulmod(d, d, p) == d2) {
        degree = d;
        break;
      }
    if (degree == 0) throw std::logic_error("dixon: degree not identified");
    std::vector<long long> row(k);
    for (int j = 0; j < k; ++j) {
      uint64_t v = mulmod(mulmod(degree, omega[j], p), invmod(sizes[j] % p, p), p);
      long long lifted = static_cast<long long>(v);
      if (v > p / 2) lifted -= static_cast<long long>(p);
      row[j] = lifted;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<std::vector<long long>> detail_dixon_rows(
    const std::vector<std::vector<std::vector<uint64_t>>>& cmats,
    const std::vector<uint64_t>& sizes, const std::vector<int>& inv_class,
    uint64_t group_order, uint64_t max_degree, uint64_t p) {
  return dixon_rows(cmats, sizes, inv_class, group_order, max_degree, p);
}

CharTable CharTable::compute(const WeylGroup& w, const std::vector<WeylElt>& elements,
                             const std::vector<WeylElt>& gens) {
  CharTable t;
  t.w_ = &w;
  t.order_ = elements.size();
  Automorphism id = Automorphism::identity(w.root_system());
  t.cls_ = classify_twisted(w, elements, gens, id);
  t.have_cls_ = true;
  t.classes_ = t.cls_.classes;
  int k = static_cast<int>(t.classes_.size());

  std::vector<uint64_t> sizes(k);
  for (int i = 0; i < k; ++i) sizes[i] = t.classes_[i].size;
  std::vector<int> inv_class(k);
  for (int i = 0; i < k; ++i)
    inv_class[i] = t.cls_.class_of(w.inverse(t.classes_[i].rep));

  long expo = 1;
  for (const auto& c : t.classes_) expo = std::lcm(expo, perm_order(c.rep));
  uint64_t max_degree = 1;
  while ((max_degree + 1) * (max_degree + 1) <= t.order_) ++max_degree;
  uint64_t p = static_cast<uint64_t>(expo) + 1;
  while (!(is_prime(p) && p > 2 * max_degree && t.order_ % p != 0))
    p += static_cast<uint64_t>(expo);

  std::vector<std::vector<std::vector<uint64_t>>> cmats(
      k, std::vector<std::vector<uint64_t>>(k, std::vector<uint64_t>(k, 0)));
  for (const auto& g : elements) {
    int i = t.cls_.class_of(g);
    WeylElt gi = w.inverse(g);
    for (int l = 0; l < k; ++l) {
      int j = t.cls_.class_of(w.mul(gi, t.classes_[l].rep));
      cmats[i][j][l] += 1;
    }
  }

  auto rows = dixon_rows(cmats, sizes, inv_class, t.order_, max_degree, p);
  for (auto& r : rows) {
    CharRow cr;
    cr.degree = r[0];
    cr.values = std::move(r);
    t.rows_.push_back(std::move(cr));
  }
  t.compute_b_invariants();
  t.sort_rows();
  apply_db_labels(t);
  t.verify_orthogonality();
  for (int i = 0; i < k; ++i) t.fps_.push_back(ClassFingerprint::of(w, t.classes_[i].rep));
  return t;
}

CharTable CharTable::compute(const WeylGroup& w) {
  std::vector<WeylElt> gens;
  for (int i = 0; i < w.rank(); ++i) gens.push_back(w.simple_reflection(i));
  return compute(w, w.elements(), gens);
}

void CharTable::compute_b_invariants() {
  int k = num_classes();
  int maxk = w_->root_system().num_positive();
  std::vector<std::vector<long>> tr(k, std::vector<long>(maxk + 1));
  for (int j = 0; j < k; ++j) {
    WeylElt cur = w_->identity();
    for (int n = 0; n <= maxk; ++n) {
      tr[j][n] = w_->reflection_trace(cur);
      cur = w_->mul(cur, classes_[j].rep);
    }
  }
  std::vector<std::vector<mpq_class>> sym(maxk + 1, std::vector<mpq_class>(k));
  for (int j = 0; j < k; ++j) sym[0][j] = 1;
  for (int n = 1; n <= maxk; ++n)
    for (int j = 0; j < k; ++j) {
      mpq_class s = 0;
      for (int i = 1; i <= n; ++i) s += mpq_class(tr[j][i]) * sym[n - i][j];
      sym[n][j] = s / n;
    }
  for (auto& row : rows_) {
    row.b_invariant = -1;
    for (int n = 0; n <= maxk && row.b_invariant < 0; ++n) {
      mpq_class ip = 0;
      for (int j = 0; j < k; ++j)
        ip += mpq_class(static_cast<long>(classes_[j].size)) *
              mpq_class(static_cast<long>(row.values[j])) * sym[n][j];
      ip /= static_cast<long>(order_);
      if (ip.get_den() != 1) throw std::logic_error("b-invariant not integral");
      if (ip != 0) row.b_invariant = n;
    }
    if (row.b_invariant < 0) throw std::logic_error("b-invariant not found");
  }
}

void CharTable::sort_rows() {
  std::sort(rows_.begin(), rows_.end(), [](const CharRow& a, const CharRow& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.b_invariant != b.b_invariant) return a.b_invariant < b.b_invariant;
    return a.values < b.values;
  });
}

void apply_db_labels(CharTable& t) {
  std::map<std::pair<long, int>, int> count;
  for (int i = 0; i < t.num_chars(); ++i)
    count[{t.row(i).degree, t.row(i).b_invariant}] += 1;
  std::map<std::pair<long, int>, int> seen;
  for (int i = 0; i < t.num_chars(); ++i) {
    std::pair<long, int> key{t.row(i).degree, t.row(i).b_invariant};
    std::string base =
        "phi{" + std::to_string(key.first) + "," + std::to_string(key.second) + "}";
    if (count[key] > 1) base += std::string(static_cast<size_t>(seen[key]++) + 1, '\'');
    t.set_names(i, base, {});
  }
}

void CharTable::set_names(int chi, const std::string& name,
                          std::vector<std::string> aliases) {
  rows_[chi].name = name;
  rows_[chi].aliases = std::move(aliases);
}

int CharTable::class_of(const WeylElt& e) const {
  if (!have_cls_) throw std::runtime_error("no classification stored");
  return cls_.class_of(e);
}

int CharTable::index_of(const std::string& name) const {
  for (int i = 0; i < num_chars(); ++i) {
    if (rows_[i].name == name) return i;
    for (const auto& a : rows_[i].aliases)
      if (a == name) return i;
  }
  return -1;
}

void CharTable::verify_orthogonality() const {
  int k = num_classes();
  if (num_chars() != k) throw std::runtime_error("table not square");
  mpz_class order(static_cast<unsigned long>(order_));
  mpz_class sum_sq = 0;
  for (const auto& r : rows_) sum_sq += mpz_class(r.degree) * mpz_class(r.degree);
  if (sum_sq != order) throw std::runtime_error("degree sum of squares mismatch");
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      mpz_class s = 0;
      for (int j = 0; j < k; ++j)
        s += mpz_class(static_cast<unsigned long>(classes_[j].size)) *
             mpz_class(static_cast<long>(rows_[a].values[j])) *
             mpz_class(static_cast<long>(rows_[b].values[j]));
      if (s != (a == b ? order : mpz_class(0)))
        throw std::runtime_error("row orthogonality failed");
    }
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      mpz_class s = 0;
      for (int a = 0; a < k; ++a)
        s += mpz_class(static_cast<long>(rows_[a].values[i])) *
             mpz_class(static_cast<long>(rows_[a].values[j]));
      mpz_class expect = 0;
      if (i == j)
        expect = order / mpz_class(static_cast<unsigned long>(classes_[i].size));
      if (s != expect) throw std::runtime_error("column orthogonality failed");
    }
}

mpq_class CharTable::inner_product(const std::vector<long long>& f,
                                   const std::vector<long long>& g) const {
  mpq_class s = 0;
  for (int j = 0; j < num_classes(); ++j)
    s += mpq_class(static_cast<long>(classes_[j].size)) *
         mpq_class(static_cast<long>(f[j])) * mpq_class(static_cast<long>(g[j]));
  return s / static_cast<long>(order_);
}

IMat CharTable::restriction_multiplicities(const CharTable& sub,
                                           const std::vector<int>& fused_class,
                                           const CharTable& amb) {
  int ks = sub.num_classes();
  IMat m(sub.num_chars(), amb.num_chars());
  for (int psi = 0; psi < sub.num_chars(); ++psi)
    for (int phi = 0; phi < amb.num_chars(); ++phi) {
      mpq_class s = 0;
      for (int c = 0; c < ks; ++c)
        s += mpq_class(static_cast<long>(sub.classes()[c].size)) *
             mpq_class(static_cast<long>(sub.value(psi, c))) *
             mpq_class(static_cast<long>(amb.value(phi, fused_class[c])));
      s /= static_cast<long>(sub.group_order());
      if (s.get_den() != 1 || s < 0)
        throw std::runtime_error("restriction multiplicity not a nonneg integer");
      m.at(psi, phi) = s.get_num();
    }
  return m;
}

// ---------------------------------------------------------------------------
// W(B_n) with bipartition labels

long mn_character(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  int k = mu[0];
  std::vector<int> rest(mu.begin() + 1, mu.end());
  int rows = static_cast<int>(lambda.size());
  if (rows == 0) return 0;
  std::vector<int> beta(rows);
  for (int i = 0; i < rows; ++i) beta[i] = lambda[i] + (rows - 1 - i);
  long total = 0;
  for (int i = 0; i < rows; ++i) {
    int nb = beta[i] - k;
    if (nb < 0) continue;
    bool clash = false;
    for (int j = 0; j < rows; ++j)
      if (j != i && beta[j] == nb) { clash = true; break; }
    if (clash) continue;
    int ht = 0;
    for (int j = 0; j < rows; ++j)
      if (j != i && beta[j] > nb && beta[j] < beta[i]) ++ht;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    std::vector<int> nl(rows);
    for (int j = 0; j < rows; ++j) nl[j] = nbeta[j] - (rows - 1 - j);
    while (!nl.empty() && nl.back() == 0) nl.pop_back();
    long sub = mn_character(nl, rest);
    total += (ht % 2 == 0) ? sub : -sub;
  }
  return total;
}

namespace {

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

struct SignedPerm {
  std::vector<int> img;
  std::vector<int> sign;
};

SignedPerm signed_form(const WeylGroup& w, int n, const WeylElt& e) {
  const RootSystem& rs = w.root_system();
  SignedPerm sp;
  sp.img.resize(n);
  sp.sign.resize(n);
  for (int i = 0; i < n; ++i) {
    RootVec ei(n, 0);
    for (int j = i; j < n; ++j) ei[j] = 1;  // e_i = a_i + ... + a_n
    int k = rs.index_of(ei);
    if (k < 0) throw std::logic_error("not a B_n system");
    RootVec v = rs.root(e.p[k]);
    int target = -1, sgn = 0;
    for (int j = 0; j < n && target < 0; ++j)
      for (int s : {1, -1}) {
        RootVec ej(n, 0);
        for (int jj = j; jj < n; ++jj) ej[jj] = s;
        if (v == ej) {
          target = j;
          sgn = s;
          break;
        }
      }
    if (target < 0) throw std::logic_error("image not a short basis root");
    sp.img[i] = target;
    sp.sign[i] = sgn;
  }
  return sp;
}

}  // namespace

CharTable bn_character_table(const WeylGroup& w, int n) {
  CharTable t = CharTable::compute(w);
  const auto& elements = w.elements();
  int k = t.num_classes();

  auto induced_row = [&](const std::vector<int>& alpha, const std::vector<int>& beta) {
    int a = std::accumulate(alpha.begin(), alpha.end(), 0);
    long long horder = 1;
    for (int i = 1; i <= a; ++i) horder *= i;
    for (int i = 1; i <= n - a; ++i) horder *= i;
    horder <<= n;
    std::vector<long long> row(k, 0);
    for (int j = 0; j < k; ++j) {
      long long sum = 0;
      const WeylElt& g = t.classes()[j].rep;
      for (const auto& x : elements) {
        WeylElt y = w.mul(w.mul(w.inverse(x), g), x);
        SignedPerm sp = signed_form(w, n, y);
        bool inh = true;
        for (int i = 0; i < n && inh; ++i)
          if ((i < a) != (sp.img[i] < a)) inh = false;
        if (!inh) continue;
        std::vector<bool> seen(n, false);
        std::vector<int> ca, cb;
        for (int i = 0; i < n; ++i) {
          if (seen[i]) continue;
          int len = 0;
          for (int jj = i; !seen[jj]; jj = sp.img[jj]) {
            seen[jj] = true;
            ++len;
          }
          if (i < a)
            ca.push_back(len);
          else
            cb.push_back(len);
        }
        std::sort(ca.rbegin(), ca.rend());
        std::sort(cb.rbegin(), cb.rend());
        int delta = 1;
        for (int i = a; i < n; ++i)
          if (sp.sign[i] < 0) delta = -delta;
        sum += mn_character(alpha, ca) * mn_character(beta, cb) * delta;
      }
      if (sum % horder != 0) throw std::logic_error("induction not integral");
      row[j] = sum / horder;
    }
    return row;
  };

  auto part_str = [](const std::vector<int>& p) {
    if (p.empty()) return std::string("-");
    std::string s;
    for (int x : p) s += std::to_string(x);  // parts are < 10 here
    return s;
  };

  int assigned = 0;
  for (int a = n; a >= 0; --a)
    for (const auto& alpha : partitions_of(a))
      for (const auto& beta : partitions_of(n - a)) {
        auto row = induced_row(alpha, beta);
        int found = -1;
        for (int i = 0; i < t.num_chars(); ++i)
          if (t.row(i).values == row) {
            found = i;
            break;
          }
        if (found < 0) throw std::logic_error("bipartition character not in table");
        t.set_names(found,
                    "psi{(" + part_str(alpha) + "),(" + part_str(beta) + ")}", {});
        ++assigned;
      }
  if (assigned != t.num_chars())
    throw std::logic_error("bipartition label count mismatch");
  return t;
}

}  // namespace lch

namespace lch {

void apply_f4_labels(CharTable& t) {
  const WeylGroup& w = t.weyl();
  const RootSystem& rs = w.root_system();
  if (rs.label() != "F4" || t.num_chars() != 25)
    throw std::invalid_argument("apply_f4_labels: not the F4 table");
  int cl_long = t.class_of(w.simple_reflection(0));

  // group rows by (degree, b)
  std::map<std::pair<long, int>, std::vector<int>> groups;
  for (int i = 0; i < t.num_chars(); ++i)
    groups[{t.row(i).degree, t.row(i).b_invariant}].push_back(i);

  for (auto& [key, idxs] : groups) {
    std::string base =
        "phi{" + std::to_string(key.first) + "," + std::to_string(key.second) + "}";
    if (idxs.size() == 1) {
      t.set_names(idxs[0], base, {});
      continue;
    }
    if (idxs.size() != 2) throw std::logic_error("unexpected F4 label multiplicity");
    int a = idxs[0], b = idxs[1];
    long long va = t.value(a, cl_long), vb = t.value(b, cl_long);
    int primed, doubled;
    if (va != vb) {
      // the primed character takes the smaller value at long-root
      // reflections (so phi{1,12}' is the linear character that is -1
      // there, matching the subsystem restriction data)
      primed = va < vb ? a : b;
      doubled = va < vb ? b : a;
    } else {
      // the {6,6} pair: phi{6,6}' is the one whose restriction to the
      // A2+A2 subsystem contains the trivial character
      Subsystem a2a2 = Subsystem::closed_subsystem(
          rs, {0, 2, 3, rs.index_of({1, 3, 4, 2})});
      ReflSubgroup h(w, a2a2);
      long suma = 0;
      for (const auto& u : h.elements()) suma += t.value(a, t.class_of(u));
      primed = suma != 0 ? a : b;
      doubled = suma != 0 ? b : a;
    }
    t.set_names(primed, base + "'", {});
    t.set_names(doubled, base + "''", {});
  }

  // Lusztig-style aliases (the n_j names used alongside the Carter labels)
  static const std::pair<const char*, const char*> aliases[] = {
      {"phi{1,0}", "1_1"},     {"phi{1,12}''", "1_3"}, {"phi{1,12}'", "1_2"},
      {"phi{1,24}", "1_4"},    {"phi{2,4}''", "2_3"},  {"phi{2,16}'", "2_4"},
      {"phi{2,4}'", "2_1"},    {"phi{2,16}''", "2_2"}, {"phi{4,8}", "4_1"},
      {"phi{9,2}", "9_1"},     {"phi{9,6}''", "9_3"},  {"phi{9,6}'", "9_2"},
      {"phi{9,10}", "9_4"},    {"phi{6,6}'", "6_1"},   {"phi{6,6}''", "6_2"},
      {"phi{12,4}", "12_1"},   {"phi{4,1}", "4_2"},    {"phi{4,7}''", "4_4"},
      {"phi{4,7}'", "4_3"},    {"phi{4,13}", "4_5"},   {"phi{8,3}''", "8_3"},
      {"phi{8,9}'", "8_4"},    {"phi{8,3}'", "8_1"},   {"phi{8,9}''", "8_2"},
      {"phi{16,5}", "16_1"}};
  for (auto& [name, alias] : aliases) {
    int i = t.index_of(name);
    if (i < 0) throw std::logic_error("F4 label missing: " + std::string(name));
    t.set_names(i, name, {alias});
  }
}

void apply_e6_labels(CharTable& t) {
  if (t.num_chars() != 25)
    throw std::invalid_argument("apply_e6_labels: not the E6 table");
  // the (d,b) pairs of W(E6) are distinct, so phi{d,b} names are already
  // unambiguous; attach the s-series aliases for the family computations
  static const std::pair<const char*, const char*> aliases[] = {
      {"phi{80,7}", "80_s"},
      {"phi{90,8}", "90_s"},
      {"phi{20,10}", "20_s"},
      {"phi{10,9}", "10_s"},
      {"phi{60,8}", "60_s"}};
  for (auto& [name, alias] : aliases) {
    int i = t.index_of(name);
    if (i < 0) throw std::logic_error("E6 label missing: " + std::string(name));
    t.set_names(i, name, {alias});
  }
}

}  // namespace lch
