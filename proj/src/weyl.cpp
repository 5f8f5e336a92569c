#include "weyl.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace lch {

uint64_t WeylElt::hash(uint64_t seed) const {
  uint64_t h = seed;
  for (uint16_t x : p) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return h;
}

Automorphism Automorphism::identity(const RootSystem& rs) {
  Automorphism a;
  a.delta.resize(rs.num_roots());
  for (size_t i = 0; i < a.delta.size(); ++i) a.delta[i] = static_cast<uint16_t>(i);
  return a;
}

bool Automorphism::is_identity() const {
  for (size_t i = 0; i < delta.size(); ++i)
    if (delta[i] != i) return false;
  return true;
}

WeylElt Automorphism::apply(const WeylElt& w) const {
  // delta o w o delta^{-1}
  WeylElt r;
  r.p.resize(w.p.size());
  for (size_t x = 0; x < delta.size(); ++x) r.p[delta[x]] = delta[w.p[x]];
  return r;
}

Automorphism Automorphism::compose_perm_left(const WeylElt& d) const {
  Automorphism a;
  a.delta.resize(delta.size());
  for (size_t x = 0; x < delta.size(); ++x) a.delta[x] = d.p[delta[x]];
  return a;
}

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(&rs) {
  simple_.resize(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    simple_[i].p.assign(rs.reflection_perm(i).begin(), rs.reflection_perm(i).end());
  }
}

WeylElt WeylGroup::identity() const {
  WeylElt e;
  e.p.resize(rs_->num_roots());
  for (size_t i = 0; i < e.p.size(); ++i) e.p[i] = static_cast<uint16_t>(i);
  return e;
}

WeylElt WeylGroup::reflection(int root_index) const {
  WeylElt r;
  r.p.assign(rs_->reflection_perm(root_index).begin(),
             rs_->reflection_perm(root_index).end());
  return r;
}

WeylElt WeylGroup::mul(const WeylElt& a, const WeylElt& b) const {
  WeylElt r;
  r.p.resize(a.p.size());
  for (size_t i = 0; i < a.p.size(); ++i) r.p[i] = a.p[b.p[i]];
  return r;
}

WeylElt WeylGroup::inverse(const WeylElt& a) const {
  WeylElt r;
  r.p.resize(a.p.size());
  for (size_t i = 0; i < a.p.size(); ++i) r.p[a.p[i]] = static_cast<uint16_t>(i);
  return r;
}

int WeylGroup::length(const WeylElt& w) const {
  int np = rs_->num_positive();
  int l = 0;
  for (int k = 0; k < np; ++k)
    if (!rs_->is_positive(w.p[k])) ++l;
  return l;
}

bool WeylGroup::is_identity(const WeylElt& w) const {
  for (size_t i = 0; i < w.p.size(); ++i)
    if (w.p[i] != i) return false;
  return true;
}

std::vector<int> WeylGroup::reduced_word(const WeylElt& w) const {
  // choose the smallest i with l(s_i u) < l(u) at each step; this yields the
  // lexicographically least reduced word
  std::vector<int> word;
  WeylElt u = w;
  WeylElt ui = inverse(u);
  while (!is_identity(u)) {
    int pick = -1;
    for (int i = 0; i < rs_->rank(); ++i) {
      // l(s_i u) < l(u) iff u^{-1}(alpha_i) < 0
      if (!rs_->is_positive(ui.p[i])) {
        pick = i;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("no descent found");
    word.push_back(pick);
    u = mul(simple_[pick], u);
    ui = inverse(u);
  }
  return word;
}

WeylElt WeylGroup::from_word(const std::vector<int>& word) const {
  WeylElt w = identity();
  for (int i : word) w = mul(w, simple_[i]);
  return w;
}

WeylElt WeylGroup::parse_word(const std::string& digits) const {
  std::vector<int> word;
  for (char c : digits) {
    if (c == ' ') continue;
    if (c < '1' || c > '9') throw std::invalid_argument("bad word digit");
    int i = c - '1';
    if (i >= rs_->rank()) throw std::invalid_argument("word digit out of range");
    word.push_back(i);
  }
  return from_word(word);
}

std::string WeylGroup::word_str(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += static_cast<char>('1' + i);
  return s;
}

WeylElt WeylGroup::longest_element() const {
  // send every positive root negative greedily
  WeylElt w = identity();
  for (;;) {
    int pick = -1;
    for (int i = 0; i < rs_->rank(); ++i)
      if (rs_->is_positive(w.p[i])) {
        pick = i;
        break;
      }
    if (pick < 0) break;
    w = mul(w, simple_[pick]);
  }
  // w sends all simples negative => w = w0 (as left-multiplication by w gives
  // descent at every letter); verify
  for (int k = 0; k < rs_->num_positive(); ++k)
    if (rs_->is_positive(w.p[k])) throw std::logic_error("longest element search failed");
  return w;
}

namespace {
mpz_class simple_order(char c, int n) {
  auto fact = [](int k) {
    mpz_class f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  mpz_class two = 2;
  mpz_class p;
  switch (c) {
    case 'A':
      return fact(n + 1);
    case 'B':
    case 'C':
      mpz_ui_pow_ui(p.get_mpz_t(), 2, n);
      return p * fact(n);
    case 'D':
      mpz_ui_pow_ui(p.get_mpz_t(), 2, n - 1);
      return p * fact(n);
    case 'G':
      return 12;
    case 'F':
      return 1152;
    case 'E':
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return mpz_class("696729600");
    default:
      throw std::invalid_argument("order_from_type");
  }
}
}  // namespace

mpz_class WeylGroup::order_from_type() const {
  mpz_class o = 1;
  const std::string& l = rs_->label();
  size_t i = 0;
  while (i < l.size()) {
    if (l[i] == '+') {
      ++i;
      continue;
    }
    char c = l[i++];
    int n = 0;
    while (i < l.size() && isdigit(static_cast<unsigned char>(l[i])))
      n = n * 10 + (l[i++] - '0');
    o *= simple_order(c, n);
  }
  return o;
}

const std::vector<WeylElt>& WeylGroup::elements() const {
  if (!elements_.empty()) return elements_;
  mpz_class expect = order_from_type();
  if (expect > enumeration_limit)
    throw std::runtime_error("group too large for full enumeration: " + rs_->label());
  std::unordered_set<uint64_t> seen;
  std::vector<WeylElt> frontier{identity()};
  seen.insert(frontier[0].hash());
  elements_.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<WeylElt> next;
    for (const auto& w : frontier)
      for (int i = 0; i < rs_->rank(); ++i) {
        WeylElt x = mul(w, simple_[i]);
        uint64_t h = x.hash();
        if (seen.insert(h).second) {
          elements_.push_back(x);
          next.push_back(std::move(x));
        }
      }
    frontier = std::move(next);
  }
  if (mpz_class(static_cast<unsigned long>(elements_.size())) != expect)
    throw std::logic_error("enumeration count mismatch (hash collision?)");
  order_ = elements_.size();
  return elements_;
}

uint64_t WeylGroup::order() const {
  mpz_class o = order_from_type();
  if (!o.fits_ulong_p()) throw std::runtime_error("order too large");
  return o.get_ui();
}

IMat WeylGroup::matrix_on_roots(const WeylElt& w) const {
  int r = rs_->rank();
  IMat m(r, r);
  for (int j = 0; j < r; ++j) {
    const RootVec& img = rs_->root(w.p[j]);
    for (int i = 0; i < r; ++i) m.at(i, j) = img[i];
  }
  return m;
}

IMat WeylGroup::matrix_on_coroots(const WeylElt& w) const {
  int r = rs_->rank();
  IMat m(r, r);
  for (int j = 0; j < r; ++j) {
    // image of the j-th simple coroot is the coroot of w(alpha_j)
    const RootVec& img = rs_->coroot(w.p[j]);
    for (int i = 0; i < r; ++i) m.at(i, j) = img[i];
  }
  return m;
}

long WeylGroup::reflection_trace(const WeylElt& w) const {
  IMat m = matrix_on_roots(w);
  long t = 0;
  for (int i = 0; i < rs_->rank(); ++i) t += m.at(i, i).get_si();
  return t;
}

// ---------------------------------------------------------------------------

ReflSubgroup::ReflSubgroup(const WeylGroup& w, const Subsystem& sub)
    : w_(&w), sub_(&sub) {
  for (int k : sub.simple_system()) gens_.push_back(w.reflection(k));
}

const std::vector<WeylElt>& ReflSubgroup::elements() const {
  if (!elements_.empty()) return elements_;
  std::vector<WeylElt> frontier{w_->identity()};
  elt_set_[frontier[0].hash()] = 1;
  elements_.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<WeylElt> next;
    for (const auto& x : frontier)
      for (const auto& g : gens_) {
        WeylElt y = w_->mul(x, g);
        uint64_t h = y.hash();
        if (!elt_set_.count(h)) {
          elt_set_[h] = 1;
          elements_.push_back(y);
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return elements_;
}

bool ReflSubgroup::contains(const WeylElt& w) const {
  elements();
  return elt_set_.count(w.hash()) != 0;
}

WeylElt ReflSubgroup::min_coset_rep(const WeylElt& w) const {
  // reduce: while some alpha in Delta' has d^{-1}(alpha) < 0, multiply by
  // the corresponding reflection on the left
  const RootSystem& rs = w_->root_system();
  WeylElt d = w;
  for (;;) {
    WeylElt di = w_->inverse(d);
    int pick = -1;
    for (int k : sub_->simple_system())
      if (!rs.is_positive(di.p[k])) {
        pick = k;
        break;
      }
    if (pick < 0) break;
    d = w_->mul(w_->reflection(pick), d);
  }
  return d;
}

// ---------------------------------------------------------------------------

int TwistedClassification::class_of(const WeylElt& w) const {
  auto it = class_of_hash.find(w.hash());
  if (it == class_of_hash.end()) throw std::runtime_error("element not classified");
  return it->second;
}

TwistedClassification classify_twisted(const WeylGroup& w,
                                       const std::vector<WeylElt>& group_elements,
                                       const std::vector<WeylElt>& conj_gens,
                                       const Automorphism& sigma) {
  TwistedClassification out;
  std::vector<std::pair<WeylElt, WeylElt>> gens;  // (x^{-1}, sigma(x))
  for (const auto& x : conj_gens) gens.emplace_back(w.inverse(x), sigma.apply(x));
  for (const auto& u0 : group_elements) {
    if (out.class_of_hash.count(u0.hash())) continue;
    int id = static_cast<int>(out.classes.size());
    TwistedClass tc;
    std::vector<WeylElt> orbit{u0};
    out.class_of_hash[u0.hash()] = id;
    for (size_t head = 0; head < orbit.size(); ++head) {
      WeylElt u = orbit[head];
      for (const auto& [xi, sx] : gens) {
        WeylElt y = w.mul(w.mul(xi, u), sx);
        uint64_t h = y.hash();
        if (!out.class_of_hash.count(h)) {
          out.class_of_hash[h] = id;
          orbit.push_back(std::move(y));
        }
      }
    }
    tc.size = orbit.size();
    int bestlen = w.length(orbit[0]);
    for (const auto& u : orbit) bestlen = std::min(bestlen, w.length(u));
    std::vector<int> bestword;
    bool have = false;
    for (const auto& u : orbit) {
      if (w.length(u) != bestlen) continue;
      std::vector<int> word = w.reduced_word(u);
      if (!have || word < bestword) {
        have = true;
        tc.rep = u;
        bestword = std::move(word);
      }
    }
    tc.rep_word = bestword;
    out.classes.push_back(std::move(tc));
  }
  // deterministic order by (rep length, rep word); remap the hash values
  std::vector<int> perm(out.classes.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto& wa = out.classes[a].rep_word;
    const auto& wb = out.classes[b].rep_word;
    if (wa.size() != wb.size()) return wa.size() < wb.size();
    return wa < wb;
  });
  std::vector<int> inv(perm.size());
  std::vector<TwistedClass> sorted;
  for (size_t i = 0; i < perm.size(); ++i) {
    sorted.push_back(std::move(out.classes[perm[i]]));
    inv[perm[i]] = static_cast<int>(i);
  }
  out.classes = std::move(sorted);
  for (auto& [h, id] : out.class_of_hash) id = inv[id];
  return out;
}

std::vector<TwistedClass> twisted_classes(const WeylGroup& w,
                                          const std::vector<WeylElt>& group_elements,
                                          const std::vector<WeylElt>& conj_gens,
                                          const Automorphism& sigma) {
  return classify_twisted(w, group_elements, conj_gens, sigma).classes;
}

std::vector<WeylElt> sigma_centralizer(const WeylGroup& w,
                                       const std::vector<WeylElt>& group_elements,
                                       const Automorphism& sigma, const WeylElt& elt) {
  std::vector<WeylElt> c;
  for (const auto& x : group_elements) {
    // x w = w sigma(x)
    if (w.mul(x, elt) == w.mul(elt, sigma.apply(x))) c.push_back(x);
  }
  return c;
}

std::string diagram_permutation(const Subsystem& sub, const Automorphism& sigma_prime) {
  const auto& simples = sub.simple_system();
  int n = static_cast<int>(simples.size());
  std::vector<int> perm(n, -1);
  for (int i = 0; i < n; ++i) {
    int img = sigma_prime.apply_root(simples[i]);
    for (int j = 0; j < n; ++j)
      if (simples[j] == img) {
        perm[i] = j;
        break;
      }
    if (perm[i] < 0)
      throw std::runtime_error("automorphism does not stabilize the simple system");
  }
  // cycle notation on 1-based positions
  std::string s;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) {
      seen[i] = true;
      continue;
    }
    std::string cyc = "(" + std::to_string(i + 1);
    seen[i] = true;
    for (int j = perm[i]; j != i; j = perm[j]) {
      cyc += "," + std::to_string(j + 1);
      seen[j] = true;
    }
    cyc += ")";
    s += cyc;
  }
  return s.empty() ? "()" : s;
}

}  // namespace lch
