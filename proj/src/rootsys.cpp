#include "rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lch {

namespace {

struct CartanBlock {
  IMat a;
  std::vector<int> d;  // norms of simple roots (short = 1)
};

CartanBlock simple_cartan(char letter, int n) {
  auto chain = [](int n) {
    IMat a(n, n);
    for (int i = 0; i < n; ++i) {
      a.at(i, i) = 2;
      if (i + 1 < n) {
        a.at(i, i + 1) = -1;
        a.at(i + 1, i) = -1;
      }
    }
    return a;
  };
  CartanBlock b;
  switch (letter) {
    case 'A':
      if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
      b.a = chain(n);
      b.d.assign(n, 1);
      return b;
    case 'B':
      // alpha_n short
      if (n < 2) throw std::invalid_argument("B_n needs n >= 2");
      b.a = chain(n);
      b.a.at(n - 1, n - 2) = -2;  // <alpha_{n-1}, alpha_n^vee> = -2
      b.d.assign(n, 2);
      b.d[n - 1] = 1;
      return b;
    case 'C':
      // alpha_n long
      if (n < 2) throw std::invalid_argument("C_n needs n >= 2");
      b.a = chain(n);
      b.a.at(n - 2, n - 1) = -2;  // <alpha_n, alpha_{n-1}^vee> = -2
      b.d.assign(n, 1);
      b.d[n - 1] = 2;
      return b;
    case 'D': {
      if (n < 3) throw std::invalid_argument("D_n needs n >= 3");
      IMat a(n, n);
      for (int i = 0; i < n; ++i) a.at(i, i) = 2;
      for (int i = 0; i + 1 < n - 1; ++i) {
        a.at(i, i + 1) = -1;
        a.at(i + 1, i) = -1;
      }
      a.at(n - 3, n - 1) = -1;
      a.at(n - 1, n - 3) = -1;
      b.a = a;
      b.d.assign(n, 1);
      return b;
    }
    case 'E': {
      if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in 6..8");
      IMat a(n, n);
      for (int i = 0; i < n; ++i) a.at(i, i) = 2;
      auto link = [&](int i, int j) {
        a.at(i - 1, j - 1) = -1;
        a.at(j - 1, i - 1) = -1;
      };
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), branch 2-4
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      if (n >= 7) link(6, 7);
      if (n >= 8) link(7, 8);
      link(2, 4);
      b.a = a;
      b.d.assign(n, 1);
      return b;
    }
    case 'F': {
      if (n != 4) throw std::invalid_argument("F_n needs n = 4");
      IMat a(4, 4);
      int m[4][4] = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a.at(i, j) = m[i][j];
      b.a = a;
      b.d = {2, 2, 1, 1};
      return b;
    }
    case 'G': {
      if (n != 2) throw std::invalid_argument("G_n needs n = 2");
      IMat a(2, 2);
      a.at(0, 0) = 2;
      a.at(0, 1) = -1;
      a.at(1, 0) = -3;
      a.at(1, 1) = 2;
      b.a = a;
      b.d = {3, 1};
      return b;
    }
    default:
      throw std::invalid_argument("unknown Cartan letter");
  }
}

std::vector<std::pair<char, int>> parse_type_label(const std::string& label) {
  std::vector<std::pair<char, int>> parts;
  size_t i = 0;
  while (i < label.size()) {
    char c = label[i];
    if (c == '+' || c == 'x' || c == ' ' || c == '*') {
      ++i;
      continue;
    }
    if (c < 'A' || c > 'G') throw std::invalid_argument("bad type label: " + label);
    ++i;
    int n = 0;
    bool got = false;
    while (i < label.size() && isdigit(static_cast<unsigned char>(label[i]))) {
      n = n * 10 + (label[i] - '0');
      ++i;
      got = true;
    }
    if (!got) throw std::invalid_argument("missing rank in type label: " + label);
    parts.emplace_back(c, n);
  }
  if (parts.empty()) throw std::invalid_argument("empty type label");
  return parts;
}

}  // namespace

RootSystem RootSystem::build(const std::string& type_label) {
  auto parts = parse_type_label(type_label);
  RootSystem rs;
  int rank = 0;
  for (auto& [c, n] : parts) rank += n;
  rs.rank_ = rank;
  rs.cartan_ = IMat(rank, rank);
  rs.d_.assign(rank, 1);
  int off = 0;
  std::string canon;
  for (auto& [c, n] : parts) {
    CartanBlock b = simple_cartan(c, n);
    for (int i = 0; i < n; ++i) {
      rs.d_[off + i] = b.d[i];
      for (int j = 0; j < n; ++j) rs.cartan_.at(off + i, off + j) = b.a.at(i, j);
    }
    off += n;
    if (!canon.empty()) canon += "+";
    canon += c;
    canon += std::to_string(n);
  }
  rs.label_ = canon;
  rs.enumerate();
  return rs;
}

void RootSystem::enumerate() {
  int r = rank_;
  // closure of the simple roots under simple reflections
  std::map<RootVec, int> index;
  auto pair_simple = [&](const RootVec& v, int i) {
    long s = 0;
    for (int j = 0; j < r; ++j) s += cartan_.at(i, j).get_si() * v[j];
    return static_cast<int>(s);
  };
  std::vector<RootVec> all;
  for (int i = 0; i < r; ++i) {
    RootVec v(r, 0);
    v[i] = 1;
    index[v] = static_cast<int>(all.size());
    all.push_back(v);
  }
  for (size_t head = 0; head < all.size(); ++head) {
    RootVec v = all[head];
    for (int i = 0; i < r; ++i) {
      int p = pair_simple(v, i);
      RootVec w = v;
      w[i] -= p;
      if (!index.count(w)) {
        index[w] = static_cast<int>(all.size());
        all.push_back(w);
      }
    }
  }
  // canonical ordering: simple roots first (by index), then the remaining
  // positives by (height, lex), then negatives mirrored
  std::vector<RootVec> pos;
  for (auto& v : all) {
    int h = std::accumulate(v.begin(), v.end(), 0);
    if (h > 0) pos.push_back(v);
  }
  std::sort(pos.begin(), pos.end(), [&](const RootVec& a, const RootVec& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;  // descending lex, so alpha_1 < alpha_2 < ... by index
  });
  // simple roots are exactly the height-1 elements, in diagram order
  roots_.clear();
  for (auto& v : pos) roots_.push_back(v);
  for (auto& v : pos) {
    RootVec w(v);
    for (auto& x : w) x = -x;
    roots_.push_back(w);
  }
  int n = static_cast<int>(roots_.size());
  int np = n / 2;
  neg_.assign(n, 0);
  positive_.assign(n, false);
  for (int k = 0; k < np; ++k) {
    neg_[k] = k + np;
    neg_[k + np] = k;
    positive_[k] = true;
  }
  // norms via the invariant bilinear form B_ij = d_i * A_ij
  norm2_.assign(n, 0);
  for (int k = 0; k < n; ++k) {
    long s = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        s += static_cast<long>(d_[i]) * cartan_.at(i, j).get_si() * roots_[k][i] *
             roots_[k][j];
    if (s % 2 != 0) throw std::logic_error("odd norm");
    norm2_[k] = static_cast<int>(s / 2);
  }
  // coroots: alpha^vee = sum_j c_j d_j / d_alpha alpha_j^vee
  coroots_.assign(n, RootVec(r, 0));
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < r; ++j) {
      int num = roots_[k][j] * d_[j];
      if (num % norm2_[k] != 0) throw std::logic_error("non-integral coroot");
      coroots_[k][j] = num / norm2_[k];
    }
  }
  // reflection permutations
  idx_.clear();
  for (int k = 0; k < n; ++k) idx_[roots_[k]] = k;
  auto& idx = idx_;
  refl_.assign(n, std::vector<int>(n));
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) {
      // s_k(beta) = beta - <beta, alpha_k^vee> alpha_k
      long pv = 0;
      for (int i = 0; i < r; ++i) {
        long row = 0;
        for (int j2 = 0; j2 < r; ++j2) row += cartan_.at(i, j2).get_si() * roots_[m][j2];
        pv += coroots_[k][i] * row;
      }
      RootVec w = roots_[m];
      for (int j = 0; j < r; ++j) w[j] -= static_cast<int>(pv) * roots_[k][j];
      auto it = idx.find(w);
      if (it == idx.end()) throw std::logic_error("reflection left the root system");
      refl_[k][m] = it->second;
    }
  }
}

int RootSystem::height(int k) const {
  return std::accumulate(roots_[k].begin(), roots_[k].end(), 0);
}

int RootSystem::index_of(const RootVec& v) const {
  auto it = idx_.find(v);
  return it == idx_.end() ? -1 : it->second;
}

int RootSystem::pairing_with_simple_coroot(int k, int i) const {
  long s = 0;
  for (int j = 0; j < rank_; ++j) s += cartan_.at(i, j).get_si() * roots_[k][j];
  return static_cast<int>(s);
}

int RootSystem::pairing(int alpha, int beta) const {
  // <alpha, beta^vee> = sum_i coroot(beta)_i <alpha, alpha_i^vee>
  long s = 0;
  for (int i = 0; i < rank_; ++i)
    s += static_cast<long>(coroots_[beta][i]) * pairing_with_simple_coroot(alpha, i);
  return static_cast<int>(s);
}

int RootSystem::highest_root() const {
  int best = 0, bh = height(0);
  for (int k = 1; k < num_positive(); ++k)
    if (height(k) > bh) {
      best = k;
      bh = height(k);
    }
  return best;
}

std::string RootSystem::root_str(int k) const {
  std::string s = "(";
  for (int i = 0; i < rank_; ++i) {
    if (i) s += ",";
    s += std::to_string(roots_[k][i]);
  }
  return s + ")";
}

std::string RootSystem::root_alpha_str(int k) const {
  std::string s;
  for (int i = 0; i < rank_; ++i) {
    int c = roots_[k][i];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? "+" : "-";
    else if (c < 0) s += "-";
    int a = std::abs(c);
    if (a != 1) s += std::to_string(a) + "*";
    s += "a" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------

Subsystem Subsystem::closed_subsystem(const RootSystem& rs, const std::vector<int>& gens) {
  Subsystem sub;
  sub.rs_ = &rs;
  sub.member_.assign(rs.num_roots(), false);
  std::vector<int> work;
  auto add = [&](int k) {
    if (!sub.member_[k]) {
      sub.member_[k] = true;
      work.push_back(k);
    }
  };
  for (int g : gens) {
    add(g);
    add(rs.negative_of(g));
  }
  // closure under addition of roots
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> cur;
    for (int k = 0; k < rs.num_roots(); ++k)
      if (sub.member_[k]) cur.push_back(k);
    for (size_t a = 0; a < cur.size(); ++a)
      for (size_t b = a + 1; b < cur.size(); ++b) {
        RootVec v = rs.root(cur[a]);
        const RootVec& w = rs.root(cur[b]);
        for (size_t i = 0; i < v.size(); ++i) v[i] += w[i];
        int k = rs.index_of(v);
        if (k >= 0 && !sub.member_[k]) {
          sub.member_[k] = true;
          changed = true;
        }
      }
  }
  for (int k = 0; k < rs.num_roots(); ++k)
    if (sub.member_[k]) sub.roots_.push_back(k);

  // simple system: positive members not expressible as a sum of two
  // positive members
  std::vector<int> posm;
  for (int k : sub.roots_)
    if (rs.is_positive(k)) posm.push_back(k);
  std::set<RootVec> posset;
  for (int k : posm) posset.insert(rs.root(k));
  for (int k : posm) {
    bool decomposable = false;
    for (int a : posm) {
      if (a == k) continue;
      RootVec diff = rs.root(k);
      const RootVec& w = rs.root(a);
      for (size_t i = 0; i < diff.size(); ++i) diff[i] -= w[i];
      if (posset.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) sub.simples_.push_back(k);
  }
  std::sort(sub.simples_.begin(), sub.simples_.end(), [&](int a, int b) {
    int ha = rs.height(a), hb = rs.height(b);
    if (ha != hb) return ha < hb;
    return rs.root(a) > rs.root(b);  // same convention as the root order
  });

  // components and type
  int m = static_cast<int>(sub.simples_.size());
  if (m == 0) {
    sub.type_ = "empty";
    return sub;
  }
  IMat cm(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) cm.at(i, j) = rs.pairing(sub.simples_[j], sub.simples_[i]);
  // connected components of the Cartan graph
  std::vector<int> comp(m, -1);
  int nc = 0;
  for (int i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = nc;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int j = 0; j < m; ++j)
        if (comp[j] < 0 && cm.at(x, j) != 0) {
          comp[j] = nc;
          stack.push_back(j);
        }
    }
    ++nc;
  }
  struct Comp {
    std::vector<int> nodes;
    std::string type;
  };
  std::vector<Comp> comps(nc);
  for (int i = 0; i < m; ++i) comps[comp[i]].nodes.push_back(i);
  for (auto& c : comps) {
    int k = static_cast<int>(c.nodes.size());
    IMat sm(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sm.at(i, j) = cm.at(c.nodes[i], c.nodes[j]);
    c.type = identify_cartan_type(sm);
  }
  std::sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) {
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() > b.nodes.size();
    return a.type < b.type;
  });
  std::string label;
  for (auto& c : comps) {
    if (!label.empty()) label += "+";
    label += c.type;
    std::vector<int> roots;
    for (int i : c.nodes) roots.push_back(sub.simples_[i]);
    sub.components_.push_back(roots);
  }
  sub.type_ = label;
  return sub;
}

bool Subsystem::contains(int k) const {
  return k >= 0 && k < static_cast<int>(member_.size()) && member_[k];
}

std::string identify_cartan_type(const IMat& cartan) {
  int n = cartan.rows;
  // candidates of rank n, tried in deterministic order
  std::vector<std::string> names;
  names.push_back("A" + std::to_string(n));
  if (n >= 2) names.push_back("B" + std::to_string(n));
  if (n >= 3) names.push_back("C" + std::to_string(n));
  if (n >= 4) names.push_back("D" + std::to_string(n));
  if (n >= 6 && n <= 8) names.push_back("E" + std::to_string(n));
  if (n == 4) names.push_back("F4");
  if (n == 2) names.push_back("G2");

  // B2 == C2 as abstract types: keep the B-name
  for (const auto& name : names) {
    RootSystem ref = RootSystem::build(name);
    // try to match cartan to ref.cartan() under a node permutation
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    // backtracking with degree pruning
    std::vector<int> degc(n, 0), degr(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i != j && cartan.at(i, j) != 0) ++degc[i];
        if (i != j && ref.cartan().at(i, j) != 0) ++degr[i];
      }
    std::function<bool(int)> rec = [&](int i) -> bool {
      if (i == n) return true;
      for (int t = 0; t < n; ++t) {
        if (used[t] || degc[i] != degr[t]) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
          if (cartan.at(i, j) != ref.cartan().at(t, perm[j])) ok = false;
          if (ok && cartan.at(j, i) != ref.cartan().at(perm[j], t)) ok = false;
        }
        if (!ok) continue;
        perm[i] = t;
        used[t] = true;
        if (rec(i + 1)) return true;
        used[t] = false;
        perm[i] = -1;
      }
      return false;
    };
    if (rec(0)) return name;
  }
  throw std::logic_error("unrecognized Cartan matrix");
}

}  // namespace lch
