#include "hecke.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace lch {

HeckeElt HeckeElt::basis(const WeylElt& w, const CycVal& c) {
  HeckeElt e;
  if (!c.is_zero()) e.t_[w] = c;
  return e;
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  HeckeElt r = *this;
  for (const auto& [w, c] : o.t_) {
    auto it = r.t_.find(w);
    if (it == r.t_.end())
      r.t_[w] = c;
    else {
      it->second += c;
      if (it->second.is_zero()) r.t_.erase(it);
    }
  }
  return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
  return *this + o.scaled(CycVal(-1));
}

HeckeElt HeckeElt::scaled(const CycVal& c) const {
  HeckeElt r;
  if (c.is_zero()) return r;
  for (const auto& [w, v] : t_) r.t_[w] = v * c;
  return r;
}

HeckeElt HeckeAlgebra::mul_gen(const HeckeElt& a, int simple) const {
  const RootSystem& rs = w_->root_system();
  const WeylElt& s = w_->simple_reflection(simple);
  CycVal q = CycVal::q_power(2);
  CycVal qm1 = q - CycVal(1);
  HeckeElt r;
  for (const auto& [w, c] : a.t_) {
    WeylElt ws = w_->mul(w, s);
    // l(ws) > l(w) iff w(alpha_s) is positive
    bool up = rs.is_positive(w.p[simple]);
    if (up) {
      auto it = r.t_.find(ws);
      if (it == r.t_.end())
        r.t_[ws] = c;
      else
        it->second += c;
    } else {
      CycVal c1 = c * q;
      auto it = r.t_.find(ws);
      if (it == r.t_.end())
        r.t_[ws] = c1;
      else
        it->second += c1;
      CycVal c2 = c * qm1;
      it = r.t_.find(w);
      if (it == r.t_.end())
        r.t_[w] = c2;
      else
        it->second += c2;
    }
  }
  for (auto it = r.t_.begin(); it != r.t_.end();)
    it = it->second.is_zero() ? r.t_.erase(it) : std::next(it);
  if (r.t_.size() > limit_)
    throw std::runtime_error("hecke product support exceeds the configured limit");
  return r;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  HeckeElt r;
  for (const auto& [w, c] : b.terms()) {
    HeckeElt acc = a.scaled(c);
    for (int letter : w_->reduced_word(w)) acc = mul_gen(acc, letter);
    r = r + acc;
  }
  return r;
}

std::map<WeylElt, Cyc> HeckeAlgebra::specialize_q1(const HeckeElt& a) const {
  std::map<WeylElt, Cyc> out;
  for (const auto& [w, c] : a.terms()) {
    Cyc v;
    for (const auto& [e, coef] : c.terms()) {
      if (e % 2 != 0) throw std::runtime_error("odd half-power at q = 1");
      v += coef;
    }
    if (!v.is_zero()) out[w] = v;
  }
  return out;
}

std::vector<CycVal> HeckeAlgebra::class_polynomials(const WeylElt& w0,
                                                    const CharTable& t) const {
  // Geck-Pfeiffer reduction: explore the length-preserving conjugation orbit;
  // on a length drop, chi(T_x) = q chi(T_{sxs}) + (q-1) chi(T_{sx}).
  int k = t.num_classes();
  std::unordered_map<uint64_t, std::vector<CycVal>> memo;
  std::function<std::vector<CycVal>(const WeylElt&)> f =
      [&](const WeylElt& x0) -> std::vector<CycVal> {
    auto it0 = memo.find(x0.hash());
    if (it0 != memo.end()) return it0->second;
    int len0 = w_->length(x0);
    std::unordered_map<uint64_t, char> seen;
    std::vector<WeylElt> orbit{x0};
    seen[x0.hash()] = 1;
    for (size_t head = 0; head < orbit.size(); ++head) {
      WeylElt x = orbit[head];
      for (int i = 0; i < w_->rank(); ++i) {
        const WeylElt& s = w_->simple_reflection(i);
        WeylElt sxs = w_->mul(w_->mul(s, x), s);
        int len = w_->length(sxs);
        if (len < len0) {
          WeylElt sx = w_->mul(s, x);
          std::vector<CycVal> fa = f(sxs);
          std::vector<CycVal> fb = f(sx);
          CycVal q = CycVal::q_power(2);
          CycVal qm1 = q - CycVal(1);
          std::vector<CycVal> res(k);
          for (int c = 0; c < k; ++c) res[c] = q * fa[c] + qm1 * fb[c];
          for (const auto& y : orbit) memo[y.hash()] = res;
          return res;
        }
        if (len == len0 && !seen.count(sxs.hash())) {
          seen[sxs.hash()] = 1;
          orbit.push_back(std::move(sxs));
        }
      }
    }
    // no drop anywhere: the whole orbit is of minimal length in its class
    std::vector<CycVal> res(k);
    res[t.class_of(x0)] = CycVal(1);
    for (const auto& y : orbit) memo[y.hash()] = res;
    return res;
  };
  return f(w0);
}

HeckeValueTable HeckeValueTable::parse(const std::string& text) {
  HeckeValueTable t;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw != "value")
      throw std::runtime_error("hecke values line " + std::to_string(line_no) +
                               ": expected 'value'");
    HeckeCharValue v;
    std::string poly;
    ls >> v.char_name >> v.class_name >> poly;
    v.value = CycVal::parse(poly);
    std::string srckw;
    ls >> srckw;
    if (srckw != "source")
      throw std::runtime_error("hecke values line " + std::to_string(line_no) +
                               ": missing source");
    std::getline(ls, v.source);
    while (!v.source.empty() && v.source.front() == ' ') v.source.erase(0, 1);
    if (v.source.empty())
      throw std::runtime_error("hecke values line " + std::to_string(line_no) +
                               ": empty source");
    t.entries.push_back(std::move(v));
  }
  return t;
}

const HeckeCharValue* HeckeValueTable::find(const std::string& char_name,
                                            const std::string& class_name) const {
  for (const auto& e : entries)
    if (e.char_name == char_name && e.class_name == class_name) return &e;
  return nullptr;
}

}  // namespace lch
