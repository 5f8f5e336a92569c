#pragma once

#include <map>
#include <string>
#include <vector>

#include "chartab.hpp"
#include "cyc.hpp"
#include "weyl.hpp"

namespace lch {

// Element of the equal-parameter Iwahori-Hecke algebra of W in the standard
// basis {T_w}, with Laurent-in-sqrt(q) coefficients.
class HeckeElt {
 public:
  HeckeElt() = default;

  static HeckeElt basis(const WeylElt& w, const CycVal& c = CycVal(1));
  static HeckeElt unit(const WeylGroup& w) { return basis(w.identity()); }

  const std::map<WeylElt, CycVal>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t support() const { return t_.size(); }

  HeckeElt operator+(const HeckeElt& o) const;
  HeckeElt operator-(const HeckeElt& o) const;
  HeckeElt scaled(const CycVal& c) const;
  bool operator==(const HeckeElt& o) const { return t_ == o.t_; }

 private:
  std::map<WeylElt, CycVal> t_;
  friend class HeckeAlgebra;
};

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const WeylGroup& w, size_t support_limit = 2000000)
      : w_(&w), limit_(support_limit) {}

  const WeylGroup& weyl() const { return *w_; }

  // right multiplication by T_s: T_w T_s = T_{ws} or q T_{ws} + (q-1) T_w
  HeckeElt mul_gen(const HeckeElt& a, int simple) const;
  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;

  // group-algebra specialization q = 1: coefficients evaluated, map w -> Cyc
  std::map<WeylElt, Cyc> specialize_q1(const HeckeElt& a) const;

  // class polynomials: chi(T_w) = sum_C f_{w,C} chi(T_{w_C}) with w_C the
  // minimal-length class representatives of the stored table's classes
  std::vector<CycVal> class_polynomials(const WeylElt& w, const CharTable& t) const;

 private:
  const WeylGroup* w_;
  size_t limit_;
};

// One imported or fixed Hecke character value phi^{(q)}(T_w).
struct HeckeCharValue {
  std::string char_name;   // e.g. "phi{512,11}" or an alias
  std::string class_name;  // e.g. "coxeter"
  CycVal value;
  std::string source;      // provenance
};

struct HeckeValueTable {
  std::vector<HeckeCharValue> entries;

  static HeckeValueTable parse(const std::string& text);
  const HeckeCharValue* find(const std::string& char_name,
                             const std::string& class_name) const;
};

}  // namespace lch
