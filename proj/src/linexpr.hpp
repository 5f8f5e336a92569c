#pragma once

#include <map>
#include <string>

#include "cyc.hpp"

namespace lch {

// value that is linear in a few named unknown scalars (zeta, D0, ...)
struct LinExpr {
  CycVal constant;
  std::map<std::string, CycVal> terms;

  LinExpr() = default;
  LinExpr(const CycVal& c) : constant(c) {}
  static LinExpr symbol(const std::string& name, const CycVal& coeff = CycVal(1)) {
    LinExpr e;
    if (!coeff.is_zero()) e.terms[name] = coeff;
    return e;
  }

  bool is_constant() const { return terms.empty(); }
  bool is_zero() const { return constant.is_zero() && terms.empty(); }

  LinExpr operator+(const LinExpr& o) const {
    LinExpr r = *this;
    r.constant += o.constant;
    for (const auto& [n, c] : o.terms) {
      auto it = r.terms.find(n);
      if (it == r.terms.end())
        r.terms[n] = c;
      else {
        it->second += c;
        if (it->second.is_zero()) r.terms.erase(it);
      }
    }
    return r;
  }
  LinExpr operator-() const {
    LinExpr r;
    r.constant = -constant;
    for (const auto& [n, c] : terms) r.terms[n] = -c;
    return r;
  }
  LinExpr operator-(const LinExpr& o) const { return *this + (-o); }
  LinExpr scaled(const CycVal& f) const {
    LinExpr r;
    if (f.is_zero()) return r;
    r.constant = constant * f;
    for (const auto& [n, c] : terms) r.terms[n] = c * f;
    return r;
  }
  bool operator==(const LinExpr& o) const {
    return constant == o.constant && terms == o.terms;
  }

  // substitute a constant for one symbol
  LinExpr substituted(const std::string& name, const CycVal& v) const {
    LinExpr r = *this;
    auto it = r.terms.find(name);
    if (it != r.terms.end()) {
      r.constant += it->second * v;
      r.terms.erase(it);
    }
    return r;
  }

  std::string str() const {
    std::string s = constant.str();
    for (const auto& [n, c] : terms) {
      std::string cs = c.str();
      if (cs == "1")
        s += " + " + n;
      else if (cs == "-1")
        s += " - " + n;
      else
        s += " + (" + cs + ")*" + n;
    }
    return s;
  }
};

}  // namespace lch
