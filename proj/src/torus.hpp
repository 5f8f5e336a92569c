#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyc.hpp"
#include "snf.hpp"
#include "weyl.hpp"

namespace lch {

// Finite-order point of the maximally split torus, written additively:
// coordinate i is the exponent a_i in Q/Z of the i-th simple coroot, so the
// element is h(xi_1, ..., xi_r) with xi_i = e(a_i).
struct TorusElt {
  std::vector<mpq_class> a;

  static TorusElt zero(int rank);
  static mpq_class mod1(const mpq_class& x);

  int rank() const { return static_cast<int>(a.size()); }
  TorusElt add(const TorusElt& o) const;
  TorusElt neg() const;
  TorusElt scaled(const mpz_class& k) const;
  bool is_zero() const;
  bool operator==(const TorusElt& o) const { return a == o.a; }
  bool operator<(const TorusElt& o) const { return a < o.a; }
  long element_order() const;  // lcm of denominators

  // "h(1,1,-1,1)" with entries as roots of unity E(n)^k
  std::string h_str() const;
  // entries as powers of a formal symbol of the given order where possible
  std::string h_str_symbolic(long symbol_order) const;
};

// multiplicative evaluation alpha(t) as an exponent in Q/Z
mpq_class root_value(const RootSystem& rs, int root_index, const TorusElt& t);

// action of w on torus points (conjugation by a representative)
TorusElt weyl_action(const WeylGroup& w, const WeylElt& elt, const TorusElt& t);

// F(t) for F = q * (diagram permutation delta); delta acts on simple roots
TorusElt frobenius(const RootSystem& rs, const TorusElt& t, long q,
                   const Automorphism& delta);

// Finite abelian group of torus points cut out by integral congruences
// K a = 0 (mod 1), described by invariant factors with explicit generators.
class TorusSubgroup {
 public:
  // kernel of the rows of K acting on (Q/Z)^r
  static TorusSubgroup kernel(const RootSystem& rs, const IMat& k);

  // Z(H') for a closed subsystem: all alpha in Delta' vanish
  static TorusSubgroup center_of(const WeylGroup& w, const Subsystem& sub);

  // T0[w] = {t : F(t) = w^{-1} t w} at a concrete q
  static TorusSubgroup fixed_points(const WeylGroup& w, const WeylElt& elt, long q,
                                    const Automorphism& delta);

  const RootSystem& root_system() const { return *rs_; }
  bool is_finite() const { return finite_; }
  mpz_class order() const;
  // nontrivial invariant factors d_1 | d_2 | ...
  const std::vector<mpz_class>& invariant_factors() const { return factors_; }
  const std::vector<TorusElt>& generators() const { return gens_; }
  std::string structure_str() const;  // "Z/2 x Z/4", "1"

  bool contains(const TorusElt& t) const;
  // coordinates of t over the generators (throws if not a member)
  std::vector<mpz_class> coordinates(const TorusElt& t) const;
  // all elements (throws if infinite or order > limit)
  std::vector<TorusElt> elements(uint64_t limit = 2000000) const;

 private:
  const RootSystem* rs_ = nullptr;
  IMat k_;                          // defining congruences
  bool finite_ = true;
  std::vector<mpz_class> factors_;  // nontrivial ones
  std::vector<TorusElt> gens_;      // matching factors_
  std::vector<int> cols_;           // SNF column of each factor
  IMat vinv_;                       // inverse of the SNF column transform
};

// character of a TorusSubgroup given by exponents against its generators
struct TorusChar {
  const TorusSubgroup* group = nullptr;
  std::vector<mpz_class> exps;  // one per invariant factor

  Cyc value(const TorusElt& t) const;
  bool is_trivial() const;
};

// sum over c in centralizer of theta(c^{-1} t c)  (Lemma-style twisted sum)
Cyc character_sum(const WeylGroup& w, const std::vector<WeylElt>& centralizer,
                  const TorusChar& theta, const TorusElt& t);

}  // namespace lch
