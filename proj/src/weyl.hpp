#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rootsys.hpp"

namespace lch {

// Weyl group element as a permutation of the root indices of a fixed
// ambient system. Plain value type; the group context lives in WeylGroup.
struct WeylElt {
  std::vector<uint16_t> p;

  bool operator==(const WeylElt& o) const { return p == o.p; }
  bool operator!=(const WeylElt& o) const { return p != o.p; }
  bool operator<(const WeylElt& o) const { return p < o.p; }
  int apply(int root) const { return p[root]; }
  uint64_t hash(uint64_t seed = 0x9e3779b97f4a7c15ull) const;
};

// Root-permutation automorphism of (W, Phi): sigma(w) = delta o w o delta^-1.
// Identity for split groups; a diagram flip composed with w-parts otherwise.
struct Automorphism {
  std::vector<uint16_t> delta;  // permutation of root indices

  static Automorphism identity(const RootSystem& rs);
  bool is_identity() const;
  int apply_root(int k) const { return delta[k]; }
  WeylElt apply(const WeylElt& w) const;
  Automorphism compose_perm_left(const WeylElt& d) const;  // perm(d) o delta
};

class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }
  int rank() const { return rs_->rank(); }

  WeylElt identity() const;
  const WeylElt& simple_reflection(int i) const { return simple_[i]; }
  WeylElt reflection(int root_index) const;

  WeylElt mul(const WeylElt& a, const WeylElt& b) const;  // (a*b)(x) = a(b(x))
  WeylElt inverse(const WeylElt& a) const;

  int length(const WeylElt& w) const;
  bool is_identity(const WeylElt& w) const;

  // lexicographically least reduced word, letters are simple-root indices
  std::vector<int> reduced_word(const WeylElt& w) const;
  WeylElt from_word(const std::vector<int>& word) const;
  // parse/print the compact digit notation "431543654"
  WeylElt parse_word(const std::string& digits) const;
  static std::string word_str(const std::vector<int>& word);

  WeylElt longest_element() const;

  // order computed from the root-system type (product over components)
  mpz_class order_from_type() const;

  // full enumeration (guarded; intended for |W| <= enumeration_limit)
  static constexpr uint64_t enumeration_limit = 60000;
  const std::vector<WeylElt>& elements() const;  // enumerates on first use
  uint64_t order() const;                        // enumerated or from type

  // matrix of w acting on simple-root coordinates (columns = images)
  IMat matrix_on_roots(const WeylElt& w) const;
  // matrix of w acting on simple-coroot coordinates
  IMat matrix_on_coroots(const WeylElt& w) const;

  // trace of w on the reflection representation
  long reflection_trace(const WeylElt& w) const;

 private:
  const RootSystem* rs_;
  std::vector<WeylElt> simple_;
  mutable std::vector<WeylElt> elements_;
  mutable uint64_t order_ = 0;
};

// Reflection subgroup W(Phi') of the ambient Weyl group, for a closed
// subsystem. Elements are ambient WeylElt values.
class ReflSubgroup {
 public:
  ReflSubgroup(const WeylGroup& w, const Subsystem& sub);

  const WeylGroup& ambient() const { return *w_; }
  const Subsystem& subsystem() const { return *sub_; }
  const std::vector<WeylElt>& generators() const { return gens_; }
  const std::vector<WeylElt>& elements() const;
  uint64_t order() const { return elements().size(); }
  bool contains(const WeylElt& w) const;

  // minimal-length representative of W(Phi') * w
  WeylElt min_coset_rep(const WeylElt& w) const;

 private:
  const WeylGroup* w_;
  const Subsystem* sub_;
  std::vector<WeylElt> gens_;
  mutable std::vector<WeylElt> elements_;
  mutable std::unordered_map<uint64_t, char> elt_set_;
};

// One sigma-conjugacy class: x^{-1} w sigma(x) for x in the group.
struct TwistedClass {
  WeylElt rep;           // minimal length, then lex-least word
  uint64_t size = 0;
  std::vector<int> rep_word;
};

// Classification of an explicitly enumerable group (full group with
// |W| <= limit, or a reflection subgroup) into sigma-conjugacy classes:
// orbits of u -> x^{-1} u sigma(x) for x in conj_gens (which must generate).
// Deterministic order: by rep length, then rep word.
struct TwistedClassification {
  std::vector<TwistedClass> classes;
  std::unordered_map<uint64_t, int> class_of_hash;

  int class_of(const WeylElt& w) const;
};

TwistedClassification classify_twisted(const WeylGroup& w,
                                       const std::vector<WeylElt>& group_elements,
                                       const std::vector<WeylElt>& conj_gens,
                                       const Automorphism& sigma);

std::vector<TwistedClass> twisted_classes(const WeylGroup& w,
                                          const std::vector<WeylElt>& group_elements,
                                          const std::vector<WeylElt>& conj_gens,
                                          const Automorphism& sigma);

// C_{W,sigma}(w) = {x : x w = w sigma(x)} inside the given element list.
std::vector<WeylElt> sigma_centralizer(const WeylGroup& w,
                                       const std::vector<WeylElt>& group_elements,
                                       const Automorphism& sigma, const WeylElt& elt);

// cycle notation of sigma' restricted to the canonical simple system of the
// subsystem; positions are 1-based into sub.simple_system(). Throws if the
// simple system is not stabilized.
std::string diagram_permutation(const Subsystem& sub, const Automorphism& sigma_prime);

}  // namespace lch
