#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "torus.hpp"
#include "weyl.hpp"

namespace lch {

// Identifies the ambient sigma-class of arbitrary elements; implemented by
// full enumeration below, or by fingerprints for an imported table.
struct WClassIdentifier {
  virtual ~WClassIdentifier() = default;
  virtual int num_classes() const = 0;
  virtual uint64_t class_size(int c) const = 0;
  virtual int identify(const WeylElt& w) const = 0;
};

struct EnumeratedIdentifier : WClassIdentifier {
  TwistedClassification cls;
  int num_classes() const override { return static_cast<int>(cls.classes.size()); }
  uint64_t class_size(int c) const override { return cls.classes[c].size; }
  int identify(const WeylElt& w) const override { return cls.class_of(w); }
};

// One equivalence class of pairs (Phi', w) with fixed first component.
struct XiClass {
  WeylElt d;                  // minimal length rep, lex-least word
  std::vector<int> d_word;
  Automorphism sigma_prime;   // root permutation perm(d) o delta
  std::string diagram_perm;   // cycles on the canonical simple system
  std::vector<TwistedClass> sub_classes;      // sigma'-classes of W(Phi')
  std::vector<uint64_t> sub_centralizers;     // |C_{W(Phi'),sigma'}(w_i')|
};

class FusionTable {
 public:
  // delta is the ambient graph twist (identity for split types); requires
  // delta(Phi') = Phi'.
  FusionTable(const WeylGroup& w, const Subsystem& sub, const Automorphism& delta);

  const WeylGroup& weyl() const { return *w_; }
  const Subsystem& subsystem() const { return *sub_; }
  const Automorphism& delta() const { return delta_; }
  const ReflSubgroup& subgroup() const { return sub_group_; }
  const std::vector<XiClass>& xi_classes() const { return xi_; }

  // index in xi_classes() of the class containing (Phi', w), or -1
  int xi_class_of(const WeylElt& w) const;

  // ambient sigma-class of w'd for the sigma'-class index i of xi class x
  int fuse(const WClassIdentifier& ident, int xi_index, int sub_class_index) const;

  // all sigma'-class indices of xi class x fusing to the ambient class c
  std::vector<int> fibers_over(const WClassIdentifier& ident, int xi_index,
                               int ambient_class) const;

  // Xi-circle membership at concrete q: is there t with vanishing set exactly
  // Phi' and F(t) = d^{-1} t d?  Returns the witness if so.
  std::optional<TorusElt> xi_circle_witness(int xi_index, long q) const;

 private:
  const WeylGroup* w_;
  const Subsystem* sub_;
  Automorphism delta_;
  ReflSubgroup sub_group_;
  std::vector<XiClass> xi_;
  std::vector<WeylElt> orbit_minreps_;  // all minreps with d(Phi') = Phi'
  std::vector<int> orbit_of_;           // orbit index per minrep

  void enumerate();
};

}  // namespace lch
