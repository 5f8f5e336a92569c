#pragma once

#include <map>
#include <string>
#include <vector>

#include "snf.hpp"

namespace lch {

// Root in simple-root integer coordinates.
using RootVec = std::vector<int>;

// A (possibly reducible) crystallographic root system built from Cartan data.
// Roots are enumerated once and addressed by index; index k and k^- = neg[k]
// are negatives of each other, and the simple roots come first, 0..rank-1.
class RootSystem {
 public:
  // "G2", "F4", "E6", "E7", "A3", "B4", "C3+A1", "A2+A2+A2", ...
  static RootSystem build(const std::string& type_label);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_roots() / 2; }

  const RootVec& root(int k) const { return roots_[k]; }
  const std::vector<RootVec>& roots() const { return roots_; }
  int negative_of(int k) const { return neg_[k]; }
  bool is_positive(int k) const { return positive_[k]; }
  int height(int k) const;

  // index of a root vector, or -1
  int index_of(const RootVec& v) const;

  // Cartan pairing <alpha_j, alpha_i^vee> of simple roots
  const IMat& cartan() const { return cartan_; }
  // <root k, alpha_i^vee>
  int pairing_with_simple_coroot(int k, int i) const;
  // <alpha, beta^vee> for arbitrary roots
  int pairing(int alpha, int beta) const;

  // (alpha, alpha)/2 normalized so short roots get 1
  int root_norm2(int k) const { return norm2_[k]; }
  int simple_norm2(int i) const { return d_[i]; }

  // coordinates of the coroot of root k over the simple coroot basis
  const RootVec& coroot(int k) const { return coroots_[k]; }

  // reflection in root k, as a permutation of root indices
  const std::vector<int>& reflection_perm(int k) const { return refl_[k]; }
  int reflect(int k, int root) const { return refl_[k][root]; }

  int highest_root() const;  // index of the unique root of maximal height

  std::string root_str(int k) const;  // "(2,3,4,2)"
  // pretty form "a1+3*a2+..." used when printing simple systems
  std::string root_alpha_str(int k) const;

 private:
  std::string label_;
  int rank_ = 0;
  IMat cartan_;
  std::vector<int> d_;  // simple root norms
  std::vector<RootVec> roots_;
  std::vector<RootVec> coroots_;
  std::vector<int> neg_;
  std::vector<bool> positive_;
  std::vector<int> norm2_;
  std::vector<std::vector<int>> refl_;
  std::map<RootVec, int> idx_;

  void enumerate();
};

// Closed subsystem of a fixed ambient system.
class Subsystem {
 public:
  // smallest closed symmetric subsystem containing the generator roots
  static Subsystem closed_subsystem(const RootSystem& rs, const std::vector<int>& generators);

  const RootSystem& ambient() const { return *rs_; }
  const std::vector<int>& root_indices() const { return roots_; }
  bool contains(int root_index) const;
  bool empty() const { return roots_.empty(); }

  // the unique simple system inside the positive part, in canonical order
  // (ascending height, then index)
  const std::vector<int>& simple_system() const { return simples_; }

  // identified Cartan type, components sorted by decreasing rank then letter
  const std::string& type_label() const { return type_; }

  // partition of the simple system into irreducible components
  const std::vector<std::vector<int>>& components() const { return components_; }

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<int> roots_;
  std::vector<bool> member_;
  std::vector<int> simples_;
  std::vector<std::vector<int>> components_;
  std::string type_;
};

// Cartan-type identification of an abstract Cartan matrix (of one component
// or several); used for subsystem labels.
std::string identify_cartan_type(const IMat& cartan);

}  // namespace lch
