#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyc.hpp"
#include "linexpr.hpp"

namespace lch {

// Concrete model of the small finite groups behind families: permutations of
// at most 4 points.
struct TinyPerm {
  std::array<uint8_t, 4> p{0, 1, 2, 3};
  bool operator==(const TinyPerm& o) const { return p == o.p; }
  bool operator<(const TinyPerm& o) const { return p < o.p; }
};

class TinyGroup {
 public:
  // labels: "1", "Z2", "Z3", "Z4", "S3", "S4"
  static TinyGroup build(const std::string& label);
  // subgroup on the same points
  static TinyGroup subgroup(const std::vector<TinyPerm>& elements);

  const std::vector<TinyPerm>& elements() const { return els_; }
  int order() const { return static_cast<int>(els_.size()); }
  static TinyPerm mul(const TinyPerm& a, const TinyPerm& b);
  static TinyPerm inv(const TinyPerm& a);

  int num_classes() const { return static_cast<int>(class_reps_.size()); }
  const std::vector<TinyPerm>& class_reps() const { return class_reps_; }
  const std::vector<int>& class_sizes() const { return class_sizes_; }
  int class_of(const TinyPerm& g) const;
  std::vector<TinyPerm> centralizer(const TinyPerm& g) const;

 private:
  std::vector<TinyPerm> els_;
  std::vector<TinyPerm> class_reps_;
  std::vector<int> class_sizes_;
  void classify();
};

// character table of a tiny group with curated names per isomorphism type
struct TinyCharTable {
  TinyGroup group;
  std::vector<std::string> names;          // per character
  std::vector<std::vector<Cyc>> values;    // [char][class]

  static TinyCharTable of(const TinyGroup& g, const TinyPerm& context_rep);
  int index_of(const std::string& name) const;
  Cyc value_at(int chi, const TinyPerm& g) const;
};

struct FamilyMember {
  std::string key;       // "(g3,theta)"
  int x_class = 0;       // class index in Gamma
  TinyPerm x;            // the fixed representative
  std::string sigma;     // character name within C(x)
  long sigma_degree = 1;
  Cyc eigenvalue;        // sigma(x)/sigma(1)
  int delta = 1;         // Lusztig sign in the almost-character relation
  std::string rho_name;  // attached unipotent character (per ambient family)
  // name of the Weyl-group character whose (twisted) almost character this
  // member carries; empty for members outside the principal series
  std::string r_char_name;
};

// Nonabelian Fourier matrix data for one group Gamma, plus the ambient
// wiring (names of the attached unipotent characters, delta signs).
class Family {
 public:
  static Family build(const std::string& gamma_label);

  const std::string& gamma() const { return gamma_; }
  const std::vector<FamilyMember>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  int index_of(const std::string& key) const;  // by member key
  int index_of_rho(const std::string& rho_name) const;
  const Cyc& matrix(int i, int j) const { return m_[i][j]; }

  // checks performed at build time as well
  bool is_involutive() const;
  bool is_hermitian() const;

  // ambient wiring: set rho names and delta signs
  void set_rho(const std::string& member_key, const std::string& rho_name,
               int delta = 1, const std::string& r_char_name = "");

  // R_x = sum_y M[x][y] Delta(y) rho_y evaluated on given rho-values
  LinExpr almost_from_unipotent(int member, const std::vector<LinExpr>& rho) const;
  // rho_y = Delta(y) sum_x M[y][x] R_x
  LinExpr unipotent_from_almost(int member, const std::vector<LinExpr>& r) const;

 private:
  std::string gamma_;
  TinyGroup g_;
  std::vector<FamilyMember> members_;
  std::vector<std::vector<Cyc>> m_;
};

// builds the family with the unipotent-character names for one ambient case:
// "e6-split", "e6-twisted", "e7", "f4"
Family ambient_family(const std::string& which);

}  // namespace lch
