#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusion.hpp"
#include "weyl.hpp"

namespace lch {

// Conjugation-invariant fingerprint of a Weyl group element: characteristic
// polynomial on the reflection representation plus the cycle types of the
// root permutations of w, w^2, w^3.
struct ClassFingerprint {
  std::vector<long> charpoly;                     // ascending degree
  std::array<std::vector<int>, 3> cycles;         // sorted cycle lengths
  std::vector<int> line_cycles;                   // action on the root lines

  static ClassFingerprint of(const WeylGroup& w, const WeylElt& e);
  bool operator==(const ClassFingerprint& o) const;
  std::string str() const;
  static ClassFingerprint parse(const std::string& s);
};

struct CharRow {
  std::string name;                  // primary label, e.g. "phi{9,6}''"
  std::vector<std::string> aliases;  // e.g. "9_3"
  long degree = 0;
  int b_invariant = -1;
  std::vector<long long> values;     // one per class, integer
};

// Ordinary character table of a Weyl group or reflection subgroup, with the
// class data used to evaluate characters on arbitrary elements.
class CharTable {
 public:
  // Dixon-Schneider over the enumerated element list
  static CharTable compute(const WeylGroup& w, const std::vector<WeylElt>& elements,
                           const std::vector<WeylElt>& gens);
  // table of the full Weyl group of rs (must be enumerable)
  static CharTable compute(const WeylGroup& w);

  int num_classes() const { return static_cast<int>(classes_.size()); }
  int num_chars() const { return static_cast<int>(rows_.size()); }
  const std::vector<TwistedClass>& classes() const { return classes_; }
  const std::vector<CharRow>& rows() const { return rows_; }
  const CharRow& row(int i) const { return rows_[i]; }
  uint64_t group_order() const { return order_; }
  const WeylGroup& weyl() const { return *w_; }

  long long value(int chi, int cls) const { return rows_[chi].values[cls]; }
  int class_of(const WeylElt& e) const;  // via the stored classification
  int index_of(const std::string& name_or_alias) const;  // -1 if absent

  // verify row/column orthogonality and the degree sum; throws on failure
  void verify_orthogonality() const;

  // <Res phi, psi> given the image of each sub-class representative in this
  // table's group: multiplicities[sub_class] = this->class_of(image)
  static IMat restriction_multiplicities(const CharTable& sub,
                                         const std::vector<int>& fused_class,
                                         const CharTable& amb);

  // inner product of a row with the indicator data of another class function
  // (both over this table's classes)
  mpq_class inner_product(const std::vector<long long>& f,
                          const std::vector<long long>& g) const;

  // mutable label assignment used while wiring naming conventions
  void set_names(int chi, const std::string& name, std::vector<std::string> aliases);

  // serialization (the import format); verify on load
  std::string serialize(const std::string& group_label) const;
  static CharTable load(const std::string& text, const WeylGroup& w);

  // classification access (absent for loaded tables)
  const TwistedClassification* classification() const {
    return have_cls_ ? &cls_ : nullptr;
  }
  const std::vector<ClassFingerprint>& fingerprints() const { return fps_; }

 private:
  const WeylGroup* w_ = nullptr;
  uint64_t order_ = 0;
  std::vector<TwistedClass> classes_;
  std::vector<CharRow> rows_;
  TwistedClassification cls_;
  bool have_cls_ = false;
  std::vector<ClassFingerprint> fps_;

  void sort_rows();
  void compute_b_invariants();

  friend CharTable compute_big_group_table(const WeylGroup& w);
  friend CharTable load_chartable_impl(const std::string&, const WeylGroup&);
};

// Murnaghan-Nakayama value of the S_n character chi_lambda at cycle type mu.
long mn_character(const std::vector<int>& lambda, const std::vector<int>& mu);

// Character table of W(B_n) with bipartition labels psi{(lambda),(mu)},
// built from the symmetric-group data and verified against Dixon-Schneider.
CharTable bn_character_table(const WeylGroup& w, int n);

// Carter (phi_{d,b}) plus Lusztig-alias labels for W(F4); the table must be
// the computed one for the F4 root system built by this library.
void apply_f4_labels(CharTable& t);
// Lusztig-style aliases (80_s etc.) for the computed W(E6) table.
void apply_e6_labels(CharTable& t);
// phi_{d,b} labels for any table where (d,b) pairs are unique.
void apply_db_labels(CharTable& t);

// --- imported tables -------------------------------------------------------

// identifies classes of a large group via fingerprints
struct FingerprintIdentifier : WClassIdentifier {
  const WeylGroup* w = nullptr;
  std::vector<ClassFingerprint> fps;
  std::vector<uint64_t> sizes;

  int num_classes() const override { return static_cast<int>(fps.size()); }
  uint64_t class_size(int c) const override { return sizes[c]; }
  int identify(const WeylElt& e) const override;
};

// Conjugacy-class data of a group too large to hold an element table:
// representatives, sizes and fingerprints found by orbit BFS over 64-bit
// hashes (exactness is certified by the total-count check).
struct BigGroupClasses {
  std::vector<WeylElt> reps;
  std::vector<uint64_t> sizes;
  std::vector<ClassFingerprint> fingerprints;
  uint64_t total = 0;
};

BigGroupClasses enumerate_big_group_classes(const WeylGroup& w);

// Full Dixon-Schneider at big-group scale (used by the table generator).
CharTable compute_big_group_table(const WeylGroup& w);

// shared eigen-splitting step of the table computation
std::vector<std::vector<long long>> detail_dixon_rows(
    const std::vector<std::vector<std::vector<uint64_t>>>& cmats,
    const std::vector<uint64_t>& sizes, const std::vector<int>& inv_class,
    uint64_t group_order, uint64_t max_degree, uint64_t p);

}  // namespace lch
