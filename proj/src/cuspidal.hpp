#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chartab.hpp"
#include "dlchar.hpp"
#include "families.hpp"
#include "fusion.hpp"
#include "hecke.hpp"
#include "linexpr.hpp"

namespace lch {

// One G^F-class inside Sigma^F, indexed by an F-class of the component group.
struct SigmaClass {
  std::string name;               // "1", "s1", "s1^2*z", or "x14".."x18"
  Cyc psi1;                       // value of the local-system character
  Cyc psi2;                       // value of the conjugate character
  bool center_marked = false;     // lies over the Z(G)-orbit of the base class
  int shintani_to = -1;           // C_a -> C_{g1bar * a}
  int inverse_to = -1;            // C_a -> C_a^{-1} when determined
};

// Parsed case description (see data/cases/*.case for the grammar).
struct CaseData {
  std::string name;
  std::string ambient;            // root system label
  bool twisted = false;
  std::string family_which;       // ambient_family() key
  std::string subsystem;          // canonical label or "unipotent"
  int dim_diff = 0;               // dim G - dim Sigma (exponent of q is half)
  std::string member, partner;    // family member keys of the two sheaves
  std::string psi_symbol;         // display name for psi

  // abelian component group: generator names, orders, psi1 values
  std::vector<std::string> gen_names;
  std::vector<long> gen_orders;
  std::vector<Cyc> psi_on_gens;
  std::vector<std::string> center_gens;  // image of Z(G) among the generators
  bool a_is_s4 = false;
  bool a_is_d8 = false;

  struct Branch {
    long mod = 1, res = 0;         // q = res (mod mod); 1,0 = all good q
    std::string d_word;            // "e" for the identity
    bool f_inverts_center = false;
  };
  std::vector<Branch> branches;

  struct Axiom {
    std::string key;
    std::string value;             // expression or free text
    std::string source;
  };
  std::vector<Axiom> axioms;

  std::vector<std::vector<std::string>> steps;  // tokenized step lines

  static CaseData parse(const std::string& text);
  const Axiom* axiom(const std::string& key) const;
};

// Shared expensive objects (ambient tables, fusion tables, fixtures).
class CaseContext {
 public:
  explicit CaseContext(std::string data_dir);
  ~CaseContext();

  const std::string& data_dir() const { return data_dir_; }
  const WeylGroup& weyl(const std::string& ambient);
  const CharTable& char_table(const std::string& ambient);  // computed or loaded
  const WClassIdentifier& identifier(const std::string& ambient);
  const FusionTable& fusion(const std::string& ambient, const std::string& subsystem,
                            bool twisted);
  const CharTable& subsystem_table(const std::string& ambient,
                                   const std::string& subsystem);
  GreenData green(const std::string& file);
  HeckeValueTable hecke_values(const std::string& file);
  std::string read_file(const std::string& rel_path) const;
  CaseData load_case(const std::string& case_name);
  std::vector<std::string> list_cases() const;

 private:
  std::string data_dir_;
  struct AmbientData;
  std::map<std::string, std::unique_ptr<AmbientData>> ambients_;
  AmbientData& ambient(const std::string& label);
  std::map<std::string, std::unique_ptr<Subsystem>> subsystems_;
  std::map<std::string, std::unique_ptr<FusionTable>> fusions_;
  std::map<std::string, std::unique_ptr<CharTable>> sub_tables_;
};

// Result of the scalar determination for one residue branch.
struct BranchResult {
  CaseData::Branch branch;
  std::vector<SigmaClass> classes;
  // zeta: either a single value, or conditional on which class g1 lies in
  bool conditional = false;
  Cyc zeta;                              // when not conditional
  std::map<std::string, Cyc> zeta_by_class;  // when conditional
  std::vector<std::string> trace;
  // value tables keyed by character display name: values per class
  std::map<std::string, std::vector<LinExpr>> tables;
  // square-class assignment (parity cases): class name -> unipotent rep name
  std::map<std::string, std::string> square_classes;
};

struct CaseResult {
  CaseData data;
  std::vector<BranchResult> branches;
};

class underdetermined_error : public std::runtime_error {
 public:
  explicit underdetermined_error(const std::string& w) : std::runtime_error(w) {}
};

// Runs the deduction steps of a case; throws underdetermined_error when the
// constraints do not pin the scalar, std::runtime_error on contradictions.
CaseResult solve_case(CaseContext& ctx, const CaseData& data);

// evaluates a solved branch table at a concrete q (all entries must be free
// of unknowns); returns rows of exact cyclotomic values
std::map<std::string, std::vector<Cyc>> evaluate_table(
    const BranchResult& br, const std::string& character, long q0);

}  // namespace lch
