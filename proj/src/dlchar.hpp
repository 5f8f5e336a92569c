#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chartab.hpp"
#include "cyc.hpp"
#include "fusion.hpp"
#include "torus.hpp"

namespace lch {

// Almost-character values of a subsystem group on one unipotent class,
// loaded from a data file (or synthesized for the regular class).
struct GreenData {
  std::string h_type;       // e.g. "B4"
  std::string unip_label;   // e.g. "jordan(5,3,1)" or "regular"
  std::vector<std::pair<std::string, CycVal>> r_psi;  // by character name
  std::string source;

  static GreenData parse(const std::string& text);
  CycVal value(const std::string& psi_name) const;  // zero if absent
  // Q_{T_{w'}} = sum_psi psi(w') R_psi evaluated through a character table
  CycVal q_torus(const CharTable& sub, int sub_class) const;
};

// Combinatorial datum for g = su with s given by a Xi-circle pair and u a
// unipotent class of the centralizer subgroup.
struct ElementDatum {
  const FusionTable* fusion = nullptr;
  int xi_index = 0;
  std::string unip_label = "regular";
};

// R_{T_w}(1) at the datum: |C_{W,sigma}(w)| * sum over the fiber of
// Q_i / |C_{W(Phi'),sigma'}(w_i')|; zero for an empty fiber. Symbolic in q.
CycVal rt_value_trivial(const ElementDatum& g, const WClassIdentifier& ident,
                        int ambient_class, const GreenData* green,
                        const CharTable* sub_table);

// R_phi at a regular-unipotent datum, via the collapsed fiber sum
// (1/|W'|) sum_u phi(u d). For twisted groups the preferred-extension
// convention multiplies by -phi(u d w0) instead.
CycVal r_phi_at_regular(const CharTable& amb, const WClassIdentifier& ident,
                        int phi, const FusionTable& fusion, int xi_index,
                        bool twisted_extension);

// R_phi(su) for s in the split maximal torus (d = 1) and u given by Green
// data of the centralizer type: sum_psi m(psi, phi) R_psi(u).
CycVal r_phi_via_green(const CharTable& amb, int phi, const CharTable& sub,
                       const std::vector<int>& fused_classes, const GreenData& green);

// general R_T(theta) at concrete q (small ambient groups only): the full
// fiber formula with torus character sums
CycVal rt_value_theta(const WeylGroup& w, const FusionTable& fusion, int xi_index,
                      const TwistedClassification& ambient_cls, int ambient_class,
                      const GreenData* green, const CharTable* sub_table,
                      const TorusChar& theta, const TorusElt& t, long q,
                      const Automorphism& delta);

}  // namespace lch
