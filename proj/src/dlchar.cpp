#include "dlchar.hpp"

#include <sstream>
#include <stdexcept>

namespace lch {

GreenData GreenData::parse(const std::string& text) {
  GreenData g;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "greentable") {
      int v;
      ls >> v;
      if (v != 1) throw std::runtime_error("greentable: unsupported version");
    } else if (kw == "type") {
      ls >> g.h_type;
    } else if (kw == "unipotent") {
      ls >> g.unip_label;
    } else if (kw == "source") {
      std::getline(ls, g.source);
      while (!g.source.empty() && g.source.front() == ' ') g.source.erase(0, 1);
    } else if (kw == "entry") {
      std::string psi, poly;
      ls >> psi >> poly;
      g.r_psi.emplace_back(psi, CycVal::parse(poly));
    } else {
      throw std::runtime_error("greentable line " + std::to_string(line_no) +
                               ": unknown record '" + kw + "'");
    }
  }
  if (g.h_type.empty() || g.unip_label.empty())
    throw std::runtime_error("greentable: missing type or unipotent label");
  if (g.source.empty()) throw std::runtime_error("greentable: missing source");
  return g;
}

CycVal GreenData::value(const std::string& psi_name) const {
  for (const auto& [n, v] : r_psi)
    if (n == psi_name) return v;
  return CycVal();
}

CycVal GreenData::q_torus(const CharTable& sub, int sub_class) const {
  CycVal q;
  for (const auto& [n, v] : r_psi) {
    int psi = sub.index_of(n);
    if (psi < 0) throw std::runtime_error("green entry names unknown character " + n);
    q += CycVal(Cyc(sub.value(psi, sub_class))) * v;
  }
  return q;
}

CycVal rt_value_trivial(const ElementDatum& g, const WClassIdentifier& ident,
                        int ambient_class, const GreenData* green,
                        const CharTable* sub_table) {
  const FusionTable& f = *g.fusion;
  const XiClass& xc = f.xi_classes()[g.xi_index];
  std::vector<int> fiber = f.fibers_over(ident, g.xi_index, ambient_class);
  if (fiber.empty()) return CycVal();
  mpz_class worder = f.weyl().order_from_type();
  mpz_class csize(static_cast<unsigned long>(ident.class_size(ambient_class)));
  mpz_class cw = worder / csize;  // |C_{W,sigma}(w)|
  if (cw * csize != worder) throw std::logic_error("class size does not divide");
  CycVal total;
  for (int i : fiber) {
    CycVal qv;
    if (g.unip_label == "regular") {
      qv = CycVal(1);
    } else {
      if (!green || !sub_table)
        throw std::runtime_error("green data required for unipotent label " +
                                 g.unip_label);
      qv = green->q_torus(*sub_table, sub_table->class_of(xc.sub_classes[i].rep));
    }
    // cw / |C_{W(Phi'),sigma'}(w_i')| is not an integer in general; keep exact
    mpq_class coeff(cw, mpz_class(static_cast<unsigned long>(xc.sub_centralizers[i])));
    coeff.canonicalize();
    total += qv * CycVal(Cyc(coeff));
  }
  return total;
}

CycVal r_phi_at_regular(const CharTable& amb, const WClassIdentifier& ident,
                        int phi, const FusionTable& fusion, int xi_index,
                        bool twisted_extension) {
  const WeylGroup& w = fusion.weyl();
  const XiClass& xc = fusion.xi_classes()[xi_index];
  const ReflSubgroup& h = fusion.subgroup();
  WeylElt w0 = w.longest_element();
  mpq_class sum = 0;
  for (const auto& u : h.elements()) {
    WeylElt x = w.mul(u, xc.d);
    if (twisted_extension) x = w.mul(x, w0);
    sum += mpq_class(static_cast<long>(amb.value(phi, ident.identify(x))));
  }
  sum /= static_cast<long>(h.order());
  if (twisted_extension) sum = -sum;
  return CycVal(Cyc(sum));
}

CycVal r_phi_via_green(const CharTable& amb, int phi, const CharTable& sub,
                       const std::vector<int>& fused_classes, const GreenData& green) {
  CycVal total;
  for (const auto& [psi_name, rv] : green.r_psi) {
    int psi = sub.index_of(psi_name);
    if (psi < 0) throw std::runtime_error("green entry names unknown character " + psi_name);
    // m(psi, phi) = <Res phi, psi>
    mpq_class m = 0;
    for (int c = 0; c < sub.num_classes(); ++c)
      m += mpq_class(static_cast<long>(sub.classes()[c].size)) *
           mpq_class(static_cast<long>(sub.value(psi, c))) *
           mpq_class(static_cast<long>(amb.value(phi, fused_classes[c])));
    m /= static_cast<long>(sub.group_order());
    if (m.get_den() != 1) throw std::logic_error("multiplicity not integral");
    if (m != 0) total += rv * CycVal(Cyc(m));
  }
  return total;
}

CycVal rt_value_theta(const WeylGroup& w, const FusionTable& fusion, int xi_index,
                      const TwistedClassification& ambient_cls, int ambient_class,
                      const GreenData* green, const CharTable* sub_table,
                      const TorusChar& theta, const TorusElt& t, long q,
                      const Automorphism& delta) {
  const XiClass& xc = fusion.xi_classes()[xi_index];
  const WeylElt& target = ambient_cls.classes[ambient_class].rep;
  CycVal total;
  for (size_t i = 0; i < xc.sub_classes.size(); ++i) {
    WeylElt wid = w.mul(xc.sub_classes[i].rep, xc.d);
    if (ambient_cls.class_of(wid) != ambient_class) continue;
    // find x with target = x^{-1} (w_i' d) sigma(x)
    std::optional<WeylElt> conj;
    for (const auto& x : w.elements()) {
      if (w.mul(w.mul(w.inverse(x), wid), delta.apply(x)) == target) {
        conj = x;
        break;
      }
    }
    if (!conj) throw std::logic_error("fiber element not conjugate to target");
    // T0[w_i'd] and theta_i'(y) = theta(x_i^{-1} y x_i)
    TorusSubgroup t0i = TorusSubgroup::fixed_points(w, wid, q, delta);
    if (!t0i.contains(t)) throw value_error("torus point not in the fixed group");
    auto cent = sigma_centralizer(w, w.elements(), delta, wid);
    Cyc inner;
    for (const auto& c : cent) {
      TorusElt u = weyl_action(w, w.inverse(c), t);
      TorusElt moved = weyl_action(w, w.inverse(*conj), u);
      inner += theta.value(moved);
    }
    CycVal qv;
    if (green && sub_table)
      qv = green->q_torus(*sub_table, sub_table->class_of(xc.sub_classes[i].rep));
    else
      qv = CycVal(1);
    mpq_class coeff(1, static_cast<long>(xc.sub_centralizers[i]));
    total += qv * CycVal(inner * Cyc(coeff));
  }
  return total;
}

}  // namespace lch
