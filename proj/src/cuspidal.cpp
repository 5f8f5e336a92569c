#include "cuspidal.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lch {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ls(line);
  std::vector<std::string> out;
  std::string tok;
  while (ls >> tok) out.push_back(tok);
  return out;
}

}  // namespace

CaseData CaseData::parse(const std::string& text) {
  CaseData d;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& m) {
    throw std::runtime_error("case line " + std::to_string(line_no) + ": " + m);
  };
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto toks = tokenize(line);
    const std::string& kw = toks[0];
    if (kw == "case") {
      d.name = toks.at(1);
    } else if (kw == "ambient") {
      d.ambient = toks.at(1);
    } else if (kw == "twisted") {
      d.twisted = true;
    } else if (kw == "family") {
      d.family_which = toks.at(1);
    } else if (kw == "subsystem") {
      d.subsystem = toks.at(1);
    } else if (kw == "dim-diff") {
      d.dim_diff = std::stoi(toks.at(1));
    } else if (kw == "member") {
      d.member = toks.at(1);
    } else if (kw == "partner") {
      d.partner = toks.at(1);
    } else if (kw == "psi-name") {
      d.psi_symbol = toks.at(1);
    } else if (kw == "cgroup") {
      if (toks.at(1) == "S4") {
        d.a_is_s4 = true;
      } else if (toks.at(1) == "D8") {
        d.a_is_d8 = true;
      } else {
        for (size_t i = 1; i < toks.size(); ++i) {
          auto pos = toks[i].find(':');
          if (pos == std::string::npos) fail("cgroup entries look like name:order");
          d.gen_names.push_back(toks[i].substr(0, pos));
          d.gen_orders.push_back(std::stol(toks[i].substr(pos + 1)));
        }
      }
    } else if (kw == "psi") {
      if (d.a_is_s4 || d.a_is_d8) {
        if (toks.at(1) != "sgn") fail("nonabelian cases support psi = sgn only");
      } else {
        for (size_t i = 1; i < toks.size(); ++i) {
          auto pos = toks[i].find('=');
          if (pos == std::string::npos) fail("psi entries look like name=value");
          std::string gname = toks[i].substr(0, pos);
          Cyc v = Cyc::parse(toks[i].substr(pos + 1));
          auto it = std::find(d.gen_names.begin(), d.gen_names.end(), gname);
          if (it == d.gen_names.end()) fail("psi names unknown generator " + gname);
          d.psi_on_gens.resize(d.gen_names.size());
          d.psi_on_gens[it - d.gen_names.begin()] = v;
        }
      }
    } else if (kw == "center-image") {
      for (size_t i = 1; i < toks.size(); ++i) d.center_gens.push_back(toks[i]);
    } else if (kw == "branch") {
      Branch b;
      for (size_t i = 1; i + 1 < toks.size() + 1; i += 2) {
        if (i + 1 >= toks.size() + 0 && toks[i] != "f-inverts-center") break;
        const std::string& key = toks[i];
        if (key == "mod") b.mod = std::stol(toks.at(i + 1));
        else if (key == "res") b.res = std::stol(toks.at(i + 1));
        else if (key == "d") b.d_word = toks.at(i + 1);
        else if (key == "f-on-center") b.f_inverts_center = toks.at(i + 1) == "inv";
        else fail("unknown branch key " + key);
      }
      d.branches.push_back(b);
    } else if (kw == "axiom") {
      // axiom <key> <value...> source <text...>
      Axiom a;
      a.key = toks.at(1);
      size_t i = 2;
      while (i < toks.size() && toks[i] != "source") {
        if (!a.value.empty()) a.value += " ";
        a.value += toks[i++];
      }
      if (i >= toks.size()) fail("axiom without source");
      ++i;
      while (i < toks.size()) {
        if (!a.source.empty()) a.source += " ";
        a.source += toks[i++];
      }
      if (a.source.empty()) fail("axiom with empty source");
      d.axioms.push_back(std::move(a));
    } else if (kw == "step") {
      d.steps.push_back(std::vector<std::string>(toks.begin() + 1, toks.end()));
    } else {
      fail("unknown record '" + kw + "'");
    }
  }
  if (d.name.empty() || d.ambient.empty() || d.family_which.empty())
    throw std::runtime_error("case file missing required records");
  if (d.branches.empty()) throw std::runtime_error("case file has no branches");
  return d;
}

const CaseData::Axiom* CaseData::axiom(const std::string& key) const {
  for (const auto& a : axioms)
    if (a.key == key) return &a;
  return nullptr;
}

// ---------------------------------------------------------------------------
// CaseContext

namespace {

Subsystem subsystem_for(const RootSystem& rs, const std::string& label) {
  auto idx = [&](RootVec v) {
    int k = rs.index_of(v);
    if (k < 0) throw std::runtime_error("subsystem generator is not a root");
    return k;
  };
  const std::string& t = rs.label();
  std::vector<int> gens;
  if (t == "E6" && (label == "A2A2A2" || label == "A2+A2+A2")) {
    gens = {0, 1, 2, 4, 5, rs.highest_root()};
  } else if (t == "E7" && (label == "A3A3A1" || label == "A3+A3+A1")) {
    gens = {0, 1, 2, 4, 5, 6, rs.highest_root()};
  } else if (t == "F4" && (label == "A2A2" || label == "A2+A2")) {
    gens = {0, 2, 3, idx({1, 3, 4, 2})};
  } else if (t == "F4" && (label == "A3A1" || label == "A3+A1")) {
    gens = {0, 1, 3, idx({1, 2, 4, 2})};
  } else if (t == "F4" && label == "B4") {
    gens = {0, 1, 2, idx({0, 1, 2, 2})};
  } else if (t == "F4" && (label == "C3A1" || label == "C3+A1")) {
    gens = {1, 2, 3, idx({2, 3, 4, 2})};
  } else if (t == "G2" && (label == "A1A1" || label == "A1+A1")) {
    gens = {1, idx({2, 3})};
  } else if (t == "G2" && label == "A2") {
    gens = {0, idx({1, 3})};
  } else {
    throw std::runtime_error("no subsystem data for " + t + " / " + label);
  }
  return Subsystem::closed_subsystem(rs, gens);
}

struct TableIdentifier : WClassIdentifier {
  const CharTable* t = nullptr;
  int num_classes() const override { return t->num_classes(); }
  uint64_t class_size(int c) const override { return t->classes()[c].size; }
  int identify(const WeylElt& e) const override { return t->class_of(e); }
};

Automorphism ambient_twist(const RootSystem& rs, const WeylGroup& w, bool twisted) {
  if (!twisted) return Automorphism::identity(rs);
  WeylElt w0 = w.longest_element();
  Automorphism delta;
  delta.delta.resize(rs.num_roots());
  for (int k = 0; k < rs.num_roots(); ++k)
    delta.delta[k] = static_cast<uint16_t>(rs.negative_of(w0.p[k]));
  // must be a diagram automorphism
  for (int i = 0; i < rs.rank(); ++i)
    if (delta.delta[i] >= static_cast<uint16_t>(rs.rank()))
      throw std::logic_error("-w0 is not a diagram automorphism here");
  return delta;
}

}  // namespace

struct CaseContext::AmbientData {
  RootSystem rs;
  WeylGroup w;
  std::unique_ptr<CharTable> table;
  std::unique_ptr<WClassIdentifier> ident;

  AmbientData(const std::string& label, const std::string& data_dir)
      : rs(RootSystem::build(label)), w(rs) {
    if (label == "E7") {
      std::ifstream is(data_dir + "/chartab/e7.crt");
      if (!is) throw std::runtime_error("missing data file chartab/e7.crt");
      std::string text((std::istreambuf_iterator<char>(is)),
                       std::istreambuf_iterator<char>());
      table = std::make_unique<CharTable>(CharTable::load(text, w));
      auto fi = std::make_unique<FingerprintIdentifier>();
      fi->w = &w;
      fi->fps = table->fingerprints();
      for (size_t a = 0; a < fi->fps.size(); ++a)
        for (size_t b = a + 1; b < fi->fps.size(); ++b)
          if (fi->fps[a] == fi->fps[b])
            throw std::runtime_error(label +
                                     ": class fingerprints do not separate");
      for (const auto& c : table->classes()) fi->sizes.push_back(c.size);
      ident = std::move(fi);
    } else {
      table = std::make_unique<CharTable>(CharTable::compute(w));
      if (label == "F4") apply_f4_labels(*table);
      if (label == "E6") apply_e6_labels(*table);
      auto ti = std::make_unique<TableIdentifier>();
      ti->t = table.get();
      ident = std::move(ti);
    }
  }
};

CaseContext::CaseContext(std::string data_dir) : data_dir_(std::move(data_dir)) {}
CaseContext::~CaseContext() = default;

CaseContext::AmbientData& CaseContext::ambient(const std::string& label) {
  auto it = ambients_.find(label);
  if (it == ambients_.end())
    it = ambients_.emplace(label, std::make_unique<AmbientData>(label, data_dir_)).first;
  return *it->second;
}

const WeylGroup& CaseContext::weyl(const std::string& label) { return ambient(label).w; }
const CharTable& CaseContext::char_table(const std::string& label) {
  return *ambient(label).table;
}
const WClassIdentifier& CaseContext::identifier(const std::string& label) {
  return *ambient(label).ident;
}

const FusionTable& CaseContext::fusion(const std::string& amb, const std::string& sub,
                                       bool twisted) {
  std::string key = amb + "/" + sub + (twisted ? "/tw" : "");
  auto it = fusions_.find(key);
  if (it == fusions_.end()) {
    AmbientData& a = ambient(amb);
    auto held = std::make_unique<Subsystem>(subsystem_for(a.rs, sub));
    Automorphism delta = ambient_twist(a.rs, a.w, twisted);
    auto ft = std::make_unique<FusionTable>(a.w, *held, delta);
    subsystems_.emplace(key, std::move(held));
    it = fusions_.emplace(key, std::move(ft)).first;
  }
  return *it->second;
}

const CharTable& CaseContext::subsystem_table(const std::string& amb,
                                              const std::string& sub) {
  std::string key = amb + "/" + sub;
  auto it = sub_tables_.find(key);
  if (it == sub_tables_.end()) {
    AmbientData& a = ambient(amb);
    if (sub == "B4") {
      // bipartition labels transported through the abstract B4 group
      throw std::runtime_error("use green-restriction helpers for B4");
    }
    Subsystem s = subsystem_for(a.rs, sub);
    ReflSubgroup h(a.w, s);
    std::vector<WeylElt> gens = h.generators();
    auto t = std::make_unique<CharTable>(
        CharTable::compute(a.w, h.elements(), gens));
    it = sub_tables_.emplace(key, std::move(t)).first;
  }
  return *it->second;
}

std::string CaseContext::read_file(const std::string& rel) const {
  std::ifstream is(data_dir_ + "/" + rel);
  if (!is) throw std::runtime_error("missing data file " + rel);
  return std::string((std::istreambuf_iterator<char>(is)),
                     std::istreambuf_iterator<char>());
}

GreenData CaseContext::green(const std::string& file) {
  return GreenData::parse(read_file(file));
}

HeckeValueTable CaseContext::hecke_values(const std::string& file) {
  return HeckeValueTable::parse(read_file(file));
}

CaseData CaseContext::load_case(const std::string& name) {
  return CaseData::parse(read_file("cases/" + name + ".case"));
}

std::vector<std::string> CaseContext::list_cases() const {
  std::vector<std::string> out;
  std::filesystem::path p(data_dir_ + "/cases");
  if (std::filesystem::exists(p))
    for (const auto& e : std::filesystem::directory_iterator(p))
      if (e.path().extension() == ".case") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// the deduction engine

namespace {

struct AbelianA {
  std::vector<std::string> names;
  std::vector<long> orders;
  std::vector<Cyc> psi;  // psi1 on generators

  using Vec = std::vector<long>;
  Vec zero() const { return Vec(orders.size(), 0); }
  Vec add(const Vec& a, const Vec& b) const {
    Vec r = zero();
    for (size_t i = 0; i < orders.size(); ++i) r[i] = (a[i] + b[i]) % orders[i];
    return r;
  }
  Vec neg(const Vec& a) const {
    Vec r = zero();
    for (size_t i = 0; i < orders.size(); ++i) r[i] = (orders[i] - a[i]) % orders[i];
    return r;
  }
  std::vector<Vec> all() const {
    std::vector<Vec> out{zero()};
    for (size_t i = 0; i < orders.size(); ++i) {
      std::vector<Vec> next;
      for (const auto& v : out)
        for (long e = 0; e < orders[i]; ++e) {
          Vec w = v;
          w[i] = e;
          next.push_back(w);
        }
      out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  Cyc psi_value(const Vec& a) const {
    Cyc v(1);
    for (size_t i = 0; i < orders.size(); ++i)
      for (long e = 0; e < a[i]; ++e) v *= psi[i];
    return v;
  }
  std::string name_of(const Vec& a) const {
    std::string s;
    for (size_t i = 0; i < orders.size(); ++i) {
      if (a[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += names[i];
      if (a[i] != 1) s += "^" + std::to_string(a[i]);
    }
    return s.empty() ? "1" : s;
  }
};

struct EngineState {
  const CaseData* data;
  CaseContext* ctx;
  Family family;
  BranchResult* br;
  AbelianA a;
  std::vector<AbelianA::Vec> class_reps;    // F-class canonical reps
  std::set<AbelianA::Vec> dsub;             // image of 1 - F
  std::set<AbelianA::Vec> zsub;             // image of the center
  bool conj_paired = false;
  bool zeta_real = false;
  std::set<std::string> support_zero;       // member keys pinned to zero
  std::map<int, CycVal> almost_values;      // member index -> constant value
  std::vector<Cyc> feasible_zeta;

  EngineState(const CaseData& d, CaseContext& c, BranchResult& b)
      : data(&d), ctx(&c), family(ambient_family(d.family_which)), br(&b) {}

  void trace(const std::string& s) { br->trace.push_back(s); }

  int class_of_vec(const AbelianA::Vec& v) const {
    for (size_t j = 0; j < class_reps.size(); ++j)
      for (const auto& d : dsub)
        if (a.add(v, d) == class_reps[j]) return static_cast<int>(j);
    throw std::logic_error("component class not found");
  }

  bool ready_for_member_values() const {
    if (!zeta_real) return false;
    if (!data->partner.empty() && !conj_paired) return false;
    return true;
  }

  LinExpr r_member_value(int member_index, int class_index) const {
    const FamilyMember& m = family.members()[member_index];
    const SigmaClass& cls = br->classes[class_index];
    if (m.key == data->member) {
      if (!ready_for_member_values())
        throw std::logic_error("member value requested before reality was derived");
      return LinExpr::symbol("zeta", CycVal::monomial(cls.psi1, data->dim_diff));
    }
    if (!data->partner.empty() && m.key == data->partner)
      return LinExpr::symbol("zeta", CycVal::monomial(cls.psi2, data->dim_diff));
    if (support_zero.count(m.key)) return LinExpr();
    auto it = almost_values.find(member_index);
    if (it != almost_values.end()) return LinExpr(it->second);
    throw std::logic_error("no value for family member " + m.key);
  }

  std::vector<LinExpr> r_vector(int class_index, const std::vector<int>& needed_rows,
                                bool member_as_zero = false) const {
    std::vector<LinExpr> r(family.size());
    std::vector<bool> have(family.size(), false);
    for (int i = 0; i < family.size(); ++i) {
      const FamilyMember& m = family.members()[i];
      bool is_member = m.key == data->member ||
                       (!data->partner.empty() && m.key == data->partner);
      if (is_member && member_as_zero) {
        r[i] = LinExpr();
        have[i] = true;
        continue;
      }
      bool known = is_member || support_zero.count(m.key) ||
                   almost_values.count(i);
      if (known) {
        r[i] = r_member_value(i, class_index);
        have[i] = true;
      }
    }
    for (int row : needed_rows)
      for (int i = 0; i < family.size(); ++i)
        if (!have[i] && !family.matrix(row, i).is_zero())
          throw std::logic_error("missing value for member " +
                                 family.members()[i].key +
                                 " with nonzero coefficient");
    return r;
  }
};

// parity of a value that is an integer for every odd q: 0, 1, or -1 (varies)
int parity_of(const CycVal& v) {
  CycVal half = v * CycVal(Cyc(mpq_class(1, 2)));
  if (half.is_algebraic_integer_for_residue(2, 1)) return 0;
  CycVal halfm = (v - CycVal(1)) * CycVal(Cyc(mpq_class(1, 2)));
  if (halfm.is_algebraic_integer_for_residue(2, 1)) return 1;
  return -1;
}

int parity_diff(const CycVal& u, const CycVal& v) {
  int p = parity_of(u - v);
  if (p < 0) throw std::runtime_error("parity of a difference is not constant");
  return p;
}

std::vector<std::pair<long, long>> parse_residues(const std::string& spec) {
  std::vector<std::pair<long, long>> residues;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto pos = tok.find(':');
    residues.emplace_back(std::stol(tok.substr(0, pos)),
                          std::stol(tok.substr(pos + 1)));
  }
  return residues;
}

}  // namespace

CaseResult solve_case(CaseContext& ctx, const CaseData& data) {
  CaseResult result;
  result.data = data;
  for (const auto& branch : data.branches) {
    BranchResult br;
    br.branch = branch;
    EngineState st(data, ctx, br);

    // --- component group classes -------------------------------------------
    if (data.a_is_s4) {
      static const char* names[5] = {"x14", "x15", "x16", "x17", "x18"};
      static const int sgn[5] = {1, 1, -1, -1, 1};
      for (int i = 0; i < 5; ++i) {
        SigmaClass c;
        c.name = names[i];
        c.psi1 = Cyc(sgn[i]);
        c.psi2 = c.psi1;
        c.center_marked = i == 0;
        br.classes.push_back(c);
      }
      st.trace("component group S4 with trivial F-action: classes "
               "x14(1111) x15(22) x16(211) x17(4) x18(31), psi = sgn");
    } else if (data.a_is_d8) {
      // dihedral component group of order 8, psi = sgn restricted from the
      // symmetric group; only the base class enters the deduction
      static const char* names[5] = {"1", "r^2", "r", "s", "rs"};
      static const int sgn[5] = {1, 1, -1, -1, 1};
      for (int i = 0; i < 5; ++i) {
        SigmaClass c;
        c.name = names[i];
        c.psi1 = Cyc(sgn[i]);
        c.psi2 = c.psi1;
        c.center_marked = i == 0;
        br.classes.push_back(c);
      }
      st.trace("component group D8 with trivial F-action: 5 classes; psi = sgn");
    } else {
      st.a.names = data.gen_names;
      st.a.orders = data.gen_orders;
      st.a.psi = data.psi_on_gens;
      auto f_img = [&](const AbelianA::Vec& v) {
        AbelianA::Vec r = v;
        if (branch.f_inverts_center)
          for (size_t i = 0; i < st.a.names.size(); ++i)
            if (std::find(data.center_gens.begin(), data.center_gens.end(),
                          st.a.names[i]) != data.center_gens.end())
              r[i] = (st.a.orders[i] - v[i]) % st.a.orders[i];
        return r;
      };
      for (const auto& b : st.a.all())
        st.dsub.insert(st.a.add(b, st.a.neg(f_img(b))));
      st.zsub.insert(st.a.zero());
      for (size_t i = 0; i < st.a.names.size(); ++i) {
        if (std::find(data.center_gens.begin(), data.center_gens.end(),
                      st.a.names[i]) == data.center_gens.end())
          continue;
        std::set<AbelianA::Vec> next = st.zsub;
        for (const auto& v : st.zsub)
          for (long e = 0; e < st.a.orders[i]; ++e) {
            AbelianA::Vec w = v;
            w[i] = (w[i] + e) % st.a.orders[i];
            next.insert(w);
          }
        st.zsub = std::move(next);
      }
      std::set<AbelianA::Vec> seen;
      for (const auto& v : st.a.all()) {
        if (seen.count(v)) continue;
        AbelianA::Vec rep = v;
        for (const auto& d : st.dsub) {
          AbelianA::Vec u = st.a.add(v, d);
          seen.insert(u);
          rep = std::min(rep, u);
        }
        st.class_reps.push_back(rep);
        SigmaClass c;
        c.name = st.a.name_of(rep);
        c.psi1 = st.a.psi_value(rep);
        c.psi2 = c.psi1.conj();
        br.classes.push_back(c);
      }
      for (size_t ci = 0; ci < br.classes.size(); ++ci) {
        bool marked = false;
        for (const auto& z : st.zsub)
          if (st.class_of_vec(z) == static_cast<int>(ci)) marked = true;
        br.classes[ci].center_marked = marked;
        // Shintani: C_a -> C_{g1bar + a}; g1bar is the first generator
        AbelianA::Vec g1bar = st.a.zero();
        g1bar[0] = 1 % st.a.orders[0];
        br.classes[ci].shintani_to =
            st.class_of_vec(st.a.add(st.class_reps[ci], g1bar));
      }
      std::string cl =
          "Sigma^F splits into " + std::to_string(br.classes.size()) + " classes:";
      for (auto& c : br.classes) cl += " " + c.name + (c.center_marked ? "*" : "");
      cl += "  (* = in the central orbit of the base class)";
      st.trace(cl);
    }

    // --- run the steps -------------------------------------------------------
    for (const auto& step : data.steps) {
      const std::string& op = step.at(0);
      if (op == "conj-pair") {
        st.conj_paired = true;
        st.trace("step conj-pair: the partner sheaf carries the conjugate local "
                 "system; rational almost characters force zeta' = conj(zeta)");
      } else if (op == "self-inverse" || op == "inverse-pair" ||
                 op == "real-scalar") {
        st.zeta_real = true;
        st.feasible_zeta = {Cyc(1), Cyc(-1)};
        if (op == "real-scalar") {
          std::string reason;
          for (size_t i = 1; i < step.size(); ++i) reason += (i > 1 ? " " : "") + step[i];
          st.trace("step real-scalar (" + reason + "): zeta = conj(zeta), so "
                   "zeta = 1 or -1");
        } else if (op == "self-inverse") {
          st.trace("step self-inverse (" +
                   (step.size() > 1 ? step[1] : std::string()) +
                   "): g1 is chosen conjugate to g1^{-1}, so zeta = conj(zeta), "
                   "hence zeta = 1 or -1");
        } else {
          st.trace("step inverse-pair: inversion permutes the two marked classes, "
                   "so the cuspidal pair vanishes there and zeta = conj(zeta) = "
                   "1 or -1");
        }
        if (!data.a_is_s4 && !data.a_is_d8 && op != "real-scalar")
          for (size_t ci = 0; ci < br.classes.size(); ++ci)
            br.classes[ci].inverse_to = st.class_of_vec(st.a.neg(st.class_reps[ci]));
      } else if (op == "support-zero") {
        std::string names;
        for (size_t i = 1; i < step.size(); ++i) {
          if (st.family.index_of(step[i]) < 0)
            throw std::runtime_error("support-zero: unknown member " + step[i]);
          st.support_zero.insert(step[i]);
          names += (i > 1 ? " " : "") + step[i];
        }
        st.trace("step support-zero: the sheaves at " + names +
                 " live on classes away from Sigma, so their almost characters "
                 "vanish here");
      } else if (op == "almost-values") {
        const std::string& mode = step.at(1);
        if (mode == "computed") {
          const CharTable& amb = ctx.char_table(data.ambient);
          const WClassIdentifier& ident = ctx.identifier(data.ambient);
          const FusionTable& fus =
              ctx.fusion(data.ambient, data.subsystem, data.twisted);
          const WeylGroup& w = ctx.weyl(data.ambient);
          WeylElt dd =
              branch.d_word == "e" ? w.identity() : w.parse_word(branch.d_word);
          int xi = fus.xi_class_of(dd);
          if (xi < 0) throw std::runtime_error("branch d-word not in any Xi class");
          std::string msg = "step almost-values (regular-unipotent datum, d = " +
                            branch.d_word + "):";
          for (int i = 0; i < st.family.size(); ++i) {
            const FamilyMember& m = st.family.members()[i];
            if (m.r_char_name.empty()) continue;
            int phi = amb.index_of(m.r_char_name);
            if (phi < 0)
              throw std::runtime_error("unknown ambient character " + m.r_char_name);
            CycVal v = r_phi_at_regular(amb, ident, phi, fus, xi, data.twisted);
            st.almost_values[i] = v;
            msg += " R{" + m.r_char_name + "}=" + v.str() + ";";
          }
          st.trace(msg);
        } else if (mode == "green") {
          const std::string& file = step.at(2);
          GreenData g = ctx.green(file);
          const CharTable& amb = ctx.char_table(data.ambient);
          const WeylGroup& w = ctx.weyl(data.ambient);
          if (g.h_type != "B4" || data.ambient != "F4")
            throw std::runtime_error("green restriction is wired for B4 in F4");
          RootSystem b4 = RootSystem::build("B4");
          WeylGroup wb(b4);
          CharTable tb = bn_character_table(wb, 4);
          Subsystem sub = subsystem_for(w.root_system(), "B4");
          const auto& simp = sub.simple_system();
          std::vector<int> map(4, -1);
          std::vector<int> perm = {0, 1, 2, 3};
          bool found = false;
          do {
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i)
              for (int j = 0; j < 4 && ok; ++j)
                if (b4.cartan().at(i, j) !=
                    w.root_system().pairing(simp[perm[j]], simp[perm[i]]))
                  ok = false;
            if (ok) {
              for (int i = 0; i < 4; ++i) map[i] = simp[perm[i]];
              found = true;
              break;
            }
          } while (std::next_permutation(perm.begin(), perm.end()));
          if (!found) throw std::logic_error("no diagram isomorphism found");
          std::vector<int> fused;
          for (const auto& c : tb.classes()) {
            WeylElt img = w.identity();
            for (int letter : c.rep_word) img = w.mul(img, w.reflection(map[letter]));
            fused.push_back(amb.class_of(img));
          }
          std::string msg = "step almost-values (restriction to the B4 "
                            "centraliser; " + g.source + "):";
          for (int i = 0; i < st.family.size(); ++i) {
            const FamilyMember& m = st.family.members()[i];
            if (m.r_char_name.empty()) continue;
            int phi = amb.index_of(m.r_char_name);
            if (phi < 0)
              throw std::runtime_error("unknown ambient character " + m.r_char_name);
            CycVal v = r_phi_via_green(amb, phi, tb, fused, g);
            st.almost_values[i] = v;
            msg += " R{" + m.r_char_name + "}=" + v.str() + ";";
          }
          st.trace(msg);
        } else if (mode == "axioms") {
          std::string msg = "step almost-values (recorded facts):";
          for (const auto& ax : data.axioms) {
            if (ax.key.rfind("R:", 0) != 0) continue;
            std::string rho = ax.key.substr(2);
            int mi = st.family.index_of_rho(rho);
            if (mi < 0) throw std::runtime_error("axiom names unknown character " + rho);
            st.almost_values[mi] = CycVal::parse(ax.value);
            msg += " R{" + rho + "}=" + ax.value + " (" + ax.source + ");";
          }
          st.trace(msg);
        } else {
          throw std::runtime_error("unknown almost-values mode " + mode);
        }
      } else if (op == "invert" || op == "table") {
        const std::string& target = step.at(1);
        int row = st.family.index_of_rho(target);
        if (row < 0) throw std::runtime_error(op + ": unknown character " + target);
        std::vector<LinExpr> table;
        for (size_t ci = 0; ci < br.classes.size(); ++ci) {
          auto rvec = st.r_vector(static_cast<int>(ci), {row});
          LinExpr e = st.family.unipotent_from_almost(row, rvec);
          if (op == "table" && !br.conditional && st.feasible_zeta.size() == 1)
            e = e.substituted("zeta", CycVal(st.feasible_zeta[0]));
          table.push_back(e);
        }
        if (op == "invert") {
          std::string msg = "step invert: " + target + " on Sigma^F:";
          for (size_t ci = 0; ci < br.classes.size(); ++ci)
            msg += "  [" + br.classes[ci].name + "] " + table[ci].str() + ";";
          st.trace(msg);
        }
        br.tables[target] = std::move(table);
      } else if (op == "invert-at") {
        // invert-at <rho> at <class> combo <axiom-key>
        const std::string& target = step.at(1);
        if (step.at(2) != "at" || step.at(4) != "combo")
          throw std::runtime_error("invert-at: bad arguments");
        const std::string& clname = step.at(3);
        const auto* ax = data.axiom(step.at(5));
        if (!ax) throw std::runtime_error("invert-at: missing axiom " + step.at(5));
        CycVal combo = CycVal::parse(ax->value);
        int row = st.family.index_of_rho(target);
        if (row < 0) throw std::runtime_error("invert-at: unknown character " + target);
        int ci = -1;
        for (size_t i = 0; i < br.classes.size(); ++i)
          if (br.classes[i].name == clname) ci = static_cast<int>(i);
        if (ci < 0) throw std::runtime_error("invert-at: unknown class " + clname);
        // Irr-part lumped into the recorded combination; the remaining
        // members must be the case's own sheaf or support-zero
        LinExpr e(combo);
        for (int i = 0; i < st.family.size(); ++i) {
          const FamilyMember& m = st.family.members()[i];
          if (!m.r_char_name.empty()) continue;  // inside the combo
          Cyc coeff = st.family.matrix(row, i);
          if (coeff.is_zero()) continue;
          LinExpr term = st.r_member_value(i, ci).scaled(CycVal(coeff));
          e = e + term;
        }
        e = e.scaled(CycVal(Cyc(st.family.members()[row].delta)));
        std::vector<LinExpr> table(br.classes.size(),
                                   LinExpr::symbol("unspecified"));
        table[ci] = e;
        br.tables[target] = table;
        st.trace("step invert-at: " + target + "(" + clname + ") = " + e.str() +
                 " using the recorded principal-series part (" + ax->source + ")");
      } else if (op == "integrality") {
        const std::string& target = step.at(1);
        if (step.at(2) != "at" || step.at(4) != "residues")
          throw std::runtime_error("integrality: expected 'at <class> residues <m:r,..>'");
        const std::string& clname = step.at(3);
        auto residues = step.at(5) == "branch"
                            ? std::vector<std::pair<long, long>>{{branch.mod, branch.res}}
                            : parse_residues(step.at(5));
        int ci = -1;
        for (size_t i = 0; i < br.classes.size(); ++i)
          if (br.classes[i].name == clname) ci = static_cast<int>(i);
        if (ci < 0) throw std::runtime_error("integrality: unknown class " + clname);
        const LinExpr& e = br.tables.at(target)[ci];
        std::vector<Cyc> keep;
        std::string msg = "step integrality: " + target + "(" + clname + ") = " +
                          e.str() + " is an algebraic integer;";
        for (const Cyc& z : st.feasible_zeta) {
          LinExpr sub = e.substituted("zeta", CycVal(z));
          if (!sub.is_constant())
            throw std::logic_error("integrality: residual unknowns");
          bool ok = true;
          for (auto& [m, r] : residues)
            ok = ok && sub.constant.is_algebraic_integer_for_residue(m, r);
          msg += std::string(" zeta = ") + z.str() + (ok ? ": feasible;" : ": rejected;");
          if (ok) keep.push_back(z);
        }
        st.feasible_zeta = keep;
        st.trace(msg);
        if (keep.empty())
          throw std::runtime_error("integrality rejected every candidate scalar");
      } else if (op == "identify-contradiction") {
        const std::string& target = step.at(1);
        if (step.at(2) != "at" || step.at(4) != "residues")
          throw std::runtime_error("identify-contradiction: bad arguments");
        const std::string& clname = step.at(3);
        auto residues = parse_residues(step.at(5));
        int ci = -1;
        for (size_t i = 0; i < br.classes.size(); ++i)
          if (br.classes[i].name == clname) ci = static_cast<int>(i);
        int row = st.family.index_of_rho(target);
        if (row < 0 || ci < 0)
          throw std::runtime_error("identify-contradiction: bad arguments");
        auto rvec = st.r_vector(ci, {row}, /*member_as_zero=*/true);
        LinExpr v = st.family.unipotent_from_almost(row, rvec);
        if (!v.is_constant())
          throw std::logic_error("identification: unknowns left");
        bool integral = true;
        for (auto& [m, r] : residues)
          integral = integral && v.constant.is_algebraic_integer_for_residue(m, r);
        if (integral)
          throw std::runtime_error("identification contradiction did not occur");
        st.trace("step identify-contradiction: were the sheaf supported away from "
                 "Sigma, " + target + "(" + clname + ") = " + v.constant.str() +
                 " would be an algebraic integer, which it is not; so the sheaf "
                 "is the " + data.member + " member and its support is Sigma");
      } else if (op == "hecke-sum") {
        const std::string& file = step.at(1);
        HeckeValueTable hv = ctx.hecke_values(file);
        if (step.at(2) != "centorder" || step.at(4) != "r" || step.at(6) != "hypotheses")
          throw std::runtime_error("hecke-sum: bad arguments");
        CycVal cent = CycVal::parse(step.at(3));
        long rr = std::stol(step.at(5));
        std::vector<std::string> hyps;
        {
          std::stringstream ss(step.at(7));
          std::string tok;
          while (std::getline(ss, tok, ',')) hyps.push_back(tok);
        }
        int x1 = st.family.index_of(data.member);
        // B = sum over principal-series members of alpha1(phi) phi^{(q)}(T_wc)
        CycVal b;
        std::string bmsg;
        for (int i = 0; i < st.family.size(); ++i) {
          const FamilyMember& m = st.family.members()[i];
          if (m.r_char_name.empty()) continue;
          Cyc alpha = st.family.matrix(i, x1) * Cyc(m.delta);
          if (alpha.is_zero()) continue;
          const HeckeCharValue* v = hv.find(m.r_char_name, "coxeter");
          if (!v)
            throw std::runtime_error("hecke-sum: no Coxeter value for " +
                                     m.r_char_name);
          b += CycVal(alpha) * v->value;
          bmsg += " alpha1(" + m.r_char_name + ") = " + alpha.str() +
                  " with value " + v->value.str() + ";";
        }
        st.trace("step hecke-sum: B = " + b.str() + " from" + bmsg);
        // orthogonality blocks for the residual sum D
        int k = static_cast<int>(br.classes.size());
        std::vector<std::vector<Cyc>> rows;
        {
          std::vector<Cyc> r1(k), r2(k);
          for (int i2 = 0; i2 < k; ++i2) {
            r1[i2] = br.classes[i2].psi1.conj();
            r2[i2] = br.classes[i2].psi2.conj();
          }
          rows.push_back(r1);
          rows.push_back(r2);
          if (!data.a_is_s4) {
            // unipotent characters agree on central translates of a class
            for (int i2 = 0; i2 < k; ++i2)
              for (const auto& z : st.zsub) {
                int j2 = st.class_of_vec(st.a.add(st.class_reps[i2], z));
                if (j2 == i2) continue;
                std::vector<Cyc> row(k);
                row[i2] = Cyc(1);
                row[j2] = Cyc(-1);
                rows.push_back(std::move(row));
              }
          }
        }
        std::vector<int> block(k, -1);
        {
          std::vector<std::vector<Cyc>> mat = rows;
          int nrows = static_cast<int>(mat.size());
          std::vector<int> pivot_col;
          int rank = 0;
          for (int c = 0; c < k && rank < nrows; ++c) {
            int piv = -1;
            for (int r2 = rank; r2 < nrows; ++r2)
              if (!mat[r2][c].is_zero()) { piv = r2; break; }
            if (piv < 0) continue;
            std::swap(mat[piv], mat[rank]);
            Cyc inv = mat[rank][c].inverse();
            for (int cc = 0; cc < k; ++cc) mat[rank][cc] *= inv;
            for (int r2 = 0; r2 < nrows; ++r2) {
              if (r2 == rank || mat[r2][c].is_zero()) continue;
              Cyc fct = mat[r2][c];
              for (int cc = 0; cc < k; ++cc) mat[r2][cc] -= fct * mat[rank][cc];
            }
            pivot_col.push_back(c);
            ++rank;
          }
          std::vector<bool> ispivot(k, false);
          for (int c : pivot_col) ispivot[c] = true;
          std::vector<std::vector<Cyc>> kb;
          for (int fcol = 0; fcol < k; ++fcol) {
            if (ispivot[fcol]) continue;
            std::vector<Cyc> v(k);
            v[fcol] = Cyc(1);
            for (int r2 = 0; r2 < rank; ++r2) v[pivot_col[r2]] = -mat[r2][fcol];
            kb.push_back(std::move(v));
          }
          // the kernel must consist of block indicators
          for (int c = 0; c < k; ++c) {
            int owner = -1;
            for (size_t v2 = 0; v2 < kb.size(); ++v2) {
              const Cyc& x = kb[v2][c];
              if (x.is_zero()) continue;
              if (!(x == Cyc(1)) || owner >= 0)
                throw std::logic_error("hecke-sum: kernel is not a block partition");
              owner = static_cast<int>(v2);
            }
            if (owner < 0)
              throw std::logic_error("hecke-sum: class outside every block");
            block[c] = owner;
          }
        }
        std::map<std::string, std::vector<Cyc>> surviving;
        for (const auto& hyp : hyps) {
          int hc = -1;
          for (int c = 0; c < k; ++c)
            if (br.classes[c].name == hyp) hc = c;
          if (hc < 0)
            throw std::runtime_error("hecke-sum: unknown hypothesis class " + hyp);
          std::vector<bool> marked(k, false);
          if (data.a_is_s4) {
            marked[hc] = true;
          } else {
            for (const auto& z : st.zsub)
              marked[st.class_of_vec(st.a.add(st.class_reps[hc], z))] = true;
          }
          for (const Cyc& z : st.feasible_zeta) {
            std::map<int, CycVal> dv;
            bool ok = true;
            for (int c = 0; c < k && ok; ++c) {
              CycVal rsum = CycVal::monomial(
                  (br.classes[c].psi1 + br.classes[c].psi2) * z, data.dim_diff);
              CycVal target =
                  marked[c] ? cent * CycVal(Cyc(mpq_class(1, rr))) : CycVal();
              CycVal need = target - b * rsum;
              auto it = dv.find(block[c]);
              if (it == dv.end())
                dv[block[c]] = need;
              else if (!(it->second == need))
                ok = false;
            }
            if (ok) surviving[hyp].push_back(z);
          }
          if (surviving[hyp].empty())
            throw std::runtime_error("hecke-sum: no scalar fits hypothesis " + hyp);
          if (surviving[hyp].size() > 1)
            throw underdetermined_error("hecke-sum leaves several candidates for " +
                                        hyp);
        }
        std::set<std::string> zs;
        for (auto& [h, v] : surviving) zs.insert(v[0].str());
        if (zs.size() == 1) {
          st.feasible_zeta = {surviving.begin()->second[0]};
          st.trace("step hecke-sum: the Coxeter-cell count forces zeta = " +
                   st.feasible_zeta[0].str());
        } else {
          br.conditional = true;
          std::string msg =
              "step hecke-sum: zeta depends on which class meets the Coxeter cell:";
          for (auto& [h, v] : surviving) {
            br.zeta_by_class[h] = v[0];
            msg += " C = C_" + h + " -> zeta = " + v[0].str() + ";";
          }
          st.trace(msg);
        }
      } else if (op == "parity") {
        GreenData t4 = ctx.green(step.at(1));
        auto row_vals = [&](const std::string& nm) {
          std::vector<CycVal> v;
          for (const char* x : {"x14", "x15", "x16", "x17", "x18"})
            v.push_back(t4.value(nm + "@" + x));
          return v;
        };
        auto f4m1 = row_vals("F4[-1]");
        auto p112a = row_vals("[phi{1,12}']");
        auto p112b = row_vals("[phi{1,12}'']");
        std::vector<int> f4m1_par;
        for (auto& v : f4m1) f4m1_par.push_back(parity_of(v));
        if (!(f4m1_par == std::vector<int>{0, 0, 1, 0, 0}))
          throw std::runtime_error("parity: fixture F4[-1] odd exactly at x16 failed");
        st.trace("step parity: the unipotent-class table has F4[-1] odd exactly "
                 "at x16 (" + t4.source + ")");
        for (int i = 1; i < 5; ++i)
          if (parity_diff(p112a[i], p112a[0]) != 1)
            throw std::runtime_error("parity: [phi{1,12}'] does not single out x14");
        for (int i = 0; i < 5; ++i)
          if (i != 1 && parity_diff(p112b[i], p112b[1]) != 1)
            throw std::runtime_error("parity: [phi{1,12}''] does not single out x15");
        const auto* ax1 = data.axiom("sum-parity:[phi{1,12}']");
        const auto* ax2 = data.axiom("sum-parity:[phi{1,12}'']");
        if (!ax1 || !ax2 || ax1->value != "odd" || ax2->value != "odd")
          throw std::runtime_error("parity: missing uniform-sum axioms");
        st.trace("step parity: the class sums of [phi{1,12}'] and [phi{1,12}''] "
                 "over Sigma^F are odd (" + ax1->source + "), and squaring "
                 "preserves values mod 2, so one class squares into x14 and one "
                 "into x15; those classes have even F4[-1] values");
        const auto& table = br.tables.at("F4[-1]");
        std::map<std::string, Cyc> by_square;
        for (const Cyc& z : st.feasible_zeta) {
          std::vector<int> par;
          for (size_t c = 0; c < br.classes.size(); ++c) {
            LinExpr e = table[c].substituted("zeta", CycVal(z));
            if (!e.is_constant()) throw std::logic_error("parity: unknowns left");
            par.push_back(parity_of(e.constant));
          }
          int odd = 0;
          for (int p : par) odd += p == 1;
          if (odd != 2)
            throw std::runtime_error("parity: expected exactly two odd classes");
          if (par[0] == 1)
            by_square["x16"] = z;  // g1's own value odd => g1^2 lands in x16
          else {
            by_square["x14"] = z;
            by_square["x15"] = z;
          }
        }
        br.conditional = true;
        br.zeta_by_class = by_square;
        br.square_classes["odd-F4[-1]-pair"] = "x16";
        br.square_classes["even-F4[-1]-pair"] = "x14 and x15";
        std::string msg = "step parity: zeta by the square class of g1:";
        for (auto& [sq, z] : by_square)
          msg += " g1^2 ~ " + sq + " -> zeta = " + z.str() + ";";
        st.trace(msg);
      } else {
        throw std::runtime_error("unknown step " + op);
      }
    }

    if (!br.conditional) {
      if (st.feasible_zeta.size() != 1)
        throw underdetermined_error("case " + data.name + ": " +
                                    std::to_string(st.feasible_zeta.size()) +
                                    " candidates remain");
      br.zeta = st.feasible_zeta[0];
      st.trace("result: zeta = " + br.zeta.str());
    } else {
      std::string msg = "result: zeta is class-dependent:";
      for (auto& [k2, v] : br.zeta_by_class) msg += " " + k2 + ": " + v.str() + ";";
      st.trace(msg);
    }
    result.branches.push_back(std::move(br));
  }
  return result;
}

std::map<std::string, std::vector<Cyc>> evaluate_table(const BranchResult& br,
                                                       const std::string& character,
                                                       long q0) {
  std::map<std::string, std::vector<Cyc>> out;
  auto it = br.tables.find(character);
  if (it == br.tables.end()) throw std::runtime_error("no table for " + character);
  std::vector<Cyc> vals;
  for (const auto& e : it->second) {
    LinExpr x = e;
    if (!x.is_constant() && !br.conditional) x = x.substituted("zeta", CycVal(br.zeta));
    if (!x.is_constant()) throw std::runtime_error("table entry has unknowns");
    EvalResult r = x.constant.evaluate(q0);
    if (!r.is_plain()) throw std::runtime_error("table entry needs sqrt(q)");
    vals.push_back(r.plain);
  }
  out[character] = vals;
  return out;
}

}  // namespace lch
