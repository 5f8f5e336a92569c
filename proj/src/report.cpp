#include "report.hpp"

#include <map>
#include <sstream>

#include "cuspidal.hpp"

namespace lch {

namespace {

struct Args {
  std::string subcommand;
  std::map<std::string, std::string> flags;
  std::vector<std::string> positional;
  bool machine = false;

  const std::string& get(const std::string& key) const {
    static const std::string empty;
    auto it = flags.find(key);
    return it == flags.end() ? empty : it->second;
  }
  bool has(const std::string& key) const { return flags.count(key) != 0; }
};

Args parse_args(const std::vector<std::string>& argv) {
  Args a;
  if (argv.empty()) throw std::invalid_argument("no subcommand given");
  a.subcommand = argv[0];
  for (size_t i = 1; i < argv.size(); ++i) {
    const std::string& s = argv[i];
    if (s.rfind("--", 0) == 0) {
      std::string key = s.substr(2);
      if (key == "twisted" || key == "all" || key == "emit-matrix") {
        a.flags[key] = "1";
      } else {
        if (i + 1 >= argv.size()) throw std::invalid_argument("flag " + s + " needs a value");
        a.flags[key] = argv[++i];
      }
    } else {
      a.positional.push_back(s);
    }
  }
  a.machine = a.get("emit") == "machine";
  return a;
}

std::string linexpr_str(const LinExpr& e) { return e.str(); }

// -- subcommands -------------------------------------------------------------

Report cmd_help() {
  Report r;
  r.text =
      "subcommands:\n"
      "  fusion --type T --subsystem S [--twisted]      equivalence classes of"
      " pairs and their twisted class counts\n"
      "  sigma-classes --type T --subsystem S --d W [--twisted]  classes for one"
      " representative\n"
      "  center --type T [--subsystem S]                centre of the subsystem"
      " subgroup\n"
      "  chartab --type T [--emit machine]              character table\n"
      "  family --which K | --gamma G [--emit-matrix]   family data and Fourier"
      " matrix\n"
      "  almost-eval --case C --phi NAME                almost-character values"
      " on the case datum\n"
      "  verify-scalars --case C | --all                scalar determinations"
      " with their deduction traces\n"
      "  value-table --case C [--residue m:r] [--q N]   value tables of the"
      " solved case\n"
      "  ingest-check --kind K PATH                     validate a data file\n"
      "flags: --data DIR (data directory), --emit text|machine\n";
  return r;
}

Report cmd_fusion(CaseContext& ctx, const Args& a) {
  Report r;
  const std::string& type = a.get("type");
  const std::string& sub = a.get("subsystem");
  if (type.empty() || sub.empty()) {
    return {2, "fusion requires --type and --subsystem\n"};
  }
  bool twisted = a.has("twisted");
  const FusionTable& f = ctx.fusion(type, sub, twisted);
  const WeylGroup& w = ctx.weyl(type);
  std::ostringstream os;
  if (a.machine) {
    os << "fusion type=" << type << " subsystem=" << sub
       << " twisted=" << (twisted ? 1 : 0) << "\n";
    os << "classes=" << f.xi_classes().size() << "\n";
    int i = 0;
    for (const auto& x : f.xi_classes()) {
      os << "xi=" << i++ << " d=" << WeylGroup::word_str(x.d_word)
         << " len=" << x.d_word.size() << " perm=" << x.diagram_perm
         << " subclasses=" << x.sub_classes.size() << "\n";
    }
  } else {
    os << "pairs (Phi', w) for Phi' of type " << sub << " in " << type
       << (twisted ? " (twisted)" : "") << "\n";
    os << "simple system:";
    for (int k : f.subsystem().simple_system())
      os << "  " << w.root_system().root_alpha_str(k);
    os << "\n";
    os << "  d (minimal representative) | diagram permutation | classes\n";
    for (const auto& x : f.xi_classes()) {
      os << "  " << WeylGroup::word_str(x.d_word) << " | " << x.diagram_perm
         << " | " << x.sub_classes.size() << "\n";
    }
  }
  r.text = os.str();
  return r;
}

Report cmd_sigma_classes(CaseContext& ctx, const Args& a) {
  const std::string& type = a.get("type");
  const std::string& sub = a.get("subsystem");
  const std::string& dword = a.get("d");
  if (type.empty() || sub.empty() || dword.empty())
    return {2, "sigma-classes requires --type, --subsystem and --d\n"};
  bool twisted = a.has("twisted");
  const FusionTable& f = ctx.fusion(type, sub, twisted);
  const WeylGroup& w = ctx.weyl(type);
  WeylElt d = dword == "e" ? w.identity() : w.parse_word(dword);
  int xi = f.xi_class_of(d);
  if (xi < 0) return {3, "the given word does not stabilize the subsystem\n"};
  const XiClass& x = f.xi_classes()[xi];
  std::ostringstream os;
  os << (a.machine ? "sigmaclasses" : "twisted classes") << " type=" << type
     << " subsystem=" << sub << " d=" << dword << " class=" << xi
     << " perm=" << x.diagram_perm << "\n";
  for (size_t i = 0; i < x.sub_classes.size(); ++i) {
    os << "rep=" << WeylGroup::word_str(x.sub_classes[i].rep_word)
       << " size=" << x.sub_classes[i].size
       << " centralizer=" << x.sub_centralizers[i] << "\n";
  }
  return {0, os.str()};
}

Report cmd_center(CaseContext& ctx, const Args& a) {
  const std::string& type = a.get("type");
  if (type.empty()) return {2, "center requires --type\n"};
  // strip an "sc" suffix: the lattice convention is simply connected anyway
  std::string t = type;
  if (t.size() > 2 && t.substr(t.size() - 2) == "sc") t = t.substr(0, t.size() - 2);
  const WeylGroup& w = ctx.weyl(t);
  const RootSystem& rs = w.root_system();
  std::ostringstream os;
  TorusSubgroup z = [&] {
    if (a.has("subsystem")) {
      const FusionTable& f = ctx.fusion(t, a.get("subsystem"), false);
      return TorusSubgroup::center_of(w, f.subsystem());
    }
    std::vector<int> all;
    for (int i = 0; i < rs.rank(); ++i) all.push_back(i);
    Subsystem whole = Subsystem::closed_subsystem(rs, all);
    return TorusSubgroup::center_of(w, whole);
  }();
  os << "center type=" << t;
  if (a.has("subsystem")) os << " subsystem=" << a.get("subsystem");
  os << "\nstructure=" << z.structure_str() << "\n";
  for (size_t i = 0; i < z.generators().size(); ++i) {
    os << "generator order=" << z.invariant_factors()[i].get_str() << " "
       << z.generators()[i].h_str() << "\n";
  }
  return {0, os.str()};
}

Report cmd_chartab(CaseContext& ctx, const Args& a) {
  const std::string& type = a.get("type");
  if (type.empty()) return {2, "chartab requires --type\n"};
  const CharTable& t = ctx.char_table(type);
  if (a.has("emit") || a.has("emit-matrix")) return {0, t.serialize(type)};
  std::ostringstream os;
  os << "character table of W(" << type << "): order " << t.group_order() << ", "
     << t.num_classes() << " classes\n";
  for (const auto& row : t.rows()) {
    os << "  " << row.name;
    for (const auto& al : row.aliases) os << " (" << al << ")";
    os << "  degree " << row.degree << "  b " << row.b_invariant << "\n";
  }
  return {0, os.str()};
}

Report cmd_family(const Args& a) {
  Family f = a.has("which") ? ambient_family(a.get("which"))
                            : Family::build(a.get("gamma").empty() ? "S4"
                                                                   : a.get("gamma"));
  std::ostringstream os;
  os << "family gamma=" << f.gamma() << " size=" << f.size() << "\n";
  for (const auto& m : f.members()) {
    os << "member " << m.key << " eigenvalue=" << m.eigenvalue.str();
    if (!m.rho_name.empty()) os << " rho=" << m.rho_name;
    if (m.delta != 1) os << " delta=" << m.delta;
    os << "\n";
  }
  if (a.has("emit-matrix")) {
    os << "matrix " << f.size() << "x" << f.size() << "\n";
    for (int i = 0; i < f.size(); ++i) {
      for (int j = 0; j < f.size(); ++j) os << (j ? "," : "") << f.matrix(i, j).str();
      os << "\n";
    }
  }
  return {0, os.str()};
}

Report cmd_verify_scalars(CaseContext& ctx, const Args& a) {
  std::vector<std::string> names;
  if (a.has("all"))
    names = ctx.list_cases();
  else if (a.has("case"))
    names.push_back(a.get("case"));
  else
    return {2, "verify-scalars requires --case NAME or --all\n"};
  std::ostringstream os;
  for (const auto& name : names) {
    CaseData d = ctx.load_case(name);
    CaseResult r = solve_case(ctx, d);
    os << "case " << name << " ambient=" << d.ambient
       << " member=" << d.member << "\n";
    for (const auto& br : r.branches) {
      os << "branch mod=" << br.branch.mod << " res=" << br.branch.res
         << " d=" << br.branch.d_word << " classes=" << br.classes.size() << "\n";
      for (const auto& t : br.trace) os << "  " << t << "\n";
      if (br.conditional) {
        os << "zeta=conditional";
        for (const auto& [k, v] : br.zeta_by_class) os << " " << k << ":" << v.str();
        os << "\n";
      } else {
        os << "zeta=" << br.zeta.str() << "\n";
      }
    }
  }
  return {0, os.str()};
}

Report cmd_value_table(CaseContext& ctx, const Args& a) {
  if (!a.has("case")) return {2, "value-table requires --case NAME\n"};
  CaseData d = ctx.load_case(a.get("case"));
  CaseResult r = solve_case(ctx, d);
  long want_mod = -1, want_res = -1;
  if (a.has("residue")) {
    auto pos = a.get("residue").find(':');
    if (pos == std::string::npos) return {2, "--residue expects m:r\n"};
    want_mod = std::stol(a.get("residue").substr(0, pos));
    want_res = std::stol(a.get("residue").substr(pos + 1));
  }
  long q0 = a.has("q") ? std::stol(a.get("q")) : 0;
  if (q0 > 0 && want_mod > 0 && q0 % want_mod != want_res)
    return {3, "the given q does not satisfy the residue hypothesis\n"};
  std::ostringstream os;
  for (const auto& br : r.branches) {
    if (want_mod > 0 && (br.branch.mod != want_mod || br.branch.res != want_res))
      continue;
    if (q0 > 0 && br.branch.mod > 1 && q0 % br.branch.mod != br.branch.res) continue;
    os << "case " << d.name << " branch mod=" << br.branch.mod
       << " res=" << br.branch.res << "\n";
    os << "classes";
    for (const auto& c : br.classes) os << " " << c.name;
    os << "\n";
    for (const auto& [name, tab] : br.tables) {
      os << "table " << name << "\n";
      for (size_t i = 0; i < tab.size(); ++i) {
        os << "  " << br.classes[i].name << " = " << linexpr_str(tab[i]);
        if (q0 > 0 && tab[i].is_constant()) {
          EvalResult e = tab[i].constant.evaluate(q0);
          os << "  @q=" << q0 << ": " << e.plain.str();
          if (!e.is_plain()) os << " + (" << e.surd.str() << ")*sqrt(" << q0 << ")";
        }
        os << "\n";
      }
    }
  }
  std::string text = os.str();
  if (text.empty()) return {3, "no branch matches the requested residue\n"};
  return {0, text};
}

Report cmd_almost_eval(CaseContext& ctx, const Args& a) {
  if (!a.has("case") || !a.has("phi"))
    return {2, "almost-eval requires --case and --phi\n"};
  CaseData d = ctx.load_case(a.get("case"));
  const CharTable& amb = ctx.char_table(d.ambient);
  int phi = amb.index_of(a.get("phi"));
  if (phi < 0) return {3, "unknown character " + a.get("phi") + "\n"};
  if (d.subsystem == "unipotent")
    return {3, "the case datum is a unipotent class; no fusion evaluation\n"};
  const WClassIdentifier& ident = ctx.identifier(d.ambient);
  const FusionTable& fus = ctx.fusion(d.ambient, d.subsystem, d.twisted);
  const WeylGroup& w = ctx.weyl(d.ambient);
  std::ostringstream os;
  for (const auto& br : d.branches) {
    WeylElt dd = br.d_word == "e" ? w.identity() : w.parse_word(br.d_word);
    int xi = fus.xi_class_of(dd);
    CycVal v = r_phi_at_regular(amb, ident, phi, fus, xi, d.twisted);
    os << "case=" << d.name << " branch=" << br.mod << ":" << br.res
       << " phi=" << a.get("phi") << " value=" << v.str() << "\n";
  }
  return {0, os.str()};
}

Report cmd_ingest_check(CaseContext& ctx, const Args& a) {
  if (a.positional.empty() || !a.has("kind"))
    return {2, "ingest-check requires --kind and a path\n"};
  const std::string& kind = a.get("kind");
  const std::string& path = a.positional[0];
  std::ostringstream os;
  try {
    if (kind == "green") {
      GreenData g = ctx.green(path);
      os << "ok green type=" << g.h_type << " unipotent=" << g.unip_label
         << " entries=" << g.r_psi.size() << "\n";
    } else if (kind == "chartab") {
      std::string text = ctx.read_file(path);
      // group label from the file header
      std::istringstream is(text);
      std::string line, label;
      while (std::getline(is, line))
        if (line.rfind("group ", 0) == 0) label = line.substr(6);
      if (label.empty()) return {3, "chartab file has no group record\n"};
      const WeylGroup& w = ctx.weyl(label);
      CharTable t = CharTable::load(text, w);
      os << "ok chartab group=" << label << " classes=" << t.num_classes()
         << " orthogonality=verified checksum=verified\n";
    } else if (kind == "heckevals") {
      HeckeValueTable t = ctx.hecke_values(path);
      os << "ok heckevals entries=" << t.entries.size() << "\n";
    } else if (kind == "case") {
      CaseData d = CaseData::parse(ctx.read_file(path));
      os << "ok case name=" << d.name << " branches=" << d.branches.size()
         << " steps=" << d.steps.size() << "\n";
    } else if (kind == "family") {
      return {2,
              "family data is compiled in and checked at construction; "
              "inspect it with the family subcommand\n"};
    } else {
      return {2, "unknown kind " + kind + "\n"};
    }
  } catch (const std::exception& e) {
    return {3, std::string("validation failed: ") + e.what() + "\n"};
  }
  return {0, os.str()};
}

}  // namespace

Report run_command(const std::string& data_dir, const std::vector<std::string>& argv) {
  try {
    Args a = parse_args(argv);
    CaseContext ctx(data_dir);
    if (a.subcommand == "help") return cmd_help();
    if (a.subcommand == "fusion") return cmd_fusion(ctx, a);
    if (a.subcommand == "sigma-classes") return cmd_sigma_classes(ctx, a);
    if (a.subcommand == "center") return cmd_center(ctx, a);
    if (a.subcommand == "chartab") return cmd_chartab(ctx, a);
    if (a.subcommand == "family") return cmd_family(a);
    if (a.subcommand == "verify-scalars") return cmd_verify_scalars(ctx, a);
    if (a.subcommand == "value-table") return cmd_value_table(ctx, a);
    if (a.subcommand == "almost-eval") return cmd_almost_eval(ctx, a);
    if (a.subcommand == "ingest-check") return cmd_ingest_check(ctx, a);
    return {2, "unknown subcommand '" + a.subcommand + "' (try help)\n"};
  } catch (const underdetermined_error& e) {
    return {4, std::string("underdetermined: ") + e.what() + "\n"};
  } catch (const value_error& e) {
    return {3, std::string("validation failed: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {2, std::string("usage: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {5, std::string("internal error: ") + e.what() + "\n"};
  }
}

}  // namespace lch
