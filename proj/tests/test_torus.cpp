#include "doctest.h"
#include "torus.hpp"

using namespace lch;

namespace {

TorusElt h_from(const std::vector<mpq_class>& v) {
  TorusElt t;
  t.a = v;
  for (auto& x : t.a) x = TorusElt::mod1(x);
  return t;
}

Subsystem e6_phi0(const RootSystem& e6) {
  std::vector<int> gens = {0, 1, 2, 4, 5};
  gens.push_back(e6.highest_root());
  return Subsystem::closed_subsystem(e6, gens);
}

Subsystem e7_phi0(const RootSystem& e7) {
  std::vector<int> gens = {0, 1, 2, 4, 5, 6};
  gens.push_back(e7.highest_root());
  return Subsystem::closed_subsystem(e7, gens);
}

}  // namespace

TEST_CASE("root_value and centers of the ambient groups") {
  RootSystem e6 = RootSystem::build("E6");
  WeylGroup w(e6);
  // z = h(xi,1,xi^-1,1,xi,xi^-1), xi of order 3, kills all simple roots
  TorusElt z = h_from({{1, 3}, 0, {2, 3}, 0, {1, 3}, {2, 3}});
  for (int i = 0; i < 6; ++i) CHECK(root_value(e6, i, z) == 0);

  TorusElt id6 = TorusElt::zero(6);
  for (int i = 0; i < 6; ++i) CHECK(root_value(e6, i, id6) == 0);

  std::vector<int> all6 = {0, 1, 2, 3, 4, 5};
  Subsystem whole6 = Subsystem::closed_subsystem(e6, all6);
  TorusSubgroup z6 = TorusSubgroup::center_of(w, whole6);
  CHECK(z6.structure_str() == "Z/3");
  CHECK(z6.contains(z));

  RootSystem e7 = RootSystem::build("E7");
  WeylGroup w7(e7);
  std::vector<int> all7 = {0, 1, 2, 3, 4, 5, 6};
  TorusSubgroup z7 = TorusSubgroup::center_of(w7, Subsystem::closed_subsystem(e7, all7));
  CHECK(z7.structure_str() == "Z/2");
  // z = h(1,-1,1,1,-1,1,-1)
  TorusElt ze7 = h_from({0, {1, 2}, 0, 0, {1, 2}, 0, {1, 2}});
  CHECK(z7.contains(ze7));

  RootSystem f4 = RootSystem::build("F4");
  WeylGroup w4(f4);
  std::vector<int> all4 = {0, 1, 2, 3};
  TorusSubgroup z4 = TorusSubgroup::center_of(w4, Subsystem::closed_subsystem(f4, all4));
  CHECK(z4.structure_str() == "1");
}

TEST_CASE("centers of the subsystem subgroups") {
  SUBCASE("E6: Z(H') = Z/3 x Z/3") {
    RootSystem e6 = RootSystem::build("E6");
    WeylGroup w(e6);
    Subsystem phi0 = e6_phi0(e6);
    TorusSubgroup zh = TorusSubgroup::center_of(w, phi0);
    CHECK(zh.structure_str() == "Z/3 x Z/3");
    // h(xi,1,xi^-1,1,zeta,zeta^-1) for all xi, zeta of order 3
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        TorusElt t = h_from({{a, 3}, 0, {-a, 3}, 0, {b, 3}, {-b, 3}});
        CHECK(zh.contains(t));
      }
    CHECK(zh.elements().size() == 9);
  }
  SUBCASE("E7: Z(H') = Z/2 x Z/4") {
    RootSystem e7 = RootSystem::build("E7");
    WeylGroup w(e7);
    TorusSubgroup zh = TorusSubgroup::center_of(w, e7_phi0(e7));
    CHECK(zh.structure_str() == "Z/2 x Z/4");
    // h(1,+-1,1,1,xi,xi^2,xi^-1) with xi^4 = 1
    for (int e : {0, 1})
      for (int k = 0; k < 4; ++k) {
        TorusElt t = h_from({0, {e, 2}, 0, 0, {k, 4}, {2 * k, 4}, {-k, 4}});
        CHECK(zh.contains(t));
      }
  }
  SUBCASE("F4 subsystem centers") {
    RootSystem f4 = RootSystem::build("F4");
    WeylGroup w(f4);
    auto idx = [&](RootVec v) { return f4.index_of(v); };
    Subsystem a2a2 = Subsystem::closed_subsystem(
        f4, {0, 2, 3, idx({1, 3, 4, 2})});
    CHECK(TorusSubgroup::center_of(w, a2a2).structure_str() == "Z/3");
    // h(1,1,xi,xi^-1)
    TorusSubgroup za = TorusSubgroup::center_of(w, a2a2);
    CHECK(za.contains(h_from({0, 0, {1, 3}, {2, 3}})));

    Subsystem a3a1 = Subsystem::closed_subsystem(
        f4, {0, 1, 3, idx({1, 2, 4, 2})});
    TorusSubgroup zb = TorusSubgroup::center_of(w, a3a1);
    CHECK(zb.structure_str() == "Z/4");
    CHECK(zb.contains(h_from({0, 0, {2, 4}, {1, 4}})));  // h(1,1,xi^2,xi)

    Subsystem b4 = Subsystem::closed_subsystem(f4, {0, 1, 2, idx({0, 1, 2, 2})});
    TorusSubgroup zc = TorusSubgroup::center_of(w, b4);
    CHECK(zc.structure_str() == "Z/2");
    CHECK(zc.contains(h_from({0, 0, {1, 2}, 0})));  // s1 = h(1,1,-1,1)

    Subsystem c3a1 = Subsystem::closed_subsystem(
        f4, {1, 2, 3, idx({2, 3, 4, 2})});
    TorusSubgroup zd = TorusSubgroup::center_of(w, c3a1);
    CHECK(zd.structure_str() == "Z/2");
    CHECK(zd.contains(h_from({0, {1, 2}, 0, {1, 2}})));  // h(1,-1,1,-1)
  }
}

TEST_CASE("B4 subsystem roots all vanish on s1 = h(1,1,-1,1)") {
  RootSystem f4 = RootSystem::build("F4");
  TorusElt s1 = h_from({0, 0, {1, 2}, 0});
  Subsystem b4 = Subsystem::closed_subsystem(f4, {0, 1, 2, f4.index_of({0, 1, 2, 2})});
  for (int k : b4.root_indices()) CHECK(root_value(f4, k, s1) == 0);
  // and exactness: roots outside B4 do not vanish
  int outside = 0;
  for (int k = 0; k < f4.num_roots(); ++k)
    if (!b4.contains(k) && root_value(f4, k, s1) != 0) ++outside;
  CHECK(outside == f4.num_roots() - 32);
}

TEST_CASE("weyl_action is a group action and matches the d_i relations") {
  RootSystem e6 = RootSystem::build("E6");
  WeylGroup w(e6);
  WeylElt d2 = w.parse_word("431543654");
  WeylElt d3 = w.parse_word("425431654234");

  // group action law on a few sample points
  TorusElt t = h_from({{1, 3}, 0, {2, 3}, 0, {1, 4}, {3, 4}});
  WeylElt a = w.parse_word("1354"), b = w.parse_word("2465");
  CHECK(weyl_action(w, w.mul(a, b), t) == weyl_action(w, a, weyl_action(w, b, t)));

  // d2^{-1} t d2 = z2(t) t^{-1} and d3^{-1} t d3 = z3(t) t on Z(H')
  for (int aa = 0; aa < 3; ++aa)
    for (int bb = 0; bb < 3; ++bb) {
      TorusElt z = h_from({{aa, 3}, 0, {-aa, 3}, 0, {bb, 3}, {-bb, 3}});
      int s = (aa + bb) % 3;                      // xi*zeta
      TorusElt z2 = h_from({{s, 3}, 0, {-s, 3}, 0, {s, 3}, {-s, 3}});
      CHECK(weyl_action(w, w.inverse(d2), z) == z2.add(z.neg()));
      int dff = ((aa - bb) % 3 + 3) % 3;          // xi*zeta^-1
      TorusElt z3 = h_from({{dff, 3}, 0, {-dff, 3}, 0, {dff, 3}, {-dff, 3}});
      CHECK(weyl_action(w, w.inverse(d3), z) == z3.add(z));
    }
}

TEST_CASE("E7 relation suite: d2: t -> z t, d3: t -> t^-1, d4: t -> z t^-1") {
  RootSystem e7 = RootSystem::build("E7");
  WeylGroup w(e7);
  WeylElt d2 = w.parse_word("423143542654317654234");
  WeylElt d3 = w.parse_word("4234542346542347654234");
  WeylElt d4 = w.parse_word("42314354231435465423143542654");
  CHECK(w.length(d2) == 21);
  CHECK(w.length(d3) == 22);
  CHECK(w.length(d4) == 29);

  for (int e : {0, 1})
    for (int k = 0; k < 4; ++k) {
      TorusElt t = h_from({0, {e, 2}, 0, 0, {k, 4}, {2 * k, 4}, {-k, 4}});
      // z = h(1, xi^2, 1, 1, xi^2, 1, xi^2)
      TorusElt z = h_from({0, {2 * k, 4}, 0, 0, {2 * k, 4}, 0, {2 * k, 4}});
      CHECK(weyl_action(w, w.inverse(d2), t) == z.add(t));
      CHECK(weyl_action(w, w.inverse(d3), t) == t.neg());
      CHECK(weyl_action(w, w.inverse(d4), t) == z.add(t.neg()));
    }
}

TEST_CASE("frobenius: split and twisted") {
  RootSystem e6 = RootSystem::build("E6");
  Automorphism id = Automorphism::identity(e6);
  TorusElt t = h_from({{1, 3}, 0, {2, 3}, 0, {1, 3}, {2, 3}});
  CHECK(frobenius(e6, t, 4, id) == t);   // q = 1 mod 3 fixes Z(G)
  CHECK(frobenius(e6, t, 2, id) == t.neg());  // q = 2 mod 3 inverts

  // twisted E6: delta = (a1 a6)(a3 a5) on the roots
  WeylGroup w(e6);
  WeylElt w0 = w.longest_element();
  Automorphism delta;
  delta.delta.resize(e6.num_roots());
  for (int k = 0; k < e6.num_roots(); ++k)
    delta.delta[k] = static_cast<uint16_t>(e6.negative_of(w0.p[k]));
  CHECK(delta.apply_root(0) == 5);
  CHECK(delta.apply_root(2) == 4);
  CHECK(delta.apply_root(1) == 1);
  CHECK(delta.apply_root(3) == 3);

  // F(t) = t iff xi = zeta^-1 for t = h(xi,1,xi^-1,1,zeta,zeta^-1), q=1 mod 3
  TorusElt good = h_from({{1, 3}, 0, {2, 3}, 0, {2, 3}, {1, 3}});
  CHECK(frobenius(e6, good, 4, delta) == good);
  TorusElt bad = h_from({{1, 3}, 0, {2, 3}, 0, {1, 3}, {2, 3}});
  CHECK(frobenius(e6, bad, 4, delta) != bad);
}

TEST_CASE("fixed point groups") {
  RootSystem g2 = RootSystem::build("G2");
  WeylGroup w(g2);
  Automorphism id = Automorphism::identity(g2);

  // split torus at w = 1: (Z/(q-1))^2
  TorusSubgroup t1 = TorusSubgroup::fixed_points(w, w.identity(), 5, id);
  CHECK(t1.structure_str() == "Z/4 x Z/4");

  // Coxeter element at q = 2: order q^2 - q + 1 = 3
  WeylElt cox = w.mul(w.simple_reflection(0), w.simple_reflection(1));
  TorusSubgroup tc = TorusSubgroup::fixed_points(w, cox, 2, id);
  CHECK(tc.order() == 3);

  // order equals |det(q M_w - 1)| for assorted w and q in F4
  RootSystem f4 = RootSystem::build("F4");
  WeylGroup wf(f4);
  int step = 57;  // arbitrary stride through the group
  const auto& els = wf.elements();
  for (int i = 0, n = 0; n < 20; i = (i + step) % els.size(), ++n) {
    const WeylElt& x = els[i];
    for (long q : {2L, 3L}) {
      IMat m = wf.matrix_on_coroots(wf.inverse(x));
      IMat k(4, 4);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) k.at(r, c) = (r == c ? q : 0) - m.at(r, c);
      TorusSubgroup tg = TorusSubgroup::fixed_points(wf, x, q, Automorphism::identity(f4));
      CHECK(tg.order() == abs(det(k)));
    }
  }
}

TEST_CASE("character sums over a centralizer") {
  RootSystem g2 = RootSystem::build("G2");
  WeylGroup w(g2);
  Automorphism id = Automorphism::identity(g2);
  // w = 1, q = 3: T0[1] = (Z/2)^2
  TorusSubgroup t0 = TorusSubgroup::fixed_points(w, w.identity(), 3, id);
  CHECK(t0.order() == 4);

  auto cent = sigma_centralizer(w, w.elements(), id, w.identity());
  CHECK(cent.size() == 12);

  // trivial character: the sum is |C|
  TorusChar triv{&t0, {0, 0}};
  TorusElt t = t0.generators()[0];
  CHECK(character_sum(w, cent, triv, t) == Cyc(12));

  // order-2 character at an order-2 point: direct sum vs orbit-weighted sum
  TorusChar theta{&t0, {1, 0}};
  Cyc direct = character_sum(w, cent, theta, t);
  std::map<TorusElt, int> orbit_count;
  for (const auto& c : cent) orbit_count[weyl_action(w, w.inverse(c), t)]++;
  Cyc weighted;
  for (auto& [pt, n] : orbit_count) weighted += Cyc(n) * theta.value(pt);
  CHECK(direct == weighted);

  // the identity point gives |C| * theta(1)
  CHECK(character_sum(w, cent, theta, TorusElt::zero(2)) == Cyc(12));
}

TEST_CASE("fixed point group order is a class invariant") {
  RootSystem f4 = RootSystem::build("F4");
  WeylGroup w(f4);
  Automorphism id = Automorphism::identity(f4);
  auto cls = classify_twisted(
      w, w.elements(), {w.simple_reflection(0), w.simple_reflection(1),
                        w.simple_reflection(2), w.simple_reflection(3)}, id);
  // conjugate a few representatives around and compare orders at q = 3
  const auto& els = w.elements();
  for (size_t ci = 0; ci < cls.classes.size(); ci += 5) {
    const WeylElt& rep = cls.classes[ci].rep;
    mpz_class base = TorusSubgroup::fixed_points(w, rep, 3, id).order();
    for (size_t j = 0; j < els.size(); j += 311) {
      WeylElt other = w.mul(w.mul(w.inverse(els[j]), rep), els[j]);
      CHECK(TorusSubgroup::fixed_points(w, other, 3, id).order() == base);
    }
  }
}

TEST_CASE("frobenius commutes with the twisted weyl action") {
  // F o w = sigma(w) o F as maps on the torus
  RootSystem e6 = RootSystem::build("E6");
  WeylGroup w(e6);
  WeylElt w0 = w.longest_element();
  Automorphism delta;
  delta.delta.resize(e6.num_roots());
  for (int k = 0; k < e6.num_roots(); ++k)
    delta.delta[k] = static_cast<uint16_t>(e6.negative_of(w0.p[k]));
  TorusElt t;
  t.a = {mpq_class(1, 3), mpq_class(1, 4), mpq_class(2, 3), 0, mpq_class(3, 4),
         mpq_class(1, 2)};
  for (auto& x : t.a) x = TorusElt::mod1(x);
  for (const char* word : {"135", "24", "431543654"}) {
    WeylElt x = w.parse_word(word);
    WeylElt sx = delta.apply(x);
    CHECK(frobenius(e6, weyl_action(w, x, t), 4, delta) ==
          weyl_action(w, sx, frobenius(e6, t, 4, delta)));
  }
}
