#include "doctest.h"
#include "fusion.hpp"

using namespace lch;

namespace {

Automorphism e6_twist(const RootSystem& e6, const WeylGroup& w) {
  WeylElt w0 = w.longest_element();
  Automorphism delta;
  delta.delta.resize(e6.num_roots());
  for (int k = 0; k < e6.num_roots(); ++k)
    delta.delta[k] = static_cast<uint16_t>(e6.negative_of(w0.p[k]));
  return delta;
}

std::vector<uint64_t> class_counts(const FusionTable& f) {
  std::vector<uint64_t> out;
  for (const auto& x : f.xi_classes()) out.push_back(x.sub_classes.size());
  return out;
}

std::vector<std::string> perms(const FusionTable& f) {
  std::vector<std::string> out;
  for (const auto& x : f.xi_classes()) out.push_back(x.diagram_perm);
  return out;
}

}  // namespace

TEST_CASE("G2 fusion table") {
  RootSystem g2 = RootSystem::build("G2");
  WeylGroup w(g2);
  Automorphism id = Automorphism::identity(g2);

  int a0 = g2.index_of({2, 3});
  Subsystem a1a1 = Subsystem::closed_subsystem(g2, {1, a0});
  FusionTable f1(w, a1a1, id);
  REQUIRE(f1.xi_classes().size() == 1);
  CHECK(w.is_identity(f1.xi_classes()[0].d));
  CHECK(f1.xi_classes()[0].diagram_perm == "()");
  CHECK(f1.xi_classes()[0].sub_classes.size() == 4);

  Subsystem a2 = Subsystem::closed_subsystem(g2, {0, g2.index_of({1, 3})});
  FusionTable f2(w, a2, id);
  REQUIRE(f2.xi_classes().size() == 2);
  CHECK(w.is_identity(f2.xi_classes()[0].d));
  CHECK(f2.xi_classes()[0].sub_classes.size() == 3);
  CHECK(f2.xi_classes()[1].sub_classes.size() == 3);
  // d2 = s_{alpha_2}
  CHECK(f2.xi_classes()[1].d == w.simple_reflection(1));
  CHECK(f2.xi_classes()[1].diagram_perm == "(1,2)");
}

TEST_CASE("E6 split fusion table: three classes (27, 9, 3)") {
  RootSystem e6 = RootSystem::build("E6");
  WeylGroup w(e6);
  Automorphism id = Automorphism::identity(e6);
  std::vector<int> gens = {0, 1, 2, 4, 5};
  gens.push_back(e6.highest_root());
  Subsystem phi0 = Subsystem::closed_subsystem(e6, gens);
  FusionTable f(w, phi0, id);

  REQUIRE(f.xi_classes().size() == 3);
  CHECK(class_counts(f) == std::vector<uint64_t>{27, 9, 3});
  CHECK(perms(f)[0] == "()");
  CHECK(perms(f)[1] == "(1,4)(2,6)(3,5)");

  // the printed words land in the right classes, with the stated permutations
  WeylElt d2 = w.parse_word("431543654");
  CHECK(f.xi_class_of(d2) == 1);
  CHECK(w.length(f.xi_classes()[1].d) == 9);
  CHECK(f.xi_classes()[1].d == d2);  // lex-least length-9 rep is the printed word
  WeylElt d3 = w.parse_word("425431654234");
  CHECK(f.xi_class_of(d3) == 2);
  CHECK(w.length(f.xi_classes()[2].d) == 12);
  CHECK(w.length(d3) == 12);  // the printed word is itself a minimal rep
  CHECK(diagram_permutation(phi0, id.compose_perm_left(d3)) == "(1,5,2)(3,4,6)");
  CHECK(f.xi_class_of(w.identity()) == 0);
}

TEST_CASE("twisted E6 fusion table: (9, 27, 3)") {
  RootSystem e6 = RootSystem::build("E6");
  WeylGroup w(e6);
  Automorphism delta = e6_twist(e6, w);
  std::vector<int> gens = {0, 1, 2, 4, 5};
  gens.push_back(e6.highest_root());
  Subsystem phi0 = Subsystem::closed_subsystem(e6, gens);
  FusionTable f(w, phi0, delta);

  REQUIRE(f.xi_classes().size() == 3);
  CHECK(class_counts(f) == std::vector<uint64_t>{9, 27, 3});
  CHECK(perms(f) == std::vector<std::string>{"(1,5)(3,4)", "(1,3)(2,6)(4,5)",
                                             "(1,6,5,3,2,4)"});
  CHECK(f.xi_class_of(w.identity()) == 0);
  CHECK(f.xi_class_of(w.parse_word("431543654")) == 1);
  WeylElt d3p = w.parse_word("423143542314354");
  CHECK(w.length(d3p) == 15);
  CHECK(f.xi_class_of(d3p) == 2);
}

TEST_CASE("F4 fusion tables: (9,9), (10,10), (20), (20)") {
  RootSystem f4 = RootSystem::build("F4");
  WeylGroup w(f4);
  Automorphism id = Automorphism::identity(f4);
  auto idx = [&](RootVec v) { return f4.index_of(v); };

  SUBCASE("A2+A2") {
    Subsystem s = Subsystem::closed_subsystem(f4, {0, 2, 3, idx({1, 3, 4, 2})});
    FusionTable f(w, s, id);
    REQUIRE(f.xi_classes().size() == 2);
    CHECK(class_counts(f) == std::vector<uint64_t>{9, 9});
    CHECK(f.xi_classes()[1].diagram_perm == "(1,4)(2,3)");
    CHECK(f.xi_class_of(w.parse_word("232432")) == 1);
    CHECK(w.length(f.xi_classes()[1].d) == 6);
  }
  SUBCASE("A3+A1") {
    Subsystem s = Subsystem::closed_subsystem(f4, {0, 1, 3, idx({1, 2, 4, 2})});
    FusionTable f(w, s, id);
    REQUIRE(f.xi_classes().size() == 2);
    CHECK(class_counts(f) == std::vector<uint64_t>{10, 10});
    CHECK(f.xi_classes()[1].diagram_perm == "(1,4)");
    CHECK(f.xi_class_of(w.parse_word("3234323")) == 1);
    CHECK(w.length(f.xi_classes()[1].d) == 7);
  }
  SUBCASE("B4") {
    Subsystem s = Subsystem::closed_subsystem(f4, {0, 1, 2, idx({0, 1, 2, 2})});
    FusionTable f(w, s, id);
    REQUIRE(f.xi_classes().size() == 1);
    CHECK(class_counts(f) == std::vector<uint64_t>{20});
    CHECK(w.is_identity(f.xi_classes()[0].d));
  }
  SUBCASE("C3+A1") {
    Subsystem s = Subsystem::closed_subsystem(f4, {1, 2, 3, idx({2, 3, 4, 2})});
    FusionTable f(w, s, id);
    REQUIRE(f.xi_classes().size() == 1);
    CHECK(class_counts(f) == std::vector<uint64_t>{20});
  }
}

TEST_CASE("fuse and fibers partition the subgroup classes") {
  RootSystem f4 = RootSystem::build("F4");
  WeylGroup w(f4);
  Automorphism id = Automorphism::identity(f4);
  Subsystem b4 = Subsystem::closed_subsystem(f4, {0, 1, 2, f4.index_of({0, 1, 2, 2})});
  FusionTable f(w, b4, id);

  EnumeratedIdentifier ident;
  ident.cls = classify_twisted(w, w.elements(),
                               {w.simple_reflection(0), w.simple_reflection(1),
                                w.simple_reflection(2), w.simple_reflection(3)},
                               id);
  CHECK(ident.num_classes() == 25);

  // w' = 1 fuses to the class of d (the identity here)
  CHECK(f.fuse(ident, 0, 0) == ident.identify(w.identity()));

  // fibers partition: sum of fiber sizes = number of subgroup classes
  size_t total = 0;
  for (int c = 0; c < ident.num_classes(); ++c)
    total += f.fibers_over(ident, 0, c).size();
  CHECK(total == f.xi_classes()[0].sub_classes.size());

  // fuse o fibers = identity on nonempty fibers
  for (int c = 0; c < ident.num_classes(); ++c)
    for (int i : f.fibers_over(ident, 0, c)) CHECK(f.fuse(ident, 0, i) == c);
}

TEST_CASE("Xi-circle witnesses") {
  RootSystem f4 = RootSystem::build("F4");
  WeylGroup w(f4);
  Automorphism id = Automorphism::identity(f4);
  Subsystem b4 = Subsystem::closed_subsystem(f4, {0, 1, 2, f4.index_of({0, 1, 2, 2})});
  FusionTable f(w, b4, id);
  for (long q : {3, 5, 7}) {
    auto t = f.xi_circle_witness(0, q);
    REQUIRE(t.has_value());
    // witness is the order-2 point with centralizer exactly B4
    CHECK(t->element_order() == 2);
  }

  // E6, Phi0, d2, q = 2 mod 3
  RootSystem e6 = RootSystem::build("E6");
  WeylGroup w6(e6);
  std::vector<int> gens = {0, 1, 2, 4, 5};
  gens.push_back(e6.highest_root());
  Subsystem phi0 = Subsystem::closed_subsystem(e6, gens);
  FusionTable f6(w6, phi0, Automorphism::identity(e6));
  auto t2 = f6.xi_circle_witness(1, 2);
  REQUIRE(t2.has_value());
  // F(t) = t^{-1} = d2^{-1} t d2
  CHECK(frobenius(e6, *t2, 2, Automorphism::identity(e6)) == t2->neg());
  CHECK(weyl_action(w6, w6.inverse(f6.xi_classes()[1].d), *t2) == t2->neg());
  // and the split d1 class has a witness at q = 1 mod 3 but not q = 2 mod 3
  CHECK(f6.xi_circle_witness(0, 4).has_value());
  CHECK_FALSE(f6.xi_circle_witness(0, 2).has_value());

  // whole system: only the identity, which works
  std::vector<int> all = {0, 1, 2, 3};
  Subsystem whole = Subsystem::closed_subsystem(f4, all);
  FusionTable fw(w, whole, id);
  auto tw = fw.xi_circle_witness(0, 5);
  REQUIRE(tw.has_value());
  CHECK(tw->is_zero());
}
