#include <random>

#include "doctest.h"
#include "hecke.hpp"

using namespace lch;

TEST_CASE("quadratic relation and unit") {
  RootSystem g2 = RootSystem::build("G2");
  WeylGroup w(g2);
  HeckeAlgebra h(w);
  HeckeElt ts = HeckeElt::basis(w.simple_reflection(0));
  HeckeElt prod = h.mul(ts, ts);
  // T_s^2 = q T_1 + (q-1) T_s
  HeckeElt expect = HeckeElt::basis(w.identity(), CycVal::q_power(2)) +
                    HeckeElt::basis(w.simple_reflection(0),
                                    CycVal::q_power(2) - CycVal(1));
  CHECK(prod == expect);

  HeckeElt tw = HeckeElt::basis(w.parse_word("1212"));
  CHECK(h.mul(HeckeElt::unit(w), tw) == tw);
  CHECK(h.mul(tw, HeckeElt::unit(w)) == tw);
}

TEST_CASE("length-additive products multiply the basis") {
  RootSystem f4 = RootSystem::build("F4");
  WeylGroup w(f4);
  HeckeAlgebra h(w);
  WeylElt a = w.parse_word("12");
  WeylElt b = w.parse_word("34");
  CHECK(w.length(w.mul(a, b)) == 4);
  CHECK(h.mul(HeckeElt::basis(a), HeckeElt::basis(b)) ==
        HeckeElt::basis(w.mul(a, b)));
}

TEST_CASE("braid relations hold in G2 and F4") {
  {
    RootSystem g2 = RootSystem::build("G2");
    WeylGroup w(g2);
    HeckeAlgebra h(w);
    HeckeElt t1 = HeckeElt::basis(w.simple_reflection(0));
    HeckeElt t2 = HeckeElt::basis(w.simple_reflection(1));
    HeckeElt lhs = HeckeElt::unit(w), rhs = HeckeElt::unit(w);
    for (int i = 0; i < 6; ++i) {
      lhs = h.mul(lhs, i % 2 ? t2 : t1);
      rhs = h.mul(rhs, i % 2 ? t1 : t2);
    }
    CHECK(lhs == rhs);
  }
  {
    RootSystem f4 = RootSystem::build("F4");
    WeylGroup w(f4);
    HeckeAlgebra h(w);
    auto braid = [&](int i, int j, int m) {
      HeckeElt a = HeckeElt::unit(w), b = HeckeElt::unit(w);
      for (int t = 0; t < m; ++t) {
        a = h.mul(a, HeckeElt::basis(w.simple_reflection(t % 2 ? j : i)));
        b = h.mul(b, HeckeElt::basis(w.simple_reflection(t % 2 ? i : j)));
      }
      CHECK(a == b);
    };
    braid(0, 1, 3);
    braid(1, 2, 4);
    braid(2, 3, 3);
    braid(0, 2, 2);
  }
}

TEST_CASE("q = 1 specialization matches group multiplication") {
  RootSystem f4 = RootSystem::build("F4");
  WeylGroup w(f4);
  HeckeAlgebra h(w);
  const auto& els = w.elements();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<size_t> pick(0, els.size() - 1);
  for (int it = 0; it < 200; ++it) {
    const WeylElt& a = els[pick(rng)];
    const WeylElt& b = els[pick(rng)];
    auto q1 = h.specialize_q1(h.mul(HeckeElt::basis(a), HeckeElt::basis(b)));
    REQUIRE(q1.size() == 1);
    CHECK(q1.begin()->first == w.mul(a, b));
    CHECK(q1.begin()->second == Cyc(1));
  }
  // the G2 example: (T_{s1} T_{s2})^6 specializes to the identity element
  RootSystem g2 = RootSystem::build("G2");
  WeylGroup wg(g2);
  HeckeAlgebra hg(wg);
  HeckeElt x = hg.mul(HeckeElt::basis(wg.simple_reflection(0)),
                      HeckeElt::basis(wg.simple_reflection(1)));
  HeckeElt p = HeckeElt::unit(wg);
  for (int i = 0; i < 6; ++i) p = hg.mul(p, x);
  auto q1 = hg.specialize_q1(p);
  REQUIRE(q1.count(wg.identity()));
  CHECK(q1.at(wg.identity()) == Cyc(1));
}

TEST_CASE("class polynomials") {
  RootSystem g2 = RootSystem::build("G2");
  WeylGroup w(g2);
  HeckeAlgebra h(w);
  CharTable t = CharTable::compute(w);

  // a minimal element is the indicator of its own class
  for (const auto& c : t.classes()) {
    auto f = h.class_polynomials(c.rep, t);
    for (int j = 0; j < t.num_classes(); ++j)
      CHECK(f[j] == (j == t.class_of(c.rep) ? CycVal(1) : CycVal()));
  }

  // q = 1 specialization is class-indicator consistency over all of W(G2)
  for (const auto& x : w.elements()) {
    auto f = h.class_polynomials(x, t);
    for (int chi = 0; chi < t.num_chars(); ++chi) {
      Cyc sum;
      for (int j = 0; j < t.num_classes(); ++j) {
        Cyc coef;
        for (const auto& [e, c] : f[j].terms()) coef += c;
        sum += coef * Cyc(t.value(chi, j));
      }
      CHECK(sum == Cyc(t.value(chi, t.class_of(x))));
    }
  }
}

TEST_CASE("class polynomials for the longest element of F4") {
  RootSystem f4 = RootSystem::build("F4");
  WeylGroup w(f4);
  HeckeAlgebra h(w);
  CharTable t = CharTable::compute(w);
  auto f = h.class_polynomials(w.longest_element(), t);
  // q = 1: sum_C f_{w,C}(1) phi(w_C) = phi(w0) for all 25 characters
  for (int chi = 0; chi < t.num_chars(); ++chi) {
    Cyc sum;
    for (int j = 0; j < t.num_classes(); ++j) {
      Cyc coef;
      for (const auto& [e, c] : f[j].terms()) coef += c;
      sum += coef * Cyc(t.value(chi, j));
    }
    CHECK(sum == Cyc(t.value(chi, t.class_of(w.longest_element()))));
  }
}

TEST_CASE("the Coxeter-class value fixtures specialize to the character table") {
  // at q = 1 the fixture values must agree with the ordinary characters on
  // the Coxeter class
  RootSystem f4 = RootSystem::build("F4");
  WeylGroup w(f4);
  CharTable t = CharTable::compute(w);
  apply_f4_labels(t);
  WeylElt cox = w.parse_word("1234");
  int cc = t.class_of(cox);
  HeckeValueTable hv = HeckeValueTable::parse(
      "value phi{12,4} coxeter q^2 source test\n"
      "value phi{1,12}' coxeter q^2 source test\n"
      "value phi{1,12}'' coxeter q^2 source test\n"
      "value phi{4,8} coxeter q^2 source test\n"
      "value phi{9,6}' coxeter 0 source test\n"
      "value phi{9,6}'' coxeter 0 source test\n");
  for (const auto& e : hv.entries) {
    int chi = t.index_of(e.char_name);
    REQUIRE(chi >= 0);
    auto r = (e.value + CycVal(1)).evaluate(2);  // evaluate at a placeholder
    (void)r;
    // q = 1 means: sum of coefficients
    Cyc at1;
    for (const auto& [ex, c] : e.value.terms()) at1 += c;
    CHECK(at1 == Cyc(t.value(chi, cc)));
  }
}
