#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsvir/oscillator.hpp"

using namespace qsvir;

namespace {

constexpr GenSym AP = GenSym::BosonRaise;
constexpr GenSym AM = GenSym::BosonLower;
constexpr GenSym FP = GenSym::FermiRaise;
constexpr GenSym FM = GenSym::FermiLower;

LaurentPoly qp(int e) { return LaurentPoly::q_power(e); }
LaurentPoly pp(int e) { return LaurentPoly::p_power(e); }

Element word(std::initializer_list<GenSym> ls, LaurentPoly c = LaurentPoly(1)) {
  return Element(Word(ls), std::move(c));
}

Word naive_pull(int k) {
  std::vector<GenSym> ls{AM};
  ls.insert(ls.end(), static_cast<std::size_t>(k), AP);
  return Word(std::move(ls));
}

}  // namespace

TEST_CASE("boson exchange rule") {
  CHECK(normal_order(word({AM, AP}), DeformationMode::Q) ==
        Element::unit() + word({AP, AM}, qp(2)));
  CHECK(normal_order(word({AM, AP}), DeformationMode::Classical) ==
        Element::unit() + word({AP, AM}));
}

TEST_CASE("fermion pair rule holds in every mode") {
  for (auto mode : {DeformationMode::Classical, DeformationMode::Q, DeformationMode::PQ}) {
    CHECK(normal_order(word({FM, FP}), mode) == Element::unit() - word({FP, FM}));
    CHECK(normal_order(word({FP, FP}), mode) == Element::zero());
    CHECK(normal_order(word({FM, FM}), mode) == Element::zero());
  }
}

TEST_CASE("double boson pull") {
  // a- a+ a+ -> [[2]] a+ + q^4 a+ a+ a-
  CHECK(normal_order(word({AM, AP, AP}), DeformationMode::Q) ==
        Element(Word{AP}, q_box(2)) + word({AP, AP, AM}, qp(4)));
}

TEST_CASE("two-parameter fermion transport") {
  CHECK(normal_order(word({AP, FP}), DeformationMode::PQ) == word({AP, FP}));
  CHECK(normal_order(word({FP, AP}), DeformationMode::PQ) == word({AP, FP}, pp(-2)));
  CHECK(normal_order(word({FP, AM}), DeformationMode::PQ) == word({AM, FP}, pp(2)));
  CHECK(normal_order(word({FM, AP}), DeformationMode::PQ) == word({AP, FM}, pp(2)));
  CHECK(normal_order(word({FM, AM}), DeformationMode::PQ) == word({AM, FM}, pp(-2)));
}

TEST_CASE("normal forms are canonical words") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> len(0, 8), letter(0, 3);
  for (auto mode : {DeformationMode::Classical, DeformationMode::Q, DeformationMode::PQ}) {
    for (int i = 0; i < 60; ++i) {
      std::vector<GenSym> ls;
      int n = len(rng);
      for (int j = 0; j < n; ++j) ls.push_back(static_cast<GenSym>(letter(rng)));
      Element nf = normal_order(Element(Word(ls)), mode);
      for (const auto& [w, c] : nf.terms()) CHECK(as_normal(w).has_value());
    }
  }
}

TEST_CASE("confluence under random rule application order") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> len(1, 8), letter(0, 3);
  for (auto mode : {DeformationMode::Classical, DeformationMode::Q, DeformationMode::PQ}) {
    RewriteSystem rules = builtin_rules(mode);
    for (int i = 0; i < 200; ++i) {
      std::vector<GenSym> ls;
      int n = len(rng);
      for (int j = 0; j < n; ++j) ls.push_back(static_cast<GenSym>(letter(rng)));
      Element x{Word(ls)};
      Element leftmost = normal_order(x, rules);
      auto chooser = [&rng](std::size_t count) {
        return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
      };
      CHECK(normal_order_with_chooser(x, rules, chooser) == leftmost);
    }
  }
}

TEST_CASE("rewriting preserves the grade") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(0, 7), letter(0, 3);
  for (int i = 0; i < 100; ++i) {
    std::vector<GenSym> ls;
    int n = len(rng);
    for (int j = 0; j < n; ++j) ls.push_back(static_cast<GenSym>(letter(rng)));
    Word w(ls);
    Element nf = normal_order(Element(w), DeformationMode::PQ);
    for (const auto& [nw, c] : nf.terms()) CHECK(nw.grade() == w.grade());
  }
}

TEST_CASE("boson_pull closed form agrees with naive rewriting") {
  CHECK(boson_pull(0, DeformationMode::Q) == Element(Word{AM}));
  CHECK(boson_pull(1, DeformationMode::Q) == Element::unit() + word({AP, AM}, qp(2)));
  CHECK(boson_pull(3, DeformationMode::Q) ==
        Element(Word{AP, AP}, q_box(3)) + word({AP, AP, AP, AM}, qp(6)));
  for (auto mode : {DeformationMode::Classical, DeformationMode::Q, DeformationMode::PQ}) {
    for (int k = 0; k <= 12; ++k)
      CHECK(boson_pull(k, mode) == normal_order(Element(naive_pull(k)), mode));
  }
}

TEST_CASE("classical limit of the rewrite engine") {
  auto at_one = [](const Element& x) {
    Element out;
    for (const auto& [w, c] : x.terms())
      out.add_term(w, LaurentPoly(c.eval(Rational(1), Rational(1))));
    return out;
  };
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> len(0, 7), letter(0, 3);
  for (int i = 0; i < 80; ++i) {
    std::vector<GenSym> ls;
    int n = len(rng);
    for (int j = 0; j < n; ++j) ls.push_back(static_cast<GenSym>(letter(rng)));
    Element x{Word(ls)};
    Element classical = normal_order(x, DeformationMode::Classical);
    CHECK(at_one(normal_order(x, DeformationMode::Q)) == classical);
    CHECK(at_one(normal_order(x, DeformationMode::PQ)) == classical);
  }
}

TEST_CASE("realized generators") {
  CHECK(realize(GenKind::L, 0, DeformationMode::Q) == word({AP, AM}, -qp(1)));
  CHECK(realize(GenKind::G, -1, DeformationMode::Q) == word({FP, AM}));
  CHECK(realize(GenKind::F, 0, DeformationMode::PQ) == word({FP, FM}));
  CHECK(realize(GenKind::G, 1, DeformationMode::PQ) == word({AP, AP, FP, AM}, pp(-2)));
  CHECK(realize(GenKind::L, 2, DeformationMode::Classical) ==
        word({AP, AP, AP, AM}, LaurentPoly(-1)));
  CHECK_THROWS_AS(realize(GenKind::L, -2, DeformationMode::Q), unsupported_index_error);
  CHECK_THROWS_AS(realize(GenKind::F, -1, DeformationMode::Q), unsupported_index_error);
  CHECK(admissible(GenKind::G, -1));
  CHECK_FALSE(admissible(GenKind::F, -1));
}

TEST_CASE("realized generators carry the expected grade") {
  for (auto mode : {DeformationMode::Classical, DeformationMode::Q, DeformationMode::PQ}) {
    for (long long n = -1; n <= 6; ++n) {
      CHECK(realize(GenKind::L, n, mode).homogeneous_grade() == 0);
      CHECK(realize(GenKind::G, n, mode).homogeneous_grade() == 1);
      if (n >= 0) CHECK(realize(GenKind::F, n, mode).homogeneous_grade() == 0);
    }
  }
}

TEST_CASE("rule orientation is validated") {
  RewriteSystem rs;
  // Ascending pair cannot be a left-hand side.
  CHECK_THROWS_AS(rs.add_rule(AP, AM, Element(Word{AM, AP})), std::invalid_argument);
  // Repeated letter must rewrite to zero.
  CHECK_THROWS_AS(rs.add_rule(FP, FP, Element::unit()), std::invalid_argument);
  // Right-hand side letters must come from the pair.
  CHECK_THROWS_AS(rs.add_rule(AM, AP, Element(Word{FP, FM})), std::invalid_argument);
}
