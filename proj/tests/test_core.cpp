#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsvir/laurent.hpp"
#include "qsvir/word.hpp"

using namespace qsvir;

namespace {

LaurentPoly qp(int e) { return LaurentPoly::q_power(e); }

std::mt19937 rng(12345);

LaurentPoly random_poly() {
  std::uniform_int_distribution<int> nterms(0, 3), expo(-3, 3), num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  LaurentPoly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    p += LaurentPoly::monomial(Rational(num(rng), den(rng)), expo(rng), expo(rng));
  return p;
}

Word random_word(int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen), letter(0, 3);
  std::vector<GenSym> ls;
  int n = len(rng);
  for (int i = 0; i < n; ++i) ls.push_back(static_cast<GenSym>(letter(rng)));
  return Word(std::move(ls));
}

Element random_element(int maxterms, int maxlen) {
  std::uniform_int_distribution<int> nterms(0, maxterms);
  Element e;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) e.add_term(random_word(maxlen), random_poly());
  return e;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
  CHECK(Rational(3, 2).pow(-2) == Rational(4, 9));
  CHECK(Rational("-7/2").str() == "-7/2");
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("laurent multiplication") {
  CHECK(qp(1) * qp(-1) == LaurentPoly(1));
  CHECK((qp(1) - qp(-1)) * (qp(1) + qp(-1)) == qp(2) - qp(-2));
  CHECK(LaurentPoly(0) * LaurentPoly::monomial(Rational(1), -2, 3) == LaurentPoly(0));
}

TEST_CASE("laurent evaluation") {
  CHECK((qp(1) + qp(-1)).eval(Rational(2), Rational(1)) == Rational(5, 2));
  CHECK(LaurentPoly(1).eval(Rational(3, 2), Rational(5, 7)) == Rational(1));
  CHECK_THROWS_AS(qp(-1).eval(Rational(0), Rational(1)), std::domain_error);
}

TEST_CASE("evaluation is a ring homomorphism") {
  Rational q(5, 3), p(-7, 4);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly a = random_poly(), b = random_poly();
    CHECK((a * b).eval(q, p) == a.eval(q, p) * b.eval(q, p));
    CHECK((a + b).eval(q, p) == a.eval(q, p) + b.eval(q, p));
  }
}

TEST_CASE("q_bracket basics") {
  CHECK(q_bracket(0) == LaurentPoly(0));
  CHECK(q_bracket(1) == LaurentPoly(1));
  CHECK(q_bracket(2) == qp(1) + qp(-1));
  for (int x = -20; x <= 20; ++x) {
    CHECK(q_bracket(x) == -q_bracket(-x));
    CHECK(q_bracket(x).eval(Rational(1), Rational(1)) == Rational(x));
  }
}

TEST_CASE("q_box basics and the ladder identity") {
  CHECK(q_box(0) == LaurentPoly(0));
  CHECK(q_box(1) == LaurentPoly(1));
  CHECK(q_box(2) == LaurentPoly(1) + qp(2));
  for (int x = -20; x <= 20; ++x) {
    CHECK(q_box(x) - qp(2) * q_box(x - 1) == LaurentPoly(1));
    CHECK(q_box(x).eval(Rational(1), Rational(1)) == Rational(x));
  }
  // Divided form against the defining quotient: (1 - q^{2x}) = [[x]](1 - q^2).
  for (int x = -8; x <= 8; ++x)
    CHECK(LaurentPoly(1) - qp(2 * x) == q_box(x) * (LaurentPoly(1) - qp(2)));
  for (int x = -8; x <= 8; ++x)
    CHECK(qp(x) - qp(-x) == q_bracket(x) * (qp(1) - qp(-1)));
}

TEST_CASE("laurent rendering") {
  CHECK(LaurentPoly(0).str() == "0");
  CHECK(q_box(2).str() == "1 + q^2");
  CHECK(lambda_poly().str() == "-q^-1 + q");
  CHECK(LaurentPoly::monomial(Rational(-3, 2), 2, 1).str() == "-3/2*q^2*p");
  CHECK(LaurentPoly::monomial(Rational(1), 0, -2).str() == "p^-2");
}

TEST_CASE("word grading") {
  CHECK(Word{}.grade() == 0);
  CHECK(Word{GenSym::FermiRaise}.grade() == 1);
  CHECK(Word{GenSym::BosonRaise, GenSym::FermiRaise, GenSym::FermiLower}.grade() == 0);
}

TEST_CASE("word rendering") {
  Word w{GenSym::BosonRaise, GenSym::BosonRaise, GenSym::BosonLower, GenSym::FermiRaise};
  CHECK(w.str() == "a+ a+ a- f+");
  CHECK(Word{}.str() == "1");
}

TEST_CASE("free multiplication") {
  Element aplus = Element::letter(GenSym::BosonRaise);
  Element aminus = Element::letter(GenSym::BosonLower);
  CHECK(Element::unit() * aplus == aplus);
  CHECK(aminus * aplus == Element(Word{GenSym::BosonLower, GenSym::BosonRaise}));
  // Scalars cancel: (q f+)(q^-1 f-) = f+ f-.
  Element x(Word{GenSym::FermiRaise}, qp(1));
  Element y(Word{GenSym::FermiLower}, qp(-1));
  CHECK(x * y == Element(Word{GenSym::FermiRaise, GenSym::FermiLower}));
}

TEST_CASE("multiplication is associative") {
  for (int i = 0; i < 200; ++i) {
    Element a = random_element(3, 4), b = random_element(3, 4), c = random_element(3, 4);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("grades add under multiplication") {
  for (int i = 0; i < 100; ++i) {
    Word wa = random_word(4), wb = random_word(4);
    Element prod = Element(wa) * Element(wb);
    auto g = prod.homogeneous_grade();
    REQUIRE(g.has_value());
    CHECK(*g == (wa.grade() + wb.grade()) % 2);
  }
}

TEST_CASE("graded bracket") {
  Element fp = Element::letter(GenSym::FermiRaise);
  Element ap = Element::letter(GenSym::BosonRaise);

  // Odd-odd pairs anticommute: [f+, f+] doubles the square.
  CHECK(graded_bracket(fp, fp) ==
        LaurentPoly(2) * Element(Word{GenSym::FermiRaise, GenSym::FermiRaise}));
  CHECK(graded_bracket(ap, ap) == Element::zero());
  CHECK(graded_bracket(fp, ap) == Element(Word{GenSym::FermiRaise, GenSym::BosonRaise}) -
                                      Element(Word{GenSym::BosonRaise, GenSym::FermiRaise}));

  Element mixed = fp + ap;  // not homogeneous
  CHECK_THROWS_AS(graded_bracket(mixed, fp), std::invalid_argument);
}

TEST_CASE("graded antisymmetry") {
  for (int i = 0; i < 100; ++i) {
    Word wa = random_word(3), wb = random_word(3);
    Element a(wa), b(wb);
    int sign = (wa.grade() * wb.grade()) % 2 ? 1 : -1;
    CHECK(graded_bracket(a, b) == LaurentPoly(sign) * graded_bracket(b, a));
  }
}
