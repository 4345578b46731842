#include <hopfdual/poly.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hopfdual;

namespace {

Poly random_poly(std::mt19937& rng, const VarList& vars, int max_terms = 4,
                 int max_deg = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-5, 5);
  Poly p = Poly::zero(vars);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    ExpVec e(vars->size());
    for (auto& x : e) x = deg(rng);
    p += Poly::monomial(vars, e, Rational(coeff(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("parse_poly canonical examples") {
  VarList xy = make_vars({"x", "y"});
  Poly p = parse_poly("x^2 - y*x + 3", xy);
  CHECK(p.coefficient({2, 0}) == 1);
  CHECK(p.coefficient({1, 1}) == -1);
  CHECK(p.coefficient({0, 0}) == 3);
  CHECK(p.terms().size() == 3);

  VarList x = make_vars({"x"});
  CHECK(parse_poly("0", x).is_zero());

  Poly q = parse_poly("(x+y)*(x-y)", xy);
  CHECK(q == parse_poly("x^2 - y^2", xy));
}

TEST_CASE("parse_poly errors carry positions") {
  VarList xy = make_vars({"x", "y"});
  CHECK_THROWS_WITH(parse_poly("x+*y", xy),
                    Catch::Matchers::ContainsSubstring("position 2"));
  CHECK_THROWS_WITH(parse_poly("x + z", xy),
                    Catch::Matchers::ContainsSubstring("unknown variable"));
  CHECK_THROWS_AS(parse_poly("x^-2", xy), std::invalid_argument);
}

TEST_CASE("rational literals") {
  VarList x = make_vars({"x"});
  Poly p = parse_poly("1/2 x + 3/4", x);
  CHECK(p.coefficient({1}) == Rational(1, 2));
  CHECK(p.coefficient({0}) == Rational(3, 4));
}

TEST_CASE("poly arithmetic examples") {
  VarList xy = make_vars({"x", "y"});
  CHECK(parse_poly("x^2*y", xy).partial(0) == parse_poly("2*x*y", xy));
  CHECK(parse_poly("x^2-y^2", xy) + parse_poly("y^2", xy) ==
        parse_poly("x^2", xy));
  CHECK(parse_poly("x+1", xy) * parse_poly("x-1", xy) ==
        parse_poly("x^2-1", xy));
}

TEST_CASE("mismatched variable lists rejected") {
  Poly a = parse_poly("x", make_vars({"x"}));
  Poly b = parse_poly("x", make_vars({"x", "y"}));
  CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("parse-print-parse is the identity on canonical forms") {
  VarList xy = make_vars({"x", "y"});
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    Poly p = random_poly(rng, xy);
    CHECK(parse_poly(p.str(), xy) == p);
  }
  CHECK(parse_poly(Poly::zero(xy).str(), xy).is_zero());
}

TEST_CASE("ring laws hold exactly on random triples") {
  VarList xyz = make_vars({"x", "y", "z"});
  std::mt19937 rng(11);
  for (int k = 0; k < 100; ++k) {
    Poly a = random_poly(rng, xyz), b = random_poly(rng, xyz),
         c = random_poly(rng, xyz);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("leibniz rule for partial derivatives") {
  VarList xy = make_vars({"x", "y"});
  std::mt19937 rng(13);
  for (int k = 0; k < 50; ++k) {
    Poly a = random_poly(rng, xy), b = random_poly(rng, xy);
    for (int i = 0; i < 2; ++i)
      CHECK((a * b).partial(i) == a.partial(i) * b + a * b.partial(i));
  }
}

TEST_CASE("homogeneity helpers") {
  VarList xy = make_vars({"x", "y"});
  CHECK(parse_poly("x^2 + x*y", xy).is_homogeneous(2));
  CHECK_FALSE(parse_poly("x^2 + x", xy).is_homogeneous(2));
  CHECK(parse_poly("x*y", xy).homogeneous_degree() == 2);
  CHECK(Poly::zero(xy).homogeneous_degree() == -1);
  CHECK_THROWS_AS(parse_poly("x^2+y", xy).homogeneous_degree(),
                  std::invalid_argument);
}
