#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"
#include "preproj/algebra.hpp"
#include "preproj/typea.hpp"

using namespace preproj;

TEST_CASE("scalars are exact") {
  Scalar a = Scalar::fraction(3, 7);
  CHECK((a + (-a)).is_zero());
  CHECK((a * a.inverse()).is_one());
  Scalar big(1L << 62);
  Scalar sq = big * big * big;  // overflows the fast path
  CHECK((sq / big / big / big).is_one());
  CHECK((sq - sq).is_zero());
  Scalar r = Scalar::residue(5, 7);
  CHECK((r * r.inverse()).is_one());
  CHECK((r + Scalar(2)).is_zero());
}

TEST_CASE("parse: free A2 and the two-relation A4") {
  Presentation p = parse_presentation("vertices 1 2\narrow a : 1 -> 2\n");
  CHECK(p.quiver.num_vertices() == 2);
  CHECK(p.relations.empty());
  Presentation q = fixture("a4_ab_bc");
  CHECK(q.quiver.num_vertices() == 4);
  CHECK(q.quiver.num_arrows() == 3);
  CHECK(q.relations.size() == 2);
  for (const auto& r : q.relations) CHECK(r.max_degree() == 2);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_presentation("vertices 1 2\narrow a : 1 -> 2\nrelation a*x\n"),
                       doctest::Contains("unknown arrow"), ParseError);
  try {
    parse_presentation("vertices 1 2\narrow a : 1 -> 2\nrelation a*x\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_presentation("vertices 1 2 3\narrow a : 1 -> 2\narrow b : 3 -> 2\nrelation a*b\n"), ParseError);
  CHECK_THROWS_WITH_AS(parse_presentation("vertices 1 2\narrow a : 1 -> 2\nrelation a\n"), doctest::Contains("degree < 2"),
                       ParseError);
  CHECK_THROWS_AS(parse_presentation("field F 8\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("vertices 1\narrow a : 1 -> 9\n"), ParseError);
}

TEST_CASE("parse splits mixed-degree relations") {
  Presentation p = parse_presentation(
      "vertices 1 2 3\narrow a : 1 -> 2\narrow b : 2 -> 3\narrow c : 1 -> 3\narrow d : 1 -> 2\narrow e : 2 -> 2\n"
      "relation a*b + 2 d*e*b\n");
  CHECK(p.relations.size() == 2);
}

TEST_CASE("round trip through the printer") {
  for (const char* f : kFiniteFixtures) {
    Presentation p = fixture(f);
    CHECK(parse_presentation(print_presentation(p)) == p);
  }
  Presentation r = parse_presentation("field F 5\nvertices 1 2\narrow a : 1 -> 2\narrow b : 2 -> 1\nrelation a*b - 3/2 a*b\ntruncate 4\n");
  CHECK(parse_presentation(print_presentation(r)) == r);
}

TEST_CASE("degree bases") {
  GradedAlgebra A(fixture("a4_ab_bc"), 10);
  CHECK(A.dim(2) == 0);
  CHECK(A.finite());
  CHECK(A.total_dim() == 7);
  Presentation free3 = parse_presentation("vertices 1 2 3\narrow alpha : 1 -> 2\narrow beta : 2 -> 3\n");
  GradedAlgebra F(free3, 5);
  REQUIRE(F.dim(2) == 1);
  CHECK(F.basis(2)[0].str(free3.quiver) == "alpha*beta");
  Presentation t = typea_presentation(2, 3);
  GradedAlgebra T(t, 6);
  CHECK(T.dim(1) == t.quiver.num_arrows());
}

TEST_CASE("truncation is enforced") {
  Presentation p = parse_presentation("vertices 1\narrow x : 1 -> 1\ntruncate 3\n");
  GradedAlgebra A(p, 10);
  CHECK(A.computed_degree() == 3);
  CHECK_THROWS_AS(A.dim(4), TruncationError);
}

TEST_CASE("normal form examples") {
  Presentation p = fixture("a4_ab_bc");
  GradedAlgebra A(p, 8);
  const Quiver& q = p.quiver;
  Element ab = parse_element(q, p.field, "alpha*beta");
  CHECK(A.normal_form(ab).is_zero());
  Element e1a = Element(Path::trivial(0)).mul(Element(Path::arrow(q, 0)));
  CHECK(A.normal_form(e1a) == Element(Path::arrow(q, 0)));
  for (const auto& r : p.relations) CHECK(A.normal_form(r).is_zero());
}

TEST_CASE("property: normal form is multiplicative and idempotent") {
  std::mt19937 rng(12345);
  for (const char* f : {"commsquare", "beilinson", "a6_ab_bc_de", "a9_rad4", "a4_ab"}) {
    Presentation p = fixture(f);
    GradedAlgebra A(p, 12);
    const Quiver& q = p.quiver;
    auto random_element = [&](int len) {
      Element e;
      auto ps = paths_of_length(q, len);
      if (ps.empty()) return e;
      std::uniform_int_distribution<int> pick(0, static_cast<int>(ps.size()) - 1), coef(-3, 3);
      for (int k = 0; k < 4; ++k) e.add(ps[pick(rng)], Scalar(coef(rng)));
      return e;
    };
    for (int trial = 0; trial < 30; ++trial) {
      Element x = random_element(1 + trial % 3), y = random_element(1 + trial % 2);
      Element nx = A.normal_form(x), ny = A.normal_form(y);
      CHECK(A.normal_form(nx) == nx);
      CHECK(A.normal_form(x.mul(y)) == A.normal_form(nx.mul(ny)));
      CHECK(A.normal_form(x + y) == A.normal_form(nx + ny));
    }
  }
}

TEST_CASE("oracle: degree dimensions agree with brute-force reduction") {
  for (const char* f : kFiniteFixtures) {
    Presentation p = fixture(f);
    GradedAlgebra A(p, 20);
    REQUIRE(A.finite());
    for (int n = 0; n <= A.top_degree() + 1; ++n) CHECK_MESSAGE(A.dim(n) == oracle::quotient_dim(p, n), f << " degree " << n);
  }
}

TEST_CASE("subspace intersection") {
  Presentation p = fixture("a4_ab_bc");
  const Quiver& q = p.quiver;
  Subspace R = Subspace::span(2, p.relations);
  CHECK(intersect_subspaces({R, R}) == R);
  std::vector<Element> left, right;
  for (const auto& r : R.basis)
    for (int a = 0; a < q.num_arrows(); ++a) {
      Element x(Path::arrow(q, a));
      if (!x.mul(r).is_zero()) left.push_back(x.mul(r));
      if (!r.mul(x).is_zero()) right.push_back(r.mul(x));
    }
  Subspace K3 = intersect_subspaces({Subspace::span(3, left), Subspace::span(3, right)});
  REQUIRE(K3.dim() == 1);
  CHECK(K3.basis[0].str(q) == "alpha*beta*gamma");
  // two transverse lines
  Presentation sq = fixture("commsquare");
  const Quiver& s = sq.quiver;
  Element ab = parse_element(s, sq.field, "a*b"), ce = parse_element(s, sq.field, "c*e");
  CHECK(intersect_subspaces({Subspace::span(2, {ab}), Subspace::span(2, {ce})}).dim() == 0);
  CHECK_THROWS(intersect_subspaces({Subspace::span(2, {ab}), Subspace::span(3, left)}));
}

TEST_CASE("property: intersection is the largest common subspace") {
  std::mt19937 rng(7);
  Presentation p = fixture("beilinson");
  auto ps = paths_of_length(p.quiver, 2);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Element> g1, g2, common;
    auto rnd = [&] {
      Element e;
      for (const auto& x : ps) e.add(x, Scalar(coef(rng)));
      return e;
    };
    for (int k = 0; k < 2; ++k) common.push_back(rnd());
    g1 = common;
    g2 = common;
    for (int k = 0; k < 3; ++k) g1.push_back(rnd());
    for (int k = 0; k < 2; ++k) g2.push_back(rnd());
    Subspace a = Subspace::span(2, g1), b = Subspace::span(2, g2);
    Subspace c = intersect_subspaces({a, b});
    CHECK(a.contains(c));
    CHECK(b.contains(c));
    for (const auto& x : common) CHECK(c.contains(x));
    CHECK(c.dim() == a.dim() + b.dim() - Subspace::span(2, [&] {
                       auto all = g1;
                       all.insert(all.end(), g2.begin(), g2.end());
                       return all;
                     }()).dim());
  }
}

TEST_CASE("bases are deterministic") {
  for (const char* f : {"beilinson", "a9_rad4"}) {
    GradedAlgebra A(fixture(f), 10), B(fixture(f), 10);
    for (int n = 0; n <= A.top_degree(); ++n) CHECK(A.basis(n) == B.basis(n));
  }
}

TEST_CASE("degenerate quivers") {
  Presentation empty = parse_presentation("field Q\n");
  GradedAlgebra E(empty, 4);
  CHECK(E.total_dim() == 0);
  Presentation pt = parse_presentation("vertices 1\n");
  GradedAlgebra P(pt, 4);
  CHECK(P.total_dim() == 1);
  CHECK(P.finite());
}
