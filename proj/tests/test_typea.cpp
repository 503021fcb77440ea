#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "preproj/superpotential.hpp"
#include "preproj/typea.hpp"

using namespace preproj;

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

const std::pair<int, int> kMatrix[] = {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {2, 5}};

}  // namespace

TEST_CASE("vertex and arrow counts") {
  for (auto [d, s] : kMatrix) {
    Presentation p = typea_presentation(d, s);
    CHECK(p.quiver.num_vertices() == binom(s + d - 1, d));
    // arrows x -> x + f_i need x_i >= 1: one per tuple of the next smaller size and i <= d
    CHECK(p.quiver.num_arrows() == d * binom(s + d - 2, d));
    Presentation e = typea_expected_preprojective(d, s);
    CHECK(e.quiver.num_arrows() == (d + 1) * binom(s + d - 2, d));
    CHECK(e.quiver.num_vertices() == p.quiver.num_vertices());
  }
  CHECK(typea_vertex_name({1, 0, 2}) == "1.0.2");
  CHECK(typea_arrow_name({1, 0, 2}, 3) == "a_1.0.2_3");
  auto vs = typea_vertices(2, 3);
  CHECK(std::is_sorted(vs.begin(), vs.end()));
  for (const auto& v : vs) CHECK(v[0] + v[1] + v[2] == 2);
}

TEST_CASE("top Koszul space") {
  for (auto [d, s] : kMatrix) {
    Presentation p = typea_presentation(d, s);
    auto kd = typea_kd_basis(d, s);
    CHECK(static_cast<long>(kd.size()) == binom(s + d - 2, d));
    KoszulTower t = koszul_tower(p, d + 2);
    REQUIRE(t.top() == d);
    CHECK(Subspace::span(d, kd) == t.K[d]);
    // signed sums over orderings whose composite path exists
    for (const auto& k : kd) {
      CHECK(static_cast<long>(k.size()) <= factorial(d));
      for (const auto& [path, c] : k.terms()) CHECK((c.is_one() || (-c).is_one()));
    }
  }
}

TEST_CASE("d = 3, s = 2 is the A4 example") {
  Presentation p = typea_presentation(3, 2);
  Presentation a = fixture("a4_ab_bc");
  REQUIRE(p.quiver.num_vertices() == 4);
  REQUIRE(p.quiver.num_arrows() == 3);
  for (int n = 0; n <= 4; ++n) CHECK(oracle::quotient_dim(p, n) == oracle::quotient_dim(a, n));
  Preprojective P = preprojective(p);
  CHECK(P.d == 3);
  CHECK(classify_hereditary(P, 6).kind == Classification::RF);
}

TEST_CASE("computed preprojective algebras match the expected presentation") {
  for (auto [d, s] : kMatrix) {
    Preprojective P = preprojective(typea_presentation(d, s));
    REQUIRE(P.d == d);
    REQUIRE(P.koszul);
    Presentation mapped = typea_map_preprojective(P, d, s);
    Presentation expected = typea_expected_preprojective(d, s);
    CHECK(mapped.quiver == expected.quiver);
    CHECK_MESSAGE(ideals_equal(mapped, expected, s + 2), d << "," << s);
  }
  // d = 1: the classical preprojective algebra of the linear quiver
  Presentation e = typea_expected_preprojective(1, 3);
  CHECK(e.quiver.num_arrows() == 4);
  CHECK(oracle::quotient_total_dim(e, 20) == 10);
}

TEST_CASE("projective at the first corner vertex") {
  for (auto [d, s] : kMatrix) {
    Presentation p = typea_presentation(d, s);
    std::vector<int> corner(d + 1, 0);
    corner[0] = s - 1;
    int v = p.quiver.vertex_index(typea_vertex_name(corner));
    REQUIRE(v >= 0);
    for (const Presentation& alg : {p, typea_expected_preprojective(d, s)}) {
      GradedAlgebra A(alg, s + 3);
      for (int n = 0; n <= s + 2; ++n) {
        int dim = 0;
        for (int t = 0; t < alg.quiver.num_vertices(); ++t) dim += static_cast<int>(A.words(n, v, t).size());
        CHECK((dim > 0) == (n <= s - 1));
      }
    }
  }
}

TEST_CASE("superpotential of type A") {
  for (auto [d, s] : kMatrix) {
    Preprojective P = preprojective(typea_presentation(d, s));
    Element W = associated_superpotential(P);
    CHECK(W.is_homogeneous());
    CHECK(W.min_degree() == d + 1);
    long terms = 0;
    for (const auto& k : typea_kd_basis(d, s)) terms += static_cast<long>(k.size());
    CHECK(static_cast<long>(W.size()) <= terms * (d + 1));
    JacobiReport r = verify_jacobi_theorems(P, s + 2);
    REQUIRE(r.order(d - 1));
    CHECK_MESSAGE(r.order(d - 1)->equal, d << "," << s);
    CHECK(r.derivative_relations_match == true);
  }
}

TEST_CASE("type A generator validation") {
  CHECK_THROWS_AS(typea_presentation(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(typea_presentation(2, 1), std::invalid_argument);
}
