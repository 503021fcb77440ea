// One PASS/FAIL line per acceptance criterion, with wall-clock limits.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "oracle.hpp"
#include "preproj/homology.hpp"
#include "preproj/report.hpp"
#include "preproj/superpotential.hpp"
#include "preproj/typea.hpp"

using namespace preproj;

namespace {

struct Failure {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

Element el(const Presentation& p, const std::string& s) { return parse_element(p.quiver, p.field, s); }

int dim_at(const std::map<int, int>& m, int k) { return m.count(k) ? m.at(k) : 0; }

std::map<int, int> nonzero(const std::map<int, int>& m) {
  std::map<int, int> out;
  for (const auto& [k, v] : m)
    if (v) out[k] = v;
  return out;
}

void c1() {
  Presentation p = fixture("a4_ab_bc");
  Preprojective P = preprojective(p);
  const Quiver& q = P.pi.quiver;
  require(q.num_arrows() == 4, "expected one new arrow");
  require(q.vertices[q.arrows[3].src] == "4" && q.vertices[q.arrows[3].tgt] == "1", "new arrow is not 4 -> 1");
  const std::string eta = q.arrows[3].name;
  Presentation expect = P.pi;
  expect.relations = {el(P.pi, "alpha*beta"), el(P.pi, "beta*gamma"), el(P.pi, "gamma*" + eta), el(P.pi, eta + "*alpha")};
  require(ideals_equal(P.pi, expect, 12), "ideal differs from (ab, bc, c eta, eta a)");
  Report r = verify_jacobi_report(p, 8);
  require(r.get("socle-branch") == "holds", "socle branch: " + r.get("socle-branch"));
  require(r.get("R-in-jacobi") == "yes", "R not inside the Jacobi ideal");
}

void c2() {
  Preprojective P = preprojective(fixture("a6_ab_bc_de"));
  Element W = associated_superpotential(P);
  Presentation J = jacobi_presentation(P.pi.quiver, P.pi.field, W, 2);
  require(!ideal_contains(J, {el(P.pi, "delta*epsilon")}, 2), "delta*epsilon lies in the Jacobi ideal");
  JacobiReport j = verify_jacobi_theorems(P, 8);
  require(j.order(2) && !j.order(2)->equal, "Jacobi ideal already equals the Pi ideal");
  require(j.order(2)->equal_with_R, "equality fails even after adjoining R");
  require(j.socle_hypothesis == false && j.socle_failure_degree == 2, "socle criterion does not fail at degree 2");
}

void c3() {
  Report r = resolve_report(fixture("a6_cubic"), 8, std::string("6"), true, false, 12);
  require(r.get("simple.6.length") == "3", "resolution length " + r.get("simple.6.length"));
  require(r.get("simple.6.stage.3") == "P2<4>", "last term " + r.get("simple.6.stage.3"));
  Preprojective P = preprojective(fixture("a6_cubic"));
  const Quiver& q = P.pi.quiver;
  require(q.num_arrows() == P.lambda.quiver.num_arrows() + 1, "not exactly one new arrow");
  const Arrow& a = q.arrows.back();
  require(q.vertices[a.src] == "6" && q.vertices[a.tgt] == "2", "new arrow is not 6 -> 2");
}

void c4() {
  Preprojective P = preprojective(fixture("a9_rad4"));
  require(P.d == 4, "global dimension " + std::to_string(P.d));
  const Quiver& q = P.pi.quiver;
  require(q.num_arrows() == 9, "not exactly one new arrow");
  require(q.vertices[q.arrows[8].src] == "9" && q.vertices[q.arrows[8].tgt] == "1", "new arrow is not 9 -> 1");
  Element W = associated_superpotential(P);
  std::string cyc = "alpha*beta*gamma*delta*epsilon*zeta*eta*theta*" + q.arrows[8].name;
  require(W == cyclic_project(el(P.pi, cyc)), "unexpected superpotential " + W.str(q));
  Presentation J = jacobi_presentation(q, P.pi.field, W, 5);
  require(ideals_equal(J, P.pi, 10), "5-Jacobi ideal differs from the Pi ideal");
}

void c5() {
  Preprojective P = preprojective(fixture("a4_ab"));
  GradedAlgebra G(quadratic_dual(P.lambda), 40);
  TrivialExtension T(G, P.d);
  require(T.dim() == 16, "trivial extension has dim " + std::to_string(T.dim()));
  PhiComparison c = phi_compare(P, 8);
  require(nonzero(c.cokernel) == std::map<int, int>{{2, 1}, {3, 1}}, "cokernel is not one-dimensional in degrees 2 and 3");
  require(dim_at(c.pi_dual_dims, 4) > 0, "degree 4 of the dual preprojective algebra vanishes");
}

void c6() {
  for (const char* f : {"a3", "a3_sink"}) {
    PhiComparison c = phi_compare(preprojective(fixture(f)), 8);
    require(c.verdict() == "iso", std::string(f) + ": " + c.verdict());
    for (int n = 0; n <= 8; ++n) {
      require(dim_at(c.pi_dual_dims, n) == dim_at(c.triv_dims, n), std::string(f) + ": dims differ");
      if (n > 2) require(dim_at(c.pi_dual_dims, n) == 0, std::string(f) + ": nonzero beyond degree 2");
    }
  }
  PhiComparison a = phi_compare(preprojective(fixture("a2")), 12);
  require(a.verdict() == "surjective", "A2: " + a.verdict());
  for (int n = 0; n <= 12; ++n) {
    require(dim_at(a.pi_dual_dims, n) > 0, "A2: zero in degree " + std::to_string(n));
    require(dim_at(a.kernel, n) == (n >= 3 ? dim_at(a.pi_dual_dims, n) : 0), "A2: kernel wrong in degree " + std::to_string(n));
  }
}

void c7() {
  for (auto [d, s] : {std::pair{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    std::string tag = "(" + std::to_string(d) + "," + std::to_string(s) + ") ";
    Presentation p = typea_presentation(d, s);
    require(is_koszul_up_to(p, 6).linear, tag + "not Koszul");
    Preprojective P = preprojective(p);
    require(classify_hereditary(P, 8).kind == Classification::RF, tag + "not RF");
    require(ideals_equal(typea_map_preprojective(P, d, s), typea_expected_preprojective(d, s), 2 * (d + 1)),
            tag + "ideal differs");
    GradedAlgebra Pi(P.pi, 1000);
    AlmostKoszul ak = almost_koszul_verdict(Pi, d + 4);
    bool akok = ak.p == s - 1 && std::find(ak.q.begin(), ak.q.end(), d + 1) != ak.q.end();
    require(akok, tag + "almost-Koszul " + ak.str());
    require(is_selfinjective(Pi).selfinjective, tag + "not self-injective");
    require(simple_periodicity(Pi, d).all_expected, tag + "syzygy not simple");
  }
}

void c8() {
  for (const char* f : {"kronecker", "beilinson"}) {
    Preprojective P = preprojective(fixture(f));
    Classification c = classify_hereditary(P, 8);
    require(c.kind == Classification::RI, std::string(f) + ": " + c.verdict());
    GradedAlgebra Pi(P.pi, 10);
    GradedResolution R = resolve_module(Pi, degree_zero_module(P.pi.quiver), 6);
    for (int i = 0; i <= 6; ++i) require(R.is_linear(i), std::string(f) + ": nonlinear at stage " + std::to_string(i));
    require(ri_ext_pattern(Pi, P.d, 3).pass(), std::string(f) + ": Ext pattern fails");
  }
}

void c9() {
  for (const char* f : kKoszulFixtures) {
    std::string tag = std::string(f) + ": ";
    Presentation p = fixture(f);
    Preprojective P = preprojective(p);
    JacobiReport j = verify_jacobi_theorems(P, 6);
    require(j.derivative_relations_match == true, tag + "derivative relations differ");
    KoszulTower t = koszul_tower(p, 16);
    BimoduleComplex kc = koszul_complex(p, t);
    auto soc = dual_socle_profile(p, t.top() + 1);
    for (int i = 0; i <= t.top() + 1; ++i)
      require(dual_linear_kernel_dim(kc, i) == dim_at(soc, i), tag + "socle differs in degree " + std::to_string(i));
    GradedAlgebra A(p, 40);
    require(complex_is_exact(A, kc, kc.length(), A.top_degree() + 2 * kc.length() + 2), tag + "Koszul complex not exact");
    BimoduleComplex gen = bimodule_resolution(A, 16);
    require(complexes_isomorphic(A, gen, kc, gen.length()), tag + "resolutions differ");
  }
}

void c10() {
  for (const char* f : kFiniteFixtures) {
    std::string tag = std::string(f) + ": ";
    Presentation p = fixture(f);
    GradedAlgebra A(p, 60);
    require(A.finite() && A.total_dim() == oracle::quotient_total_dim(p, 60), tag + "dim Lambda differs");
    Preprojective P = preprojective(p);
    GradedAlgebra Pi(P.pi, 16);
    if (Pi.finite())
      require(Pi.total_dim() == oracle::quotient_total_dim(P.pi, 60), tag + "dim Pi differs");
    else
      for (int n = 0; n <= 5; ++n) require(Pi.dim(n) == oracle::quotient_dim(P.pi, n), tag + "Pi degree differs");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double limit;
    std::function<void()> run;
  };
  const Criterion all[] = {
      {1, "A4 with two zero relations: Pi quiver, ideal, Jacobi branch", 1, c1},
      {2, "A6 with three zero relations: Jacobi ideal needs R, socle fails at 2", 1, c2},
      {3, "A6 with cubic relations: resolution of S6 and the new arrow", 1, c3},
      {4, "A9 mod rad^4: gldim 4, new arrow 9 -> 1, 5-Jacobi ideal", 10, c4},
      {5, "trivial extension comparison with a 2-dimensional cokernel", 2, c5},
      {6, "comparison map on A3 (iso) and A2 (surjective)", 2, c6},
      {7, "type A matrix", 60, c7},
      {8, "representation-infinite suite", 60, c8},
      {9, "cross-method invariants on Koszul fixtures", 120, c9},
      {10, "brute-force dimension oracle", 60, c10},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      c.run();
    } catch (const Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && secs > c.limit) {
      std::ostringstream o;
      o << "took longer than " << c.limit << " s";
      why = o.str();
    }
    std::printf("%s %2d  %-68s %7.3f s%s%s\n", why.empty() ? "PASS" : "FAIL", c.id, c.what, secs,
                why.empty() ? "" : "  ", why.c_str());
    std::fflush(stdout);
    failed += !why.empty();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(all)) - failed, std::size(all));
  return failed ? 1 : 0;
}
