#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "preproj/preprojective.hpp"
#include "preproj/report.hpp"

using namespace preproj;

TEST_CASE("compute output parses back to the preprojective presentation") {
  for (const char* f : kFiniteFixtures) {
    Report r = compute_report(fixture(f));
    Presentation back = parse_presentation(r.text());
    CHECK_MESSAGE(back == preprojective(fixture(f)).pi, f);
  }
}

TEST_CASE("reports are deterministic") {
  for (const char* f : {"a4_ab_bc", "beilinson", "a4_ab"}) {
    CHECK(compute_report(fixture(f)).text() == compute_report(fixture(f)).text());
    CHECK(certify_report(fixture(f), 6).kv() == certify_report(fixture(f), 6).kv());
  }
}

TEST_CASE("kv format") {
  Report r = compute_report(fixture("a4_ab_bc"));
  std::string kv = r.kv();
  CHECK(kv.find("global-dimension = 3\n") != std::string::npos);
  CHECK(kv.find("new-arrow.1 = alpha.beta.gamma^v : 4 -> 1\n") != std::string::npos);
  CHECK(kv.find("relation.4 = alpha.beta.gamma^v*alpha\n") != std::string::npos);
  CHECK(kv.find("field = Q\n") != std::string::npos);
  // keys are unique
  std::set<std::string> keys;
  for (const auto& [k, v] : r.entries()) CHECK(keys.insert(k).second);
}

TEST_CASE("classification reports") {
  Report k = classify_report(fixture("kronecker"), 8);
  CHECK(k.get("classification") == "d-RI (certified to 8)");
  CHECK(k.status == Report::Ok);
  Report a = classify_report(fixture("a4_ab_bc"), 8);
  CHECK(a.get("classification").rfind("d-RF", 0) == 0);
  Report b = classify_report(fixture("a6_ab_bc_de"), 8);
  CHECK(b.get("classification") == "not d-hereditary");
  CHECK_FALSE(b.get("witness.1").empty());
  Report c = classify_report(fixture("beilinson"), 30, 3000);
  CHECK(c.status == Report::Inconclusive);
  CHECK(c.get("classification") == "inconclusive (bound 30)");
}

TEST_CASE("certify reports") {
  Report t = certify_report(fixture("typea_2_3"), 8);
  CHECK(t.get("koszul") == "yes (up to 8)");
  CHECK(t.get("self-injective") == "yes");
  CHECK(t.get("syzygy-d+2-simple") == "yes");
  CHECK(t.get("almost-koszul") == "(2,3)");
  CHECK(t.get("phi-socle-agree") == "yes");
  Report k = certify_report(fixture("kronecker"), 8);
  CHECK(k.get("ri-ext-pattern") == "pass (window 3)");
  CHECK(k.get("phi") == "iso");
  Report v = certify_report(fixture("a9_rad4"), 8);
  CHECK(v.get("koszul") == "no (first failure at stage 2)");
  CHECK(v.get("phi").empty());
}

TEST_CASE("jacobi reports") {
  Report j = jacobi_report(fixture("a4_ab_bc"), 2);
  REQUIRE(j.presentation());
  CHECK(ideals_equal(*j.presentation(), preprojective(fixture("a4_ab_bc")).pi, 8));
  CHECK_THROWS_AS(jacobi_report(fixture("a4_ab_bc"), 9), std::invalid_argument);
  Report v = verify_jacobi_report(fixture("a6_ab_bc_de"), 8);
  CHECK(v.get("socle-hypothesis") == "fails at degree 2");
  CHECK(v.get("jacobi.2.equals-pi") == "no");
  CHECK(v.get("jacobi.2.equals-pi-with-R") == "yes");
}

TEST_CASE("resolve reports") {
  Report r = resolve_report(fixture("a6_cubic"), 6, std::string("6"), true, false, 8);
  CHECK(r.get("simple.6.stage.3") == "P2<4>");
  CHECK(r.get("simple.6.length") == "3");
  Report k = resolve_report(fixture("kronecker"), 3, std::nullopt, false, true, 8);
  CHECK(k.get("simple.1.length") == "2");
  CHECK_FALSE(k.get("truncation").empty());
  CHECK_THROWS_AS(resolve_report(fixture("a6_cubic"), 3, std::string("7"), false, false, 8), std::invalid_argument);
}

TEST_CASE("type A report") {
  Report r = typea_report(2, 3, false);
  CHECK(r.get("vertices") == "6");
  Presentation p = parse_presentation(r.text());
  CHECK(p == fixture("typea_2_3"));
}
