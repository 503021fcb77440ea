#include "preproj/report.hpp"

#include <climits>
#include <sstream>

#include "preproj/homology.hpp"
#include "preproj/superpotential.hpp"
#include "preproj/typea.hpp"

namespace preproj {

namespace {

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string dims_str(const std::map<int, int>& m, bool skip_zero = true) {
  std::string s;
  for (const auto& [k, v] : m) {
    if (skip_zero && v == 0) continue;
    s += (s.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(v);
  }
  return s.empty() ? "none" : s;
}

std::string ints_str(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s.empty() ? "none" : s;
}

std::string arrow_str(const Quiver& q, int a) {
  const Arrow& x = q.arrows[a];
  return x.name + " : " + q.vertices[x.src] + " -> " + q.vertices[x.tgt];
}

std::string gens_str(const Quiver& q, const std::vector<Generator>& gs) {
  std::string s;
  for (const auto& g : gs) s += (s.empty() ? "" : " + ") + ("P" + q.vertices[g.vertex] + "<" + std::to_string(g.degree) + ">");
  return s.empty() ? "0" : s;
}

}  // namespace

void Report::set(const std::string& key, const std::string& value) { entries_.emplace_back(key, value); }

std::string Report::get(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return {};
}

std::string Report::text() const {
  std::ostringstream o;
  const char* lead = pres_ ? "# " : "";
  for (const auto& [k, v] : entries_) o << lead << k << ": " << v << "\n";
  if (pres_) o << print_presentation(*pres_);
  return o.str();
}

std::string Report::kv() const {
  std::ostringstream o;
  for (const auto& [k, v] : entries_) o << k << " = " << v << "\n";
  if (pres_) {
    const Presentation& p = *pres_;
    o << "field = " << p.field.str() << "\n";
    o << "vertices =";
    for (const auto& v : p.quiver.vertices) o << ' ' << v;
    o << "\n";
    for (int a = 0; a < p.quiver.num_arrows(); ++a) o << "arrow." << a + 1 << " = " << arrow_str(p.quiver, a) << "\n";
    for (std::size_t r = 0; r < p.relations.size(); ++r)
      o << "relation." << r + 1 << " = " << p.relations[r].str(p.quiver) << "\n";
    if (p.truncation) o << "truncate = " << *p.truncation << "\n";
  }
  return o.str();
}

Presentation with_field(const Presentation& p, const Field& f) {
  Presentation out = p;
  out.field = f;
  out.relations.clear();
  for (const auto& r : p.relations) {
    Element e;
    for (const auto& [path, c] : r.terms()) {
      if (c.modulus() != 0 && c.modulus() != f.p) throw std::invalid_argument("cannot change between prime fields");
      if (c.modulus() != 0) {
        e.add(path, c);
        continue;
      }
      mpq_class q = c.to_mpq();
      if (f.p && mpz_class(q.get_den() % mpz_class(static_cast<unsigned long>(f.p))) == 0)
        throw std::invalid_argument("coefficient " + c.str() + " has a denominator divisible by " + std::to_string(f.p));
      e.add(path, f.make(q));
    }
    if (!e.is_zero()) out.relations.push_back(e);
  }
  return out;
}

Report compute_report(const Presentation& p) {
  Preprojective P = preprojective(p);
  Report r;
  r.set("global-dimension", std::to_string(P.d));
  r.set("koszul", yesno(P.koszul));
  r.set("top-generator-degree", std::to_string(P.top_generator_degree()));
  const Quiver& q = P.pi.quiver;
  for (int a = P.doubled.first_new; a < q.num_arrows(); ++a)
    r.set("new-arrow." + std::to_string(a - P.doubled.first_new + 1), arrow_str(q, a));
  BimoduleRep E = ext_bimodule(P.A, P.resolution, P.d);
  r.set("ext.graded-dims", dims_str(E.graded_dims()));
  r.set("new-relations", std::to_string(P.new_relations.size()));
  r.set_presentation(P.pi);
  return r;
}

Report dual_report(const Presentation& p) {
  Presentation d = quadratic_dual(p);
  Report r;
  r.set("relations", std::to_string(d.relations.size()));
  r.set_presentation(d);
  return r;
}

Report jacobi_report(const Presentation& p, int order) {
  Preprojective P = preprojective(p);
  Element W = associated_superpotential(P);
  const int l = W.is_zero() ? 0 : W.max_degree();
  if (order < 0 || order > l)
    throw std::invalid_argument("order must lie in 0.." + std::to_string(l) + " for this superpotential");
  Report r;
  r.set("superpotential", W.str(P.pi.quiver));
  r.set("superpotential-degree", std::to_string(l));
  r.set("order", std::to_string(order));
  r.set_presentation(jacobi_presentation(P.pi.quiver, P.pi.field, W, order));
  return r;
}

Report verify_jacobi_report(const Presentation& p, int bound) {
  Preprojective P = preprojective(p);
  JacobiReport j = verify_jacobi_theorems(P, bound);
  Report r;
  r.set("global-dimension", std::to_string(P.d));
  r.set("koszul", yesno(P.koszul));
  r.set("bound", std::to_string(bound));
  r.set("superpotential", j.W.str(P.pi.quiver));
  std::vector<int> plain, withR;
  for (const auto& o : j.orders) {
    std::string k = "jacobi." + std::to_string(o.k);
    r.set(k + ".equals-pi", yesno(o.equal));
    r.set(k + ".equals-pi-with-R", yesno(o.equal_with_R));
    r.set(k + ".contains-R", yesno(o.contains_R));
    if (o.equal) plain.push_back(o.k);
    if (o.equal_with_R) withR.push_back(o.k);
  }
  r.set("matching-orders", ints_str(plain));
  r.set("matching-orders-with-R", ints_str(withR));
  if (P.koszul) {
    r.set("dual-socle", dims_str(j.socle));
    r.set("socle-hypothesis", *j.socle_hypothesis ? "holds" : "fails at degree " + std::to_string(*j.socle_failure_degree));
    r.set("derivative-relations-match", yesno(*j.derivative_relations_match));
    const JacobiOrder* o = j.order(P.d - 1);
    bool branch = *j.socle_hypothesis && o && o->equal;
    r.set("socle-branch", branch ? "holds" : "fails");
    r.set("R-in-jacobi", yesno(o && o->contains_R));
  }
  return r;
}

Report classify_report(const Presentation& p, int bound, int dim_cap) {
  Preprojective P = preprojective(p);
  Classification c = classify_hereditary(P, bound, dim_cap);
  Report r;
  r.set("global-dimension", std::to_string(P.d));
  r.set("bound", std::to_string(bound));
  std::string kind;
  switch (c.kind) {
    case Classification::RF:
      kind = "d-RF (orbit length " + std::to_string(c.p_max + 1) + ")";
      break;
    case Classification::RI:
      kind = "d-RI (certified to " + std::to_string(bound) + ")";
      break;
    case Classification::NotHereditary:
      kind = "not d-hereditary";
      break;
    case Classification::Inconclusive:
      kind = "inconclusive (bound " + std::to_string(bound) + ")";
      r.status = Report::Inconclusive;
      break;
  }
  r.set("classification", kind);
  r.set("verdict", c.verdict());
  r.set("orbit-dims", ints_str(c.orbit_dims));
  for (std::size_t k = 0; k < c.witnesses.size(); ++k) {
    const auto& w = c.witnesses[k];
    std::string where = w.i >= 0 ? "tau^-" + std::to_string(w.i) + " Lambda" : "orbit sum";
    r.set("witness." + std::to_string(k + 1), "Ext^" + std::to_string(w.j) + "(D Lambda, " + where + ") degree " +
                                                   std::to_string(w.degree) + " dim " + std::to_string(w.dim));
  }
  if (!c.reason.empty()) r.set("reason", c.reason);
  return r;
}

Report certify_report(const Presentation& p, int bound, int window) {
  Report r;
  KoszulReport ks = is_koszul_up_to(p, bound);
  r.set("koszul", ks.linear ? "yes (up to " + std::to_string(bound) + ")"
                            : "no (first failure at stage " + std::to_string(*ks.first_failure) + ")");
  if (ks.complex_exact) r.set("koszul-complex-exact", yesno(*ks.complex_exact));
  Preprojective P = preprojective(p);
  const int d = P.d;
  r.set("global-dimension", std::to_string(d));
  Report cl = classify_report(p, bound);
  r.set("classification", cl.get("classification"));
  r.set("verdict", cl.get("verdict"));
  r.status = cl.status;
  const std::string verdict = cl.get("classification");
  if (verdict.rfind("d-RF", 0) == 0) {
    GradedAlgebra Pi(P.pi, INT_MAX / 2);
    r.set("pi.dim", std::to_string(Pi.total_dim()));
    r.set("pi.top-degree", std::to_string(Pi.top_degree()));
    SelfInjectivity si = is_selfinjective(Pi);
    r.set("self-injective", yesno(si.selfinjective));
    if (si.selfinjective) {
      std::string nak;
      for (std::size_t v = 0; v < si.nakayama.size(); ++v)
        nak += (v ? " " : "") + P.pi.quiver.vertices[v] + "->" + P.pi.quiver.vertices[si.nakayama[v]];
      r.set("nakayama", nak);
    }
    Periodicity per = simple_periodicity(Pi, d);
    r.set("syzygy-d+2-simple", yesno(per.all_expected));
    r.set("minimal-periods", ints_str(per.period));
    r.set("period-proper-divisor", yesno(per.proper_divisor));
    r.set("almost-koszul", almost_koszul_verdict(Pi, d + 4).str());
  } else if (verdict.rfind("d-RI", 0) == 0) {
    int T = std::max(bound + 2, window + d + 2);
    GradedAlgebra Pi(P.pi, T);
    r.set("pi.truncation", std::to_string(T));
    GradedResolution R = resolve_module(Pi, degree_zero_module(P.pi.quiver), 6);
    int lin = -1;
    for (int i = 0; i <= 6; ++i) {
      if (!R.is_linear(i)) break;
      lin = i;
    }
    r.set("pi.linear-through", std::to_string(lin));
    RiExtReport ri = ri_ext_pattern(Pi, d, window);
    r.set("ri-ext-pattern", std::string(ri.pass() ? "pass" : "fail") + " (window " + std::to_string(window) + ")");
    for (const auto& e : ri.entries)
      if (!e.pass)
        r.set("ri-ext-failure", P.pi.quiver.vertices[e.vertex] + " grade " + std::to_string(e.grade));
  }
  if (P.koszul) {
    PhiComparison ph = phi_compare(P, bound);
    r.set("phi", ph.verdict());
    r.set("phi.well-defined", yesno(ph.well_defined));
    r.set("phi.kernel", dims_str(ph.kernel));
    r.set("phi.cokernel", dims_str(ph.cokernel));
    r.set("socle-criterion", *ph.socle_criterion ? "holds" : "fails");
    r.set("phi-socle-agree", yesno(*ph.socle_criterion == ph.surjective()));
  }
  return r;
}

Report typea_report(int d, int s, bool expected_pi) {
  Presentation p = expected_pi ? typea_expected_preprojective(d, s) : typea_presentation(d, s);
  Report r;
  r.set("d", std::to_string(d));
  r.set("s", std::to_string(s));
  r.set("algebra", expected_pi ? "expected preprojective" : "type A");
  r.set("vertices", std::to_string(p.quiver.num_vertices()));
  r.set("arrows", std::to_string(p.quiver.num_arrows()));
  r.set_presentation(p);
  return r;
}

Report resolve_report(const Presentation& p, int steps, const std::optional<std::string>& vertex, bool left, bool over_pi,
                      int bound) {
  Presentation base = p;
  if (over_pi) base = preprojective(p).pi;
  if (left) base = base.opposite();
  GradedAlgebra A(base, std::max(bound, steps + 2));
  const Quiver& q = base.quiver;
  Report r;
  r.set("modules", left ? "left" : "right");
  r.set("algebra", over_pi ? "preprojective" : "input");
  if (!A.finite()) r.set("truncation", std::to_string(A.computed_degree()));
  for (int v = 0; v < q.num_vertices(); ++v) {
    if (vertex && q.vertices[v] != *vertex) continue;
    GradedResolution R = resolve_module(A, simple_module(q, v), steps);
    std::string k = "simple." + q.vertices[v];
    for (int i = 0; i < static_cast<int>(R.gens.size()) && i <= steps; ++i)
      r.set(k + ".stage." + std::to_string(i), gens_str(q, R.gens[i]));
    bool done = R.gens.empty() || R.gens.back().empty();
    r.set(k + ".length", done ? std::to_string(R.length()) : "> " + std::to_string(steps));
    if (R.partial) r.set(k + ".window", std::to_string(R.window));
  }
  if (vertex && q.vertex_index(*vertex) < 0) throw std::invalid_argument("unknown vertex '" + *vertex + "'");
  return r;
}

}  // namespace preproj
