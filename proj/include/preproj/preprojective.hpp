#pragma once

#include <optional>
#include <string>
#include <vector>

#include "preproj/koszul.hpp"

namespace preproj {

// Everything derived from the minimal bimodule resolution of a finite-dimensional algebra.
struct Preprojective {
  Presentation lambda;
  GradedAlgebra A;
  int d = 0;                 // global dimension
  bool koszul = false;       // resolution linear and presentation quadratic
  BimoduleComplex resolution;  // Koszul complex when koszul, else the general resolution
  KoszulTower tower;           // filled when koszul
  DoubledQuiver doubled;
  std::vector<Element> new_relations;  // delta'_d(K_{d-1}^dual) as paths of the doubled quiver
  Presentation pi;

  int top_generator_degree() const;  // internal degree of K_d (common to all generators)
};

// Throws std::invalid_argument for infinite-dimensional or semisimple input and when the
// lifted relations are not homogeneous in path length.
Preprojective preprojective(const Presentation& p, int max_stage = 64);

// Mutual generator containment, checked in degrees <= bound. Same quiver required.
bool ideals_equal(const Presentation& a, const Presentation& b, int bound);
// is every given element (of degree <= bound) zero in the quotient by p's ideal
bool ideal_contains(const Presentation& p, const std::vector<Element>& xs, int bound);

// Lambda as a bimodule over itself
BimoduleRep regular_bimodule(const GradedAlgebra& A);

// path-length degree n -> sum_i dim (E^{(x) i}) in internal degree n - i (D + 1)
std::map<int, int> tensor_algebra_dims(const Preprojective& P, const BimoduleRep& E, int nmax);

ModuleRep tau_minus(const Quiver& q, const ModuleRep& M, const BimoduleRep& E);
ModuleRep tau_plus(const Quiver& q, const ModuleRep& M, const BimoduleRep& E);

struct Classification {
  enum Kind { RF, RI, NotHereditary, Inconclusive } kind = Inconclusive;
  int d = 0;
  int bound = 0;
  int p_max = -1;  // RF: last nonzero index of the tau^- orbit
  // NotHereditary witness: orbit index, Ext index, internal degree
  int wit_i = -1, wit_j = -1, wit_degree = 0;
  bool rigidity_failure = false;
  // every nonzero forbidden Ext at the failing orbit index (i = -1 for the rigidity check)
  struct Witness {
    int i, j, degree, dim;
  };
  std::vector<Witness> witnesses;
  std::vector<int> orbit_dims;
  std::string reason;
  std::string verdict() const;
};

Classification classify_hereditary(const Preprojective& P, int bound, int dim_cap = 20000);

}  // namespace preproj
