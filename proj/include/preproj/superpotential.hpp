#pragma once

#include <map>
#include <optional>
#include <vector>

#include "preproj/preprojective.hpp"

namespace preproj {

// Closed-path part of a homogeneous element. Throws on inhomogeneous input.
Element cyclic_project(const Element& x);
// a_1 a_2 ... a_l -> a_2 ... a_l a_1 on closed paths
Element rotate(const Quiver& q, const Element& w);
// sum_{i < l} (-1)^{(l-1) i} rho^i(w)
Element phi(const Quiver& q, const Element& w);
// left contraction of phi(w) by p: sum of c q' over terms c p q'
Element derivative(const Quiver& q, const Element& w, const Path& p);

// T(U)/(d_p W : |p| = k), zero derivatives dropped
Presentation jacobi_presentation(const Quiver& q, const Field& f, const Element& W, int k);

// sum_t cyclic(k_t a_t) over the top generators k_t and their new arrows a_t
Element associated_superpotential(const Preprojective& P);

struct JacobiOrder {
  int k = 0;
  bool equal = false;         // Jacobi ideal == Pi ideal
  bool equal_with_R = false;  // Jacobi ideal + R == Pi ideal
  bool contains_R = false;    // R inside the Jacobi ideal
};

struct JacobiReport {
  int d = 0;
  int bound = 0;
  bool koszul = false;
  Element W;
  std::vector<JacobiOrder> orders;  // k = 0 .. l-1
  // Koszul inputs only
  std::map<int, int> socle;                  // soc(Lambda^!) dims per degree
  std::optional<bool> socle_hypothesis;      // socle vanishes in degrees 2..d-1
  std::optional<int> socle_failure_degree;
  std::optional<bool> derivative_relations_match;  // span of d_p W over original paths p of length d-1 == span of delta' relations

  const JacobiOrder* order(int k) const;
};

JacobiReport verify_jacobi_theorems(const Preprojective& P, int bound);

}  // namespace preproj
