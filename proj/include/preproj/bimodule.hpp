#pragma once

#include <map>
#include <vector>

#include "preproj/module.hpp"

namespace preproj {

// Generator of a free bimodule Lambda e_x (x) e_y Lambda sitting in internal degree `degree`.
struct BGen {
  int x = 0;
  int y = 0;
  int degree = 0;
};

// c * left (x) gen (x) right, with left/right standard words of the algebra
struct BTerm {
  Scalar c;
  Path left;
  int gen = 0;
  Path right;
};

// Complex of free bimodules P_i = Lambda (x) K_i (x) Lambda given on generators.
struct BimoduleComplex {
  std::vector<std::vector<BGen>> gens;              // stage i generators; stage 0 = vertices
  std::vector<std::vector<std::vector<BTerm>>> diff;  // diff[i][g] for i >= 1 (diff[0] empty)

  int length() const;  // last nonzero stage, -1 if none
  int num_stages() const { return static_cast<int>(gens.size()); }
  // the element of the path algebra represented by a generator:
  // sum over terms with trivial right factor of c * left * path(gen)
  Element gen_path(int stage, int g) const;
};

// Minimal graded bimodule resolution computed degree by degree, up to stage m.
// Requires a finite-dimensional algebra.
BimoduleComplex bimodule_resolution(const GradedAlgebra& A, int m);

// checks that delta_{i-1} o delta_i = 0 for all i
bool complex_squares_to_zero(const GradedAlgebra& A, const BimoduleComplex& C);

// all differential coefficients have a left or right factor of positive degree
bool is_minimal(const BimoduleComplex& C);

// Exactness of the augmented complex ... -> P_1 -> P_0 -> Lambda -> 0 in homological
// degrees <= upto, checked by ranks in every (x, y, internal degree) block with
// internal degree <= max_degree.
bool complex_is_exact(const GradedAlgebra& A, const BimoduleComplex& C, int upto, int max_degree);

// Generator-level isomorphism of two resolutions of the same algebra through stage `upto`:
// transports C1's differential along scalar generator maps and solves for the next map.
// Only valid when both are minimal with generators in matching degrees.
bool complexes_isomorphic(const GradedAlgebra& A, const BimoduleComplex& C1, const BimoduleComplex& C2, int upto);

// Names and quiver of Q together with one new arrow per top generator (y_g -> x_g).
struct DoubledQuiver {
  Quiver quiver;
  int first_new = 0;  // index of the first new arrow
  int stage = 0;      // stage whose generators give the new arrows
};
DoubledQuiver doubled_quiver(const Quiver& q, const BimoduleComplex& C, int d);

// delta'_i(h^dual) for every generator h of stage i-1, written as path-algebra
// elements of the doubled quiver: mu * a_g * lambda. Only meaningful for i = d
// as paths; for other i use dualized_matrix.
std::vector<Element> dualized_relations(const DoubledQuiver& dq, const BimoduleComplex& C);

// Linear part of delta'_{i+1} on K_i^dual: for each h in stage i the vector of
// coefficients on (mu, g, lambda) with |mu| + |lambda| = 1 (linear terms only).
// Returns dim of the kernel, i.e. Ext^i(Lambda, Lambda^en)_{-i} for linear complexes.
int dual_linear_kernel_dim(const BimoduleComplex& C, int i);

// Finite-dimensional graded bimodule: basis vectors with (left vertex, right vertex, degree),
// left and right action of arrows. A right module is encoded with left_acts = false
// (its "left vertex" is meaningless and set to 0).
struct BimoduleRep {
  struct Basis {
    int x, y, degree;
  };
  std::vector<Basis> basis;
  bool left_acts = true;
  std::vector<std::vector<SparseVec>> left;   // left[a][e] = a . e  (e with x_e = tgt a)
  std::vector<std::vector<SparseVec>> right;  // right[a][e] = e . a (e with y_e = src a)

  int dim() const { return static_cast<int>(basis.size()); }
  std::map<int, int> graded_dims() const;
  int dim_in_degree(int n) const;
};

BimoduleRep from_module(const Quiver& q, const ModuleRep& m);
ModuleRep to_module(const Quiver& q, const BimoduleRep& b);

// Ext^d(D Lambda, Lambda) realized as (Lambda (x) K_d^dual (x) Lambda) / Im delta'_d.
// Generator a_g has internal degree -D_g.
BimoduleRep ext_bimodule(const GradedAlgebra& A, const BimoduleComplex& C, int d);

// X (x)_Lambda Y. Results blocks are independent, so the quotient is computed blockwise.
BimoduleRep tensor(const Quiver& q, const BimoduleRep& X, const BimoduleRep& Y);

}  // namespace preproj
