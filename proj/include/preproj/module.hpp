#pragma once

#include <map>
#include <vector>

#include "preproj/algebra.hpp"

namespace preproj {

// Graded right module given by a representation: basis vectors per vertex
// (each with a degree) and one matrix per arrow, rows = source basis.
struct ModuleRep {
  int nv = 0;
  std::vector<std::vector<int>> degrees;
  std::vector<std::vector<SparseVec>> act;
  bool truncated = false;  // arrows leaving the top computed degree act by zero

  static ModuleRep zero(const Quiver& q);
  int dim(int v) const { return static_cast<int>(degrees[v].size()); }
  int total_dim() const;
  std::vector<int> dim_vector() const;
  bool is_zero() const { return total_dim() == 0; }
  int min_degree() const;
  int max_degree() const;
  // basis indices at vertex v of degree n
  std::vector<int> block(int v, int n) const;
  SparseVec apply_arrow(int a, const SparseVec& x) const;
  SparseVec apply_path(const Path& p, const SparseVec& x) const;
  SparseVec apply(const GradedAlgebra& A, const AVec& lambda, const SparseVec& x) const;
  bool satisfies(const Presentation& p) const;
  // dims per (vertex, degree)
  std::map<std::pair<int, int>, int> graded_dims() const;
};

ModuleRep direct_sum(const Quiver& q, const std::vector<ModuleRep>& ms);
ModuleRep projective_module(const GradedAlgebra& A, int v, int shift = 0);
ModuleRep regular_module(const GradedAlgebra& A);
ModuleRep dual_regular_module(const GradedAlgebra& A);
ModuleRep simple_module(const Quiver& q, int v, int degree = 0);
ModuleRep shift_module(const ModuleRep& m, int s);

// Quotient of F by the subspace spanned by vectors[v] at each vertex (must be a submodule).
ModuleRep quotient_module(const Quiver& q, const ModuleRep& F, const std::vector<std::vector<SparseVec>>& vectors);

struct Generator {
  int vertex = 0;
  int degree = 0;
  bool operator==(const Generator& o) const { return vertex == o.vertex && degree == o.degree; }
};

// Minimal graded projective resolution of a right module.
struct GradedResolution {
  std::vector<std::vector<Generator>> gens;  // stage i generators
  // diff[i][g]: image of generator g of stage i (i >= 1) in P_{i-1}
  std::vector<std::vector<std::vector<std::pair<int, AVec>>>> diff;
  std::vector<SparseVec> aug;  // stage 0 generators as vectors of the module
  // syzygy[k] = dims of Omega^k per (vertex, degree), k >= 1; syzygy[0] unused
  std::vector<std::map<std::pair<int, int>, int>> syzygy;
  bool partial = false;     // algebra truncated: only degrees <= window are exact
  int window = 0;
  int length() const;       // number of nonzero stages - 1, or -1
  bool is_linear(int stage, int shift = 0) const;  // all generators in degree stage+shift
  int syzygy_dim(int k) const;
};

// resolves X through stage m (P_0..P_m) and records Omega^1..Omega^{m+1}
GradedResolution resolve_module(const GradedAlgebra& A, const ModuleRep& X, int m);

// graded Ext^i(X, Y)_j dims for i in [0, imax] from a resolution of X (needs stage imax+1)
// result[i][j] = dim; j is the degree of homogeneous maps
std::vector<std::map<int, int>> ext_dims(const GradedAlgebra& A, const GradedResolution& R, const ModuleRep& Y,
                                         int imax, int jmin, int jmax);
std::vector<std::map<int, int>> ext_dims(const GradedAlgebra& A, const GradedResolution& R, const ModuleRep& Y,
                                         int imax);

}  // namespace preproj
