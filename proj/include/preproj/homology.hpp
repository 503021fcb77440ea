#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "preproj/preprojective.hpp"

namespace preproj {

// Minimal graded resolutions of the simples (degree 0) through stage m.
std::vector<GradedResolution> graded_simple_resolutions(const GradedAlgebra& A, int m);

// Graded resolution checks: every stage exact in the computed window, all
// differential entries of positive degree. Independent of resolve_module's bookkeeping.
bool resolution_is_exact(const GradedAlgebra& A, const ModuleRep& X, const GradedResolution& R);
bool resolution_is_minimal(const GradedResolution& R);

struct SelfInjectivity {
  bool selfinjective = false;
  int cover_dim = 0;  // dim of the projective cover of D A
  int dual_dim = 0;   // dim A
  std::vector<int> nakayama;  // v -> vertex of soc(e_v A), when self-injective
};
SelfInjectivity is_selfinjective(const GradedAlgebra& A);

struct AlmostKoszul {
  int p = -1;                  // top degree
  std::vector<int> q;          // every q >= 1 (up to the search bound) satisfying the definition
  int linear_through = -1;     // last stage generated in its own degree
  bool holds() const { return !q.empty(); }
  std::string str() const;     // "none", "(p,q)" or "(p,q) for q in {...}"
};
AlmostKoszul almost_koszul_verdict(const GradedAlgebra& A, int qmax);

// Omega^k(S) simple for each simple S: smallest such k per vertex (-1 if none up to kmax).
struct Periodicity {
  std::vector<int> period;
  int expected = 0;       // d + 2
  bool all_expected = false;  // Omega^{d+2}(S) simple for every S
  bool proper_divisor = false;  // some minimal period strictly divides d + 2
};
Periodicity simple_periodicity(const GradedAlgebra& A, int d);

struct RiExtEntry {
  int vertex = 0;
  int grade = 0;
  std::vector<std::map<int, int>> ext;  // Ext^i(T, Pi) per map degree, i <= d+1, inside the reliable range
  std::vector<int> reliable_max;        // largest reliable map degree per i
  bool pass = false;
};
struct RiExtReport {
  int d = 0;
  int truncation = 0;
  int window = 0;
  std::vector<RiExtEntry> entries;
  bool pass() const;
};
// For simples T concentrated in grade j (0 <= j < window): Ext^i(T, Pi) = 0 for i <= d and
// Ext^{d+1}(T, Pi) one-dimensional in map degree -(j + d + 1) (tensor shift 1).
// Pi must be truncated at >= window + d + 2.
RiExtReport ri_ext_pattern(const GradedAlgebra& Pi, int d, int window);

// Gamma (+) D Gamma with D Gamma placed in degrees d+1-i.
// (a, f)(b, g) = (ab, ag + (-1)^{d deg b} f b), (a f)(x) = f(x a), (f b)(x) = f(b x).
class TrivialExtension {
 public:
  TrivialExtension(const GradedAlgebra& gamma, int d);
  int dim() const { return 2 * n_; }
  int degree(int i) const;
  std::map<int, int> graded_dims() const;
  // product of basis elements i, j
  SparseVec mul(int i, int j) const;
  SparseVec mul(const SparseVec& x, const SparseVec& y) const;
  bool is_associative() const;
  int gamma_index(int degree, int b) const { return off_[degree] + b; }
  int dual_index(int degree, int b) const { return n_ + off_[degree] + b; }
  const GradedAlgebra& gamma() const { return G_; }
  int d() const { return d_; }

 private:
  const GradedAlgebra& G_;
  int d_;
  int n_ = 0;
  std::vector<int> off_;
  std::vector<std::pair<int, int>> pos_;  // global Gamma index -> (degree, basis)
};

struct PhiComparison {
  bool well_defined = false;  // relations of Pi^! map to zero
  std::map<int, int> pi_dual_dims, triv_dims, kernel, cokernel;
  int bound = 0;
  bool surjective() const;
  bool injective() const;
  std::string verdict() const;  // "iso", "surjective", "not surjective"
  std::optional<bool> socle_criterion;  // (Lambda^!)_d == soc, when computable
};
// Pi^! -> Triv_{d+1}(Lambda^!) on generators, compared degreewise up to bound.
PhiComparison phi_compare(const Preprojective& P, int bound);

}  // namespace preproj
