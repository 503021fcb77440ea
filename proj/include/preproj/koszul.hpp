#pragma once

#include <map>
#include <optional>
#include <vector>

#include "preproj/bimodule.hpp"

namespace preproj {

// K_0 = vertices, K_1 = arrows, K_2 = R, K_j = (V K_{j-1}) cap (K_{j-1} V).
struct KoszulTower {
  std::vector<Subspace> K;
  int top() const { return static_cast<int>(K.size()) - 1; }
};

// stops at the first zero space (which is not stored)
KoszulTower koszul_tower(const Presentation& p, int up_to);

// delta_i(k) = sum_a a (x) k_a (x) 1 + (-1)^i sum_b 1 (x) k^b (x) b
BimoduleComplex koszul_complex(const Presentation& p, const KoszulTower& t);

// dual arrow names toggle a trailing '!'; relations are the orthogonal complement of R
Presentation quadratic_dual(const Presentation& p);

struct KoszulReport {
  int bound = 0;
  bool linear = true;
  std::optional<int> first_failure;  // first stage with a generator outside degree = stage
  bool partial = false;              // algebra truncated; only degrees <= window were seen
  int window = 0;
  std::optional<bool> complex_exact;  // quadratic inputs only
};

KoszulReport is_koszul_up_to(const Presentation& p, int N);

// dims of soc(Lambda^!) as a bimodule, per degree, for degrees <= bound
std::map<int, int> dual_socle_profile(const Presentation& p, int bound);

ModuleRep degree_zero_module(const Quiver& q);

}  // namespace preproj
