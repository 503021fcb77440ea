#pragma once

#include <string>
#include <vector>

#include "preproj/preprojective.hpp"

namespace preproj {

// Vertices: (d+1)-tuples of nonnegative integers summing to s-1, in lexicographic order,
// named by joining the entries with dots. Arrow a_<x>_<i> runs x -> x + f_i where
// f_i = e_{i+1} - e_i (i <= d) and f_{d+1} = e_1 - e_{d+1}; it exists iff x_i >= 1.
std::vector<std::vector<int>> typea_vertices(int d, int s);
std::string typea_vertex_name(const std::vector<int>& x);
std::string typea_arrow_name(const std::vector<int>& x, int i);

// Lambda^(d,s): arrows with i <= d, relations for 1 <= i < j <= d
Presentation typea_presentation(int d, int s);
// expected presentation of Pi: arrows with i <= d+1, relations for 1 <= i < j <= d+1
Presentation typea_expected_preprojective(int d, int s);
// k_x = e_x sum_sigma sgn(sigma) a_{sigma(1)} ... a_{sigma(d)} for x_1 != 0
std::vector<Element> typea_kd_basis(int d, int s);

// x lies in V^r R V^{n-2-r} for every r (n = degree of x)
bool in_koszul_intersections(const Presentation& p, const Element& x);

// Computed Pi rewritten over the expected quiver: a new arrow dual to k_t = c k_x becomes
// (1/c) a_{y,d+1} with y the target of k_x. Throws if some k_t is not a multiple of a k_x.
Presentation typea_map_preprojective(const Preprojective& P, int d, int s);

}  // namespace preproj
