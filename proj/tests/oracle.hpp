#pragma once
// Brute-force reference computations written without the library's linear algebra,
// path enumeration or quotient engine. Dense rational matrices throughout.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "preproj/presentation.hpp"

namespace oracle {

using Row = std::vector<mpq_class>;

// rank by dense Gaussian elimination
int rank(std::vector<Row> m);

// arrow sequences of a given length, each a composable walk; length 0 gives one entry per vertex
struct Walk {
  int src, tgt;
  std::vector<int> arrows;
};
std::vector<Walk> walks(const preproj::Quiver& q, int n);

// dim of the degree-n part of T(V)/(relations): #walks - rank of span{u r w}
int quotient_dim(const preproj::Presentation& p, int n);

// sum over degrees until a degree vanishes (or max_degree, returning -1 if not reached)
int quotient_total_dim(const preproj::Presentation& p, int max_degree);

}  // namespace oracle
