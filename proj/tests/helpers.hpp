#pragma once

#include <string>

#include "preproj/presentation.hpp"

inline std::string fixture_path(const std::string& name) { return std::string(PREPROJ_FIXTURES) + "/" + name + ".alg"; }
inline preproj::Presentation fixture(const std::string& name) { return preproj::load_presentation(fixture_path(name)); }

// fixtures with finite-dimensional algebras
inline const char* const kFiniteFixtures[] = {"a2", "a3", "a3_sink", "kronecker", "beilinson", "commsquare",
                                              "a4_ab_bc", "a6_ab_bc_de", "a6_cubic", "a4_ab", "a9_rad4"};
// quadratic fixtures whose algebra is Koszul
inline const char* const kKoszulFixtures[] = {"a2", "a3", "a3_sink", "kronecker", "beilinson",
                                              "commsquare", "a4_ab_bc", "a6_ab_bc_de", "a4_ab"};
