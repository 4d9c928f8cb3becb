#pragma once

#include "braidinv/element.hpp"

namespace braidinv {
namespace os {

using OSElement = AlgElement;

/// NBC expansion of the wedge product of the listed generators.
OSElement straighten(int n, const std::vector<std::pair<int, int>>& edges);

/// Degree-1 generator e_ij.
OSElement gen(int n, int i, int j);

// The four invariant elements (fixed by every permutation fixing n+1).
// a = sum e_ij (i < j <= n), m = sum e_{i,n+1},
// c = sum (e_ij e_{i,n+1} + e_ij e_{j,n+1}), g = am - pc with p = floor((n+1)/2).
OSElement elem_a(int n);
OSElement elem_m(int n);
OSElement elem_c(int n);
OSElement elem_g(int n);

/// p = floor((n+1)/2).
int half_param(int n);

}  // namespace os
}  // namespace braidinv
