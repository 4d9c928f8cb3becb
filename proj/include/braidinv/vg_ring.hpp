#pragma once

#include "braidinv/element.hpp"

namespace braidinv {
namespace vg {

using VGElement = AlgElement;

/// NBC expansion of a product of generators; x_ji enters as -x_ij.
VGElement straighten(int n, const std::vector<std::pair<int, int>>& gens);

/// Degree-1 generator x_ij (i < j) or x_ji = -x_ij (i > j).
VGElement gen(int n, int i, int j);

/// Which coordinate the acting symmetric group S_n leaves fixed. The two
/// conventions are conjugate; FixLast is the default throughout.
enum class Convention { FixLast, FixFirst };

/// The degree-1 invariant generator: sum of x_{i,n+1} for i <= n under
/// FixLast, sum of x_{1,i} for i >= 2 under FixFirst.
VGElement elem_z(int n, Convention conv = Convention::FixLast);

}  // namespace vg
}  // namespace braidinv
