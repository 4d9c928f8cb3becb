#pragma once

#include <vector>

#include "braidinv/element.hpp"
#include "braidinv/sparse_matrix.hpp"

namespace braidinv {
namespace invariants {

/// Which symmetric group acts: S_n is the stabilizer of the label n+1
/// inside S_{n+1}; Sn1 is the full S_{n+1}.
enum class Group { Sn, Sn1 };

/// Adjacent transpositions generating the chosen group inside S_{n+1}.
std::vector<Permutation> group_generators(int n, Group group = Group::Sn);

/// All elements of the chosen group as permutations of {1, ..., n+1}.
std::vector<Permutation> group_elements(int n, Group group = Group::Sn);

/// NBC-coordinate vector of a homogeneous element (indexing by rank_nbc).
SparseVector to_coords(const AlgElement& x, int d);
AlgElement from_coords(RingKind kind, int n, int d, const SparseVector& v);

/// Matrix of x -> p.x on the degree-d NBC basis (column j = image of the
/// j-th basis monomial).
SparseMatrix action_matrix(RingKind kind, int n, int d, const Permutation& p);

/// Basis of the invariant subspace in degree d, computed as the kernel of
/// the stacked (sigma - id) matrices over the group generators.
std::vector<AlgElement> invariant_subspace(RingKind kind, int n, int d,
                                           Group group = Group::Sn);

/// Averaging projection (1/|G|) sum_g g.x onto the invariants.
AlgElement reynolds(const AlgElement& x, Group group = Group::Sn);

/// Trace of the action of p on the degree-d component.
Scalar action_trace(RingKind kind, int n, int d, const Permutation& p);

/// Invariant dimension by character orthogonality: (1/|G|) sum over
/// conjugacy classes of |class| * trace(representative).
long long character_dim(RingKind kind, int n, int d, Group group = Group::Sn);

/// Degree-wise invariant dimensions (kernel method), trailing zeros trimmed.
std::vector<long long> hilbert_invariants(RingKind kind, int n, Group group = Group::Sn);

/// Degree-wise dimensions of the full ring: e_d(1, ..., n).
std::vector<long long> hilbert_full(int n);

/// True iff x is fixed by every generator of the group.
bool is_invariant(const AlgElement& x, Group group = Group::Sn);

}  // namespace invariants
}  // namespace braidinv
