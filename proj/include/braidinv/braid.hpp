#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace braidinv {

/// Edge (i, j) with 1 <= i < j <= n+1; corresponds to the hyperplane h_ij.
/// In the hands/fingers model it is the finger (i, j) of the hand with wrist j.
struct Edge {
    int i;
    int j;

    Edge(int i_, int j_);  // canonicalizes nothing: requires i_ < j_

    /// Canonical edge from an arbitrary pair; flipped reports whether the
    /// input was given as (j, i) with j > i.
    static Edge canonical(int a, int b, bool& flipped);

    int wrist() const { return j; }
    int finger() const { return i; }

    auto operator<=>(const Edge&) const = default;
};

/// A set of edges in the braid arrangement of rank n (set semantics,
/// edges kept sorted lexicographically).
struct Handful {
    int n = 0;
    std::vector<Edge> edges;  // sorted, no duplicates

    Handful() = default;
    Handful(int n_, std::vector<Edge> edges_);

    int degree() const { return static_cast<int>(edges.size()); }

    std::string str(char letter = 'e') const;
    static Handful parse(int n, const std::string& text, char letter = 'e');

    auto operator<=>(const Handful&) const = default;
};

/// Bijection of {1, ..., m}.
class Permutation {
public:
    /// Identity on {1, ..., m}.
    explicit Permutation(int m);
    /// From 1-based images; validated for bijectivity.
    explicit Permutation(std::vector<int> images);

    static Permutation transposition(int m, int a, int b);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x - 1]; }

    Permutation compose(const Permutation& other) const;  // this after other
    Permutation inverse() const;
    bool fixes(int x) const { return (*this)(x) == x; }
    bool is_identity() const;

    /// +1 or -1: parity as a product of transpositions.
    int sign() const;

    const std::vector<int>& images() const { return images_; }
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// All C(n+1, 2) hyperplane edges of the rank-n braid arrangement,
/// in lexicographic order on (i, j).
std::vector<Edge> hyperplanes(int n);

/// True iff no two edges share their wrist (larger endpoint): Barcelo's
/// at-most-one-finger-per-hand criterion for no-broken-circuit sets.
bool is_nbc(const Handful& h);

/// Number of NBC handfuls of rank n and degree d: the elementary symmetric
/// polynomial e_d(1, 2, ..., n).
long long nbc_count(int n, int d);

/// All NBC handfuls of degree d, ordered lexicographically on the sorted
/// wrist sequence and then on the finger labels.
std::vector<Handful> nbc_monomials(int n, int d);

/// The minimal broken circuits of A_n: all pairs {(i,k), (j,k)} with
/// i < j < k <= n+1 (a rank-2 circuit {h_ij, h_ik, h_jk} minus its
/// lex-smallest element).
std::vector<Handful> minimal_broken_circuits(int n);

/// Index of an NBC handful within the nbc_monomials(n, degree) order.
long long rank_nbc(const Handful& h);

/// Inverse of rank_nbc.
Handful unrank_nbc(int n, int d, long long index);

}  // namespace braidinv
