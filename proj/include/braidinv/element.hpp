#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidinv/braid.hpp"
#include "braidinv/scalar.hpp"

namespace braidinv {

enum class RingKind { OS, VG };

/// Sorted list of distinct edges: an NBC basis monomial once reduced.
using Monomial = std::vector<Edge>;

/// Sparse linear combination of NBC monomials in OS_n or VG_n.
/// Elements are kept in NBC normal form at all times, so equality is
/// term-map equality.
class AlgElement {
public:
    AlgElement(RingKind kind, int n) : kind_(kind), n_(n) {}

    static AlgElement zero(RingKind kind, int n) { return AlgElement(kind, n); }
    static AlgElement one(RingKind kind, int n);

    /// NBC-expansion of a raw generator word. Pairs may be given in either
    /// orientation; (j, i) with j > i means e_ji = e_ij in OS and
    /// x_ji = -x_ij in VG. Repeated generators give 0; in OS the wedge
    /// reordering sign applies, and two-fingers-on-one-hand patterns are
    /// rewritten onto the NBC basis.
    static AlgElement from_word(RingKind kind, int n,
                                const std::vector<std::pair<int, int>>& pairs);

    RingKind kind() const { return kind_; }
    int n() const { return n_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    /// Degree of a homogeneous element; domain error on mixed degrees or 0.
    int degree() const;

    Scalar coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);  // m must be NBC

    AlgElement operator-() const;
    AlgElement& operator+=(const AlgElement& o);
    AlgElement& operator-=(const AlgElement& o);
    friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
    friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
    friend AlgElement operator*(const Scalar& s, AlgElement a);
    friend bool operator==(const AlgElement& a, const AlgElement& b);

    /// Ring product (graded-commutative for OS, commutative for VG).
    friend AlgElement operator*(const AlgElement& a, const AlgElement& b);

    AlgElement pow(int k) const;

    /// Relabels every edge (i, j) to (p(i), p(j)). In OS the generators carry
    /// no sign (e_ij = e_ji) and all signs come from wedge reordering; in VG
    /// a flipped edge contributes a factor of -1 (x_ji = -x_ij).
    AlgElement act(const Permutation& p) const;

    std::string str() const;
    static AlgElement parse(RingKind kind, int n, const std::string& text);

private:
    RingKind kind_;
    int n_;
    std::map<Monomial, Scalar> terms_;
};

/// Alternating omit-one-factor differential on OS_n (domain error on VG).
AlgElement differential(const AlgElement& x);

char ring_letter(RingKind kind);

}  // namespace braidinv
