#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "braidinv/scalar.hpp"

namespace braidinv {
namespace gc {

/// Basis monomial alpha^eps mu^delta gamma^d of the free graded-commutative
/// algebra on |alpha| = |mu| = 1, |gamma| = 2.
struct GCMonomial {
    int eps = 0;    // 0 or 1
    int delta = 0;  // 0 or 1
    int d = 0;      // gamma exponent, >= 0

    int degree() const { return eps + delta + 2 * d; }
    auto operator<=>(const GCMonomial&) const = default;
};

/// Element of Q{alpha, mu, gamma}: alpha and mu anticommute and square to
/// zero, gamma is central.
class FreeGCElement {
public:
    FreeGCElement() = default;
    static FreeGCElement zero() { return {}; }
    static FreeGCElement one() { return monomial({0, 0, 0}); }
    static FreeGCElement monomial(const GCMonomial& m, const Scalar& c = Scalar(1));

    const std::map<GCMonomial, Scalar>& terms() const { return terms_; }
    void add(const GCMonomial& m, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }

    FreeGCElement operator-() const;
    FreeGCElement& operator+=(const FreeGCElement& o);
    FreeGCElement& operator-=(const FreeGCElement& o);
    friend FreeGCElement operator+(FreeGCElement a, const FreeGCElement& b) { return a += b; }
    friend FreeGCElement operator-(FreeGCElement a, const FreeGCElement& b) { return a -= b; }
    friend FreeGCElement operator*(const Scalar& s, FreeGCElement a);
    friend FreeGCElement operator*(const FreeGCElement& a, const FreeGCElement& b);
    friend bool operator==(const FreeGCElement& a, const FreeGCElement& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    std::map<GCMonomial, Scalar> terms_;
};

/// Canonical representative modulo the ideal I_n with p = floor((n+1)/2):
/// gamma^p -> 0 always; for odd n additionally
/// alpha gamma^{p-1} -> (p-1) mu gamma^{p-1} and (as a two-sided-ideal
/// consequence, by left-multiplying the relation by mu)
/// alpha mu gamma^{p-1} -> 0. Pass p_override to corrupt the ideal for
/// negative-control tests.
FreeGCElement gc_reduce(const FreeGCElement& x, int n, int p_override = -1);

/// Monomial basis of the quotient Q{alpha,mu,gamma}/I_n, ordered by degree.
std::vector<GCMonomial> quotient_basis(int n, int p_override = -1);

/// Degree-wise dimensions of the quotient.
std::vector<long long> quotient_hilbert(int n);

}  // namespace gc
}  // namespace braidinv
