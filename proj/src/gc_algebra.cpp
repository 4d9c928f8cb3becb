#include "braidinv/gc_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidinv {
namespace gc {

FreeGCElement FreeGCElement::monomial(const GCMonomial& m, const Scalar& c) {
    FreeGCElement out;
    out.add(m, c);
    return out;
}

void FreeGCElement::add(const GCMonomial& m, const Scalar& c) {
    if (m.eps < 0 || m.eps > 1 || m.delta < 0 || m.delta > 1 || m.d < 0)
        throw std::domain_error("FreeGCElement: bad monomial");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FreeGCElement FreeGCElement::operator-() const {
    FreeGCElement out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

FreeGCElement& FreeGCElement::operator+=(const FreeGCElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

FreeGCElement& FreeGCElement::operator-=(const FreeGCElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

FreeGCElement operator*(const Scalar& s, FreeGCElement a) {
    if (s.is_zero()) return FreeGCElement::zero();
    for (auto& [m, c] : a.terms_) c *= s;
    return a;
}

FreeGCElement operator*(const FreeGCElement& a, const FreeGCElement& b) {
    FreeGCElement out;
    for (const auto& [m1, c1] : a.terms_) {
        for (const auto& [m2, c2] : b.terms_) {
            if ((m1.eps && m2.eps) || (m1.delta && m2.delta)) continue;  // squares vanish
            // moving alpha of the second factor past mu of the first
            const int sign = (m1.delta && m2.eps) ? -1 : 1;
            out.add({m1.eps + m2.eps, m1.delta + m2.delta, m1.d + m2.d},
                    Scalar(sign) * c1 * c2);
        }
    }
    return out;
}

std::string FreeGCElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Scalar mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string mono;
        if (m.eps) mono += "alpha";
        if (m.delta) mono += (mono.empty() ? "" : "*") + std::string("mu");
        if (m.d > 0) {
            if (!mono.empty()) mono += "*";
            mono += "gamma";
            if (m.d > 1) mono += "^" + std::to_string(m.d);
        }
        if (mono.empty()) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str() + "*";
            out += mono;
        }
    }
    return out;
}

FreeGCElement gc_reduce(const FreeGCElement& x, int n, int p_override) {
    if (n < 2) throw std::domain_error("gc_reduce: requires n >= 2");
    const int p = p_override > 0 ? p_override : (n + 1) / 2;
    FreeGCElement out;
    for (const auto& [m, c] : x.terms()) {
        if (m.d >= p) continue;  // gamma^p = 0
        if (n % 2 == 1 && m.d == p - 1 && m.eps == 1) {
            if (m.delta == 1) continue;  // alpha*mu*gamma^{p-1} = 0
            out.add({0, 1, m.d}, Scalar(p - 1) * c);
            continue;
        }
        out.add(m, c);
    }
    return out;
}

std::vector<GCMonomial> quotient_basis(int n, int p_override) {
    if (n < 2) throw std::domain_error("quotient_basis: requires n >= 2");
    const int p = p_override > 0 ? p_override : (n + 1) / 2;
    std::vector<GCMonomial> basis;
    for (int d = 0; d < p; ++d) {
        for (int eps = 0; eps <= 1; ++eps) {
            for (int delta = 0; delta <= 1; ++delta) {
                if (n % 2 == 1 && d == p - 1 && eps == 1) continue;
                basis.push_back({eps, delta, d});
            }
        }
    }
    std::stable_sort(basis.begin(), basis.end(), [](const GCMonomial& a, const GCMonomial& b) {
        return a.degree() < b.degree();
    });
    return basis;
}

std::vector<long long> quotient_hilbert(int n) {
    std::vector<long long> coeffs;
    for (const auto& m : quotient_basis(n)) {
        if (static_cast<int>(coeffs.size()) <= m.degree()) coeffs.resize(m.degree() + 1, 0);
        ++coeffs[m.degree()];
    }
    return coeffs;
}

}  // namespace gc
}  // namespace braidinv
