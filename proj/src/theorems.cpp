#include "braidinv/theorems.hpp"

#include <map>

#include "braidinv/invariants.hpp"
#include "braidinv/os_algebra.hpp"
#include "braidinv/sparse_matrix.hpp"
#include "braidinv/symfunc.hpp"
#include "braidinv/vg_ring.hpp"

namespace braidinv {
namespace theorems {

using invariants::Group;
using nlohmann::json;

nlohmann::json VerificationReport::to_json() const {
    json j;
    j["statement"] = statement;
    j["n"] = n;
    j["pass"] = pass;
    if (!detail.is_null()) j["detail"] = detail;
    return j;
}

namespace {

json fail_witness(const std::string& what, const std::string& witness) {
    return json{{"failed", what}, {"witness", witness}};
}

// Rank of the column span of same-degree homogeneous elements.
int coord_rank(const std::vector<AlgElement>& xs, int n, int d) {
    const int dim = static_cast<int>(nbc_count(n, d));
    SparseMatrix m(dim, static_cast<int>(xs.size()));
    for (std::size_t j = 0; j < xs.size(); ++j)
        for (const auto& [idx, c] : invariants::to_coords(xs[j], d))
            m.set(idx, static_cast<int>(j), c);
    return rank(m);
}

bool linearly_independent(const std::vector<AlgElement>& xs, int n, int d) {
    return coord_rank(xs, n, d) == static_cast<int>(xs.size());
}

// Matrix of the differential OS_{n,d} -> OS_{n,d-1} on NBC coordinates.
SparseMatrix differential_matrix(int n, int d) {
    const int rows = static_cast<int>(nbc_count(n, d - 1));
    const int cols = static_cast<int>(nbc_count(n, d));
    SparseMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j) {
        AlgElement b(RingKind::OS, n);
        b.add_term(unrank_nbc(n, d, j).edges, Scalar(1));
        for (const auto& [idx, c] : invariants::to_coords(differential(b), d - 1))
            m.set(idx, j, c);
    }
    return m;
}

}  // namespace

VerificationReport verify_vg_presentation(int n, const AlgElement* z_override) {
    VerificationReport r{"vg_presentation", n, false, {}};
    AlgElement z = z_override ? *z_override : vg::elem_z(n);
    if (!invariants::is_invariant(z)) {
        r.detail = fail_witness("z is not S_n-invariant", z.str());
        return r;
    }
    AlgElement zk = AlgElement::one(RingKind::VG, n);
    for (int d = 1; d <= n; ++d) {
        zk = zk * z;
        if (zk.is_zero()) {
            r.detail = fail_witness("z^" + std::to_string(d) + " = 0", z.str());
            return r;
        }
    }
    if (!(zk * z).is_zero()) {
        r.detail = fail_witness("z^" + std::to_string(n + 1) + " != 0", (zk * z).str());
        return r;
    }
    zk = AlgElement::one(RingKind::VG, n);
    for (int d = 0; d <= n; ++d) {
        if (d > 0) zk = zk * z;
        auto basis = invariants::invariant_subspace(RingKind::VG, n, d);
        if (basis.size() != 1) {
            r.detail = fail_witness("invariant dimension != 1 in degree " + std::to_string(d),
                                    std::to_string(basis.size()));
            return r;
        }
        // dim 1: z^d spans iff the two elements are proportional
        std::vector<AlgElement> pair{zk, basis[0]};
        if (coord_rank(pair, n, d) != 1) {
            r.detail = fail_witness("z^" + std::to_string(d) + " does not span degree " +
                                        std::to_string(d),
                                    zk.str());
            return r;
        }
    }
    r.pass = true;
    return r;
}

VerificationReport verify_os_hilbert(int n) {
    VerificationReport r{"os_hilbert", n, false, {}};
    // (1+t)(1 + t + ... + t^{n-1})
    std::vector<long long> expected(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        expected[i] += 1;
        expected[i + 1] += 1;
    }
    auto actual = invariants::hilbert_invariants(RingKind::OS, n);
    r.detail = json{{"expected", expected}, {"actual", actual}};
    r.pass = actual == expected;
    return r;
}

VerificationReport verify_partial_identities(int n) {
    VerificationReport r{"partial_identities", n, false, {}};
    const int p = os::half_param(n);
    const AlgElement a = os::elem_a(n), m = os::elem_m(n), c = os::elem_c(n), g = os::elem_g(n);
    const AlgElement unit = AlgElement::one(RingKind::OS, n);
    const Scalar binom(static_cast<long>(n) * (n - 1) / 2);
    auto check = [&](const std::string& name, const AlgElement& lhs, const AlgElement& rhs) {
        if (lhs == rhs) return true;
        r.detail = fail_witness(name, (lhs - rhs).str());
        return false;
    };
    if (!check("d(a) = C(n,2)", differential(a), binom * unit)) return r;
    if (!check("d(m) = n", differential(m), Scalar(n) * unit)) return r;
    if (!check("d(am) = -na + C(n,2)m", differential(a * m), Scalar(-n) * a + binom * m))
        return r;
    for (int d = 1; d <= p + 1; ++d) {
        AlgElement cd1 = c.pow(d - 1);
        AlgElement cd = cd1 * c;
        if (!check("d(c^" + std::to_string(d) + ")", differential(cd),
                   Scalar(-2 * d) * (a * cd1) + Scalar(static_cast<long>(d) * (n - 1)) * (m * cd1)))
            return r;
        if (!check("d(amc^" + std::to_string(d) + ")", differential(a * m * cd),
                   Scalar(-n) * (a * cd) + binom * (m * cd)))
            return r;
    }
    AlgElement dg_expected = n % 2 == 0 ? AlgElement::zero(RingKind::OS, n)
                                        : a - Scalar(p - 1) * m;
    if (!check("d(g)", differential(g), dg_expected)) return r;
    r.pass = true;
    return r;
}

VerificationReport verify_chain_complex(int n) {
    VerificationReport r{"os_chain_complex", n, false, {}};
    // d o d = 0 on every NBC basis monomial
    for (int d = 2; d <= n; ++d) {
        const long long dim = nbc_count(n, d);
        for (long long j = 0; j < dim; ++j) {
            AlgElement b(RingKind::OS, n);
            b.add_term(unrank_nbc(n, d, j).edges, Scalar(1));
            AlgElement dd = differential(differential(b));
            if (!dd.is_zero()) {
                r.detail = fail_witness("d(d(x)) != 0", b.str());
                return r;
            }
        }
    }
    // exactness: rank(d_d) + rank(d_{d+1}) = dim OS_{n,d} for 1 <= d <= n
    std::vector<int> ranks(n + 2, 0);
    for (int d = 1; d <= n; ++d) ranks[d] = rank(differential_matrix(n, d));
    for (int d = 1; d <= n; ++d) {
        if (ranks[d] + ranks[d + 1] != nbc_count(n, d)) {
            r.detail = fail_witness("exactness fails in degree " + std::to_string(d),
                                    "rank " + std::to_string(ranks[d]) + " + " +
                                        std::to_string(ranks[d + 1]) +
                                        " != " + std::to_string(nbc_count(n, d)));
            return r;
        }
    }
    if (ranks[n] != nbc_count(n, n)) {
        r.detail = fail_witness("top-degree differential is not injective", "");
        return r;
    }
    r.pass = true;
    return r;
}

namespace {

// Graded invariant basis, with c-powers (use_g = false) or g-powers.
std::vector<AlgElement> power_product_basis(int n, bool use_g) {
    const int p = os::half_param(n);
    const AlgElement a = os::elem_a(n), m = os::elem_m(n);
    const AlgElement w = use_g ? os::elem_g(n) : os::elem_c(n);
    std::vector<AlgElement> out;
    const int dmax = n % 2 == 0 ? p - 1 : p - 2;
    for (int d = 0; d <= dmax; ++d) {
        AlgElement wd = w.pow(d);
        out.push_back(wd);
        out.push_back(a * wd);
        out.push_back(m * wd);
        out.push_back(a * m * wd);
    }
    if (n % 2 == 1) {
        AlgElement wp1 = w.pow(p - 1);
        out.push_back(wp1);
        out.push_back(a * wp1 + m * wp1);
    }
    return out;
}

}  // namespace

VerificationReport verify_basis_B(int n) {
    VerificationReport r{"basis_B", n, false, {}};
    if (n >= 3) {
        // {am, c} spans the whole two-dimensional invariant piece in degree 2
        std::vector<AlgElement> pair{os::elem_a(n) * os::elem_m(n), os::elem_c(n)};
        if (!linearly_independent(pair, n, 2)) {
            r.detail = fail_witness("{am, c} linearly dependent", (pair[0] - pair[1]).str());
            return r;
        }
    }
    for (bool use_g : {false, true}) {
        auto basis = power_product_basis(n, use_g);
        std::map<int, std::vector<AlgElement>> by_degree;
        for (const auto& b : basis) {
            if (!invariants::is_invariant(b)) {
                r.detail = fail_witness("basis element is not invariant", b.str());
                return r;
            }
            by_degree[b.degree()].push_back(b);
        }
        for (int d = 0; d <= n; ++d) {
            auto inv = invariants::invariant_subspace(RingKind::OS, n, d);
            const auto& elems = by_degree[d];
            if (elems.size() != inv.size()) {
                r.detail = fail_witness(
                    "degree " + std::to_string(d) + " count mismatch",
                    std::to_string(elems.size()) + " vs " + std::to_string(inv.size()));
                return r;
            }
            if (!elems.empty() && !linearly_independent(elems, n, d)) {
                r.detail = fail_witness("linear dependence in degree " + std::to_string(d),
                                        elems.front().str());
                return r;
            }
        }
    }
    r.pass = true;
    return r;
}

VerificationReport verify_ideal_relations(int n) {
    VerificationReport r{"ideal_relations", n, false, {}};
    const int p = os::half_param(n);
    const AlgElement a = os::elem_a(n), m = os::elem_m(n), g = os::elem_g(n);
    AlgElement gp1 = g.pow(p - 1);
    if (!(gp1 * g).is_zero()) {
        r.detail = fail_witness("g^p != 0", (gp1 * g).str());
        return r;
    }
    if (n % 2 == 1) {
        AlgElement lhs = a * gp1, rhs = Scalar(p - 1) * (m * gp1);
        if (!(lhs == rhs)) {
            r.detail = fail_witness("a g^{p-1} != (p-1) m g^{p-1}", (lhs - rhs).str());
            return r;
        }
    } else {
        std::vector<AlgElement> pair{a * gp1, m * gp1};
        if (!linearly_independent(pair, n, pair[0].degree())) {
            r.detail = fail_witness("{a g^{p-1}, m g^{p-1}} linearly dependent", pair[0].str());
            return r;
        }
    }
    r.pass = true;
    return r;
}

AlgElement phi(const gc::FreeGCElement& x, int n) {
    const AlgElement a = os::elem_a(n), m = os::elem_m(n), g = os::elem_g(n);
    AlgElement out = AlgElement::zero(RingKind::OS, n);
    for (const auto& [mono, c] : x.terms()) {
        AlgElement img = AlgElement::one(RingKind::OS, n);
        if (mono.eps) img = img * a;
        if (mono.delta) img = img * m;
        for (int i = 0; i < mono.d; ++i) img = img * g;
        out += c * img;
    }
    return out;
}

VerificationReport verify_presentation_iso(int n, int p_override) {
    VerificationReport r{"os_presentation", n, false, {}};
    auto basis = gc::quotient_basis(n, p_override);
    // (i) images form a graded basis of the invariant ring
    std::map<int, std::vector<AlgElement>> by_degree;
    for (const auto& mono : basis) {
        AlgElement img = phi(gc::FreeGCElement::monomial(mono), n);
        if (img.is_zero()) {
            r.detail = fail_witness("phi kills a quotient basis monomial",
                                    gc::FreeGCElement::monomial(mono).str());
            return r;
        }
        if (!invariants::is_invariant(img)) {
            r.detail = fail_witness("image is not invariant", img.str());
            return r;
        }
        by_degree[img.degree()].push_back(img);
    }
    for (int d = 0; d <= n; ++d) {
        auto inv = invariants::invariant_subspace(RingKind::OS, n, d);
        const auto& elems = by_degree[d];
        if (elems.size() != inv.size()) {
            r.detail = fail_witness("degree " + std::to_string(d) + " dimension mismatch",
                                    std::to_string(elems.size()) + " vs " +
                                        std::to_string(inv.size()));
            return r;
        }
        if (!elems.empty() && !linearly_independent(elems, n, d)) {
            r.detail = fail_witness("images dependent in degree " + std::to_string(d),
                                    elems.front().str());
            return r;
        }
    }
    // monomials of degree > n must die in the quotient too
    for (const auto& mono : basis) {
        if (mono.degree() > n) {
            r.detail = fail_witness("quotient basis monomial beyond top degree",
                                    gc::FreeGCElement::monomial(mono).str());
            return r;
        }
    }
    // (ii) multiplicativity on all basis pairs
    for (const auto& u : basis) {
        for (const auto& v : basis) {
            gc::FreeGCElement prod =
                gc::FreeGCElement::monomial(u) * gc::FreeGCElement::monomial(v);
            AlgElement lhs = phi(gc::gc_reduce(prod, n, p_override), n);
            AlgElement rhs = phi(gc::FreeGCElement::monomial(u), n) *
                             phi(gc::FreeGCElement::monomial(v), n);
            if (!(lhs == rhs)) {
                r.detail = fail_witness("multiplicativity fails",
                                        gc::FreeGCElement::monomial(u).str() + " * " +
                                            gc::FreeGCElement::monomial(v).str());
                return r;
            }
        }
    }
    r.pass = true;
    return r;
}

VerificationReport verify_frobenius_consistency(int n) {
    VerificationReport r{"frobenius", n, false, {}};
    for (RingKind kind : {RingKind::OS, RingKind::VG}) {
        const bool os_ring = kind == RingKind::OS;
        auto predicted = symfunc::predicted_invariant_dims(os_ring, n);
        for (Group group : {Group::Sn, Group::Sn1}) {
            long long expect =
                group == Group::Sn ? predicted.under_sn : predicted.under_sn1;
            long long char_total = 0, kernel_total = 0;
            for (int d = 0; d <= n; ++d) {
                char_total += invariants::character_dim(kind, n, d, group);
                kernel_total += static_cast<long long>(
                    invariants::invariant_subspace(kind, n, d, group).size());
            }
            if (char_total != expect || kernel_total != expect) {
                r.detail = fail_witness(
                    std::string(os_ring ? "OS" : "VG") + " total mismatch",
                    "predicted " + std::to_string(expect) + ", character " +
                        std::to_string(char_total) + ", kernel " +
                        std::to_string(kernel_total));
                return r;
            }
        }
    }
    r.pass = true;
    return r;
}

std::vector<std::string> statement_ids() {
    return {"vg_presentation", "os_hilbert",       "partial_identities",
            "os_chain_complex", "basis_B",         "ideal_relations",
            "os_presentation",  "frobenius"};
}

std::optional<VerificationReport> run_statement(const std::string& id, int n) {
    if (id == "vg_presentation") return verify_vg_presentation(n);
    if (id == "os_hilbert") return verify_os_hilbert(n);
    if (id == "partial_identities") return verify_partial_identities(n);
    if (id == "os_chain_complex") return verify_chain_complex(n);
    if (id == "basis_B") return verify_basis_B(n);
    if (id == "ideal_relations") return verify_ideal_relations(n);
    if (id == "os_presentation") return verify_presentation_iso(n);
    if (id == "frobenius") return verify_frobenius_consistency(n);
    return std::nullopt;
}

}  // namespace theorems
}  // namespace braidinv
