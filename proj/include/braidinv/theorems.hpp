#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidinv/element.hpp"
#include "braidinv/gc_algebra.hpp"

namespace braidinv {
namespace theorems {

struct VerificationReport {
    std::string statement;
    int n = 0;
    bool pass = false;
    nlohmann::json detail;  // on failure carries a concrete witness

    nlohmann::json to_json() const;
};

/// VG_n^{S_n} = Q[z]/<z^{n+1}>: z^d != 0 for d <= n, z^{n+1} = 0, the
/// invariant Hilbert series is all ones through degree n, and the powers of
/// z span the invariants degreewise. Pass z_override to run the same checks
/// against a corrupted generator (negative control).
VerificationReport verify_vg_presentation(int n, const AlgElement* z_override = nullptr);

/// Hilb(OS_n^{S_n}; t) = (1+t)(1 + t + ... + t^{n-1}).
VerificationReport verify_os_hilbert(int n);

/// The six differential identities on a, m, c, g for every valid d.
VerificationReport verify_partial_identities(int n);

/// The differential squares to zero and the chain complex it defines is
/// exact: rank(d_d) + rank(d_{d+1}) = dim OS_{n,d}, with injectivity in the
/// top degree.
VerificationReport verify_chain_complex(int n);

/// The graded bases B (c-powers) and B' (g-powers) of OS_n^{S_n}:
/// invariance, linear independence, degreewise dimension match; {am, c}
/// independent for n >= 3.
VerificationReport verify_basis_B(int n);

/// g^p = 0; for odd n, a g^{p-1} = (p-1) m g^{p-1}; for even n,
/// {a g^{p-1}, m g^{p-1}} stays linearly independent.
VerificationReport verify_ideal_relations(int n);

/// phi: Q{alpha,mu,gamma}/I_n -> OS_n^{S_n}, alpha -> a, mu -> m,
/// gamma -> g, is bijective on the quotient monomial basis and
/// multiplicative on all basis pairs. p_override corrupts I_n for the
/// negative control.
VerificationReport verify_presentation_iso(int n, int p_override = -1);

/// Frobenius-reciprocity totals {2n, 2, n+1, 1} match both the character
/// count and the kernel-method invariant dimensions.
VerificationReport verify_frobenius_consistency(int n);

/// Linear extension of the presentation map on free monomials.
AlgElement phi(const gc::FreeGCElement& x, int n);

/// Statement ids accepted by run_statement, in canonical order.
std::vector<std::string> statement_ids();

/// Runs one verify operation by id; nullopt for an unknown id.
std::optional<VerificationReport> run_statement(const std::string& id, int n);

}  // namespace theorems
}  // namespace braidinv
