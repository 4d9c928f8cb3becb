// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "braidinv/invariants.hpp"
#include "braidinv/os_algebra.hpp"
#include "braidinv/symfunc.hpp"
#include "braidinv/theorems.hpp"
#include "braidinv/vg_ring.hpp"
#include "quotient_model.hpp"

using namespace braidinv;

namespace {

bool statement_range(const std::string& id, int lo, int hi, std::string& why) {
    for (int n = lo; n <= hi; ++n) {
        auto r = theorems::run_statement(id, n);
        if (!r || !r->pass) {
            why = id + " failed at n=" + std::to_string(n) +
                  (r && !r->detail.is_null() ? ": " + r->detail.dump() : "");
            return false;
        }
    }
    return true;
}

bool criterion_dimensions(std::string& why) {
    for (int n = 2; n <= 7; ++n) {
        long long total = 0, fact = 1;
        for (int i = 2; i <= n + 1; ++i) fact *= i;
        auto dims = invariants::hilbert_full(n);
        for (int d = 0; d <= n; ++d) {
            long long listed = static_cast<long long>(nbc_monomials(n, d).size());
            if (listed != dims[d] || nbc_count(n, d) != dims[d]) {
                why = "degree " + std::to_string(d) + " dimension mismatch at n=" +
                      std::to_string(n);
                return false;
            }
            total += listed;
        }
        if (total != fact) {
            why = "total dimension != (n+1)! at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion_oracle(std::string& why) {
    for (RingKind kind : {RingKind::OS, RingKind::VG}) {
        for (int n = 2; n <= 4; ++n) {
            for (int d = 0; d <= n + 1 && d <= (n + 1) * n / 2; ++d) {
                qoracle::QuotientModel q(kind, n, d);
                if (static_cast<long long>(q.basis.size()) - q.relation_rank() !=
                    nbc_count(n, d)) {
                    why = "quotient dimension mismatch, n=" + std::to_string(n) +
                          " d=" + std::to_string(d);
                    return false;
                }
                std::map<qoracle::Mono, qoracle::Row> nbc_reduced;
                for (const auto& h : nbc_monomials(n, d))
                    nbc_reduced[h.edges] = q.reduce(q.monomial_vector(h.edges));
                for (const auto& m : q.basis) {
                    std::vector<std::pair<int, int>> word;
                    for (const auto& e : m) word.emplace_back(e.i, e.j);
                    AlgElement s = kind == RingKind::OS ? os::straighten(n, word)
                                                        : vg::straighten(n, word);
                    qoracle::Row expected(q.basis.size(), Scalar(0));
                    for (const auto& [mono, coeff] : s.terms()) {
                        const auto& rb = nbc_reduced.at(mono);
                        for (std::size_t j = 0; j < expected.size(); ++j)
                            expected[j] += coeff * rb[j];
                    }
                    if (q.reduce(q.monomial_vector(m)) != expected) {
                        why = std::string(kind == RingKind::OS ? "OS" : "VG") +
                              " normal form disagrees with the quotient oracle, n=" +
                              std::to_string(n) + " monomial " + Handful(n, m).str();
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool criterion_negative_controls(std::string& why) {
    for (int n = 2; n <= 4; ++n) {
        AlgElement bad_z = vg::elem_z(n) - vg::gen(n, 1, n + 1);
        auto r = theorems::verify_vg_presentation(n, &bad_z);
        if (r.pass || r.detail.is_null()) {
            why = "corrupted z not rejected with a witness at n=" + std::to_string(n);
            return false;
        }
        auto r2 = theorems::verify_presentation_iso(n, os::half_param(n) + 1);
        if (r2.pass || r2.detail.is_null()) {
            why = "corrupted ideal exponent not rejected with a witness at n=" +
                  std::to_string(n);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria{
        {"1 OS invariant Hilbert series (n=2..6)",
         [](std::string& w) { return statement_range("os_hilbert", 2, 6, w); }},
        {"2 VG presentation Q[z]/<z^{n+1}> (n=2..7)",
         [](std::string& w) { return statement_range("vg_presentation", 2, 7, w); }},
        {"3 presentation isomorphism (n=2..6)",
         [](std::string& w) { return statement_range("os_presentation", 2, 6, w); }},
        {"4 ideal relations g^p=0, ag^{p-1}=(p-1)mg^{p-1} (n=2..7)",
         [](std::string& w) { return statement_range("ideal_relations", 2, 7, w); }},
        {"5 differential identity suite and chain complex (n=2..6)",
         [](std::string& w) {
             return statement_range("partial_identities", 2, 6, w) &&
                    statement_range("os_chain_complex", 2, 6, w);
         }},
        {"6 dimension facts (n+1)! and e_d(1..n) (n=2..7)", criterion_dimensions},
        {"7 Frobenius cross-check (n=2..6)",
         [](std::string& w) { return statement_range("frobenius", 2, 6, w); }},
        {"8 oracle equivalence of normal forms (n=2..4)", criterion_oracle},
        {"9 negative controls fail with witnesses", criterion_negative_controls},
    };
    bool all = true;
    for (const auto& c : criteria) {
        std::string why;
        bool ok = c.run(why);
        all = all && ok;
        std::cout << (ok ? "PASS " : "FAIL ") << c.name;
        if (!ok) std::cout << " -- " << why;
        std::cout << std::endl;
    }
    return all ? 0 : 1;
}
