#include <doctest.h>

#include "braidinv/os_algebra.hpp"
#include "braidinv/theorems.hpp"
#include "braidinv/vg_ring.hpp"

using namespace braidinv;
using namespace braidinv::gc;

TEST_CASE("free graded-commutative algebra on alpha, mu, gamma") {
    FreeGCElement alpha = FreeGCElement::monomial({1, 0, 0});
    FreeGCElement mu = FreeGCElement::monomial({0, 1, 0});
    FreeGCElement gamma = FreeGCElement::monomial({0, 0, 1});
    CHECK((alpha * alpha).is_zero());
    CHECK((mu * mu).is_zero());
    CHECK(alpha * mu == -(mu * alpha));
    CHECK(alpha * gamma == gamma * alpha);
    CHECK(mu * gamma == gamma * mu);
    CHECK_FALSE((gamma * gamma).is_zero());
    CHECK((alpha * mu * gamma).terms().begin()->first == GCMonomial{1, 1, 1});
}

TEST_CASE("quotient dimensions are 1,2,2,...,2,1 with total 2n") {
    for (int n = 2; n <= 10; ++n) {
        auto dims = quotient_hilbert(n);
        REQUIRE(dims.size() == static_cast<std::size_t>(n + 1));
        CHECK(dims.front() == 1);
        CHECK(dims.back() == 1);
        long long total = 0;
        for (std::size_t d = 1; d + 1 < dims.size(); ++d) CHECK(dims[d] == 2);
        for (long long v : dims) total += v;
        CHECK(total == 2 * n);
        CHECK(quotient_basis(n).size() == static_cast<std::size_t>(2 * n));
    }
}

TEST_CASE("ideal reduction") {
    // gamma^p dies; for odd n the extra relation identifies the two
    // top-degree odd monomials
    for (int n = 2; n <= 7; ++n) {
        const int p = os::half_param(n);
        CHECK(gc_reduce(FreeGCElement::monomial({0, 0, p}), n).is_zero());
        CHECK_FALSE(gc_reduce(FreeGCElement::monomial({0, 0, p - 1}), n).is_zero());
        if (n % 2 == 1) {
            FreeGCElement lhs = gc_reduce(FreeGCElement::monomial({1, 0, p - 1}), n);
            CHECK(lhs == FreeGCElement::monomial({0, 1, p - 1}, Scalar(p - 1)));
            CHECK(gc_reduce(FreeGCElement::monomial({1, 1, p - 1}), n).is_zero());
        }
    }
}

TEST_CASE("reduction is linear and multiplicative on the quotient") {
    for (int n = 2; n <= 6; ++n) {
        auto basis = quotient_basis(n);
        for (const auto& u : basis) {
            for (const auto& v : basis) {
                FreeGCElement uv = FreeGCElement::monomial(u) * FreeGCElement::monomial(v);
                FreeGCElement red = gc_reduce(uv, n);
                // reducing twice changes nothing
                CHECK(gc_reduce(red, n) == red);
            }
        }
    }
}

TEST_CASE("all statements pass for small n") {
    for (const auto& id : theorems::statement_ids()) {
        for (int n = 2; n <= 4; ++n) {
            auto r = theorems::run_statement(id, n);
            REQUIRE(r.has_value());
            CHECK_MESSAGE(r->pass, id, " n=", n, " ", r->detail.dump());
        }
    }
    CHECK_FALSE(theorems::run_statement("no_such_statement", 3).has_value());
}

TEST_CASE("report serialization") {
    auto r = theorems::run_statement("os_hilbert", 3);
    REQUIRE(r.has_value());
    auto j = r->to_json();
    CHECK(j["statement"] == "os_hilbert");
    CHECK(j["n"] == 3);
    CHECK(j["pass"] == true);
}

TEST_CASE("negative control: corrupted z generator is caught") {
    for (int n = 2; n <= 4; ++n) {
        // drop one summand from z
        AlgElement bad = vg::elem_z(n) - vg::gen(n, 1, n + 1);
        auto r = theorems::verify_vg_presentation(n, &bad);
        CHECK_FALSE(r.pass);
        CHECK_FALSE(r.detail.is_null());
    }
}

TEST_CASE("negative control: corrupted ideal exponent is caught") {
    for (int n = 2; n <= 5; ++n) {
        const int p = os::half_param(n);
        auto r = theorems::verify_presentation_iso(n, p + 1);
        CHECK_FALSE(r.pass);
        CHECK_FALSE(r.detail.is_null());
    }
}

TEST_CASE("the presentation map phi") {
    for (int n = 2; n <= 4; ++n) {
        FreeGCElement alpha = FreeGCElement::monomial({1, 0, 0});
        FreeGCElement mu = FreeGCElement::monomial({0, 1, 0});
        FreeGCElement gamma = FreeGCElement::monomial({0, 0, 1});
        CHECK(theorems::phi(alpha, n) == os::elem_a(n));
        CHECK(theorems::phi(mu, n) == os::elem_m(n));
        CHECK(theorems::phi(gamma, n) == os::elem_g(n));
        CHECK(theorems::phi(alpha * mu, n) == os::elem_a(n) * os::elem_m(n));
        CHECK(theorems::phi(FreeGCElement::one(), n) == AlgElement::one(RingKind::OS, n));
    }
}
