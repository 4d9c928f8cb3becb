#include "braidinv/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "braidinv/symfunc.hpp"

namespace braidinv {
namespace invariants {

std::vector<Permutation> group_generators(int n, Group group) {
    const int top = group == Group::Sn ? n - 1 : n;
    std::vector<Permutation> gens;
    for (int k = 1; k <= top; ++k) gens.push_back(Permutation::transposition(n + 1, k, k + 1));
    return gens;
}

std::vector<Permutation> group_elements(int n, Group group) {
    const int moved = group == Group::Sn ? n : n + 1;
    std::vector<int> base(moved);
    std::iota(base.begin(), base.end(), 1);
    std::vector<Permutation> out;
    do {
        std::vector<int> im(base);
        for (int x = moved + 1; x <= n + 1; ++x) im.push_back(x);
        out.emplace_back(std::move(im));
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

SparseVector to_coords(const AlgElement& x, int d) {
    SparseVector v;
    for (const auto& [m, c] : x.terms()) {
        if (static_cast<int>(m.size()) != d)
            throw std::domain_error("to_coords: element not homogeneous of the given degree");
        v[static_cast<int>(rank_nbc(Handful(x.n(), m)))] = c;
    }
    return v;
}

AlgElement from_coords(RingKind kind, int n, int d, const SparseVector& v) {
    AlgElement out(kind, n);
    for (const auto& [idx, c] : v) out.add_term(unrank_nbc(n, d, idx).edges, c);
    return out;
}

SparseMatrix action_matrix(RingKind kind, int n, int d, const Permutation& p) {
    const int dim = static_cast<int>(nbc_count(n, d));
    SparseMatrix a(dim, dim);
    for (int j = 0; j < dim; ++j) {
        AlgElement b(kind, n);
        b.add_term(unrank_nbc(n, d, j).edges, Scalar(1));
        for (const auto& [idx, c] : to_coords(b.act(p), d)) a.set(idx, j, c);
    }
    return a;
}

std::vector<AlgElement> invariant_subspace(RingKind kind, int n, int d, Group group) {
    const int dim = static_cast<int>(nbc_count(n, d));
    const auto gens = group_generators(n, group);
    SparseMatrix stacked(static_cast<int>(gens.size()) * dim, dim);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const int off = static_cast<int>(g) * dim;
        for (int j = 0; j < dim; ++j) {
            AlgElement b(kind, n);
            b.add_term(unrank_nbc(n, d, j).edges, Scalar(1));
            for (const auto& [idx, c] : to_coords(b.act(gens[g]), d))
                stacked.add(off + idx, j, c);
            stacked.add(off + j, j, Scalar(-1));
        }
    }
    std::vector<AlgElement> out;
    for (const auto& v : nullspace_basis(stacked)) out.push_back(from_coords(kind, n, d, v));
    return out;
}

AlgElement reynolds(const AlgElement& x, Group group) {
    const auto elems = group_elements(x.n(), group);
    AlgElement sum = AlgElement::zero(x.kind(), x.n());
    for (const auto& p : elems) sum += x.act(p);
    return Scalar(1, static_cast<long>(elems.size())) * sum;
}

Scalar action_trace(RingKind kind, int n, int d, const Permutation& p) {
    const long long dim = nbc_count(n, d);
    Scalar tr(0);
    for (long long j = 0; j < dim; ++j) {
        Monomial m = unrank_nbc(n, d, j).edges;
        AlgElement b(kind, n);
        b.add_term(m, Scalar(1));
        tr += b.act(p).coeff(m);
    }
    return tr;
}

long long character_dim(RingKind kind, int n, int d, Group group) {
    const int g = group == Group::Sn ? n : n + 1;
    Scalar total(0);
    long long group_order = 1;
    for (int i = 2; i <= g; ++i) group_order *= i;
    for (const auto& lambda : symfunc::all_partitions(g)) {
        // representative with cycle type lambda on {1..g}, fixing the rest
        std::vector<int> im(n + 1);
        std::iota(im.begin(), im.end(), 1);
        int next = 1;
        for (int part : lambda.parts()) {
            for (int k = 0; k < part; ++k)
                im[next - 1 + k] = next + (k + 1) % part;
            next += part;
        }
        Permutation rep{std::move(im)};
        const long long class_size = group_order / symfunc::centralizer_order(lambda);
        total += Scalar(class_size) * action_trace(kind, n, d, rep);
    }
    Scalar dim = total / Scalar(group_order);
    if (dim.denominator() != 1)
        throw std::logic_error("character_dim: non-integer invariant dimension");
    return dim.numerator().get_si();
}

std::vector<long long> hilbert_invariants(RingKind kind, int n, Group group) {
    std::vector<long long> coeffs;
    for (int d = 0; d <= n; ++d)
        coeffs.push_back(static_cast<long long>(invariant_subspace(kind, n, d, group).size()));
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

std::vector<long long> hilbert_full(int n) {
    std::vector<long long> coeffs;
    for (int d = 0; d <= n; ++d) coeffs.push_back(nbc_count(n, d));
    return coeffs;
}

bool is_invariant(const AlgElement& x, Group group) {
    for (const auto& p : group_generators(x.n(), group))
        if (!(x.act(p) == x)) return false;
    return true;
}

}  // namespace invariants
}  // namespace braidinv
