#include "braidinv/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace braidinv {
namespace symfunc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::domain_error("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        parts.push_back(std::stoi(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::vector<Partition> all_partitions(int k) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

long long centralizer_order(const Partition& lambda) {
    std::map<int, int> mult;
    for (int p : lambda.parts()) ++mult[p];
    long long z = 1;
    for (auto [p, m] : mult) {
        for (int i = 0; i < m; ++i) z *= p;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return z;
}

HSum HSum::h(const Partition& lambda, const Scalar& coeff) {
    HSum out;
    out.add(lambda, coeff);
    return out;
}

void HSum::add(const Partition& lambda, const Scalar& coeff) {
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(lambda, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

std::string HSum::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [lambda, c] : terms_) {
        Scalar mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (!mag.is_one()) out += mag.str() + "*";
        out += "h[" + lambda.str() + "]";
    }
    return out;
}

namespace {

// Depth-first count of nonnegative-integer matrices with the given row sums
// and remaining column capacities.
long long count_matrices(const std::vector<int>& rows, std::size_t r, std::vector<int>& cols) {
    if (r == rows.size()) return 1;
    long long total = 0;
    // distribute rows[r] over cols with capacity pruning
    auto place = [&](auto&& self, int rem, std::size_t c) -> void {
        if (c == cols.size()) {
            if (rem == 0) total += count_matrices(rows, r + 1, cols);
            return;
        }
        int tail = 0;
        for (std::size_t k = c; k < cols.size(); ++k) tail += cols[k];
        if (tail < rem) return;
        for (int put = 0; put <= std::min(rem, cols[c]); ++put) {
            cols[c] -= put;
            self(self, rem - put, c + 1);
            cols[c] += put;
        }
    };
    place(place, rows[r], 0);
    return total;
}

}  // namespace

long long h_inner(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return 0;
    std::vector<int> cols = mu.parts();
    return count_matrices(lambda.parts(), 0, cols);
}

Scalar h_inner(const HSum& a, const HSum& b) {
    Scalar out(0);
    for (const auto& [la, ca] : a.terms())
        for (const auto& [mu, cb] : b.terms()) out += ca * cb * Scalar(h_inner(la, mu));
    return out;
}

std::vector<Partition> pieri_single_row(int l1, int k) {
    if (l1 < 1 || k < 1) throw std::domain_error("pieri_single_row: requires positive rows");
    std::vector<Partition> out;
    for (int r2 = 0; r2 <= std::min(l1, k); ++r2) {
        int r1 = l1 + k - r2;
        if (r1 < std::max(l1, k)) continue;
        if (r2 == 0)
            out.push_back(Partition({r1}));
        else
            out.push_back(Partition({r1, r2}));
    }
    return out;
}

namespace {

void poly_add(Poly& p, const std::vector<int>& expo, const Scalar& c) {
    auto it = p.find(expo);
    if (it == p.end()) {
        if (!c.is_zero()) p.emplace(expo, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
}

Poly poly_mul(const Poly& a, const Poly& b, int vars) {
    Poly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(vars);
            for (int i = 0; i < vars; ++i) e[i] = ea[i] + eb[i];
            poly_add(out, e, ca * cb);
        }
    }
    return out;
}

// Complete homogeneous polynomial h_k in `vars` variables.
Poly h_k_poly(int k, int vars) {
    Poly out;
    std::vector<int> e(vars, 0);
    auto rec = [&](auto&& self, int rem, int v) -> void {
        if (v == vars - 1) {
            e[v] = rem;
            poly_add(out, e, Scalar(1));
            e[v] = 0;
            return;
        }
        for (int put = 0; put <= rem; ++put) {
            e[v] = put;
            self(self, rem - put, v + 1);
            e[v] = 0;
        }
    };
    if (vars == 0) {
        if (k == 0) out.emplace(std::vector<int>{}, Scalar(1));
        return out;
    }
    rec(rec, k, 0);
    return out;
}

}  // namespace

Poly schur_poly(const Partition& lambda, int vars) {
    Poly out;
    const auto& rows = lambda.parts();
    if (rows.empty()) {
        out.emplace(std::vector<int>(vars, 0), Scalar(1));
        return out;
    }
    // tableau[r][c], filled row by row; weakly increasing along rows,
    // strictly increasing down columns
    std::vector<std::vector<int>> t(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) t[r].assign(rows[r], 0);
    std::vector<int> expo(vars, 0);
    auto rec = [&](auto&& self, std::size_t r, int c) -> void {
        if (r == rows.size()) {
            poly_add(out, expo, Scalar(1));
            return;
        }
        std::size_t nr = r;
        int nc = c + 1;
        if (nc >= rows[r]) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0 && c < rows[r - 1]) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= vars; ++v) {
            t[r][c] = v;
            ++expo[v - 1];
            self(self, nr, nc);
            --expo[v - 1];
        }
    };
    rec(rec, 0, 0);
    return out;
}

Poly h_poly(const Partition& lambda, int vars) {
    Poly out;
    out.emplace(std::vector<int>(vars, 0), Scalar(1));
    for (int p : lambda.parts()) out = poly_mul(out, h_k_poly(p, vars), vars);
    return out;
}

PredictedDims predicted_invariant_dims(bool os_ring, int n) {
    if (n < 2) throw std::domain_error("predicted_invariant_dims: requires n >= 2");
    HSum frob;
    if (os_ring) {
        std::vector<int> parts{2};
        parts.insert(parts.end(), n - 1, 1);
        frob = HSum::h(Partition(parts), Scalar(2));
    } else {
        frob = HSum::h(Partition(std::vector<int>(n + 1, 1)));
    }
    HSum hn_h1 = HSum::h(Partition({n, 1}));
    HSum hn1 = HSum::h(Partition({n + 1}));
    PredictedDims out;
    out.under_sn = h_inner(frob, hn_h1).numerator().get_si();
    out.under_sn1 = h_inner(frob, hn1).numerator().get_si();
    return out;
}

}  // namespace symfunc
}  // namespace braidinv
