#include "braidinv/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidinv {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::domain_error("SparseMatrix: negative dimension");
}

void SparseMatrix::set(int row, int col, const Scalar& value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw std::out_of_range("SparseMatrix::set: index out of bounds");
    if (value.is_zero())
        entries_.erase({row, col});
    else
        entries_[{row, col}] = value;
}

void SparseMatrix::add(int row, int col, const Scalar& value) {
    set(row, col, at(row, col) + value);
}

Scalar SparseMatrix::at(int row, int col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw std::out_of_range("SparseMatrix::at: index out of bounds");
    auto it = entries_.find({row, col});
    return it == entries_.end() ? Scalar(0) : it->second;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    SparseVector out;
    for (const auto& [rc, val] : entries_) {
        auto it = v.find(rc.second);
        if (it == v.end()) continue;
        Scalar s = (out.count(rc.first) ? out[rc.first] : Scalar(0)) + val * it->second;
        if (s.is_zero())
            out.erase(rc.first);
        else
            out[rc.first] = s;
    }
    return out;
}

namespace {

// A row with integer entries, either dense or as a sorted (col, value) list.
using DenseRow = std::vector<mpz_class>;
using SparseRow = std::vector<std::pair<int, mpz_class>>;

void reduce_content(SparseRow& r) {
    mpz_class g = 0;
    for (auto& [c, v] : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

void reduce_content(DenseRow& r) {
    mpz_class g = 0;
    for (auto& v : r) {
        if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g > 1)
        for (auto& v : r) {
            if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
}

const mpz_class* find_coeff(const SparseRow& r, int col) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

// new_row = a * row - b * pivot   (fraction-free update, then content-reduced)
SparseRow combine(const mpz_class& a, const SparseRow& row, const mpz_class& b,
                  const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, a * row[i].second);
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -b * pivot[j].second);
            ++j;
        } else {
            mpz_class v = a * row[i].second - b * pivot[j].second;
            if (v != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    reduce_content(out);
    return out;
}

struct Echelon {
    std::vector<int> pivot_cols;          // increasing
    std::vector<SparseRow> pivot_rows;    // pivot_rows[k] has leading column pivot_cols[k]
};

// Rows as integer vectors with denominators cleared per row.
std::vector<SparseRow> integer_rows(const SparseMatrix& m) {
    std::vector<mpz_class> lcm(m.rows(), 1);
    for (const auto& [rc, val] : m.entries())
        mpz_lcm(lcm[rc.first].get_mpz_t(), lcm[rc.first].get_mpz_t(),
                val.denominator().get_mpz_t());
    std::vector<SparseRow> rows(m.rows());
    for (const auto& [rc, val] : m.entries()) {
        mpz_class v = val.numerator() * (lcm[rc.first] / val.denominator());
        rows[rc.first].emplace_back(rc.second, std::move(v));
    }
    for (auto& r : rows) reduce_content(r);
    return rows;
}

Echelon eliminate_sparse(std::vector<SparseRow> rows, int cols) {
    Echelon ech;
    std::vector<SparseRow*> remaining;
    for (auto& r : rows)
        if (!r.empty()) remaining.push_back(&r);
    for (int c = 0; c < cols && !remaining.empty(); ++c) {
        std::size_t pi = remaining.size();
        for (std::size_t k = 0; k < remaining.size(); ++k) {
            if (find_coeff(*remaining[k], c)) {
                pi = k;
                break;
            }
        }
        if (pi == remaining.size()) continue;
        SparseRow pivot = std::move(*remaining[pi]);
        remaining.erase(remaining.begin() + pi);
        const mpz_class a = *find_coeff(pivot, c);
        for (std::size_t k = 0; k < remaining.size();) {
            if (const mpz_class* b = find_coeff(*remaining[k], c)) {
                *remaining[k] = combine(a, *remaining[k], *b, pivot);
                if (remaining[k]->empty()) {
                    remaining.erase(remaining.begin() + k);
                    continue;
                }
            }
            ++k;
        }
        ech.pivot_cols.push_back(c);
        ech.pivot_rows.push_back(std::move(pivot));
    }
    return ech;
}

Echelon eliminate_dense(const std::vector<SparseRow>& sparse_rows, int cols) {
    std::vector<DenseRow> rows;
    for (const auto& sr : sparse_rows) {
        if (sr.empty()) continue;
        DenseRow d(cols, 0);
        for (const auto& [c, v] : sr) d[c] = v;
        rows.push_back(std::move(d));
    }
    Echelon ech;
    std::vector<bool> used(rows.size(), false);
    for (int c = 0; c < cols; ++c) {
        std::size_t pi = rows.size();
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (!used[k] && rows[k][c] != 0) {
                pi = k;
                break;
            }
        }
        if (pi == rows.size()) continue;
        used[pi] = true;
        const mpz_class a = rows[pi][c];
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (used[k] || rows[k][c] == 0) continue;
            const mpz_class b = rows[k][c];
            for (int j = 0; j < cols; ++j) rows[k][j] = a * rows[k][j] - b * rows[pi][j];
            reduce_content(rows[k]);
        }
        SparseRow sp;
        for (int j = 0; j < cols; ++j)
            if (rows[pi][j] != 0) sp.emplace_back(j, rows[pi][j]);
        ech.pivot_cols.push_back(c);
        ech.pivot_rows.push_back(std::move(sp));
    }
    return ech;
}

Echelon eliminate(const SparseMatrix& m) {
    auto rows = integer_rows(m);
    // Dense bookkeeping wins for small instances.
    if (m.cols() < 256) return eliminate_dense(rows, m.cols());
    return eliminate_sparse(std::move(rows), m.cols());
}

// Back-substitute the echelon form into rational RREF rows (pivots = 1).
std::vector<SparseVector> to_rref(const Echelon& ech) {
    const int np = static_cast<int>(ech.pivot_cols.size());
    std::vector<SparseVector> rref(np);
    for (int k = 0; k < np; ++k) {
        Scalar lead;
        SparseVector row;
        for (const auto& [c, v] : ech.pivot_rows[k]) row[c] = Scalar(mpq_class(v));
        lead = row[ech.pivot_cols[k]];
        for (auto& [c, v] : row) v /= lead;
        rref[k] = std::move(row);
    }
    for (int k = np - 1; k >= 0; --k) {
        const int p = ech.pivot_cols[k];
        for (int j = 0; j < k; ++j) {
            auto it = rref[j].find(p);
            if (it == rref[j].end()) continue;
            Scalar f = it->second;
            rref[j].erase(it);
            for (const auto& [c, v] : rref[k]) {
                if (c == p) continue;
                Scalar s = (rref[j].count(c) ? rref[j][c] : Scalar(0)) - f * v;
                if (s.is_zero())
                    rref[j].erase(c);
                else
                    rref[j][c] = s;
            }
        }
    }
    return rref;
}

}  // namespace

std::vector<SparseVector> nullspace_basis(const SparseMatrix& m) {
    Echelon ech = eliminate(m);
    auto rref = to_rref(ech);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : ech.pivot_cols) is_pivot[p] = true;
    std::vector<SparseVector> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        SparseVector v;
        v[f] = Scalar(1);
        for (std::size_t k = 0; k < rref.size(); ++k) {
            auto it = rref[k].find(f);
            if (it != rref[k].end()) v[ech.pivot_cols[k]] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const SparseMatrix& m) { return static_cast<int>(eliminate(m).pivot_cols.size()); }

}  // namespace braidinv
