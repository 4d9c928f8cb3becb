#include "braidinv/braid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace braidinv {

Edge::Edge(int i_, int j_) : i(i_), j(j_) {
    if (i_ < 1 || i_ >= j_) throw std::domain_error("Edge: requires 1 <= i < j");
}

Edge Edge::canonical(int a, int b, bool& flipped) {
    if (a == b || a < 1 || b < 1) throw std::domain_error("Edge: bad endpoints");
    flipped = a > b;
    return flipped ? Edge(b, a) : Edge(a, b);
}

Handful::Handful(int n_, std::vector<Edge> edges_) : n(n_), edges(std::move(edges_)) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const Edge& e : edges)
        if (e.j > n + 1) throw std::domain_error("Handful: edge label exceeds n+1");
}

std::string Handful::str(char letter) const {
    if (edges.empty()) return "1";
    std::string out;
    for (const Edge& e : edges) {
        out += letter;
        out += '[' + std::to_string(e.i) + ',' + std::to_string(e.j) + ']';
    }
    return out;
}

Handful Handful::parse(int n, const std::string& text, char letter) {
    if (text == "1") return Handful(n, {});
    std::vector<Edge> edges;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != letter || pos + 1 >= text.size() || text[pos + 1] != '[')
            throw std::domain_error("Handful::parse: expected '" + std::string(1, letter) +
                                    "[' in '" + text + "'");
        std::size_t close = text.find(']', pos);
        std::size_t comma = text.find(',', pos);
        if (close == std::string::npos || comma == std::string::npos || comma > close)
            throw std::domain_error("Handful::parse: malformed edge in '" + text + "'");
        int a = std::stoi(text.substr(pos + 2, comma - pos - 2));
        int b = std::stoi(text.substr(comma + 1, close - comma - 1));
        bool flipped;
        edges.push_back(Edge::canonical(a, b, flipped));
        pos = close + 1;
    }
    return Handful(n, std::move(edges));
}

Permutation::Permutation(int m) : images_(m) {
    if (m < 1) throw std::domain_error("Permutation: size must be positive");
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
            throw std::domain_error("Permutation: images are not a bijection");
        seen[v - 1] = true;
    }
}

Permutation Permutation::transposition(int m, int a, int b) {
    Permutation p(m);
    if (a < 1 || b < 1 || a > m || b > m) throw std::domain_error("transposition: out of range");
    std::swap(p.images_[a - 1], p.images_[b - 1]);
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw std::domain_error("Permutation::compose: size mismatch");
    std::vector<int> im(images_.size());
    for (int x = 1; x <= size(); ++x) im[x - 1] = (*this)(other(x));
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int x = 1; x <= size(); ++x) im[images_[x - 1] - 1] = x;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= size(); ++x)
        if ((*this)(x) != x) return false;
    return true;
}

int Permutation::sign() const {
    std::vector<bool> seen(images_.size(), false);
    int s = 1;
    for (int x = 1; x <= size(); ++x) {
        if (seen[x - 1]) continue;
        int len = 0;
        for (int y = x; !seen[y - 1]; y = (*this)(y)) {
            seen[y - 1] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

std::vector<Edge> hyperplanes(int n) {
    if (n < 1) throw std::domain_error("hyperplanes: rank must be >= 1");
    std::vector<Edge> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n + 1; ++j) out.emplace_back(i, j);
    return out;
}

bool is_nbc(const Handful& h) {
    // Edges are sorted lex, so equal wrists need not be adjacent; use a mask.
    std::uint64_t wrists = 0;
    for (const Edge& e : h.edges) {
        std::uint64_t bit = 1ull << e.wrist();
        if (wrists & bit) return false;
        wrists |= bit;
    }
    return true;
}

namespace {

// Sum over r-subsets {w_1 < ... < w_r} of {lo, ..., n+1} of prod (w_k - 1):
// the number of NBC handfuls using only hands with wrist >= lo.
long long wrist_tail_count(int n, int lo, int r) {
    if (r == 0) return 1;
    if (lo > n + 1 || n + 2 - lo < r) return 0;
    return static_cast<long long>(lo - 1) * wrist_tail_count(n, lo + 1, r - 1) +
           wrist_tail_count(n, lo + 1, r);
}

}  // namespace

long long nbc_count(int n, int d) {
    if (n < 0 || d < 0) throw std::domain_error("nbc_count: negative argument");
    return wrist_tail_count(n, 2, d);
}

std::vector<Handful> nbc_monomials(int n, int d) {
    if (n < 0 || d < 0) throw std::domain_error("nbc_monomials: negative argument");
    std::vector<Handful> out;
    if (d > n) return out;
    std::vector<int> wrists(d);
    std::vector<Edge> edges;
    // Wrist subsets of {2..n+1} in lex order; fingers in lex order per subset.
    auto fingers = [&](auto&& self, int t) -> void {
        if (t == d) {
            out.emplace_back(n, edges);
            return;
        }
        for (int f = 1; f < wrists[t]; ++f) {
            edges.emplace_back(f, wrists[t]);
            self(self, t + 1);
            edges.pop_back();
        }
    };
    auto choose = [&](auto&& self, int t, int lo) -> void {
        if (t == d) {
            edges.clear();
            fingers(fingers, 0);
            return;
        }
        for (int w = lo; w <= n + 1; ++w) {
            wrists[t] = w;
            self(self, t + 1, w + 1);
        }
    };
    choose(choose, 0, 2);
    for (auto& h : out) std::sort(h.edges.begin(), h.edges.end());
    return out;
}

std::vector<Handful> minimal_broken_circuits(int n) {
    if (n < 2) throw std::domain_error("minimal_broken_circuits: requires n >= 2");
    std::vector<Handful> out;
    for (int k = 3; k <= n + 1; ++k)
        for (int i = 1; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                out.push_back(Handful(n, {Edge(i, k), Edge(j, k)}));
    return out;
}

long long rank_nbc(const Handful& h) {
    if (!is_nbc(h)) throw std::domain_error("rank_nbc: handful is not NBC");
    const int n = h.n;
    const int d = h.degree();
    // Edges sorted by wrist (a given wrist occurs once), fingers alongside.
    std::vector<Edge> es = h.edges;
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.j < b.j; });
    long long r = 0;
    long long prefix = 1;  // finger choices for the wrists fixed so far
    int prev = 1;
    for (int t = 0; t < d; ++t) {
        for (int c = prev + 1; c < es[t].wrist(); ++c)
            r += prefix * (c - 1) * wrist_tail_count(n, c + 1, d - t - 1);
        prev = es[t].wrist();
        prefix *= es[t].wrist() - 1;
    }
    long long fidx = 0;
    for (int t = 0; t < d; ++t) fidx = fidx * (es[t].wrist() - 1) + (es[t].finger() - 1);
    return r + fidx;
}

Handful unrank_nbc(int n, int d, long long index) {
    if (index < 0 || index >= nbc_count(n, d))
        throw std::domain_error("unrank_nbc: index out of range");
    std::vector<int> wrists;
    int lo = 2;
    long long rem = index;
    long long prefix = 1;
    for (int t = 0; t < d; ++t) {
        for (int w = lo;; ++w) {
            long long cnt = prefix * (w - 1) * wrist_tail_count(n, w + 1, d - t - 1);
            if (rem < cnt) {
                wrists.push_back(w);
                prefix *= w - 1;
                lo = w + 1;
                break;
            }
            rem -= cnt;
        }
    }
    // rem is now the mixed-radix finger index, most significant digit first.
    std::vector<int> fingers(d);
    for (int t = d - 1; t >= 0; --t) {
        long long base = wrists[t] - 1;
        fingers[t] = static_cast<int>(rem % base) + 1;
        rem /= base;
    }
    std::vector<Edge> edges;
    for (int t = 0; t < d; ++t) edges.emplace_back(fingers[t], wrists[t]);
    return Handful(n, std::move(edges));
}

}  // namespace braidinv
