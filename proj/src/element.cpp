#include "braidinv/element.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>

namespace braidinv {

char ring_letter(RingKind kind) { return kind == RingKind::OS ? 'e' : 'x'; }

namespace {

using Terms = std::map<Monomial, Scalar>;

void accumulate(Terms& into, const Monomial& m, const Scalar& c) {
    auto it = into.find(m);
    if (it == into.end()) {
        if (!c.is_zero()) into.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
}

// Sorts edges in place; returns the wedge parity (+1/-1) of the sort, or 0
// if an edge repeats.
int sort_with_parity(std::vector<Edge>& edges) {
    int sign = 1;
    for (std::size_t i = 1; i < edges.size(); ++i) {
        Edge e = edges[i];
        std::size_t j = i;
        while (j > 0 && e < edges[j - 1]) {
            edges[j] = edges[j - 1];
            --j;
            sign = -sign;
        }
        edges[j] = e;
    }
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1]) return 0;
    return sign;
}

// Merges sorted [u, v] (u < v) into the sorted monomial rest. Returns the
// merged monomial and wedge sign, or nullopt if an edge repeats.
std::optional<std::pair<Monomial, int>> merge_two(const Edge& u, const Edge& v,
                                                  const Monomial& rest) {
    long inv = 0;
    Monomial out;
    out.reserve(rest.size() + 2);
    std::size_t r = 0;
    for (const Edge& x : {u, v}) {
        while (r < rest.size() && rest[r] < x) out.push_back(rest[r++]);
        if (r < rest.size() && rest[r] == x) return std::nullopt;
        inv += static_cast<long>(rest.size() - r);
        out.push_back(x);
    }
    while (r < rest.size()) out.push_back(rest[r++]);
    // Inversions of [u, v, rest] relative to sorted order: each element of
    // rest preceding u or v in sorted order contributes one inversion.
    inv = static_cast<long>(2 * rest.size()) - inv;  // count of rest-elements < u or < v
    return std::make_pair(std::move(out), inv % 2 == 0 ? 1 : -1);
}

// Merges two sorted monomials; nullopt on a repeated edge.
std::optional<std::pair<Monomial, int>> merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    long inv = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j] < a[i]) {
            inv += static_cast<long>(a.size() - i);
            out.push_back(b[j++]);
        } else {
            return std::nullopt;
        }
    }
    return std::make_pair(std::move(out), inv % 2 == 0 ? 1 : -1);
}

// Position of the two lex-smallest edges sharing the largest repeated wrist.
// Returns false if the monomial is already NBC.
bool find_broken_pair(const Monomial& m, std::size_t& s, std::size_t& t) {
    int best_wrist = -1;
    for (std::size_t x = 0; x < m.size(); ++x) {
        for (std::size_t y = x + 1; y < m.size(); ++y) {
            if (m[x].wrist() == m[y].wrist() && m[x].wrist() > best_wrist) {
                best_wrist = m[x].wrist();
                s = x;
                t = y;
            }
        }
    }
    return best_wrist >= 0;
}

struct CacheKey {
    RingKind kind;
    Monomial m;
    bool operator<(const CacheKey& o) const {
        if (kind != o.kind) return kind < o.kind;
        return m < o.m;
    }
};

// NBC expansion of a sorted duplicate-free monomial. The rewrite eliminates
// the broken pair with the largest wrist first; the wrist sum strictly
// decreases, so the recursion terminates. Results are memoized globally
// (the expansion depends only on the ring kind and the edge labels).
const Terms& reduce_monomial(RingKind kind, const Monomial& m) {
    static std::map<CacheKey, Terms> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(CacheKey{kind, m});
        if (it != cache.end()) return it->second;
    }
    Terms result;
    std::size_t s = 0, t = 0;
    if (!find_broken_pair(m, s, t)) {
        result.emplace(m, Scalar(1));
    } else {
        const Edge a = m[s], b = m[t];  // a = (i,k), b = (j,k), i < j
        Monomial rest;
        rest.reserve(m.size() - 2);
        for (std::size_t x = 0; x < m.size(); ++x)
            if (x != s && x != t) rest.push_back(m[x]);
        // m = sigma * (a ^ b ^ rest) after moving a, b to the front
        const int sigma =
            (kind == RingKind::OS) ? ((s + t - 1) % 2 == 0 ? 1 : -1) : 1;
        const Edge eij(a.i, b.i), ejk(b.i, a.j), eik(a.i, a.j);
        // e_ik e_jk -> e_ij e_jk - e_ij e_ik  (same shape for x generators)
        const std::pair<std::pair<Edge, Edge>, int> rewrites[2] = {
            {{eij, ejk}, 1}, {{eij, eik}, -1}};
        for (const auto& [pair, rsign] : rewrites) {
            auto merged = merge_two(pair.first, pair.second, rest);
            if (!merged) continue;  // repeated edge: term vanishes
            const int msign = (kind == RingKind::OS) ? merged->second : 1;
            Scalar c(sigma * rsign * msign);
            for (const auto& [sub, sc] : reduce_monomial(kind, merged->first))
                accumulate(result, sub, c * sc);
        }
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(CacheKey{kind, m}, std::move(result)).first->second;
}

void check_same_ring(const AlgElement& a, const AlgElement& b, const char* what) {
    if (a.kind() != b.kind() || a.n() != b.n())
        throw std::domain_error(std::string(what) + ": mismatched rings");
}

}  // namespace

AlgElement AlgElement::one(RingKind kind, int n) {
    AlgElement e(kind, n);
    e.terms_.emplace(Monomial{}, Scalar(1));
    return e;
}

AlgElement AlgElement::from_word(RingKind kind, int n,
                                 const std::vector<std::pair<int, int>>& pairs) {
    int sign = 1;
    Monomial edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        if (a < 1 || b < 1 || a > n + 1 || b > n + 1)
            throw std::domain_error("from_word: label out of range");
        bool flipped;
        edges.push_back(Edge::canonical(a, b, flipped));
        if (kind == RingKind::VG && flipped) sign = -sign;
    }
    int psign = sort_with_parity(edges);
    if (psign == 0) return zero(kind, n);
    if (kind == RingKind::OS) sign *= psign;
    AlgElement out(kind, n);
    Scalar c(sign);
    for (const auto& [m, sc] : reduce_monomial(kind, edges)) accumulate(out.terms_, m, c * sc);
    return out;
}

bool AlgElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::size_t d = terms_.begin()->first.size();
    for (const auto& [m, c] : terms_)
        if (m.size() != d) return false;
    return true;
}

int AlgElement::degree() const {
    if (terms_.empty()) return 0;
    if (!is_homogeneous()) throw std::domain_error("degree: element has mixed degrees");
    return static_cast<int>(terms_.begin()->first.size());
}

Scalar AlgElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void AlgElement::add_term(const Monomial& m, const Scalar& c) {
    if (!std::is_sorted(m.begin(), m.end())) throw std::domain_error("add_term: unsorted monomial");
    if (!is_nbc(Handful(n_, m))) throw std::domain_error("add_term: monomial is not NBC");
    accumulate(terms_, m, c);
}

AlgElement AlgElement::operator-() const {
    AlgElement out(kind_, n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    check_same_ring(*this, o, "operator+");
    for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
    return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
    check_same_ring(*this, o, "operator-");
    for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
    return *this;
}

AlgElement operator*(const Scalar& s, AlgElement a) {
    if (s.is_zero()) return AlgElement::zero(a.kind_, a.n_);
    for (auto& [m, c] : a.terms_) c *= s;
    return a;
}

bool operator==(const AlgElement& a, const AlgElement& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) {
    check_same_ring(a, b, "operator*");
    AlgElement out(a.kind_, a.n_);
    for (const auto& [m1, c1] : a.terms_) {
        for (const auto& [m2, c2] : b.terms_) {
            auto merged = merge_monomials(m1, m2);
            if (!merged) continue;
            Scalar c = c1 * c2;
            if (a.kind_ == RingKind::OS && merged->second < 0) c = -c;
            for (const auto& [m, sc] : reduce_monomial(a.kind_, merged->first))
                accumulate(out.terms_, m, c * sc);
        }
    }
    return out;
}

AlgElement AlgElement::pow(int k) const {
    if (k < 0) throw std::domain_error("pow: negative exponent");
    AlgElement out = one(kind_, n_);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

AlgElement AlgElement::act(const Permutation& p) const {
    if (p.size() != n_ + 1) throw std::domain_error("act: permutation size must be n+1");
    AlgElement out(kind_, n_);
    for (const auto& [m, c] : terms_) {
        int sign = 1;
        Monomial relabeled;
        relabeled.reserve(m.size());
        for (const Edge& e : m) {
            bool flipped;
            relabeled.push_back(Edge::canonical(p(e.i), p(e.j), flipped));
            if (kind_ == RingKind::VG && flipped) sign = -sign;
        }
        int psign = sort_with_parity(relabeled);
        if (psign == 0) continue;  // cannot happen for a bijective relabeling
        if (kind_ == RingKind::OS) sign *= psign;
        Scalar coeff = Scalar(sign) * c;
        for (const auto& [sub, sc] : reduce_monomial(kind_, relabeled))
            accumulate(out.terms_, sub, coeff * sc);
    }
    return out;
}

AlgElement differential(const AlgElement& x) {
    if (x.kind() != RingKind::OS)
        throw std::domain_error("differential: defined on OS elements only");
    AlgElement out(RingKind::OS, x.n());
    for (const auto& [m, c] : x.terms()) {
        for (std::size_t k = 0; k < m.size(); ++k) {
            Monomial sub;
            sub.reserve(m.size() - 1);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (i != k) sub.push_back(m[i]);
            // Subsets of NBC monomials are NBC, so no re-straightening needed.
            out.add_term(sub, k % 2 == 0 ? c : -c);
        }
    }
    return out;
}

std::string AlgElement::str() const {
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
        if (m.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += Handful(n_, m).str(ring_letter(kind_));
        } else {
            out += mag.str() + "*" + Handful(n_, m).str(ring_letter(kind_));
        }
    }
    return out;
}

AlgElement AlgElement::parse(RingKind kind, int n, const std::string& text) {
    // Normalize U+2212 to '-'.
    std::string s;
    for (std::size_t i = 0; i < text.size();) {
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xe2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s += '-';
            i += 3;
        } else {
            s += text[i++];
        }
    }
    if (s == "0") return zero(kind, n);
    AlgElement out(kind, n);
    const char letter = ring_letter(kind);
    std::size_t pos = 0;
    int sign = 1;
    if (!s.empty() && s[0] == '-') {
        sign = -1;
        pos = 1;
        while (pos < s.size() && s[pos] == ' ') ++pos;
    }
    while (pos < s.size()) {
        std::size_t end = s.size();
        int next_sign = 1;
        for (std::size_t i = pos; i + 2 < s.size(); ++i) {
            if (s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') {
                end = i;
                next_sign = s[i + 1] == '+' ? 1 : -1;
                break;
            }
        }
        std::string term = s.substr(pos, end - pos);
        std::size_t lp = term.find(letter);
        std::string coeff_text = lp == std::string::npos ? term : term.substr(0, lp);
        std::string mono_text = lp == std::string::npos ? "1" : term.substr(lp);
        if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.pop_back();
        if (coeff_text == "1" && lp != std::string::npos) coeff_text = "";
        Scalar c = coeff_text.empty() ? Scalar(1) : Scalar::parse(coeff_text);
        if (sign < 0) c = -c;
        // Preserve the written orientation: x[2,1] parses as -x[1,2] in VG.
        std::vector<std::pair<int, int>> pairs;
        if (mono_text != "1") {
            std::size_t mp = 0;
            while (mp < mono_text.size()) {
                if (mono_text[mp] != letter || mp + 1 >= mono_text.size() ||
                    mono_text[mp + 1] != '[')
                    throw std::domain_error("AlgElement::parse: malformed monomial '" +
                                            mono_text + "'");
                std::size_t comma = mono_text.find(',', mp);
                std::size_t close = mono_text.find(']', mp);
                if (comma == std::string::npos || close == std::string::npos || comma > close)
                    throw std::domain_error("AlgElement::parse: malformed edge in '" +
                                            mono_text + "'");
                int a = std::stoi(mono_text.substr(mp + 2, comma - mp - 2));
                int b = std::stoi(mono_text.substr(comma + 1, close - comma - 1));
                pairs.emplace_back(a, b);
                mp = close + 1;
            }
        }
        out += c * from_word(kind, n, pairs);
        sign = next_sign;
        pos = end == s.size() ? end : end + 3;
    }
    return out;
}

}  // namespace braidinv
