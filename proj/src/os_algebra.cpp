#include "braidinv/os_algebra.hpp"

#include <stdexcept>

namespace braidinv {
namespace os {

OSElement straighten(int n, const std::vector<std::pair<int, int>>& edges) {
    return AlgElement::from_word(RingKind::OS, n, edges);
}

OSElement gen(int n, int i, int j) { return straighten(n, {{i, j}}); }

int half_param(int n) { return (n + 1) / 2; }

namespace {
void require_rank(int n) {
    if (n < 2) throw std::domain_error("os element: requires n >= 2");
}
}  // namespace

OSElement elem_a(int n) {
    require_rank(n);
    OSElement out(RingKind::OS, n);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) out.add_term({Edge(i, j)}, Scalar(1));
    return out;
}

OSElement elem_m(int n) {
    require_rank(n);
    OSElement out(RingKind::OS, n);
    for (int i = 1; i <= n; ++i) out.add_term({Edge(i, n + 1)}, Scalar(1));
    return out;
}

OSElement elem_c(int n) {
    require_rank(n);
    OSElement out(RingKind::OS, n);
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            out.add_term({Edge(i, j), Edge(i, n + 1)}, Scalar(1));
            out.add_term({Edge(i, j), Edge(j, n + 1)}, Scalar(1));
        }
    }
    return out;
}

OSElement elem_g(int n) {
    require_rank(n);
    return elem_a(n) * elem_m(n) - Scalar(half_param(n)) * elem_c(n);
}

}  // namespace os
}  // namespace braidinv
