#include "braidinv/vg_ring.hpp"

#include <stdexcept>

namespace braidinv {
namespace vg {

VGElement straighten(int n, const std::vector<std::pair<int, int>>& gens) {
    return AlgElement::from_word(RingKind::VG, n, gens);
}

VGElement gen(int n, int i, int j) { return straighten(n, {{i, j}}); }

VGElement elem_z(int n, Convention conv) {
    if (n < 1) throw std::domain_error("elem_z: requires n >= 1");
    VGElement out(RingKind::VG, n);
    if (conv == Convention::FixLast) {
        for (int i = 1; i <= n; ++i) out.add_term({Edge(i, n + 1)}, Scalar(1));
    } else {
        for (int i = 2; i <= n + 1; ++i) out.add_term({Edge(1, i)}, Scalar(1));
    }
    return out;
}

}  // namespace vg
}  // namespace braidinv
