#include "trisynth/cyclotomic.hpp"

namespace trisynth {

std::array<LocalOmega, 3> zeta_components(const LocalZeta& x) {
    const ZZeta& n = x.num();
    const unsigned k = x.k();
    // 1/3^k = (−ω)^k / χ^{2k}
    ZOmega unit = ZOmega::omega_pow(static_cast<int>(k % 3));
    if (k % 2 == 1) unit = -unit;
    std::array<LocalOmega, 3> out;
    for (int j = 0; j < 3; ++j)
        out[static_cast<std::size_t>(j)] =
            LocalOmega(ZOmega(n.c(j), n.c(j + 3)) * unit, 2 * k);
    return out;
}

LocalZeta compose_zeta(const std::array<LocalOmega, 3>& a) {
    LocalZeta acc = LocalZeta::zero();
    for (int j = 0; j < 3; ++j)
        acc = acc + LocalZeta::from_local_omega(a[static_cast<std::size_t>(j)]) *
                        LocalZeta::zeta_pow(j);
    return acc;
}

}  // namespace trisynth
