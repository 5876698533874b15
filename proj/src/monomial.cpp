#include "liaison/monomial.hpp"

#include <algorithm>

namespace liaison {

std::vector<Monomial> monomials_of_degree(int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    out.reserve(static_cast<std::size_t>(dim_ring_degree(d)));
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b)
            for (int c = d - a - b; c >= 0; --c) {
                Monomial m;
                m.e = {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                       static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(d - a - b - c)};
                out.push_back(m);
            }
    std::sort(out.begin(), out.end(),
              [](const Monomial& x, const Monomial& y) { return degrevlex_cmp(x, y) > 0; });
    return out;
}

}  // namespace liaison
