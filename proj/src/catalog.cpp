#include "k3mirror/catalog.hpp"

#include <charconv>

namespace k3mirror {

IntegerLattice hyperbolic_plane(long m)
{
    if (m <= 0)
        throw Error(ErrorKind::OutOfRange, "U(m) requires m >= 1, got " + std::to_string(m));
    IntMatrix g(2, 2);
    g(0, 1) = m;
    g(1, 0) = m;
    return IntegerLattice(std::move(g));
}

IntegerLattice e8_minus()
{
    // Dynkin edges, 0-based Bourbaki labels: 1-3-4-5-6-7-8 chain, 2 on 4.
    static constexpr std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    IntMatrix g(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        g(i, i) = -2;
    for (auto [a, b] : edges) {
        g(a, b) = 1;
        g(b, a) = 1;
    }
    return IntegerLattice(std::move(g));
}

IntegerLattice k3_lattice()
{
    IntegerLattice const u = hyperbolic_plane(1);
    IntegerLattice const e8 = e8_minus();
    return direct_sum(direct_sum(direct_sum(direct_sum(u, u), u), e8), e8);
}

std::optional<IntegerLattice> catalog_lattice(std::string_view name)
{
    if (name == "K3")
        return k3_lattice();
    if (name == "E8-")
        return e8_minus();
    if (name.starts_with("U:")) {
        std::string_view digits = name.substr(2);
        long m = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            return std::nullopt;
        return hyperbolic_plane(m);
    }
    return std::nullopt;
}

} // namespace k3mirror
