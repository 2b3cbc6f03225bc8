// Walks a line of levels across the A2 hexagon and prints the Poincare
// polynomial of each regular reduction. Levels on a wall are reported as such.

#include <iostream>

#include <weightvar/kirwan.hpp>

int main() {
    using namespace weightvar;
    schubert_basis b(root_system::build('A', 2));
    auto orbit = orbit_parameter::make(b.roots(), b.group(), {1, 2});

    for (int k = -6; k <= 6; ++k) {
        std::vector<rational> coords{rational(k, 2), rational(1, 7)};
        tvector mu = b.roots().from_fundamental_coords(coords);
        std::cout << "mu = (" << to_string(coords[0]) << ", " << to_string(coords[1]) << "): ";
        auto report = is_regular(b, orbit, mu);
        if (!report.regular) {
            std::cout << "not regular (" << report.diagnostic << ")\n";
            continue;
        }
        try {
            std::cout << quotient_betti(b, orbit, mu).poincare << '\n';
        } catch (const error& e) {
            std::cout << errc_name(e.code()) << ": " << e.what() << '\n';
        }
    }
}
