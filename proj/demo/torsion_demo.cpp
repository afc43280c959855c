// Prints a few torsion certificates: tau_{m,n,q} killed by 1 - A^2 and the
// e'_i family killed by 1 - A^(2i+4).
#include <iostream>

#include "skein/skein.hpp"

int main() {
    for (auto [m, n, q] : {std::tuple{1, 1, 0}, std::tuple{2, 1, 1}, std::tuple{3, -1, 0}}) {
        skein::TorsionCertificate c = skein::certify_tau(m, n, q);
        std::cout << "tau(" << m << "," << n << "," << q << ") = " << c.element << "\n"
                  << "  annihilator " << c.annihilator << ", witness A=" << c.nonzero.a_value << " value "
                  << c.nonzero.value << ", verifies: " << std::boolalpha << c.verify() << "\n";
    }
    for (int i = 1; i <= 5; ++i) {
        skein::TorsionCertificate c = skein::certify_eprime(i);
        std::cout << "e'_" << i << " = " << c.element << "\n"
                  << "  annihilator " << c.annihilator << ", " << c.membership.steps.size()
                  << " reduction steps, verifies: " << c.verify() << "\n";
    }
}
