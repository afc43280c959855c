// Replays the non-splitting descent and prints each step.
#include <cstdlib>
#include <iostream>

#include "skein/skein.hpp"

int main(int argc, char** argv) {
    const int depth = argc > 1 ? std::atoi(argv[1]) : 4;
    skein::DescentCertificate c = skein::verify_descent(depth);
    std::cout << "empty link: coefficient " << c.base.value << " at A=" << c.base.a_value << "\n";
    for (const auto& s : c.steps) {
        if (s.family == skein::Family::C) {
            std::cout << s.tag << "  C(" << s.m << "," << s.n << ")S_" << s.q << "(a2)";
        } else {
            std::cout << s.tag << "  Cbar(" << s.q << "," << s.n << ")S_" << s.m << "(a1)";
        }
        std::cout << "\n  " << s.constraint.to_string() << "\n  => " << s.fact << "\n";
    }
    for (const auto& l : c.breadth_chain) {
        std::cout << "link " << l.n << ": breadth " << l.breadth_u << " vs " << l.breadth_v << "\n";
    }
}
