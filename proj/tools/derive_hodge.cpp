/**
 * @file derive_hodge.cpp
 * @brief Writes the Hodge integral fixture (data/hodge_table.json) from
 *        Mumford's Grothendieck-Riemann-Roch formula and psi intersection numbers.
 *
 * Usage: derive_hodge [output-path]; writes to stdout when no path is given.
 */
#include "hilbgw/hodge_io.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    const auto doc = hilbgw::hodge_table_to_json(hilbgw::derive_hodge_table());
    if (argc > 1) {
        std::ofstream out(argv[1]);
        if (!out) {
            std::cerr << "cannot write " << argv[1] << "\n";
            return 1;
        }
        out << doc.dump(2) << "\n";
    } else {
        std::cout << doc.dump(2) << "\n";
    }
    return 0;
}
