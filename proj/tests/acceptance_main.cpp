/**
 * @file acceptance_main.cpp
 * @brief Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
 *
 * Usage: hilbgw_acceptance [criterion-id ...]; with no arguments all ten run.
 * The exit status is 0 when every selected criterion passes, 1 otherwise.
 */
#include "hilbgw/acceptance.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
    hilbgw::AcceptanceContext ctx;
    auto criteria = hilbgw::acceptance_criteria();
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (!selected.empty() && !selected.count(static_cast<int>(i) + 1)) continue;
        auto t0 = std::chrono::steady_clock::now();
        hilbgw::CriterionResult r;
        try {
            r = criteria[i](ctx);
        } catch (const std::exception& e) {
            r.id = static_cast<int>(i) + 1;
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << " [" << r.title << "] " << r.detail << " ("
                  << secs << " s)" << std::endl;
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
