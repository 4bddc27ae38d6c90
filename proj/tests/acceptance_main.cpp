// Acceptance suite runner: executes the numbered criteria and prints one
// pass/fail line each. Exit status is nonzero when any executed criterion
// does not pass.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "syndetica/verify.hpp"

int main(int argc, char** argv) {
    std::vector<int> wanted;
    std::uint64_t seed = 424243;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            wanted.push_back(std::stoi(argv[++i]));
        } else if (arg == "--seed" && i + 1 < argc) {
            seed = std::stoull(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N]... [--seed S]\n";
            return 2;
        }
    }
    if (wanted.empty()) wanted = {1, 2, 3, 4, 5, 6, 7, 8, 9};

    // stated runtime budgets, milliseconds; 0 = none stated
    const std::int64_t budget_ms[10] = {0,     10000, 30000, 5000, 5000,
                                        60000, 0,     0,     0,    0};

    bool all_pass = true;
    for (int index : wanted) {
        const auto start = std::chrono::steady_clock::now();
        const auto result = syndetica::verify::run_criterion(index, seed);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        bool ok = result.passed();
        std::string timing = " (" + std::to_string(ms) + " ms";
        if (budget_ms[index] > 0) {
            timing += " / budget " + std::to_string(budget_ms[index]) + " ms";
            if (ms > budget_ms[index]) ok = false;
        }
        timing += ")";
        std::cout << syndetica::verify::summary_line(result) << timing << "\n";
        if (!ok) {
            all_pass = false;
            if (!result.passed())
                std::cout << "        measured: " << result.measured.dump()
                          << "\n";
            else
                std::cout << "        over time budget\n";
        }
    }
    return all_pass ? 0 : 1;
}
