// Acceptance runner: one pass/fail line per criterion, exit 0 only when every
// hard criterion holds. Uses the bundled fixtures (DEABENCH_FIXTURES or
// ./data/fixtures).

#include <iostream>

#include "deabench/config.hpp"
#include "deabench/fixtures.hpp"
#include "deabench/reproduce.hpp"

int main() {
    using namespace deabench;
    try {
        RunConfig config;
        const DatasetBundle fx = load_fixtures(fixture_directory());
        const ReproduceReport report = run_reproduction(config, fx);
        for (const auto &c : report.criteria) {
            std::cout << (c.pass ? "PASS" : "FAIL") << " [" << (c.hard ? "hard" : "soft")
                      << "] criterion " << c.number << ": " << c.name << '\n';
            if (!c.pass)
                for (const auto &line : c.details)
                    if (line.rfind("FAIL", 0) == 0) std::cout << "      " << line << '\n';
        }
        std::cout << "best returns-to-scale mode: " << report.best_rts_mode << '\n';
        std::cout << (report.hard_pass() ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << '\n';
        return report.hard_pass() ? 0 : 1;
    } catch (const std::exception &e) {
        std::cerr << "acceptance runner error: " << e.what() << '\n';
        return 2;
    }
}
