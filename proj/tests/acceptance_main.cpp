// Acceptance suite runner: executes every criterion at its stated tolerance
// and prints one pass/fail line each. Exit code 0 iff all pass.

#include <iostream>

#include "trudinger/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    const auto results = trudinger::run_acceptance(&std::cout, only);
    int failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    if (failed) {
        std::cout << failed << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all " << results.size() << " criteria passed" << std::endl;
    return 0;
}
