#include "suites.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>

int main()
{
    int failed = 0;
    for (const auto& c : malcev::suites::criteria()) {
        auto start = std::chrono::steady_clock::now();
        malcev::suites::Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !out.pass;
        std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << c.number << "  " << c.title << ": "
                  << out.detail << "  [" << std::fixed << std::setprecision(2) << seconds << "s]\n";
    }
    std::cout << (10 - failed) << "/10 criteria pass\n";
    return failed == 0 ? 0 : 1;
}
