// Long-running maximizer fixtures, kept out of the default test sweep.
// Usage: longrun_fixtures <n>, with n in {8, 9, 10}. n = 8 is a stretch
// target (minutes); n = 9 and 10 are batch jobs.

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <schurkit/schurkit.hpp>

using namespace schurkit;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: longrun_fixtures <n=8|9|10>\n";
        return 2;
    }
    int n = std::atoi(argv[1]);
    Int expected_value;
    Permutation expected_member;
    switch (n) {
    case 8:
        expected_value = 9438;
        expected_member = Permutation({1, 3, 2, 8, 7, 6, 5, 4});
        break;
    case 9:
        expected_value = 163592;
        expected_member = Permutation({1, 3, 2, 9, 8, 7, 6, 5, 4});
        break;
    case 10:
        expected_value = 4424420;
        expected_member = Permutation({1, 4, 3, 2, 10, 9, 8, 7, 6, 5});
        break;
    default:
        std::cerr << "usage: longrun_fixtures <n=8|9|10>\n";
        return 2;
    }

    unsigned hw = std::thread::hardware_concurrency();
    int threads = hw ? static_cast<int>(hw) : 1;
    std::cout << "sweeping S_" << n << " with " << threads << " thread(s)...\n";
    SearchReport r = max_search(n, threads, /*budget_override=*/true);

    std::cout << "n: " << r.n << "\n";
    std::cout << "max_value: " << to_string(r.max_value) << "\n";
    std::cout << "argmax:";
    for (const Permutation& w : r.argmax) std::cout << " " << w.text();
    std::cout << "\n";
    std::cout << "all_argmax_richardson: " << (r.all_argmax_richardson ? "true" : "false") << "\n";
    std::cout << "runtime_ms: " << r.runtime_ms << "\n";

    int failures = 0;
    if (r.max_value != expected_value) {
        std::cout << "MISMATCH: expected max_value " << to_string(expected_value) << "\n";
        ++failures;
    }
    bool member = false;
    for (const Permutation& w : r.argmax)
        if (w == expected_member) member = true;
    if (!member) {
        std::cout << "MISMATCH: argmax does not contain " << expected_member.text() << "\n";
        ++failures;
    }
    if (!r.all_argmax_richardson) {
        std::cout << "MISMATCH: a maximizer is not Richardson\n";
        ++failures;
    }
    std::cout << (failures == 0 ? "fixture check passed" : "fixture check FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}
