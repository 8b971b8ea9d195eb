// Runs the ten acceptance criteria and prints one line per criterion.

#include "glsmx/verify/acceptance.hpp"

#include <cstdio>

int main()
{
    int failed = 0;
    int k = 0;
    for (const auto& r : glsmx::acceptance::run_all()) {
        ++k;
        std::printf("%2d %-26s %s  (%.2f s)%s%s\n", k, r.name.c_str(), r.status == "pass" ? "PASS" : "FAIL", r.seconds,
                    r.first_failure.empty() ? "" : "  first failure: ", r.first_failure.c_str());
        if (r.status != "pass") ++failed;
    }
    std::printf("%d of %d criteria passed\n", k - failed, k);
    return failed == 0 ? 0 : 1;
}
