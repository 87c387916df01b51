// One line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <exception>

#include "checks.hpp"

int main() {
    int failed = 0, index = 0;
    for (auto& c : polypack::checks::all_checks()) {
        ++index;
        polypack::checks::Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {c.suite, false, std::string("exception: ") + e.what(), 0};
        }
        failed += !r.pass;
        std::printf("[%s] %2d %s (%.1fs): %s\n", r.pass ? "PASS" : "FAIL", index, r.name.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed ? 1 : 0;
}
