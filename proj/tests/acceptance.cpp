// Full verification sweep: one line per criterion, nonzero exit on any failure.
#include <spoke/verify.hpp>

#include <cstdio>

int main() {
    bool all_ok = true;
    for (const auto& c : spoke::all_criteria()) {
        spoke::CheckResult r = spoke::run_criterion(c.index, spoke::SweepLimits{});
        std::printf("%s %2d %s: %s (%lu checks, %ld ms)\n", r.pass ? "PASS" : "FAIL", c.index,
                    r.name.c_str(), r.summary.c_str(), static_cast<unsigned long>(r.checks),
                    r.elapsed_ms);
        for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
        std::fflush(stdout);
        all_ok = all_ok && r.pass;
    }
    return all_ok ? 0 : 1;
}
