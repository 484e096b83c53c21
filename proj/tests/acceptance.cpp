// One line per acceptance criterion; failing claims are listed beneath.
#include "ordhyp/verify.hpp"

#include <chrono>
#include <cstdio>
#include <map>

int main()
{
    using namespace ordhyp;
    const auto start = std::chrono::steady_clock::now();
    const auto claims = run_verification();
    std::map<int, std::vector<const Claim*>> by_criterion;
    for (const auto& c : claims)
        by_criterion[c.criterion].push_back(&c);

    const auto& groups = verification_groups();
    int failed = 0;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const auto& list = by_criterion[static_cast<int>(i + 1)];
        std::size_t bad = 0;
        for (const auto* c : list)
            bad += c->pass ? 0 : 1;
        const bool ok = !list.empty() && bad == 0;
        failed += ok ? 0 : 1;
        std::printf("criterion %2zu %-18s %s (%zu claims, %zu failed)\n", i + 1, groups[i].c_str(),
                    ok ? "PASS" : "FAIL", list.size(), bad);
        for (const auto* c : list)
            if (!c->pass)
                std::printf("    %s: computed %s, expected %s\n", c->reference.c_str(), c->computed.c_str(),
                            c->expected.c_str());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%zu claims in %.1f s, %d criteria failed\n", claims.size(), secs, failed);
    return failed == 0 ? 0 : 1;
}
