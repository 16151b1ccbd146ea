/* Acceptance runner: executes every registered check at its default
 * parameters and prints one pass/fail line per check.  Exits nonzero if
 * any check fails. */

#include <cstdio>

#include "macq/checks.hpp"

int main() {
        using namespace macq;
        const auto& reg = check_registry();
        int failed = 0;
        for (size_t k = 0; k < reg.size(); ++k) {
                CheckSpec spec;
                spec.name = reg[k].name;
                CheckReport rep = run_check(spec);
                bool ok = rep.status == "pass";
                if (!ok)
                        ++failed;
                std::printf("[%2zu/%zu] %-24s %s  (%.1fs, cutoff %s, "
                            "max discrepancy %s)%s%s\n",
                            k + 1, reg.size(), reg[k].name,
                            ok ? "PASS" : "FAIL", rep.elapsed,
                            rep.certified_cutoff.is_inf()
                                ? "exact"
                                : rep.certified_cutoff.str().c_str(),
                            rep.max_discrepancy.get_str().c_str(),
                            rep.note.empty() ? "" : "  -- ",
                            rep.note.c_str());
                std::fflush(stdout);
        }
        if (failed)
                std::printf("%d check(s) failed\n", failed);
        else
                std::printf("all %zu checks passed\n", reg.size());
        return failed ? 1 : 0;
}
