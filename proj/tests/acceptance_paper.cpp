// Acceptance harness: one pass/fail line per verification criterion, nonzero
// exit when anything fails. ctest runs this as `acceptance_paper`.

#include <cstdio>
#include <iostream>

#include "mprec/verify.hpp"

int main() {
    mprec::verify::Options opt;
    opt.max_m = 6;   // include the sampled dimension-6 substitute check
    opt.determinism_check = true;

    std::vector<mprec::verify::CheckResult> results =
        mprec::verify::run_paper_checks(opt, nullptr);

    bool ok = true;
    for (const auto& r : results) {
        std::printf("[%s] %s: %s (%lld ms)%s%s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                    r.claim.c_str(), static_cast<long long>(r.ms), r.detail.empty() ? "" : " -- ",
                    r.detail.c_str());
        ok = ok && r.pass;
    }
    std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILURES above");
    return ok ? 0 : 1;
}
