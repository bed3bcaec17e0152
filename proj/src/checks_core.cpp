#include "taulab/checks.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace taulab {

std::vector<std::string> suite_names() {
    return {"toda", "sympoly", "fermion", "phase", "sixvertex", "felderhof", "heights"};
}

std::vector<Check> checks_for_suite(const std::string& suite) {
    std::vector<Check> out;
    if (suite == "toda") register_toda_checks(out);
    else if (suite == "sympoly") register_sympoly_checks(out);
    else if (suite == "fermion") register_fermion_checks(out);
    else if (suite == "phase") register_phase_checks(out);
    else if (suite == "sixvertex") register_sixvertex_checks(out);
    else if (suite == "felderhof") register_felderhof_checks(out);
    else if (suite == "heights") register_heights_checks(out);
    else if (suite == "all") {
        for (const auto& s : suite_names()) {
            auto part = checks_for_suite(s);
            out.insert(out.end(), part.begin(), part.end());
        }
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return out;
}

VerificationReport run_suite(const std::string& suite, uint64_t seed, int trials,
                             std::optional<double> tolerance_override) {
    std::vector<Check> checks = checks_for_suite(suite); // throws on bad name
    std::sort(checks.begin(), checks.end(),
              [](const Check& a, const Check& b) { return a.name < b.name; });
    VerificationReport rep;
    rep.version = kTaulabVersion;
    rep.suite = suite;
    rep.seed = seed;
    rep.trials = trials;
    rep.checks.resize(checks.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < (long)checks.size(); ++i) {
        CheckContext ctx;
        ctx.seed = mix_seed(seed, checks[i].name); // check streams are independent
        ctx.trials = trials;
        ctx.tolerance_override = tolerance_override;
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = checks[i].run(ctx);
        } catch (const std::exception& e) {
            r.name = checks[i].name;
            r.status = "fail";
            r.lhs = "exception";
            r.rhs = e.what();
            r.residual = "n/a";
        }
        r.name = checks[i].name;
        r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.checks[i] = r;
    }
    return rep;
}

} // namespace taulab
