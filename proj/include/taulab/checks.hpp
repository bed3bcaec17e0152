#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "taulab/rational.hpp"
#include "taulab/report.hpp"
#include "taulab/rng.hpp"

namespace taulab {

struct CheckContext {
    uint64_t seed = 0; // already mixed with the check name
    int trials = 1;
    std::optional<double> tolerance_override; // for the induced-failure path

    Rng rng() const { return Rng(seed); }
    double tolerance() const { return tolerance_override.value_or(1e-30); }
};

struct Check {
    std::string name;
    std::function<CheckResult(const CheckContext&)> run;
};

// Accumulates pairwise comparisons into one CheckResult. Records the first
// failing pair's two sides so a failure is reproducible offline.
class Comparisons {
public:
    explicit Comparisons(std::string name) { res_.name = std::move(name); }

    void param(const std::string& p) { res_.params = p; }

    void expect_eq(const Rat& lhs, const Rat& rhs, const std::string& what) {
        ++total_;
        if (lhs == rhs) return;
        fail(lhs.str(), rhs.str(), (lhs - rhs).str(), what);
    }
    void expect_true(bool ok, const std::string& what) {
        ++total_;
        if (!ok) fail("false", "true", "1", what);
    }
    // numeric comparison against a relative tolerance; residual reported
    void expect_close(const std::string& lhs, const std::string& rhs, double residual,
                      double tol, const std::string& what) {
        ++total_;
        if (max_residual_ < residual) max_residual_ = residual;
        if (residual < tol) return;
        std::ostringstream r;
        r << residual;
        fail(lhs, rhs, r.str(), what);
    }

    CheckResult finish() {
        if (res_.status.empty()) {
            res_.status = "pass";
            std::ostringstream r;
            if (max_residual_ > 0) r << max_residual_;
            else r << 0;
            res_.residual = r.str();
        }
        std::ostringstream p;
        p << res_.params << (res_.params.empty() ? "" : "; ") << total_ << " comparisons";
        res_.params = p.str();
        return res_;
    }

private:
    CheckResult res_;
    int total_ = 0;
    double max_residual_ = 0;

    void fail(const std::string& lhs, const std::string& rhs, const std::string& resid,
              const std::string& what) {
        if (res_.status == "fail") return; // keep the first failure
        res_.status = "fail";
        res_.lhs = lhs;
        res_.rhs = rhs;
        res_.residual = resid;
        res_.params = res_.params.empty() ? what : res_.params + " | FAIL at " + what;
    }
};

void register_sympoly_checks(std::vector<Check>& out);
void register_toda_checks(std::vector<Check>& out);
void register_fermion_checks(std::vector<Check>& out);
void register_phase_checks(std::vector<Check>& out);
void register_sixvertex_checks(std::vector<Check>& out);
void register_felderhof_checks(std::vector<Check>& out);
void register_heights_checks(std::vector<Check>& out);

std::vector<std::string> suite_names(); // without "all"
std::vector<Check> checks_for_suite(const std::string& suite);

VerificationReport run_suite(const std::string& suite, uint64_t seed, int trials,
                             std::optional<double> tolerance_override = {});

} // namespace taulab
