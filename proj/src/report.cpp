#include "taulab/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace taulab {

const char* kTaulabVersion = "0.1.0";

int VerificationReport::count(const std::string& status) const {
    int n = 0;
    for (auto& c : checks)
        if (c.status == status) ++n;
    return n;
}

bool VerificationReport::all_passed() const { return count("fail") == 0; }

static std::string clip(const std::string& s, size_t n) {
    if (s.size() <= n) return s;
    return s.substr(0, n - 3) + "...";
}

std::string VerificationReport::to_table() const {
    std::ostringstream os;
    os << "suite: " << suite << "  seed: " << seed << "  trials: " << trials << "  version: "
       << version << "\n";
    size_t wname = 4;
    for (auto& c : checks) wname = std::max(wname, c.name.size());
    os << std::left << std::setw((int)wname + 2) << "name" << std::setw(8) << "status"
       << std::setw(12) << "residual" << "params\n";
    for (auto& c : checks) {
        os << std::left << std::setw((int)wname + 2) << c.name << std::setw(8) << c.status
           << std::setw(12) << clip(c.residual, 10) << clip(c.params, 48) << "\n";
        if (c.status == "fail")
            os << "    lhs = " << clip(c.lhs, 100) << "\n    rhs = " << clip(c.rhs, 100) << "\n";
    }
    os << "passed: " << count("pass") << "  failed: " << count("fail")
       << "  skipped: " << count("skipped") << "\n";
    return os.str();
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["version"] = version;
    j["suite"] = suite;
    j["seed"] = std::to_string(seed);
    j["trials"] = std::to_string(trials);
    j["checks"] = nlohmann::json::array();
    for (auto& c : checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["params"] = c.params;
        e["status"] = c.status;
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        e["residual"] = c.residual;
        e["elapsed"] = std::to_string(c.elapsed);
        j["checks"].push_back(e);
    }
    j["summary"] = {{"pass", std::to_string(count("pass"))},
                    {"fail", std::to_string(count("fail"))},
                    {"skipped", std::to_string(count("skipped"))}};
    return j.dump(2) + "\n";
}

static std::string csv_escape(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    return out + "\"";
}

std::string VerificationReport::to_csv() const {
    std::ostringstream os;
    os << "name,params,status,lhs,rhs,residual,elapsed\n";
    for (auto& c : checks)
        os << csv_escape(c.name) << "," << csv_escape(c.params) << "," << c.status << ","
           << csv_escape(c.lhs) << "," << csv_escape(c.rhs) << "," << csv_escape(c.residual)
           << "," << c.elapsed << "\n";
    return os.str();
}

std::string VerificationReport::render(const std::string& format) const {
    if (format == "json") return to_json();
    if (format == "csv") return to_csv();
    return to_table();
}

} // namespace taulab
