#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "taulab/checks.hpp"
#include "taulab/felderhof.hpp"
#include "taulab/heights.hpp"
#include "taulab/phase_model.hpp"
#include "taulab/six_vertex.hpp"
#include "taulab/toda.hpp"

using namespace taulab;

namespace {

// flat key=value config; command-line flags override file values
std::map<std::string, std::string> load_config(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            return s;
        };
        kv[trim(key)] = trim(val);
    }
    return kv;
}

SpectralPoint point_from_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--point-file", "cannot open " + path);
    nlohmann::json j;
    in >> j;
    SpectralPoint pt;
    for (auto& s : j.at("x")) pt.x.push_back(Rat::from_string(s.get<std::string>()));
    for (auto& s : j.at("y")) pt.y.push_back(Rat::from_string(s.get<std::string>()));
    pt.p = Rat::from_string(j.at("p").get<std::string>());
    if (j.contains("w"))
        for (auto& s : j.at("w")) pt.w.push_back(Rat::from_string(s.get<std::string>()));
    return pt;
}

void emit_value(const std::string& format, const std::string& object,
                const std::map<std::string, std::string>& fields) {
    if (format == "json") {
        nlohmann::json j;
        j["object"] = object;
        for (auto& [k, v] : fields) j[k] = v;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::string hdr = "object", row = object;
        for (auto& [k, v] : fields) {
            hdr += "," + k;
            row += ",\"" + v + "\"";
        }
        std::cout << hdr << "\n" << row << "\n";
    } else {
        std::cout << object << "\n";
        for (auto& [k, v] : fields) std::cout << "  " << k << " = " << v << "\n";
    }
}

int run_verify(const std::string& suite, uint64_t seed, int trials, const std::string& format,
               std::optional<double> tolerance, const std::string& report_file) {
    VerificationReport rep = run_suite(suite, seed, trials, tolerance);
    std::string text = rep.render(format);
    if (!report_file.empty()) {
        std::ofstream out(report_file);
        if (!out) {
            std::cerr << "cannot write report to " << report_file << "\n";
            return 1;
        }
        out << text;
    } else {
        std::cout << text;
    }
    return rep.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"taulab: exact cross-verification of tau-function and DWPF identities"};
    app.require_subcommand(1);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    uint64_t seed = 1;
    int trials = 2;
    std::string format = "table";
    std::string config_path, report_file;
    double tolerance = -1;
    verify->add_option("--suite", suite, "toda|sympoly|fermion|phase|sixvertex|felderhof|heights|all");
    verify->add_option("--seed", seed, "64-bit suite seed");
    verify->add_option("--trials", trials, "seeded points per check")->check(CLI::PositiveNumber);
    verify->add_option("--out", format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    verify->add_option("--config", config_path, "flat key=value file mapping long flags");
    verify->add_option("--tolerance", tolerance,
                       "override the relative tolerance of numeric checks");
    verify->add_option("--report-file", report_file, "write the report here instead of stdout");

    // ---- compute ----
    auto* compute = app.add_subcommand("compute", "compute a single object");
    compute->require_subcommand(1);
    std::string cformat = "table";
    uint64_t cseed = 1;

    auto* dwpf_cmd = compute->add_subcommand("dwpf", "domain-wall partition function");
    std::string model = "sixvertex", method = "izergin", point_file;
    int nsize = 3;
    dwpf_cmd->add_option("--model", model, "sixvertex|felderhof")
        ->check(CLI::IsMember({"sixvertex", "felderhof"}));
    dwpf_cmd->add_option("--n", nsize, "lattice size")->check(CLI::PositiveNumber);
    dwpf_cmd->add_option("--method", method,
                         "sixvertex: bruteforce|monodromy|izergin|lascoux|lascoux_schur|"
                         "kirillov_smirnov; felderhof: bruteforce|determinant|product");
    dwpf_cmd->add_option("--seed", cseed, "sample the point from this seed");
    dwpf_cmd->add_option("--point-file", point_file, "JSON spectral point (sixvertex only)");
    dwpf_cmd->add_option("--out", cformat, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    auto* sp_cmd = compute->add_subcommand("scalar-product", "phase-model scalar product");
    int sp_n = 2, sp_m = 2;
    std::string sp_method = "determinant";
    sp_cmd->add_option("--n", sp_n)->check(CLI::PositiveNumber);
    sp_cmd->add_option("--m", sp_m)->check(CLI::NonNegativeNumber);
    sp_cmd->add_option("--method", sp_method, "bruteforce|determinant|schur")
        ->check(CLI::IsMember({"bruteforce", "determinant", "schur"}));
    sp_cmd->add_option("--seed", cseed);
    sp_cmd->add_option("--out", cformat)->check(CLI::IsMember({"table", "json", "csv"}));

    auto* census_cmd = compute->add_subcommand("pp-census", "boxed plane partition census");
    std::vector<int> box = {2, 2, 2};
    census_cmd->add_option("--box", box, "r s t")->expected(3);
    census_cmd->add_option("--out", cformat)->check(CLI::IsMember({"table", "json", "csv"}));

    auto* tau_cmd = compute->add_subcommand("tau", "finite 2-Toda tau at a sampled family");
    int tau_m = 0, tau_n = 4, tau_s = 2;
    tau_cmd->add_option("--m", tau_m, "lowest index");
    tau_cmd->add_option("--n", tau_n, "highest index");
    tau_cmd->add_option("--s", tau_s, "tau index, m <= s <= n");
    tau_cmd->add_option("--seed", cseed);
    tau_cmd->add_option("--out", cformat)->check(CLI::IsMember({"table", "json", "csv"}));

    auto* ell_cmd = compute->add_subcommand("elliptic-identity",
                                            "general-N elliptic identity residual");
    int ell_n = 2;
    ell_cmd->add_option("--n", ell_n)->check(CLI::PositiveNumber);
    ell_cmd->add_option("--seed", cseed);
    ell_cmd->add_option("--out", cformat)->check(CLI::IsMember({"table", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            if (!config_path.empty()) {
                auto kv = load_config(config_path);
                if (kv.count("suite") && verify->count("--suite") == 0) suite = kv["suite"];
                if (kv.count("seed") && verify->count("--seed") == 0)
                    seed = std::stoull(kv["seed"]);
                if (kv.count("trials") && verify->count("--trials") == 0)
                    trials = std::stoi(kv["trials"]);
                if (kv.count("out") && verify->count("--out") == 0) format = kv["out"];
                if (kv.count("tolerance") && verify->count("--tolerance") == 0)
                    tolerance = std::stod(kv["tolerance"]);
            }
            std::optional<double> tol;
            if (verify->count("--tolerance") > 0 || tolerance >= 0)
                if (tolerance >= 0) tol = tolerance;
            return run_verify(suite, seed, trials, format, tol, report_file);
        }
        // compute subcommands
        if (*dwpf_cmd) {
            Rng rng(cseed);
            if (model == "sixvertex") {
                static const std::map<std::string, DwpfMethod> methods = {
                    {"bruteforce", DwpfMethod::BruteForce},
                    {"monodromy", DwpfMethod::Monodromy},
                    {"izergin", DwpfMethod::Izergin},
                    {"lascoux", DwpfMethod::Lascoux},
                    {"lascoux_schur", DwpfMethod::LascouxSchur},
                    {"kirillov_smirnov", DwpfMethod::KirillovSmirnov}};
                if (!methods.count(method))
                    throw CLI::ValidationError("--method", "unknown sixvertex method " + method);
                SpectralPoint pt = point_file.empty() ? sample_spectral_point(rng, nsize)
                                                      : point_from_json(point_file);
                if ((int)pt.x.size() != nsize)
                    throw CLI::ValidationError("--point-file", "point size mismatch with --n");
                Rat z = dwpf(nsize, pt, methods.at(method));
                emit_value(cformat, "dwpf",
                           {{"model", model},
                            {"n", std::to_string(nsize)},
                            {"method", method},
                            {"seed", point_file.empty() ? std::to_string(cseed) : "file"},
                            {"value", z.str()}});
            } else {
                static const std::map<std::string, FelderhofMethod> methods = {
                    {"bruteforce", FelderhofMethod::BruteForce},
                    {"determinant", FelderhofMethod::Determinant},
                    {"product", FelderhofMethod::Product}};
                if (!methods.count(method))
                    throw CLI::ValidationError("--method", "unknown felderhof method " + method);
                ColourPoint pt = sample_colour_point(rng, nsize);
                Rat z = dwpf_reduced(nsize, pt, methods.at(method));
                emit_value(cformat, "dwpf",
                           {{"model", model},
                            {"n", std::to_string(nsize)},
                            {"method", method},
                            {"seed", std::to_string(cseed)},
                            {"value", z.str()}});
            }
            return 0;
        }
        if (*sp_cmd) {
            Rng rng(cseed);
            std::vector<Rat> u = sample_nonzero_distinct_sq(rng, sp_n);
            std::vector<Rat> v = sample_nonzero_distinct_sq(rng, sp_n);
            ScalarMethod m = sp_method == "bruteforce" ? ScalarMethod::BruteForce
                             : sp_method == "schur"    ? ScalarMethod::Schur
                                                       : ScalarMethod::Determinant;
            Rat s = scalar_product(sp_n, sp_m, u, v, m);
            emit_value(cformat, "scalar-product",
                       {{"n", std::to_string(sp_n)},
                        {"m", std::to_string(sp_m)},
                        {"method", sp_method},
                        {"seed", std::to_string(cseed)},
                        {"value", s.str()}});
            return 0;
        }
        if (*census_cmd) {
            auto census = plane_partition_census(box[0], box[1], box[2]);
            std::string poly;
            long total = 0;
            for (size_t k = 0; k < census.size(); ++k) {
                total += census[k];
                if (census[k] == 0) continue;
                if (!poly.empty()) poly += " + ";
                poly += std::to_string(census[k]);
                if (k > 0) poly += " q^" + std::to_string(k);
            }
            emit_value(cformat, "pp-census",
                       {{"box", std::to_string(box[0]) + "x" + std::to_string(box[1]) + "x" +
                                    std::to_string(box[2])},
                        {"q_polynomial", poly},
                        {"count_at_q1", std::to_string(total)}});
            return 0;
        }
        if (*tau_cmd) {
            if (!(tau_m <= tau_s && tau_s <= tau_n && tau_m < tau_n))
                throw CLI::ValidationError("--s", "need m <= s <= n and m < n");
            Rng rng(cseed);
            TodaFamily fam = sample_family(rng, tau_m, tau_n);
            emit_value(cformat, "tau",
                       {{"m", std::to_string(tau_m)},
                        {"n", std::to_string(tau_n)},
                        {"s", std::to_string(tau_s)},
                        {"seed", std::to_string(cseed)},
                        {"value", tau_family(fam, tau_s).str()}});
            return 0;
        }
        if (*ell_cmd) {
            if (ell_n < 2) throw CLI::ValidationError("--n", "need N >= 2");
            Rng rng(cseed);
            PsEllipticParams par = sample_ps_elliptic(rng, ell_n);
            EllipticIdentitySides sides = elliptic_identity_sides(ell_n, par);
            emit_value(cformat, "elliptic-identity",
                       {{"n", std::to_string(ell_n)},
                        {"seed", std::to_string(cseed)},
                        {"lhs", sides.lhs.str(50)},
                        {"rhs", sides.rhs.str(50)},
                        {"residual", sides.residual.str(6)}});
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
