#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "modlie/errors.hpp"
#include "modlie/lie_algebra.hpp"
#include "modlie/scenarios.hpp"

#ifndef MODLIE_DEFAULT_CONFIG
#define MODLIE_DEFAULT_CONFIG "config/defaults.json"
#endif

namespace {

struct Defaults {
    std::uint64_t seed = modlie::kDefaultModuleSeed;
    std::vector<std::string> census_types = {"E6", "E7", "E8", "F4", "G2"};
    int census_max_prime = 13;
};

Defaults load_defaults(const std::string& path) {
    Defaults d;
    std::ifstream in(path);
    if (!in) return d;
    const auto j = nlohmann::json::parse(in);
    d.seed = j.value("seed", d.seed);
    if (j.contains("census")) {
        d.census_types = j["census"].value("types", d.census_types);
        d.census_max_prime = j["census"].value("max_prime", d.census_max_prime);
    }
    return d;
}

std::string compact(const modlie::Json& j) {
    std::string s = j.dump();
    return s.size() > 60 ? s.substr(0, 57) + "..." : s;
}

int emit(const modlie::CheckReport& rep, const std::string& json_path) {
    const modlie::Json report = rep.to_json();
    for (const auto& c : report["checks"]) {
        std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
        if (!c["pass"].get<bool>())
            std::cout << "  expected " << compact(c["expected"]) << " got " << compact(c["actual"]);
        std::cout << '\n';
    }
    for (const auto& n : rep.notes) std::cout << "note: " << n << '\n';
    std::cout << rep.scenario << ": " << (rep.pass() ? "all checks pass" : "FAILED") << " (" << rep.checks.size()
              << " checks, " << static_cast<long long>(rep.runtime_ms) << " ms)\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << report.dump(2) << '\n';
    }
    return rep.pass() ? 0 : 1;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computations with modular Lie algebras over small finite fields"};
    app.require_subcommand(1);
    std::string config_path = MODLIE_DEFAULT_CONFIG;
    std::string json_path;
    app.add_option("--config", config_path, "JSON file with default seeds");
    app.add_option("--json", json_path, "write the report as JSON");

    auto* census = app.add_subcommand("census", "balanced toral classes via Kac coordinates");
    std::string type;
    int prime = 0, divisor = 0;
    bool all = false;
    census->add_option("--type", type, "root system type, e.g. E7");
    census->add_option("--prime", prime, "good prime");
    census->add_option("--divisor", divisor, "balance divisor (default: the prime)");
    census->add_flag("--all", all, "every configured type and good prime");

    auto* verify = app.add_subcommand("verify", "scripted verification pipelines");
    std::string which;
    std::int64_t seed = -1;
    verify->add_option("pipeline", which, "e8-w | g2-w | cartan")->required()->check(CLI::IsMember({"e8-w", "g2-w", "cartan"}));
    verify->add_option("--seed", seed, "module search seed");

    auto* filt = app.add_subcommand("filtration", "Weisfeiler filtration of a maximal subalgebra");
    std::string ambient, sub;
    filt->add_option("--ambient", ambient, "TYPE:p, pslN:p or dump:PATH")->required();
    filt->add_option("--sub", sub, "borel | w-e8 | w-g2 | custom:PATH")->required();
    filt->add_option("--seed", seed, "module search seed");

    auto* build = app.add_subcommand("build", "construct an algebra and dump its structure constants");
    std::string family, nlist = "1";
    int m = 1, p = 5;
    std::string dump_path;
    build->add_option("--family", family, "W, H, Hfull, poisson, block, AZ, K, S, psl or a root type")->required();
    build->add_option("--m", m, "number of variables (matrix size for psl)");
    build->add_option("--n", nlist, "comma-separated divided power heights");
    build->add_option("--p", p, "characteristic");
    build->add_option("--dump", dump_path, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        const Defaults defaults = load_defaults(config_path);
        const std::uint64_t use_seed = seed >= 0 ? static_cast<std::uint64_t>(seed) : defaults.seed;
        if (census->parsed()) {
            if (all) {
                std::vector<int> primes;
                for (int q = 2; q <= defaults.census_max_prime; ++q) primes.push_back(q);
                return emit(modlie::run_balanced_census(defaults.census_types, primes), json_path);
            }
            if (type.empty() || prime == 0) throw CLI::ValidationError("census needs --type and --prime, or --all");
            return emit(modlie::run_census(type, prime, divisor), json_path);
        }
        if (verify->parsed()) {
            if (which == "e8-w") return emit(modlie::verify_e8_w(use_seed), json_path);
            if (which == "g2-w") return emit(modlie::verify_g2_w(use_seed), json_path);
            return emit(modlie::verify_cartan_identities(use_seed), json_path);
        }
        if (filt->parsed()) return emit(modlie::run_filtration({ambient, sub, use_seed}), json_path);
        if (build->parsed()) {
            modlie::LieAlgebra L = modlie::build_family(family, m, parse_ints(nlist), p);
            if (dump_path.empty()) {
                modlie::write_dump(L, std::cout);
            } else {
                std::ofstream out(dump_path);
                modlie::write_dump(L, out);
            }
            std::cerr << L.name() << ": dim " << L.dim() << '\n';
            return 0;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const modlie::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    return 0;
}
