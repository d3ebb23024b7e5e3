#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modlie/lie_algebra.hpp"
#include "modlie/matrix.hpp"
#include "modlie/modrep.hpp"

namespace modlie {

using Json = nlohmann::ordered_json;

struct Check {
    std::string name;
    Json expected;
    Json actual;
    bool pass = false;
    std::string note;
};

struct CheckReport {
    std::string scenario;
    std::vector<Check> checks;
    std::uint64_t seed = 0;
    double runtime_ms = 0;
    std::vector<std::string> notes;  // informational lines, never pass/fail
    Json data = Json::object();      // scenario-specific payload

    // Records a check whose outcome is expected == actual.
    void expect(std::string name, Json expected, Json actual, std::string note = {});
    void expect_true(std::string name, bool actual, std::string note = {});
    // pass holds iff every check passes; an empty report fails.
    bool pass() const;
    const Check* find(const std::string& name) const;
    // Checks sorted by name; key order is fixed.
    Json to_json() const;
};

std::vector<int> good_primes(const std::string& type, int max_p = 13);

// Census rows compared with the known table of balanced classes.
CheckReport run_balanced_census(const std::vector<std::string>& types, const std::vector<int>& primes);
// One (type, p, d) census with its class list under data["census"].
CheckReport run_census(const std::string& type, int p, int d = 0);

CheckReport verify_e8_w(std::uint64_t seed = kDefaultModuleSeed);
CheckReport verify_g2_w(std::uint64_t seed = kDefaultModuleSeed);
CheckReport verify_cartan_identities(std::uint64_t seed = kDefaultModuleSeed);

// ambient: "TYPE:p" (Chevalley), "psl4:2" or "dump:PATH".
// sub: "borel", "w-e8", "w-g2" or "custom:PATH" (one generator vector per line).
struct FiltrationRequest {
    std::string ambient;
    std::string sub;
    std::uint64_t seed = kDefaultModuleSeed;
};

// Throws NotStable when the chain does not close up.
CheckReport run_filtration(const FiltrationRequest& req);

// Structure constants of a named family, e.g. ("W", m, {n...}, p).
LieAlgebra build_family(const std::string& family, int m, const std::vector<int>& n, int p);

}  // namespace modlie
