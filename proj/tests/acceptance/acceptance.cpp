// One line per acceptance criterion; the exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "modlie/cartantype.hpp"
#include "modlie/errors.hpp"
#include "modlie/liealg.hpp"
#include "modlie/modrep.hpp"
#include "modlie/rootdata.hpp"
#include "modlie/scenarios.hpp"
#include "modlie/weisfeiler.hpp"
#include "support/random_algebras.hpp"

using namespace modlie;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::string> failed_checks(const CheckReport& r) {
    std::vector<std::string> out;
    for (const auto& c : r.checks)
        if (!c.pass) out.push_back(c.name);
    return out;
}

void require_report(Outcome& o, const CheckReport& r) {
    for (const auto& name : failed_checks(r)) o.require(false, name);
    o.require(!r.checks.empty(), "empty report");
}

// ---------------------------------------------------------------- 1 and 2

Outcome census(CheckReport& rep) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    rep = run_balanced_census({"E6", "E7", "E8", "F4", "G2"}, {2, 3, 5, 7, 11, 13});
    const double secs = seconds_since(t0);
    require_report(o, rep);
    // Rows that must be present, each with its expected class profile.
    for (const std::string row : {"E6/p5", "E7/p5", "E8/p7", "E8/p11", "F4/p5", "F4/p7", "E6/p7", "E7/p7", "E7/p11",
                                  "E8/p13", "F4/p11", "F4/p13", "G2/p5", "G2/p7", "G2/p11", "G2/p13"})
        o.require(rep.find(row + "/classes") != nullptr, row + " missing");
    std::size_t classes = 0;
    for (const auto& c : rep.data["census"]) classes += c["classes"].size();
    o.require(classes == 8, "expected 8 balanced classes in total");
    o.require(secs < 120.0, "runtime over 2 minutes");
    o.detail << classes << " classes over " << rep.data["census"].size() << " (type, p) rows, " << secs << " s";
    return o;
}

Outcome killing(const CheckReport& rep) {
    Outcome o;
    std::size_t n = 0;
    for (const auto& c : rep.checks)
        if (c.name.size() > 11 && c.name.ends_with("/killing_hh")) {
            ++n;
            o.require(c.pass, c.name);
        }
    o.require(n == 8, "one Killing check per balanced class");
    o.detail << n << " classes with kappa(h,h) = 0";
    return o;
}

// ---------------------------------------------------------------- 3, 4, 5

Outcome scenario(const std::function<CheckReport()>& run, double limit_s) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport rep = run();
    const double secs = seconds_since(t0);
    require_report(o, rep);
    o.require(secs < limit_s, "runtime over " + std::to_string(limit_s) + " s");
    o.detail << rep.checks.size() << " checks, " << secs << " s";
    return o;
}

// ---------------------------------------------------------------- 6

struct Named {
    std::string name;
    LieAlgebra algebra;
};

std::vector<Named> constructed_algebras() {
    std::vector<Named> out;
    for (const auto& [t, p] : std::vector<std::pair<std::string, int>>{
             {"A1", 5}, {"A2", 7}, {"A4", 5}, {"D4", 5}, {"D5", 7}, {"G2", 5}, {"G2", 2}, {"F4", 7}, {"E6", 5},
             {"E7", 5}, {"E8", 5}, {"E8", 7}})
        out.push_back({t + "/" + std::to_string(p), build_g(t, p)->algebra});
    out.push_back({"W(1;1)/5", build_W(1, {1}, 5).algebra});
    out.push_back({"W(1;2)/3", build_W(1, {2}, 3).algebra});
    out.push_back({"W(2;1)/5", build_W(2, {1, 1}, 5).algebra});
    out.push_back({"W(2;1)/2", build_W(2, {1, 1}, 2).algebra});
    out.push_back({"W(2;(2,1))/3", build_W(2, {2, 1}, 3).algebra});
    Hamiltonian2 H = build_H2(5);
    out.push_back({"H(2;1)^(2)", H.second_derived.algebra});
    out.push_back({"H(2;1)", H.full.algebra});
    out.push_back({"poisson/5", build_poisson_H(5)});
    out.push_back({"poisson/7", build_poisson_H(7)});
    out.push_back({"block/5", build_block(5)});
    out.push_back({"AZ/5", build_AZ(5)});
    out.push_back({"AZ/3", build_AZ(3)});
    out.push_back({"K(3;1)", build_K3(5).algebra});
    out.push_back({"S(3;1)^(1)", build_S3(5).algebra});
    out.push_back({"W(2;1) x| O/2", build_W_ltimes_O(2, 2).algebra});
    out.push_back({"psl4/2", build_family("psl", 4, {}, 2)});
    return out;
}

Outcome properties() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();

    // Jacobi and antisymmetry on every constructed algebra.
    auto algebras = constructed_algebras();
    for (std::uint64_t s = 0; s < 20; ++s)
        algebras.push_back({"solvable-by-simple#" + std::to_string(s), fixtures::random_solvable_by_simple(s).algebra});
    for (const auto& a : algebras) o.require(a.algebra.check_antisymmetry() && a.algebra.check_jacobi(), "jacobi " + a.name);

    // ad(x^[p]) = ad(x)^p wherever x^[p] exists.
    std::size_t powers = 0, defined = 0;
    Rng rng(0xACCE55);
    for (const auto& a : algebras) {
        const LieAlgebra& L = a.algebra;
        if (!L.centerless()) continue;
        const auto p = static_cast<unsigned long long>(L.field()->p());
        for (int t = 0; t < 10; ++t) {
            Vec x = rng.vector(*L.field(), L.dim());
            if (t < 3) x = L.basis_vector(rng.below(L.dim()));
            ++powers;
            auto y = p_power(L, x);
            if (!y) continue;
            ++defined;
            o.require(L.ad(*y) == power(L.ad(x), p), "p-power law " + a.name);
        }
    }

    // Rank-nullity and subspace dimension identities.
    std::size_t instances = 0;
    std::vector<Field> fields;
    for (int p : {2, 3, 5, 7, 11, 13}) fields.push_back(FiniteField::get(p));
    for (int p : {2, 3, 5}) fields.push_back(FiniteField::get(p, 2));
    for (int t = 0; t < 1000; ++t) {
        const Field& f = fields[static_cast<std::size_t>(t) % fields.size()];
        const std::size_t r = 1 + rng.below(20), c = 1 + rng.below(20);
        Matrix m = rng.matrix(f, r, c);
        if (t % 4 == 0 && r > 1) m.set_row(r - 1, m.row_vec(0));
        const Subspace k = kernel(m);
        bool ok = rank(m) + k.dim() == c && rank(m) == image(m).dim();
        for (std::size_t i = 0; i < k.dim() && ok; ++i) ok = is_zero(m * k.basis_row(i));
        const std::size_t n = 1 + rng.below(30);
        Subspace a = rng.subspace(f, n, rng.below(n + 1)), b = rng.subspace(f, n, rng.below(n + 1));
        Subspace sum = subspace_sum(a, b), meet = subspace_intersect(a, b);
        ok = ok && a.dim() + b.dim() == sum.dim() + meet.dim() && sum == subspace_sum(b, a) && sum.contains(a) &&
             a.contains(meet) && b.contains(meet);
        o.require(ok, "linear algebra instance " + std::to_string(t));
        ++instances;
    }

    // Weisfeiler compatibility on every built filtration.
    std::size_t filtrations = 0;
    for (const auto& req : std::vector<FiltrationRequest>{{"A1:5", "borel", kDefaultModuleSeed},
                                                          {"A1:7", "borel", kDefaultModuleSeed},
                                                          {"psl4:2", "w-g2", kDefaultModuleSeed},
                                                          {"E8:5", "w-e8", kDefaultModuleSeed}}) {
        CheckReport r = run_filtration(req);
        o.require(r.find("compatibility") && r.find("compatibility")->pass, "compatibility " + r.scenario);
        o.require(r.find("p_compatibility") && r.find("p_compatibility")->pass, "p-compatibility " + r.scenario);
        ++filtrations;
    }
    for (int p : {3, 5}) {
        // The natural filtration of W(2;1) from its degree >= 0 part.
        WittAlgebra W = build_W(2, {1, 1}, p);
        Grading g = grade_W(W, {1, 1});
        std::vector<std::size_t> idx;
        for (const auto& [d, ix] : g.components)
            if (d >= 0) idx.insert(idx.end(), ix.begin(), ix.end());
        Subspace W0 = Subspace::coordinate(W.algebra.field(), W.algebra.dim(), idx);
        Filtration f = build_filtration(W.algebra, W0, choose_minus_one(W.algebra, W0));
        o.require(check_compatibility(f) && check_p_compatibility(f), "W(2;1) natural filtration p=" + std::to_string(p));
        o.require(f.dims().front() == W.algebra.dim() && f.q == 1, "W(2;1) depth p=" + std::to_string(p));
        ++filtrations;
    }

    // Radical post-condition on random solvable-by-simple algebras.
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto t = fixtures::random_solvable_by_simple(s);
        SubalgebraHandle r = radical(t.algebra, s);
        Quotient q = quotient(t.algebra, r.space);
        GenRep adj{q.algebra.field(), q.algebra.dim(), q.algebra.generator_ads()};
        bool abelian_min = false;
        for (const auto& m : minimal_submodules(adj, s))
            if (is_abelian(q.algebra, m)) abelian_min = true;
        o.require(r.space == t.radical && !abelian_min && is_solvable(t.algebra, r.space),
                  "radical instance " + std::to_string(s));
    }

    o.detail << algebras.size() << " algebras, " << defined << "/" << powers << " p-powers defined, " << instances
             << " linear algebra instances, " << filtrations << " filtrations, 20 radicals, " << seconds_since(t0) << " s";
    return o;
}

}  // namespace

int main() {
    bool all = true;
    auto line = [&](int k, const std::string& what, Outcome o) {
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << what << " (" << o.detail.str() << ")"
                  << std::endl;
    };
    auto guarded = [](const std::function<Outcome()>& f) {
        try {
            return f();
        } catch (const std::exception& e) {
            Outcome o;
            o.require(false, e.what());
            return o;
        }
    };

    CheckReport cens;
    line(1, "balanced census table", guarded([&] { return census(cens); }));
    line(2, "Killing form vanishes on balanced torals", guarded([&] { return killing(cens); }));
    line(3, "E8/p=5 pipeline", guarded([] { return scenario([] { return verify_e8_w(); }, 300.0); }));
    line(4, "G2/p=2 pipeline", guarded([] { return scenario([] { return verify_g2_w(); }, 10.0); }));
    line(5, "Cartan-type constructor suite", guarded([] { return scenario([] { return verify_cartan_identities(); }, 60.0); }));
    line(6, "property suites", guarded(properties));
    return all ? 0 : 1;
}
