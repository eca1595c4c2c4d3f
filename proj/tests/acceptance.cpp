#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "properties.hpp"
#include "sally/cli.hpp"
#include "sally/errors.hpp"
#include "sally/ring_lang.hpp"
#include "sally/theorem_lab.hpp"
#include "test_support.hpp"

using namespace sally;

namespace {

/// Collects the violations found while checking one criterion.
struct Findings {
    std::vector<std::string> problems;
    std::string note;

    void expect(bool cond, const std::string& what) {
        if (!cond) problems.push_back(what);
    }
    template <class T>
    void expect_eq(const T& computed, const T& expected, const std::string& what) {
        if (!(computed == expected)) {
            std::ostringstream s;
            s << what << ": expected " << expected << ", computed " << computed;
            problems.push_back(s.str());
        }
    }
};

std::string seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

bool criterion(int number, const std::string& title, double limit_seconds, const std::function<void(Findings&)>& body) {
    Findings f;
    auto start = std::chrono::steady_clock::now();
    try {
        body(f);
    } catch (const std::exception& e) {
        f.problems.push_back(std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && elapsed > limit_seconds)
        f.problems.push_back("took " + seconds(elapsed) + ", limit " + seconds(limit_seconds));
    const bool ok = f.problems.empty();
    std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << "  " << title << "  [" << seconds(elapsed)
              << "]";
    if (!f.note.empty()) std::cout << "  " << f.note;
    std::cout << "\n";
    for (std::size_t i = 0; i < f.problems.size() && i < 12; ++i) std::cout << "    " << f.problems[i] << "\n";
    if (f.problems.size() > 12) std::cout << "    ... " << f.problems.size() - 12 << " more\n";
    return ok;
}

std::string count_failures(const VerificationReport& r, Findings& f, const std::string& where) {
    int passed = 0;
    for (const Claim& c : r.claims) {
        if (c.status == ClaimStatus::fail) f.problems.push_back(where + " " + c.id + ": " + c.witness);
        if (c.status == ClaimStatus::pass) ++passed;
    }
    return std::to_string(passed);
}

const Claim* find_claim(const VerificationReport& r, const std::string& id) {
    for (const Claim& c : r.claims)
        if (c.id == id) return &c;
    return nullptr;
}

/// Catalog entries whose Q certifies as a reduction; the negative control is
/// covered separately.
std::vector<NamedInstance> certified_catalog() {
    std::vector<NamedInstance> out;
    for (auto& inst : catalog())
        if (!inst.expected.count("certifies")) out.push_back(std::move(inst));
    return out;
}

void check_grid_instance(unsigned m, unsigned d, const std::set<unsigned>& subset, Findings& f) {
    const std::string name = gno_name(m, d, subset);
    auto start = std::chrono::steady_clock::now();
    auto inst = gno_family(m, d, subset);
    const auto md = static_cast<std::int64_t>(m), dd = static_cast<std::int64_t>(d);
    const auto lam = static_cast<std::int64_t>(subset.size());

    IdealPair pair(inst.ideal, inst.reduction);
    auto a = analyze_pair(pair);
    f.expect_eq(a.hilbert.e(0), md + dd + 2, name + " e0");
    f.expect_eq(a.hilbert.e(1), lam + dd + 1, name + " e1");
    for (unsigned i = 2; i <= d; ++i) f.expect_eq(a.hilbert.e(i), std::int64_t{0}, name + " e" + std::to_string(i));
    f.expect_eq(a.colength, md - lam + 2, name + " l(A/I)");
    f.expect_eq(a.sally.c, dd, name + " l(I^2/QI)");
    f.expect_eq(a.sally.reduction_number, 2u, name + " reduction number");
    f.expect(ideal_equal(pair.power(3), pair.reduction_times_power(2)), name + " I^3 = QI^2");

    auto rr = ratliff_rush(pair);
    auto expected_closure = ideal_sum(inst.ideal, *inst.adjoin);
    f.expect(ideal_equal(rr.closure, expected_closure), name + " closure = I + (y)");
    f.expect_eq(length_quotient(rr.closure, inst.ideal), std::uint64_t{1}, name + " l(closure/I)");
    IdealPair closed(rr.closure, inst.reduction);
    f.expect(ideal_equal(closed.power(2), closed.reduction_times_power(1)), name + " closure^2 = Q closure");

    auto lengths = sally_component_lengths(pair, 4);
    for (unsigned n = 1; n <= 4; ++n)
        f.expect_eq(lengths[n], binom(n + dd - 1, dd - 1), name + " l(S_" + std::to_string(n) + ")");

    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > 60) f.problems.push_back(name + " took " + seconds(elapsed));
}

}  // namespace

int main() {
    int failed = 0;
    auto record = [&](bool ok) { failed += ok ? 0 : 1; };

    record(criterion(1, "gno grid: Hilbert coefficients, colength, c, r, closure, Sally lengths", 0, [](Findings& f) {
        const std::vector<std::tuple<unsigned, unsigned, std::set<unsigned>>> grid{
            {1, 1, {}}, {1, 1, {1}}, {1, 2, {1}}, {2, 2, {1}}, {2, 2, {1, 2}}, {1, 3, {1}}};
        for (const auto& [m, d, subset] : grid) check_grid_instance(m, d, subset, f);
        f.note = std::to_string(grid.size()) + " instances";
    }));

    record(criterion(2, "rossi: closure, e1 = e0 - l + 1, e2 = e3 = 0, e0 and l(A/I) by linear algebra", 120,
                     [](Findings& f) {
                         auto inst = rossi_example();
                         IdealPair pair(inst.ideal, inst.reduction);
                         auto a = analyze_pair(pair);
                         auto rr = ratliff_rush(pair);
                         f.expect(ideal_equal(rr.closure, ideal_sum(inst.ideal, *inst.adjoin)), "closure = I + (z^2)");
                         f.expect_eq(length_quotient(rr.closure, inst.ideal), std::uint64_t{1}, "l(closure/I)");
                         IdealPair closed(rr.closure, inst.reduction);
                         f.expect(ideal_equal(closed.power(2), closed.reduction_times_power(1)),
                                  "closure^2 = Q closure");
                         f.expect_eq(a.hilbert.e(1), a.hilbert.e(0) - a.colength + 1, "e1");
                         f.expect_eq(a.hilbert.e(2), std::int64_t{0}, "e2");
                         f.expect_eq(a.hilbert.e(3), std::int64_t{0}, "e3");
                         // Q is a parameter ideal of a polynomial ring, so e0 = l(A/Q)
                         auto oracle_e0 = testing::colength_by_linear_algebra(inst.reduction, 12);
                         auto oracle_len = testing::colength_by_linear_algebra(inst.ideal, 12);
                         f.expect_eq(oracle_e0, std::size_t{8}, "l(A/Q) by linear algebra");
                         f.expect_eq(oracle_len, std::size_t{5}, "l(A/I) by linear algebra");
                         f.expect_eq(a.hilbert.e(0), static_cast<std::int64_t>(oracle_e0), "e0");
                         f.expect_eq(a.colength, static_cast<std::int64_t>(oracle_len), "l(A/I)");
                         auto oracle_i2 = testing::colength_by_linear_algebra(pair.power(2), 12);
                         f.expect_eq(a.hilbert.values[1], static_cast<std::int64_t>(oracle_i2),
                                     "l(A/I^2) by linear algebra");
                         f.note = "e = (" + std::to_string(a.hilbert.e(0)) + "," + std::to_string(a.hilbert.e(1)) +
                                  "," + std::to_string(a.hilbert.e(2)) + "," + std::to_string(a.hilbert.e(3)) + ")";
                     }));

    record(criterion(3, "huneke boundary: I^2 = QI, e = (4,1,0), S = 0, closure = I", 5, [](Findings& f) {
        for (auto& inst : catalog()) {
            if (inst.name != "huneke-boundary") continue;
            IdealPair pair(inst.ideal, inst.reduction);
            auto a = analyze_pair(pair);
            f.expect(ideal_equal(pair.power(2), pair.reduction_times_power(1)), "I^2 = QI");
            f.expect(a.hilbert.coeffs == std::vector<std::int64_t>{4, 1, 0}, "e = (4,1,0)");
            for (std::size_t n = 0; n < a.sally.lengths.size(); ++n)
                f.expect_eq(a.sally.lengths[n], std::int64_t{0}, "l(S_" + std::to_string(n) + ")");
            f.expect(ideal_equal(ratliff_rush(pair).closure, inst.ideal), "closure = I");
            return;
        }
        f.problems.push_back("catalog has no huneke-boundary entry");
    }));

    record(criterion(4, "length identity on the catalog for 0 <= n <= N", 0, [](Findings& f) {
        int checked = 0;
        for (auto& inst : certified_catalog()) {
            Workbench bench(inst);
            auto r = verify_northcott_huneke(bench);
            const Claim* c = find_claim(r, "sally-module:length-identity");
            auto r_plus = std::max<unsigned>(bench.analysis().sally.reduction_number + 3, bench.dim() + 3);
            f.expect(c && c->status == ClaimStatus::pass, inst.name + ": " + (c ? c->witness : "no claim"));
            f.expect(bench.analysis().horizon >= r_plus, inst.name + ": horizon below max(r+3, d+3)");
            ++checked;
        }
        f.note = std::to_string(checked) + " instances";
    }));

    record(criterion(5, "northcott inequality, equality iff the Sally module vanishes", 0, [](Findings& f) {
        int checked = 0;
        for (auto& inst : certified_catalog()) {
            Workbench bench(inst);
            auto r = verify_northcott_huneke(bench);
            count_failures(r, f, inst.name);
            const auto& a = bench.analysis();
            const bool equality = a.hilbert.e(1) == a.hilbert.e(0) - a.colength;
            bool vanish = true;
            for (auto v : a.sally.lengths) vanish = vanish && v == 0;
            f.expect(a.hilbert.e(1) >= a.hilbert.e(0) - a.colength, inst.name + ": e1 < e0 - l(A/I)");
            f.expect(equality == vanish, inst.name + ": equality and vanishing disagree");
            ++checked;
        }
        f.note = std::to_string(checked) + " instances";
    }));

    record(criterion(6, "rank-one verifier on every instance with e1 = e0 - l + 1", 0, [](Findings& f) {
        int applicable = 0;
        for (auto& inst : certified_catalog()) {
            Workbench bench(inst);
            const auto& a = bench.analysis();
            if (a.hilbert.e(1) != a.hilbert.e(0) - a.colength + 1) continue;
            ++applicable;
            auto r = verify_main_theorem(bench);
            count_failures(r, f, inst.name);
            for (const char* id : {"rank-one:hypothesis", "rank-one:I3=QI2", "rank-one:e-pattern",
                                   "rank-one:sally-lengths"}) {
                const Claim* c = find_claim(r, id);
                f.expect(c && c->status == ClaimStatus::pass, inst.name + " " + id + " did not pass");
            }
            const Claim* lt = find_claim(r, "rank-one:hilbert-c-lt-d");
            const Claim* eq = find_claim(r, "rank-one:hilbert-c-eq-d");
            f.expect((lt && lt->status == ClaimStatus::pass) || (eq && eq->status == ClaimStatus::pass),
                     inst.name + " no Hilbert identity passed");
        }
        f.expect(applicable > 0, "no applicable instance");
        f.note = std::to_string(applicable) + " applicable instances";
    }));

    record(criterion(7, "engine property suites", 0, [](Findings& f) {
        auto absorb = [&](const std::string& what, const testing::PropertyTally& t, int minimum) {
            for (const auto& p : t.failures) f.problems.push_back(what + ": " + p);
            f.expect(t.cases >= minimum, what + ": only " + std::to_string(t.cases) + " cases");
            f.note += (f.note.empty() ? "" : ", ") + what + " " + std::to_string(t.cases);
        };
        absorb("ideal identities", testing::ideal_identities(11, 220), 200);
        absorb("ring axioms", testing::ring_axioms(2024, 250), 200);
        absorb("round trip", testing::catalog_round_trip(), static_cast<int>(catalog().size()));
        absorb("fuzz", testing::parser_fuzz(99, 3000), 3000);
    }));

    record(criterion(8, "negative control exits with certification failure", 0, [](Findings& f) {
        for (auto& inst : catalog()) {
            if (inst.name != "negative:not-a-reduction") continue;
            inst.expected.erase("certifies");
            auto path = std::filesystem::temp_directory_path() / "sally-acceptance-negative.ring";
            std::ofstream(path) << serialize(inst);
            std::ostringstream out, err;
            int code = cli::run({"verify", path.string()}, out, err);
            f.expect_eq(code, static_cast<int>(cli::ExitCode::certification_failed), "exit code");
            std::string msg = err.str();
            if (!msg.empty() && msg.back() == '\n') msg.pop_back();
            f.note = "exit " + std::to_string(code) + ": " + msg;
            return;
        }
        f.problems.push_back("catalog has no negative control");
    }));

    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
