#include "sally/theorem_lab.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "sally/errors.hpp"

namespace sally {

std::string to_string(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::not_applicable: return "not-applicable";
        case ClaimStatus::skipped: return "skipped";
    }
    return "unknown";
}

bool VerificationReport::failed() const {
    return std::any_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::fail; });
}

void VerificationReport::append(const VerificationReport& other) {
    claims.insert(claims.end(), other.claims.begin(), other.claims.end());
    if (inputs.empty()) inputs = other.inputs;
}

Workbench::Workbench(NamedInstance instance, LabOptions options)
    : instance_(std::move(instance)),
      options_(options),
      pair_(std::make_unique<IdealPair>(instance_.ideal, instance_.reduction)) {}

const PairAnalysis& Workbench::analysis() {
    if (!analysis_) analysis_ = analyze_pair(*pair_, options_.analysis);
    return *analysis_;
}

const RatliffRushResult& Workbench::closure() {
    if (!closure_) closure_ = ratliff_rush(*pair_, options_.ratliff_rush_cap);
    return *closure_;
}

bool Workbench::cubic_reduction() {
    if (!cubic_) cubic_ = ideal_equal(pair_->power(3), pair_->reduction_times_power(2));
    return *cubic_;
}

std::string Workbench::fingerprint() {
    const RingSpec& ring = *instance_.ring;
    std::ostringstream text;
    text << "char " << ring.characteristic() << "\nvars";
    for (const auto& n : ring.poly_ring()->names) text << ' ' << n;
    text << "\norder " << ring.poly_ring()->order.name() << "\nmod";
    for (const Poly& f : ring.defining()) text << ' ' << f.to_string() << ',';
    text << "\nI " << instance_.ideal.to_string() << "\nQ " << instance_.reduction.to_string();
    const unsigned horizon = analysis().horizon;
    text << "\nN " << horizon;

    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char ch : text.str()) {
        hash ^= ch;
        hash *= 1099511628211ull;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
    return std::string(hex) + " vars=" + std::to_string(ring.nvars()) + " dim=" + std::to_string(ring.dim()) +
           " N=" + std::to_string(horizon);
}

namespace {

std::string num(std::int64_t v) { return std::to_string(v); }

ClaimStatus verdict(bool ok) { return ok ? ClaimStatus::pass : ClaimStatus::fail; }

std::string list(const std::vector<std::int64_t>& values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + num(values[i]);
    return s + "]";
}

std::string coefficients(const HilbertProfile& h) {
    std::string s;
    for (std::size_t i = 0; i < h.coeffs.size(); ++i) s += (i ? " e" : "e") + num(static_cast<std::int64_t>(i)) + "=" + num(h.coeffs[i]);
    return s;
}

struct Reporter {
    VerificationReport report;

    void add(std::string id, ClaimStatus status, std::string witness) {
        report.claims.push_back({std::move(id), status, std::move(witness)});
    }
    void check(std::string id, bool ok, std::string witness) { add(std::move(id), verdict(ok), std::move(witness)); }
};

VerificationReport start(Workbench& bench) {
    VerificationReport r;
    r.inputs = bench.fingerprint();
    return r;
}

/// First n in [lo, hi] where lhs(n) != rhs(n), as a witness; empty when none.
template <class Lhs, class Rhs>
std::string first_mismatch(unsigned lo, unsigned hi, Lhs lhs, Rhs rhs) {
    for (unsigned n = lo; n <= hi; ++n) {
        std::int64_t a = lhs(n), b = rhs(n);
        if (a != b) return "n=" + std::to_string(n) + ": computed " + num(a) + ", predicted " + num(b);
    }
    return {};
}

bool all_zero(const std::vector<std::int64_t>& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace

VerificationReport verify_expectations(Workbench& bench) {
    Reporter out;
    out.report = start(bench);
    const auto& inst = bench.instance();
    for (const auto& [key, expected] : inst.expected) {
        std::optional<std::int64_t> got;
        const auto& a = bench.analysis();
        if (key == "colength") got = a.colength;
        else if (key == "c") got = a.sally.c;
        else if (key == "r") got = a.sally.reduction_number;
        else if (key == "certifies") got = 1;
        else if (key == "dim") got = static_cast<std::int64_t>(bench.dim());
        else if (key == "rr_gap")
            got = static_cast<std::int64_t>(length_quotient(bench.closure().closure, inst.ideal));
        else if (key.size() > 1 && key[0] == 'e' &&
                 std::all_of(key.begin() + 1, key.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
            std::size_t i = std::stoul(key.substr(1));
            if (i <= bench.dim()) got = a.hilbert.e(i);
        }
        if (!got) {
            out.add("expect:" + key, ClaimStatus::fail, "unknown expectation key (expected " + num(expected) + ")");
            continue;
        }
        out.check("expect:" + key, *got == expected, "expected " + num(expected) + ", computed " + num(*got));
    }
    return out.report;
}

VerificationReport verify_northcott_huneke(Workbench& bench) {
    Reporter out;
    out.report = start(bench);
    const auto& a = bench.analysis();
    const auto& h = a.hilbert;
    const std::int64_t e0 = h.e(0), e1 = h.e(1), len = a.colength;
    const auto d = static_cast<std::int64_t>(bench.dim());
    const std::string base = "e0=" + num(e0) + " e1=" + num(e1) + " l(A/I)=" + num(len);

    std::string mismatch = first_mismatch(
        0, a.horizon, [&](unsigned n) { return h.values[n]; },
        [&](unsigned n) {
            const std::int64_t nn = n;
            return e0 * binom(nn + d, d) - (e0 - len) * binom(nn + d - 1, d - 1) - a.sally.lengths[n];
        });
    out.check("sally-module:length-identity", mismatch.empty(),
              mismatch.empty() ? "holds for 0 <= n <= " + std::to_string(a.horizon) : mismatch);

    out.check("northcott:inequality", e1 >= e0 - len, base);

    const bool equality = e1 == e0 - len;
    const bool squares = ideal_equal(bench.pair().power(2), bench.pair().reduction_times_power(1));
    const bool vanishing = all_zero(a.sally.lengths);
    out.check("northcott:equality-iff-I2=QI", equality == squares,
              base + " I^2=QI " + (squares ? "true" : "false"));
    out.check("sally-module:zero-iff-I2=QI", vanishing == squares,
              "lengths " + list(a.sally.lengths) + " I^2=QI " + (squares ? "true" : "false"));

    if (!equality) {
        out.add("huneke:higher-e-vanish", ClaimStatus::not_applicable, "hypothesis e1 = e0 - l(A/I) fails: " + base);
    } else {
        bool ok = true;
        for (std::size_t i = 2; i <= bench.dim(); ++i) ok = ok && h.e(i) == 0;
        out.check("huneke:higher-e-vanish", ok, coefficients(h));
    }
    return out.report;
}

VerificationReport verify_main_theorem(Workbench& bench) {
    Reporter out;
    out.report = start(bench);
    const auto& a = bench.analysis();
    const auto& h = a.hilbert;
    const std::int64_t e0 = h.e(0), e1 = h.e(1), len = a.colength;
    const auto d = static_cast<std::int64_t>(bench.dim());
    const std::int64_t c = a.sally.c;
    const std::string base = "e0=" + num(e0) + " e1=" + num(e1) + " l(A/I)=" + num(len);

    if (e1 != e0 - len + 1) {
        out.add("rank-one:hypothesis", ClaimStatus::not_applicable, "e1 = e0 - l(A/I) + 1 fails: " + base);
        return out.report;
    }
    out.add("rank-one:hypothesis", ClaimStatus::pass, base);

    const bool cubic = bench.cubic_reduction();
    out.check("rank-one:I3=QI2", cubic, std::string("I^3=QI^2 ") + (cubic ? "true" : "false") +
                                            ", reduction number " + std::to_string(a.sally.reduction_number));
    out.check("rank-one:c-range", c > 0 && c <= d, "c=" + num(c) + " d=" + num(d));
    out.check("rank-one:m-annihilates-S", a.sally.m_annihilated,
              std::string("m I^{n+1} in I Q^n up to n=") + std::to_string(std::max(a.horizon, a.sally.reduction_number)));
    out.check("rank-one:rank-estimate", a.sally.rank_estimate == 1,
              a.sally.rank_estimate ? "e1-e0+l=" + num(*a.sally.rank_estimate) : "not m-annihilated");

    if (c < d) {
        std::string mismatch = first_mismatch(
            0, a.horizon, [&](unsigned n) { return h.values[n]; },
            [&](unsigned n) {
                const std::int64_t nn = n;
                return e0 * binom(nn + d, d) - e1 * binom(nn + d - 1, d - 1) + binom(nn + d - c - 1, d - c - 1);
            });
        out.check("rank-one:hilbert-c-lt-d", mismatch.empty(),
                  mismatch.empty() ? "holds for 0 <= n <= " + std::to_string(a.horizon) : mismatch);
        out.add("rank-one:hilbert-c-eq-d", ClaimStatus::not_applicable, "c=" + num(c) + " < d=" + num(d));
    } else {
        out.add("rank-one:hilbert-c-lt-d", ClaimStatus::not_applicable, "c=" + num(c) + " d=" + num(d));
        std::string mismatch = first_mismatch(
            1, a.horizon, [&](unsigned n) { return h.values[n]; },
            [&](unsigned n) {
                const std::int64_t nn = n;
                return e0 * binom(nn + d, d) - e1 * binom(nn + d - 1, d - 1);
            });
        out.check("rank-one:hilbert-c-eq-d", mismatch.empty(),
                  mismatch.empty() ? "holds for 1 <= n <= " + std::to_string(a.horizon) : mismatch);
    }

    bool pattern = true;
    for (std::int64_t i = 2; i <= d; ++i) {
        std::int64_t want = (i == c + 1) ? ((i % 2 == 0) ? 1 : -1) : 0;
        pattern = pattern && h.e(static_cast<std::size_t>(i)) == want;
    }
    out.check("rank-one:e-pattern", pattern, coefficients(h) + " c=" + num(c));

    // graded pieces of X B with X = (X_1..X_c) in B = k[X_1..X_d]
    std::string mismatch = first_mismatch(
        0, a.horizon, [&](unsigned n) { return a.sally.lengths[n]; },
        [&](unsigned n) { return polynomial_ring_hilbert(d, n) - polynomial_ring_hilbert(d - c, n); });
    out.check("rank-one:sally-lengths", mismatch.empty(), mismatch.empty() ? "lengths " + list(a.sally.lengths) : mismatch);

    out.add("rank-one:depth", ClaimStatus::skipped, "out of scope: depth of the associated graded ring");
    return out.report;
}

VerificationReport verify_sally_vasconcelos(Workbench& bench) {
    Reporter out;
    out.report = start(bench);
    const auto& a = bench.analysis();
    const auto& h = a.hilbert;
    const auto d = static_cast<std::int64_t>(bench.dim());
    const bool cubic = bench.cubic_reduction();
    const std::string base = std::string("I^3=QI^2 ") + (cubic ? "true" : "false") + " c=" + num(a.sally.c);

    if (!cubic || a.sally.c != 1) {
        out.add("sally-c1:hypothesis", ClaimStatus::not_applicable, "needs I^3=QI^2 and c=1: " + base);
        return out.report;
    }
    out.add("sally-c1:hypothesis", ClaimStatus::pass, base);
    out.check("sally-c1:e1", h.e(1) == h.e(0) - a.colength + 1,
              "e0=" + num(h.e(0)) + " e1=" + num(h.e(1)) + " l(A/I)=" + num(a.colength));
    if (d >= 2)
        out.check("sally-c1:e2=1", h.e(2) == 1, coefficients(h));
    else
        out.add("sally-c1:e2=1", ClaimStatus::not_applicable, "d=1");
    bool higher = true;
    for (std::size_t i = 3; i <= bench.dim(); ++i) higher = higher && h.e(i) == 0;
    out.check("sally-c1:higher-e-vanish", higher, coefficients(h));

    std::string mismatch = first_mismatch(
        0, a.horizon, [&](unsigned n) { return a.sally.lengths[n]; },
        [&](unsigned n) { return binom(static_cast<std::int64_t>(n) + d - 2, d - 1); });
    out.check("sally-c1:sally-lengths", mismatch.empty(), mismatch.empty() ? "lengths " + list(a.sally.lengths) : mismatch);
    out.add("sally-c1:depth", ClaimStatus::skipped, "out of scope: depth of the associated graded ring");
    return out.report;
}

VerificationReport verify_c2_case(Workbench& bench) {
    Reporter out;
    out.report = start(bench);
    const auto& a = bench.analysis();
    const auto& h = a.hilbert;
    const auto d = static_cast<std::int64_t>(bench.dim());
    if (d < 2) {
        out.add("c2:equivalence", ClaimStatus::not_applicable, "d=" + num(d) + " < 2");
        return out.report;
    }
    IdealPair& pair = bench.pair();
    const bool cubic = bench.cubic_reduction();
    const bool m_kills = check_m_annihilation(pair, 1);
    const auto cube_gap = static_cast<std::int64_t>(finite_colength(pair.ideal_times_reduction_power(2))) -
                          static_cast<std::int64_t>(finite_colength(pair.power(3)));
    const bool structural = cubic && a.sally.c == 2 && m_kills && cube_gap < 2 * d;
    // depth G >= d - 2: under e1 = e0 - l + 1 the depth of G is d - c for c >= 2 and at least d - 1 for c = 1
    const bool rank_one = h.e(1) == h.e(0) - a.colength + 1;
    const bool depth_bound = rank_one && a.sally.c <= 2;
    const bool numerical = rank_one && h.e(2) == 0 && depth_bound;

    const std::string witness = std::string("structural side: I^3=QI^2 ") + (cubic ? "true" : "false") +
                                " c=" + num(a.sally.c) + " mI^2<=QI " + (m_kills ? "true" : "false") +
                                " l(I^3/Q^2I)=" + num(cube_gap) + " -> " + (structural ? "true" : "false") +
                                "; numerical side: e0=" + num(h.e(0)) + " e1=" + num(h.e(1)) + " e2=" + num(h.e(2)) +
                                " l(A/I)=" + num(a.colength) + " depth G>=d-2 " + (depth_bound ? "true" : "false") +
                                " (from depth G = d - c) -> " + (numerical ? "true" : "false");
    out.check("c2:equivalence", structural == numerical, witness);
    if (!(structural && numerical)) {
        out.add("c2:consequences", ClaimStatus::not_applicable, "conditions do not hold");
    } else {
        if (d >= 3)
            out.check("c2:e3=-1", h.e(3) == -1, coefficients(h));
        else
            out.add("c2:e3=-1", ClaimStatus::not_applicable, "d=2");
        bool higher = true;
        for (std::size_t i = 4; i <= bench.dim(); ++i) higher = higher && h.e(i) == 0;
        out.check("c2:higher-e-vanish", higher, coefficients(h));
        out.check("c2:length-I3/Q2I", cube_gap == 2 * d - 1, "l(I^3/Q^2I)=" + num(cube_gap) + " 2d-1=" + num(2 * d - 1));
    }
    out.add("c2:depth", ClaimStatus::skipped, "out of scope: depth of the associated graded ring");
    return out.report;
}

VerificationReport verify_b_plus_boundary(Workbench& bench) {
    Reporter out;
    out.report = start(bench);
    const auto& a = bench.analysis();
    const auto& h = a.hilbert;
    const auto d = static_cast<std::int64_t>(bench.dim());
    if (d < 2) {
        out.add("boundary:equivalence", ClaimStatus::not_applicable, "d=" + num(d) + " < 2");
        return out.report;
    }
    bool numerical = h.e(1) == h.e(0) - a.colength + 1;
    for (std::size_t i = 2; i <= bench.dim(); ++i) numerical = numerical && h.e(i) == 0;

    const RatliffRushResult& rr = bench.closure();
    const IdealHandle& closure = rr.closure;
    const auto gap = static_cast<std::int64_t>(length_quotient(closure, bench.instance().ideal));
    const bool closure_square =
        ideal_equal(ideal_product(closure, closure), ideal_product(bench.instance().reduction, closure));
    const bool structural = gap == 1 && closure_square;

    const std::string witness = std::string("numerical side: ") + coefficients(h) + " l(A/I)=" + num(a.colength) +
                                " -> " + (numerical ? "true" : "false") + "; closure side: l(closure/I)=" + num(gap) +
                                " closure^2=Q closure " + (closure_square ? "true" : "false") + " (chain stopped at n=" +
                                std::to_string(rr.stop_index) + ", cap " + std::to_string(rr.cap) + ") -> " +
                                (structural ? "true" : "false");
    out.check("boundary:equivalence", numerical == structural, witness);

    if (numerical && structural) {
        std::string mismatch = first_mismatch(
            1, a.horizon, [&](unsigned n) { return a.sally.lengths[n]; },
            [&](unsigned n) { return binom(static_cast<std::int64_t>(n) + d - 1, d - 1); });
        out.check("boundary:sally-lengths", mismatch.empty(),
                  mismatch.empty() ? "lengths " + list(a.sally.lengths) : mismatch);
    } else {
        out.add("boundary:sally-lengths", ClaimStatus::not_applicable, "conditions do not hold");
    }

    const bool idempotent = ideal_equal(ratliff_rush(closure, rr.cap).closure, closure);
    out.check("ratliff-rush:idempotent", idempotent, std::string("closure of closure equal: ") + (idempotent ? "true" : "false"));
    out.add("boundary:buchsbaum", ClaimStatus::skipped, "out of scope: Buchsbaum invariants");
    return out.report;
}

VerificationReport verify_adjoin(Workbench& bench) {
    Reporter out;
    out.report = start(bench);
    const auto& inst = bench.instance();
    if (!inst.adjoin) {
        out.add("adjoin:I3=QI2", ClaimStatus::not_applicable, "no element h supplied");
        return out.report;
    }
    IdealHandle bigger = ideal_sum(inst.ideal, *inst.adjoin);
    const bool hypothesis = ideal_equal(ideal_product(bigger, bigger), ideal_product(inst.reduction, bigger));
    const std::string h_text = inst.adjoin->to_string();
    if (!hypothesis) {
        out.add("adjoin:I3=QI2", ClaimStatus::not_applicable, "(I+" + h_text + ")^2 != Q(I+" + h_text + ")");
        return out.report;
    }
    const bool cubic = bench.cubic_reduction();
    out.check("adjoin:I3=QI2", cubic,
              "(I+" + h_text + ")^2 = Q(I+" + h_text + "); I^3=QI^2 " + (cubic ? "true" : "false"));
    return out.report;
}

const std::vector<std::string>& theorem_names() {
    static const std::vector<std::string> names{"northcott", "main", "sally", "c2", "bplus", "adjoin"};
    return names;
}

VerificationReport run_verifiers(Workbench& bench, const std::string& name) {
    if (name == "northcott") return verify_northcott_huneke(bench);
    if (name == "main") return verify_main_theorem(bench);
    if (name == "sally") return verify_sally_vasconcelos(bench);
    if (name == "c2") return verify_c2_case(bench);
    if (name == "bplus") return verify_b_plus_boundary(bench);
    if (name == "adjoin") return verify_adjoin(bench);
    if (name == "all") {
        VerificationReport report = verify_expectations(bench);
        for (const auto& n : theorem_names()) report.append(run_verifiers(bench, n));
        return report;
    }
    throw std::invalid_argument("unknown theorem selector: " + name);
}

}  // namespace sally
