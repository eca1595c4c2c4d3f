#include "sally/invariants.hpp"

#include <algorithm>
#include <string>

#include "sally/errors.hpp"
#include "sally/kernels.hpp"

namespace sally {

std::int64_t binom(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

std::int64_t polynomial_ring_hilbert(std::int64_t vars, std::int64_t n) {
    if (n < 0) return 0;
    if (vars == 0) return n == 0 ? 1 : 0;
    return binom(n + vars - 1, vars - 1);
}

std::optional<std::uint64_t> colength(const IdealHandle& ideal) {
    auto leads = ideal.leading_monomials();
    const std::size_t n = ideal.ring().nvars();
    if (!finite_staircase(leads, n)) return std::nullopt;
    return count_standard_monomials(leads, n, ideal.ring().backend());
}

std::uint64_t finite_colength(const IdealHandle& ideal) {
    auto c = colength(ideal);
    if (!c) throw NotPrimaryError("ideal not m-primary: " + ideal.to_string());
    return *c;
}

std::uint64_t length_quotient(const IdealHandle& outer, const IdealHandle& inner) {
    if (!outer.contains(inner)) throw StructuralError("length_quotient: inner ideal is not contained in outer ideal");
    return finite_colength(inner) - finite_colength(outer);
}

std::int64_t HilbertProfile::polynomial(std::int64_t n) const {
    const auto d = static_cast<std::int64_t>(dim);
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i <= d; ++i) {
        std::int64_t term = coeffs[static_cast<std::size_t>(i)] * binom(n + d - i, d - i);
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

HilbertProfile fit_hilbert_coefficients(const std::vector<std::int64_t>& values, std::size_t dim) {
    if (values.size() < dim + 3)
        throw FitError("increase N: " + std::to_string(values.size()) + " values cannot fit a degree-" +
                       std::to_string(dim) + " Hilbert polynomial with two check points");
    const auto d = static_cast<std::int64_t>(dim);
    const auto top = static_cast<std::int64_t>(values.size()) - 1;

    // backward differences at the top of the window
    std::vector<std::int64_t> diff(dim + 1);
    for (std::int64_t k = 0; k <= d; ++k) {
        std::int64_t s = 0;
        for (std::int64_t j = 0; j <= k; ++j) {
            std::int64_t term = binom(k, j) * values[static_cast<std::size_t>(top - j)];
            s += (j % 2 == 0) ? term : -term;
        }
        diff[static_cast<std::size_t>(k)] = s;
    }
    // nabla^k P(N) = sum_{i <= d-k} (-1)^i e_i binom(N + d - i - k, d - i - k)
    HilbertProfile prof;
    prof.dim = dim;
    prof.values = values;
    prof.coeffs.assign(dim + 1, 0);
    for (std::int64_t k = d; k >= 0; --k) {
        const std::int64_t target = d - k;
        std::int64_t rest = diff[static_cast<std::size_t>(k)];
        for (std::int64_t i = 0; i < target; ++i) {
            std::int64_t term = prof.coeffs[static_cast<std::size_t>(i)] * binom(top + d - i - k, d - i - k);
            rest -= (i % 2 == 0) ? term : -term;
        }
        prof.coeffs[static_cast<std::size_t>(target)] = (target % 2 == 0) ? rest : -rest;
    }

    std::int64_t n0 = top + 1;
    while (n0 > 0 && prof.polynomial(n0 - 1) == values[static_cast<std::size_t>(n0 - 1)]) --n0;
    prof.postulation = static_cast<std::size_t>(n0);
    if (n0 > top - d - 2)
        throw FitError("increase N: Hilbert polynomial not yet stable (fit fails at n = " + std::to_string(n0 - 1) +
                       " of " + std::to_string(top) + ")");
    return prof;
}

namespace {

void compute_bases(std::vector<IdealHandle>& ideals, Backend backend) {
    const auto n = static_cast<std::ptrdiff_t>(ideals.size());
    if (backend == Backend::serial) {
        for (auto& i : ideals) (void)i.gb();
        return;
    }
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < n; ++k) (void)ideals[static_cast<std::size_t>(k)].gb();
}

}  // namespace

IdealPair::IdealPair(IdealHandle ideal, IdealHandle reduction)
    : ideal_(std::move(ideal)), reduction_(std::move(reduction)) {
    require_same_ring(ideal_, reduction_);
}

IdealHandle IdealPair::power(unsigned n) {
    std::lock_guard lock(mutex_);
    if (n == 0) return IdealHandle::unit(ideal_.ring_ptr());
    if (powers_.empty()) powers_.emplace(1, ideal_);
    unsigned have = powers_.rbegin()->first;
    for (unsigned k = have + 1; k <= n; ++k) powers_.emplace(k, ideal_product(powers_.at(k - 1), ideal_));
    return powers_.at(n);
}

IdealHandle IdealPair::ideal_times_reduction_power(unsigned n) {
    std::lock_guard lock(mutex_);
    if (iq_.empty()) iq_.emplace(0, ideal_);
    unsigned have = iq_.rbegin()->first;
    for (unsigned k = have + 1; k <= n; ++k) iq_.emplace(k, ideal_product(iq_.at(k - 1), reduction_));
    return iq_.at(n);
}

IdealHandle IdealPair::reduction_times_power(unsigned n) {
    if (n == 0) return reduction_;
    IdealHandle p = power(n);
    std::lock_guard lock(mutex_);
    auto it = qi_.find(n);
    if (it == qi_.end()) it = qi_.emplace(n, ideal_product(reduction_, p)).first;
    return it->second;
}

void IdealPair::prepare_powers(unsigned lo, unsigned hi) {
    std::vector<IdealHandle> todo;
    for (unsigned n = lo; n <= hi; ++n) todo.push_back(power(n));
    compute_bases(todo, ring().backend());
}

std::vector<std::int64_t> hilbert_samuel(IdealPair& pair, unsigned horizon) {
    if (!colength(pair.ideal())) throw NotPrimaryError("ideal not m-primary: " + pair.ideal().to_string());
    pair.prepare_powers(1, horizon + 1);
    std::vector<std::int64_t> values;
    for (unsigned n = 0; n <= horizon; ++n)
        values.push_back(static_cast<std::int64_t>(finite_colength(pair.power(n + 1))));
    return values;
}

HilbertProfile hilbert_profile(IdealPair& pair, unsigned horizon, unsigned max_horizon) {
    const std::size_t d = pair.ring().dim();
    horizon = std::max<unsigned>(horizon, static_cast<unsigned>(d + 2));
    for (;;) {
        auto values = hilbert_samuel(pair, horizon);
        try {
            return fit_hilbert_coefficients(values, d);
        } catch (const FitError&) {
            if (horizon >= max_horizon) throw;
            horizon = std::min(max_horizon, horizon * 2);
        }
    }
}

unsigned reduction_number(IdealPair& pair, unsigned cap) {
    if (!pair.ideal().contains(pair.reduction()))
        throw CertificationError("Q is not contained in I, so it cannot be a reduction");
    if (cap == 0) cap = static_cast<unsigned>(finite_colength(pair.ideal()));
    for (unsigned r = 0; r <= cap; ++r) {
        if (!ideal_equal(pair.power(r + 1), pair.reduction_times_power(r))) continue;
        if (!ideal_equal(pair.power(r + 2), pair.reduction_times_power(r + 1)))
            throw CertificationError("I^{r+1} = Q I^r holds at r = " + std::to_string(r) +
                                     " but not at r + 1; inconsistent input");
        return r;
    }
    throw CertificationError("Q not certified as a reduction within cap " + std::to_string(cap));
}

std::vector<std::int64_t> sally_component_lengths(IdealPair& pair, unsigned horizon) {
    std::vector<IdealHandle> todo;
    for (unsigned n = 1; n <= horizon; ++n) {
        todo.push_back(pair.ideal_times_reduction_power(n));
        todo.push_back(pair.power(n + 1));
    }
    compute_bases(todo, pair.ring().backend());
    std::vector<std::int64_t> lengths{0};
    for (unsigned n = 1; n <= horizon; ++n) {
        auto iq = finite_colength(pair.ideal_times_reduction_power(n));
        auto in = finite_colength(pair.power(n + 1));
        lengths.push_back(static_cast<std::int64_t>(iq) - static_cast<std::int64_t>(in));
    }
    return lengths;
}

bool check_m_annihilation(IdealPair& pair, unsigned horizon) {
    const RingSpec& ring = pair.ring();
    for (unsigned n = 1; n <= horizon; ++n) {
        IdealHandle target = pair.ideal_times_reduction_power(n);
        IdealHandle source = pair.power(n + 1);
        for (const Poly& g : source.gens())
            for (std::size_t v = 0; v < ring.nvars(); ++v)
                if (!target.contains(ring.variable(v) * g)) return false;
    }
    return true;
}

RatliffRushResult ratliff_rush(IdealPair& pair, unsigned cap) {
    if (!colength(pair.ideal())) throw NotPrimaryError("ideal not m-primary: " + pair.ideal().to_string());
    RatliffRushResult result{pair.ideal(), 0, cap, {}};
    for (unsigned n = 1; n <= cap + 1; ++n) {
        IdealHandle next = ideal_quotient(pair.power(n + 1), pair.power(n)).ideal;
        if (!result.chain.empty()) {
            const IdealHandle& prev = result.chain.back();
            if (!next.contains(prev)) throw StructuralError("Ratliff-Rush chain is not ascending at n = " + std::to_string(n));
            if (ideal_equal(prev, next)) {
                result.closure = prev;
                result.chain.push_back(next);
                result.stop_index = n - 1;
                return result;
            }
        }
        result.chain.push_back(next);
    }
    std::string lengths;
    for (const IdealHandle& j : result.chain) lengths += " " + std::to_string(finite_colength(j));
    throw CapExceeded("Ratliff-Rush chain did not stabilize within cap " + std::to_string(cap) +
                      "; colengths of J_1..:" + lengths);
}

RatliffRushResult ratliff_rush(const IdealHandle& ideal, unsigned cap) {
    IdealPair pair(ideal, ideal);
    return ratliff_rush(pair, cap);
}

PairAnalysis analyze_pair(IdealPair& pair, const AnalysisOptions& options) {
    PairAnalysis out;
    const auto d = static_cast<unsigned>(pair.ring().dim());
    out.colength = static_cast<std::int64_t>(finite_colength(pair.ideal()));
    out.sally.reduction_number = reduction_number(pair, options.reduction_cap);
    const unsigned r = out.sally.reduction_number;
    unsigned horizon = options.horizon.value_or(std::max(r + 3, d + 3));
    horizon = std::max(horizon, d + 3);

    out.hilbert = hilbert_profile(pair, horizon, std::max(options.max_horizon, horizon));
    out.horizon = static_cast<unsigned>(out.hilbert.values.size() - 1);

    out.sally.lengths = sally_component_lengths(pair, out.horizon);
    out.sally.c = out.sally.lengths.size() > 1 ? out.sally.lengths[1] : 0;
    out.sally.m_annihilated = check_m_annihilation(pair, std::max(out.horizon, r));
    if (out.sally.m_annihilated)
        out.sally.rank_estimate = out.hilbert.e(1) - out.hilbert.e(0) + out.colength;
    return out;
}

}  // namespace sally
