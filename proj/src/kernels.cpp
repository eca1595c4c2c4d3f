#include "sally/kernels.hpp"

#include <omp.h>

#include <algorithm>

namespace sally {

namespace {

struct LeadIndex {
    std::vector<Monomial> leads;
    std::vector<std::uint32_t> masks;

    explicit LeadIndex(std::span<const Monomial> ls) : leads(ls.begin(), ls.end()) {
        masks.reserve(leads.size());
        for (const Monomial& m : leads) masks.push_back(m.support_mask());
    }

    bool is_standard(const Monomial& m) const noexcept {
        const std::uint32_t mask = m.support_mask();
        for (std::size_t i = 0; i < leads.size(); ++i)
            if ((masks[i] & ~mask) == 0 && leads[i].divides(m)) return false;
        return true;
    }
};

std::size_t last_variable(const Monomial& m) {
    for (std::size_t i = m.nvars(); i-- > 0;)
        if (m[i] != 0) return i;
    return 0;
}

void extend(const LeadIndex& index, const Monomial& parent, std::size_t nvars, std::vector<Monomial>& out) {
    for (std::size_t v = last_variable(parent); v < nvars; ++v) {
        Monomial child = parent * Monomial::variable(nvars, v);
        if (index.is_standard(child)) out.push_back(child);
    }
}

std::vector<Monomial> next_level_serial(const LeadIndex& index, const std::vector<Monomial>& level,
                                        std::size_t nvars) {
    std::vector<Monomial> out;
    for (const Monomial& m : level) extend(index, m, nvars, out);
    return out;
}

std::vector<Monomial> next_level_omp(const LeadIndex& index, const std::vector<Monomial>& level,
                                     std::size_t nvars) {
    const std::size_t chunks = std::min<std::size_t>(level.size(), 4 * static_cast<std::size_t>(omp_get_max_threads()));
    if (chunks <= 1) return next_level_serial(index, level, nvars);
    std::vector<std::vector<Monomial>> parts(chunks);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(chunks);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t c = 0; c < n; ++c) {
        const std::size_t lo = level.size() * static_cast<std::size_t>(c) / chunks;
        const std::size_t hi = level.size() * static_cast<std::size_t>(c + 1) / chunks;
        for (std::size_t i = lo; i < hi; ++i) extend(index, level[i], nvars, parts[static_cast<std::size_t>(c)]);
    }
    std::vector<Monomial> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

bool finite_staircase(std::span<const Monomial> leads, std::size_t nvars) {
    for (std::size_t v = 0; v < nvars; ++v) {
        bool found = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) {
            return m.degree() > 0 && m[v] == m.degree();
        });
        if (!found) return false;
    }
    return true;
}

std::vector<Poly> reduce_batch(std::span<const Poly> inputs, const Reducer& reducer, Backend backend) {
    std::vector<Poly> out(inputs.size());
    if (backend == Backend::serial || inputs.size() < 2) {
        for (std::size_t i = 0; i < inputs.size(); ++i) out[i] = reducer.reduce(inputs[i]);
        return out;
    }
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(inputs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = reducer.reduce(inputs[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<std::uint64_t> standard_monomials_by_degree(std::span<const Monomial> leads, std::size_t nvars,
                                                        Backend backend) {
    LeadIndex index(leads);
    std::vector<std::uint64_t> counts;
    std::vector<Monomial> level;
    Monomial one(nvars);
    if (index.is_standard(one)) level.push_back(one);
    while (!level.empty()) {
        counts.push_back(level.size());
        level = backend == Backend::serial ? next_level_serial(index, level, nvars)
                                           : next_level_omp(index, level, nvars);
    }
    return counts;
}

std::uint64_t count_standard_monomials(std::span<const Monomial> leads, std::size_t nvars, Backend backend) {
    std::uint64_t total = 0;
    for (std::uint64_t c : standard_monomials_by_degree(leads, nvars, backend)) total += c;
    return total;
}

}  // namespace sally
