#ifndef SALLY_INVARIANTS_HPP
#define SALLY_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "sally/ideal.hpp"

namespace sally {

/// binom(a, b); 0 when b < 0 or a < b.
std::int64_t binom(std::int64_t a, std::int64_t b);

/// Dimension of the degree-n part of a polynomial ring in `vars` variables
/// (for vars = 0 this is 1 at n = 0 and 0 elsewhere).
std::int64_t polynomial_ring_hilbert(std::int64_t vars, std::int64_t n);

/// Number of standard monomials of (J + a); nullopt when infinite.
std::optional<std::uint64_t> colength(const IdealHandle& ideal);
/// As colength, throwing NotPrimaryError when infinite.
std::uint64_t finite_colength(const IdealHandle& ideal);

/// colength(K) - colength(J) = l(J/K); requires K inside J.
std::uint64_t length_quotient(const IdealHandle& outer, const IdealHandle& inner);

/// Hilbert-Samuel data of an m-primary ideal.
struct HilbertProfile {
    std::size_t dim = 0;
    std::vector<std::int64_t> values;  // values[n] = l(A/I^{n+1})
    std::vector<std::int64_t> coeffs;  // e_0 .. e_d
    std::size_t postulation = 0;       // least n0 with P(n) = values[n] on [n0, N]

    /// P(n) = sum_i (-1)^i e_i binom(n + d - i, d - i)
    std::int64_t polynomial(std::int64_t n) const;
    std::int64_t e(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
};

/// Solves for e_0..e_d from the top d+1 values and checks the two values
/// below that window. Throws FitError("increase N") on a short or unstable
/// window.
HilbertProfile fit_hilbert_coefficients(const std::vector<std::int64_t>& values, std::size_t dim);

/// An ideal I with a candidate reduction Q, caching the products the
/// invariants need (I^n, I Q^n, Q I^n). Thread-safe.
class IdealPair {
public:
    IdealPair(IdealHandle ideal, IdealHandle reduction);

    const IdealHandle& ideal() const noexcept { return ideal_; }
    const IdealHandle& reduction() const noexcept { return reduction_; }
    const RingSpec& ring() const noexcept { return ideal_.ring(); }

    /// I^n (the unit ideal for n = 0).
    IdealHandle power(unsigned n);
    /// I Q^n
    IdealHandle ideal_times_reduction_power(unsigned n);
    /// Q I^n
    IdealHandle reduction_times_power(unsigned n);

    /// Computes Groebner bases of I^n for n in [lo, hi], in parallel when
    /// the ring's backend allows it.
    void prepare_powers(unsigned lo, unsigned hi);

private:
    IdealHandle ideal_;
    IdealHandle reduction_;
    std::mutex mutex_;
    std::map<unsigned, IdealHandle> powers_;
    std::map<unsigned, IdealHandle> iq_;
    std::map<unsigned, IdealHandle> qi_;
};

/// l(A/I^{n+1}) for n = 0..N.
std::vector<std::int64_t> hilbert_samuel(IdealPair& pair, unsigned horizon);

/// Fits the Hilbert polynomial, doubling the horizon (up to max_horizon)
/// until the fit is stable.
HilbertProfile hilbert_profile(IdealPair& pair, unsigned horizon, unsigned max_horizon = 24);

/// Least r with I^{r+1} = Q I^r, double-checked at r+1. cap = 0 means
/// l(A/I). Throws CertificationError.
unsigned reduction_number(IdealPair& pair, unsigned cap = 0);

/// l(S_n) = l(A/IQ^n) - l(A/I^{n+1}) for n = 1..N, l(S_0) = 0.
std::vector<std::int64_t> sally_component_lengths(IdealPair& pair, unsigned horizon);

/// m I^{n+1} inside I Q^n for all 1 <= n <= horizon.
bool check_m_annihilation(IdealPair& pair, unsigned horizon);

struct SallyProfile {
    unsigned reduction_number = 0;
    std::int64_t c = 0;  // l(I^2/QI)
    std::vector<std::int64_t> lengths;
    bool m_annihilated = false;
    std::optional<std::int64_t> rank_estimate;  // e_1 - e_0 + l(A/I), when m-annihilated
};

struct RatliffRushResult {
    IdealHandle closure;
    unsigned stop_index = 0;  // first n with J_n = J_{n+1}
    unsigned cap = 0;
    std::vector<IdealHandle> chain;  // J_1 .. J_{stop+1}
};

/// J_n = (I^{n+1} : I^n) for n = 1, 2, ..., stopping at the first n with
/// J_n = J_{n+1}. Throws CapExceeded (listing the partial chain colengths)
/// when n reaches cap without stabilizing.
RatliffRushResult ratliff_rush(IdealPair& pair, unsigned cap = 10);
RatliffRushResult ratliff_rush(const IdealHandle& ideal, unsigned cap = 10);

struct AnalysisOptions {
    std::optional<unsigned> horizon;  // default max(r+3, d+3)
    unsigned reduction_cap = 0;
    unsigned max_horizon = 24;
};

struct PairAnalysis {
    unsigned horizon = 0;
    std::int64_t colength = 0;  // l(A/I)
    HilbertProfile hilbert;
    SallyProfile sally;
};

/// Certifies Q (reduction number), then computes the Hilbert and Sally
/// profiles on a common horizon.
PairAnalysis analyze_pair(IdealPair& pair, const AnalysisOptions& options = {});

}  // namespace sally

#endif  // SALLY_INVARIANTS_HPP
