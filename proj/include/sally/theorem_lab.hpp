#ifndef SALLY_THEOREM_LAB_HPP
#define SALLY_THEOREM_LAB_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sally/examples.hpp"
#include "sally/invariants.hpp"

namespace sally {

enum class ClaimStatus { pass, fail, not_applicable, skipped };

std::string to_string(ClaimStatus status);

struct Claim {
    std::string id;
    ClaimStatus status;
    std::string witness;
};

struct VerificationReport {
    std::vector<Claim> claims;
    std::string inputs;  // fingerprint of ring, I, Q and horizon

    bool failed() const;
    void append(const VerificationReport& other);
};

struct LabOptions {
    AnalysisOptions analysis;
    unsigned ratliff_rush_cap = 10;
};

/// Caches the computations shared by the verifiers for one instance.
/// Certification of Q happens on first use of analysis() and throws
/// CertificationError.
class Workbench {
public:
    explicit Workbench(NamedInstance instance, LabOptions options = {});

    const NamedInstance& instance() const noexcept { return instance_; }
    IdealPair& pair() { return *pair_; }
    std::size_t dim() const { return instance_.ring->dim(); }

    const PairAnalysis& analysis();
    const RatliffRushResult& closure();
    /// I^3 = Q I^2
    bool cubic_reduction();
    std::string fingerprint();

private:
    NamedInstance instance_;
    LabOptions options_;
    std::unique_ptr<IdealPair> pair_;
    std::optional<PairAnalysis> analysis_;
    std::optional<RatliffRushResult> closure_;
    std::optional<bool> cubic_;
};

VerificationReport verify_expectations(Workbench& bench);
/// Inequality e1 >= e0 - l(A/I), the equality case, the length identity for
/// every n on the horizon and vanishing of e2..ed in the equality case.
VerificationReport verify_northcott_huneke(Workbench& bench);
/// Consequences of e1 = e0 - l(A/I) + 1.
VerificationReport verify_main_theorem(Workbench& bench);
/// Consequences of I^3 = Q I^2 with l(I^2/QI) = 1.
VerificationReport verify_sally_vasconcelos(Workbench& bench);
/// Equivalence of the two characterizations of the c = 2 case.
VerificationReport verify_c2_case(Workbench& bench);
/// Equivalence of (e1 = e0 - l + 1, e_i = 0 for i >= 2) with
/// (l(closure/I) = 1, closure^2 = Q closure).
VerificationReport verify_b_plus_boundary(Workbench& bench);
/// (I + (h))^2 = Q (I + (h)) implies I^3 = Q I^2.
VerificationReport verify_adjoin(Workbench& bench);

/// Theorem selectors accepted by run_verifiers.
const std::vector<std::string>& theorem_names();
/// name is one of theorem_names() or "all"; "all" also checks expectations.
VerificationReport run_verifiers(Workbench& bench, const std::string& name);

}  // namespace sally

#endif  // SALLY_THEOREM_LAB_HPP
