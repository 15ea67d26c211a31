#pragma once

#include <cstdint>
#include <stdexcept>

#include "conjdist/core.hpp"
#include "conjdist/feasibility.hpp"

namespace conjdist {

/// Thrown when a witness is requested for an instance that has none;
/// carries the feasibility verdict explaining why.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(ProblemInstance inst, Verdict verdict);

    const ProblemInstance& instance() const { return inst_; }
    const Verdict& verdict() const { return verdict_; }

private:
    ProblemInstance inst_;
    Verdict verdict_;
};

// Shape of the partner string y = ternary_partner(m, n, k). The cases are
// tried in this order; the order is part of the golden contract.
enum class PartnerCase {
    EvenTail,      // k even, k <= 2m:          y = 0^(n-t) 1^t,  t = k/2
    OddTail,       // k odd, 3 <= k <= 2m+1:    y = 0^(n-m-1) 1 0^(m-t) 1^(t-1) 2
    ZeroPad,       // 2m+1 < k < m+n:           y = 0^(m+n-k) . ternary_partner(m, k-m, k)
    FullMismatch,  // k = m+n:                  alternating 1/2 blocks
};

PartnerCase partner_case(std::int64_t m, std::int64_t n, std::int64_t k);

/// The partner string y of length n with conjugate_mismatch(0^m, y) = k,
/// over the three-letter alphabet. Throws InfeasibleError when
/// (m, n, k, sigma=3) is infeasible. ZeroPad reduces to FullMismatch in a
/// single step, so the recursion depth is at most two.
Str ternary_partner(std::int64_t m, std::int64_t n, std::int64_t k);

/// A concrete witness for any feasible instance.
///   sigma >= 3: x = 0^m, y = ternary_partner(m, n, k).
///   sigma  = 2: fills the position cycles of z = xy one at a time with
///               alternating 0/1 runs (k div g full cycles plus one partial
///               cycle of k mod g alternating symbols, the rest zeros,
///               where g is the largest even disagreement count a cycle
///               supports), then splits z into x and y.
/// The result is re-verified with conjugate_mismatch before it is returned.
Witness construct(const ProblemInstance& inst);

}  // namespace conjdist
