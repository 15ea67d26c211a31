#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "conjdist/core.hpp"

namespace conjdist {

// Cap on the number of candidate pairs an exhaustive enumeration may visit.
// A configuration value, not a constant: callers widen or narrow it, and an
// enumeration that would not fit refuses loudly instead of truncating.
struct OracleBudget {
    std::uint64_t max_pairs = std::uint64_t{1} << 24;
};

class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(std::uint64_t required, std::uint64_t budget);

    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// Exact ground truth for one (m, n, sigma): every achievable k and the
/// lexicographically smallest witness per k. Witness order is lexicographic
/// on the concatenation x.y (equivalently on x, ties broken by y).
struct AchievabilityRecord {
    std::int64_t m = 0;
    std::int64_t n = 0;
    int sigma = 2;
    std::vector<std::int64_t> achievable;              // sorted ascending
    std::map<std::int64_t, Witness> witness_per_k;     // lexmin witness per k
};

/// Enumerates every pair in Sigma^m x Sigma^n in lexicographic order of x.y
/// and records each conjugate_mismatch value with its first (hence smallest)
/// witness. Refuses with BudgetExceededError when sigma^(m+n) exceeds the
/// budget.
AchievabilityRecord achievable_set(std::int64_t m, std::int64_t n, int sigma,
                                   const OracleBudget& budget = {});

/// First pair with f(x, y) = k in lexicographic order of x.y, or nullopt
/// when no pair achieves k.
std::optional<Witness> lexmin_witness(std::int64_t m, std::int64_t n, std::int64_t k,
                                      int sigma, const OracleBudget& budget = {});

/// { f(0^m, y) : y in Sigma^n }: the distances reachable while pinning
/// x to the all-zero string. Budget applies to sigma^n.
std::set<std::int64_t> x_zero_achievable(std::int64_t m, std::int64_t n, int sigma,
                                         const OracleBudget& budget = {});

}  // namespace conjdist
