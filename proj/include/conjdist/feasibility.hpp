#pragma once

#include <cstdint>
#include <string_view>

#include "conjdist/core.hpp"

namespace conjdist {

// Machine-readable reason codes; the names are part of the JSON contract.
enum class Reason {
    OK,
    K_EQUALS_ONE,
    K_ODD_EQUAL_LENGTHS,
    K_ODD_BINARY,
    K_OUT_OF_RANGE,
    K_EXCEEDS_BINARY_CAPACITY,
};

std::string_view reason_name(Reason r);

struct Verdict {
    bool feasible = false;
    Reason reason = Reason::OK;
    std::int64_t capacity = 0;  // max achievable k for (m, n, sigma)
};

/// Maximum achievable distance: m+n for sigma >= 3; for sigma = 2 it drops
/// to m+n-gcd(m,n) when (m+n)/gcd(m,n) is odd. Requires m, n >= 1.
std::int64_t capacity(std::int64_t m, std::int64_t n, int sigma);

/// Decides whether (m, n, k, sigma) admits a witness.
///   sigma >= 3: feasible iff 0 <= k <= m+n, k != 1, and (m < n or k even).
///   sigma  = 2: feasible iff 0 <= k <= m+n, k even, and k <= capacity.
/// Requires a normalized instance (m <= n); see make_instance.
Verdict feasible(const ProblemInstance& inst);

}  // namespace conjdist
