#include "conjdist/feasibility.hpp"

#include <numeric>
#include <stdexcept>

namespace conjdist {

std::string_view reason_name(Reason r) {
    switch (r) {
        case Reason::OK: return "OK";
        case Reason::K_EQUALS_ONE: return "K_EQUALS_ONE";
        case Reason::K_ODD_EQUAL_LENGTHS: return "K_ODD_EQUAL_LENGTHS";
        case Reason::K_ODD_BINARY: return "K_ODD_BINARY";
        case Reason::K_OUT_OF_RANGE: return "K_OUT_OF_RANGE";
        case Reason::K_EXCEEDS_BINARY_CAPACITY: return "K_EXCEEDS_BINARY_CAPACITY";
    }
    return "UNKNOWN";
}

std::int64_t capacity(std::int64_t m, std::int64_t n, int sigma) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument("capacity: lengths must be positive");
    }
    if (sigma >= kMaxAlphabet) return m + n;
    const std::int64_t d = std::gcd(m, n);
    const std::int64_t cycle_len = (m + n) / d;
    return (cycle_len % 2 != 0) ? m + n - d : m + n;
}

Verdict feasible(const ProblemInstance& inst) {
    if (inst.m < 1 || inst.m > inst.n) {
        throw std::invalid_argument("feasible: instance not normalized (need 1 <= m <= n)");
    }
    const std::int64_t cap = capacity(inst.m, inst.n, inst.sigma);
    auto verdict = [&](Reason r) { return Verdict{r == Reason::OK, r, cap}; };

    if (inst.k < 0 || inst.k > inst.m + inst.n) return verdict(Reason::K_OUT_OF_RANGE);
    if (inst.sigma >= kMaxAlphabet) {
        if (inst.k == 1) return verdict(Reason::K_EQUALS_ONE);
        if (inst.m == inst.n && inst.k % 2 != 0) return verdict(Reason::K_ODD_EQUAL_LENGTHS);
        return verdict(Reason::OK);
    }
    if (inst.k % 2 != 0) return verdict(Reason::K_ODD_BINARY);
    if (inst.k > cap) return verdict(Reason::K_EXCEEDS_BINARY_CAPACITY);
    return verdict(Reason::OK);
}

}  // namespace conjdist
