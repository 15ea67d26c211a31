#include "conjdist/oracle.hpp"

#include <limits>
#include <string>
#include <utility>

namespace conjdist {

namespace {

std::uint64_t pow_saturating(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (result > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        result *= base;
    }
    return result;
}

void check_budget(int sigma, std::int64_t word_length, const OracleBudget& budget) {
    const std::uint64_t required =
        pow_saturating(static_cast<std::uint64_t>(sigma), static_cast<std::uint64_t>(word_length));
    if (required > budget.max_pairs) throw BudgetExceededError(required, budget.max_pairs);
}

int normalized_sigma(int sigma) {
    if (sigma < 2) throw std::invalid_argument("oracle: alphabet size must be at least 2");
    return sigma > kMaxAlphabet ? kMaxAlphabet : sigma;
}

void check_lengths(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw std::invalid_argument("oracle: lengths must be positive");
}

// Lexicographic successor of w over {0..sigma-1}; false once w wraps to 0^len.
bool next_word(std::vector<Symbol>& w, int sigma) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (int(++*it) < sigma) return true;
        *it = 0;
    }
    return false;
}

Witness split_witness(const std::vector<Symbol>& z, std::int64_t m) {
    std::vector<Symbol> xs(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(m));
    std::vector<Symbol> ys(z.begin() + static_cast<std::ptrdiff_t>(m), z.end());
    return make_witness(Str(std::move(xs)), Str(std::move(ys)));
}

}  // namespace

BudgetExceededError::BudgetExceededError(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("enumeration needs " + std::to_string(required) +
                         " candidate pairs, over the budget of " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

AchievabilityRecord achievable_set(std::int64_t m, std::int64_t n, int sigma,
                                   const OracleBudget& budget) {
    check_lengths(m, n);
    sigma = normalized_sigma(sigma);
    check_budget(sigma, m + n, budget);

    const std::size_t total = static_cast<std::size_t>(m + n);
    // Enumerating z = x.y in lexicographic order visits pairs in
    // lexicographic order of the concatenation, so the first z seen for a
    // given distance is the lexmin witness and no sorting is needed.
    std::vector<Symbol> z(total, 0);
    std::vector<std::vector<Symbol>> first_hit(total + 1);
    std::vector<bool> seen(total + 1, false);
    do {
        const std::span<const Symbol> zs(z);
        const std::size_t f =
            conjugate_mismatch(zs.first(static_cast<std::size_t>(m)),
                               zs.subspan(static_cast<std::size_t>(m)));
        if (!seen[f]) {
            seen[f] = true;
            first_hit[f] = z;
        }
    } while (next_word(z, sigma));

    AchievabilityRecord record;
    record.m = m;
    record.n = n;
    record.sigma = sigma;
    for (std::size_t k = 0; k <= total; ++k) {
        if (!seen[k]) continue;
        record.achievable.push_back(static_cast<std::int64_t>(k));
        record.witness_per_k.emplace(static_cast<std::int64_t>(k),
                                     split_witness(first_hit[k], m));
    }
    return record;
}

std::optional<Witness> lexmin_witness(std::int64_t m, std::int64_t n, std::int64_t k,
                                      int sigma, const OracleBudget& budget) {
    check_lengths(m, n);
    sigma = normalized_sigma(sigma);
    check_budget(sigma, m + n, budget);
    if (k < 0 || k > m + n) return std::nullopt;

    std::vector<Symbol> z(static_cast<std::size_t>(m + n), 0);
    do {
        const std::span<const Symbol> zs(z);
        const std::size_t f =
            conjugate_mismatch(zs.first(static_cast<std::size_t>(m)),
                               zs.subspan(static_cast<std::size_t>(m)));
        if (f == static_cast<std::size_t>(k)) return split_witness(z, m);
    } while (next_word(z, sigma));
    return std::nullopt;
}

std::set<std::int64_t> x_zero_achievable(std::int64_t m, std::int64_t n, int sigma,
                                         const OracleBudget& budget) {
    check_lengths(m, n);
    sigma = normalized_sigma(sigma);
    check_budget(sigma, n, budget);

    const Str x = Str::zeros(static_cast<std::size_t>(m));
    std::vector<Symbol> y(static_cast<std::size_t>(n), 0);
    std::set<std::int64_t> reachable;
    do {
        reachable.insert(static_cast<std::int64_t>(
            conjugate_mismatch(x.view(), std::span<const Symbol>(y))));
    } while (next_word(y, sigma));
    return reachable;
}

}  // namespace conjdist
