#include "conjdist/constructor.hpp"

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace conjdist {

namespace {

std::string describe(const ProblemInstance& inst, const Verdict& verdict) {
    return "no witness for (m=" + std::to_string(inst.m) + ", n=" + std::to_string(inst.n) +
           ", k=" + std::to_string(inst.k) + ", sigma=" + std::to_string(inst.sigma) +
           "): " + std::string(reason_name(verdict.reason));
}

void append_run(std::vector<Symbol>& out, Symbol symbol, std::int64_t count) {
    out.insert(out.end(), static_cast<std::size_t>(count), symbol);
}

}  // namespace

InfeasibleError::InfeasibleError(ProblemInstance inst, Verdict verdict)
    : std::runtime_error(describe(inst, verdict)), inst_(inst), verdict_(verdict) {}

PartnerCase partner_case(std::int64_t m, std::int64_t n, std::int64_t k) {
    if (k % 2 == 0 && k <= 2 * m) return PartnerCase::EvenTail;
    if (k % 2 != 0 && k <= 2 * m + 1) return PartnerCase::OddTail;
    if (k < m + n) return PartnerCase::ZeroPad;
    return PartnerCase::FullMismatch;
}

Str ternary_partner(std::int64_t m, std::int64_t n, std::int64_t k) {
    const ProblemInstance inst{m, n, k, kMaxAlphabet};
    const Verdict verdict = feasible(inst);
    if (!verdict.feasible) throw InfeasibleError(inst, verdict);

    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(n));
    switch (partner_case(m, n, k)) {
        case PartnerCase::EvenTail: {
            const std::int64_t t = k / 2;  // t <= m <= n
            append_run(out, 0, n - t);
            append_run(out, 1, t);
            break;
        }
        case PartnerCase::OddTail: {
            // Feasible odd k means 3 <= k and m < n, so 1 <= t <= m.
            const std::int64_t t = (k - 1) / 2;
            append_run(out, 0, n - m - 1);
            append_run(out, 1, 1);
            append_run(out, 0, m - t);
            append_run(out, 1, t - 1);
            append_run(out, 2, 1);
            break;
        }
        case PartnerCase::ZeroPad: {
            // Leading zeros leave the mismatch count unchanged; the inner
            // call has k = m + (k-m), so it lands in FullMismatch.
            append_run(out, 0, m + n - k);
            const Str tail = ternary_partner(m, k - m, k);
            out.insert(out.end(), tail.view().begin(), tail.view().end());
            break;
        }
        case PartnerCase::FullMismatch: {
            const std::int64_t blocks = n / (2 * m);
            const std::int64_t rest = n % (2 * m);
            for (std::int64_t i = 0; i < blocks; ++i) {
                append_run(out, 1, m);
                append_run(out, 2, m);
            }
            if (rest <= m) {
                append_run(out, 1, rest);
            } else {
                append_run(out, 1, m);
                append_run(out, 2, rest - m);
            }
            break;
        }
    }
    return Str(std::move(out));
}

namespace {

// Fills the position cycles of z = xy with alternating 0/1 runs: the first
// q cycles disagree everywhere they can (g positions each), cycle q
// contributes the remaining r disagreements, everything after stays zero.
std::pair<Str, Str> binary_witness(std::int64_t m, std::int64_t n, std::int64_t k) {
    const CycleDecomposition d =
        cycle_decomposition(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    const std::int64_t cycle_len = static_cast<std::int64_t>(d.cycle_length());
    const std::int64_t g = (cycle_len % 2 == 0) ? cycle_len : cycle_len - 1;
    const std::int64_t q = k / g;
    const std::int64_t r = k % g;  // even, since k and g are

    std::vector<Symbol> z(static_cast<std::size_t>(m + n), 0);
    for (std::size_t c = 0; c < d.cycle_count(); ++c) {
        const auto& cycle = d.cycles[c];
        if (static_cast<std::int64_t>(c) < q) {
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                z[cycle[i]] = static_cast<Symbol>(i % 2);
            }
        } else if (static_cast<std::int64_t>(c) == q && r > 0) {
            for (std::int64_t i = 0; i < r; ++i) {
                z[cycle[static_cast<std::size_t>(i)]] = static_cast<Symbol>(i % 2);
            }
            break;
        } else {
            break;
        }
    }

    std::vector<Symbol> xs(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(m));
    std::vector<Symbol> ys(z.begin() + static_cast<std::ptrdiff_t>(m), z.end());
    return {Str(std::move(xs)), Str(std::move(ys))};
}

}  // namespace

Witness construct(const ProblemInstance& inst) {
    const Verdict verdict = feasible(inst);
    if (!verdict.feasible) throw InfeasibleError(inst, verdict);

    Str x, y;
    if (inst.sigma >= kMaxAlphabet) {
        x = Str::zeros(static_cast<std::size_t>(inst.m));
        y = ternary_partner(inst.m, inst.n, inst.k);
    } else {
        std::tie(x, y) = binary_witness(inst.m, inst.n, inst.k);
    }

    const std::size_t got = conjugate_mismatch(x, y);
    if (got != static_cast<std::size_t>(inst.k)) {
        throw std::logic_error("construct: self-verification failed, built f=" +
                               std::to_string(got) + " for requested k=" +
                               std::to_string(inst.k));
    }
    return Witness{std::move(x), std::move(y), inst.k};
}

}  // namespace conjdist
