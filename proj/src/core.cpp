#include "conjdist/core.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace conjdist {

std::size_t hamming(std::span<const Symbol> x, std::span<const Symbol> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("hamming: length mismatch (" + std::to_string(x.size()) +
                                    " vs " + std::to_string(y.size()) + ")");
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < x.size(); ++i) count += (x[i] != y[i]);
    return count;
}

std::size_t hamming(const Str& x, const Str& y) { return hamming(x.view(), y.view()); }

std::size_t conjugate_mismatch(std::span<const Symbol> x, std::span<const Symbol> y) {
    if (x.empty() || y.empty()) {
        throw std::invalid_argument("conjugate_mismatch: both strings must be nonempty");
    }
    const std::size_t m = x.size();
    const std::size_t len = m + y.size();
    // z = xy without the copy; yx[i] = z[(i+m) mod len].
    auto at = [&](std::size_t i) { return i < m ? x[i] : y[i - m]; };
    std::size_t count = 0;
    std::size_t j = m;  // tracks (i + m) mod len
    for (std::size_t i = 0; i < len; ++i) {
        count += (at(i) != at(j));
        if (++j == len) j = 0;
    }
    return count;
}

std::size_t conjugate_mismatch(const Str& x, const Str& y) {
    return conjugate_mismatch(x.view(), y.view());
}

CycleDecomposition cycle_decomposition(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) {
        throw std::invalid_argument("cycle_decomposition: lengths must be positive");
    }
    const std::size_t total = m + n;
    const std::size_t count = std::gcd(m, n);
    const std::size_t length = total / count;

    CycleDecomposition d;
    d.m = m;
    d.n = n;
    d.cycles.reserve(count);
    for (std::size_t start = 0; start < count; ++start) {
        std::vector<std::size_t> cycle;
        cycle.reserve(length);
        std::size_t p = start;
        do {
            cycle.push_back(p);
            p = (p + m) % total;
        } while (p != start);
        d.cycles.push_back(std::move(cycle));
    }
    return d;
}

std::vector<std::size_t> cycle_disagreements(const Str& z, const CycleDecomposition& d) {
    if (z.size() != d.total_length()) {
        throw std::invalid_argument("cycle_disagreements: |z| = " + std::to_string(z.size()) +
                                    " does not match decomposition length " +
                                    std::to_string(d.total_length()));
    }
    const std::size_t total = d.total_length();
    std::vector<std::size_t> counts;
    counts.reserve(d.cycles.size());
    for (const auto& cycle : d.cycles) {
        std::size_t count = 0;
        for (std::size_t p : cycle) count += (z[p] != z[(p + d.m) % total]);
        counts.push_back(count);
    }
    return counts;
}

std::size_t primitive_root_length(std::span<const Symbol> s) {
    if (s.empty()) {
        throw std::invalid_argument("primitive_root_length: empty string");
    }
    const std::size_t n = s.size();
    // Border array: border[i] = length of the longest proper border of s[0..i).
    std::vector<std::size_t> border(n + 1, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t b = border[i];
        while (b > 0 && s[i] != s[b]) b = border[b];
        border[i + 1] = (s[i] == s[b]) ? b + 1 : 0;
    }
    const std::size_t period = n - border[n];
    return (n % period == 0) ? period : n;
}

bool have_common_power(const Str& x, const Str& y) {
    if (x.empty() || y.empty()) {
        throw std::invalid_argument("have_common_power: both strings must be nonempty");
    }
    const std::size_t px = primitive_root_length(x.view());
    const std::size_t py = primitive_root_length(y.view());
    if (px != py) return false;
    for (std::size_t i = 0; i < px; ++i) {
        if (x[i] != y[i]) return false;
    }
    return true;
}

ProblemInstance make_instance(std::int64_t m, std::int64_t n, std::int64_t k, int sigma) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument("make_instance: lengths must be positive");
    }
    if (sigma < 2) {
        throw std::invalid_argument("make_instance: alphabet size must be at least 2");
    }
    if (m > n) std::swap(m, n);
    if (sigma > kMaxAlphabet) sigma = kMaxAlphabet;  // three symbols always suffice
    return ProblemInstance{m, n, k, sigma};
}

Witness make_witness(Str x, Str y) {
    const std::int64_t k = static_cast<std::int64_t>(conjugate_mismatch(x, y));
    return Witness{std::move(x), std::move(y), k};
}

}  // namespace conjdist
