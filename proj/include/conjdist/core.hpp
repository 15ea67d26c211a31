#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "conjdist/str.hpp"

namespace conjdist {

/// Number of positions where x and y differ. Throws std::invalid_argument
/// on a length mismatch.
std::size_t hamming(std::span<const Symbol> x, std::span<const Symbol> y);
std::size_t hamming(const Str& x, const Str& y);

/// f(x, y) = h(xy, yx), computed by index arithmetic over the virtual
/// concatenation z = xy with rotation offset |x|; neither xy nor yx is
/// materialized. Symmetric in its arguments. Throws std::invalid_argument
/// if either string is empty.
std::size_t conjugate_mismatch(std::span<const Symbol> x, std::span<const Symbol> y);
std::size_t conjugate_mismatch(const Str& x, const Str& y);

/// The gcd(m,n) orbits of positions 0..m+n-1 under p -> (p+m) mod (m+n).
/// Cycle c starts at position c and steps by +m, so the ordering is fixed
/// and constructions built on it are deterministic.
struct CycleDecomposition {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> cycles;

    std::size_t total_length() const { return m + n; }
    std::size_t cycle_count() const { return cycles.size(); }
    std::size_t cycle_length() const { return cycles.empty() ? 0 : cycles.front().size(); }
};

CycleDecomposition cycle_decomposition(std::size_t m, std::size_t n);

/// Per-cycle count of positions p with z[p] != z[(p+m) mod (m+n)].
/// The counts sum to conjugate_mismatch(z[0..m), z[m..m+n)).
std::vector<std::size_t> cycle_disagreements(const Str& z, const CycleDecomposition& d);

/// Length of the shortest u with s = u^i. Equals |s| when s is primitive.
std::size_t primitive_root_length(std::span<const Symbol> s);

/// True iff x = z^i and y = z^j for some common z, decided by comparing
/// primitive roots. Equivalent to conjugate_mismatch(x, y) == 0.
bool have_common_power(const Str& x, const Str& y);

/// One feasibility query: lengths m <= n, target distance k, alphabet size.
/// Build through make_instance, which normalizes the fields.
struct ProblemInstance {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t k = 0;
    int sigma = 2;
};

/// Normalizes (m, n, k, sigma): swaps so m <= n (f is symmetric), clamps
/// sigma > 3 down to 3 (three symbols always suffice). Throws
/// std::invalid_argument on m < 1, n < 1 or sigma < 2. k may be anything;
/// out-of-range k is a feasibility verdict, not an error.
ProblemInstance make_instance(std::int64_t m, std::int64_t n, std::int64_t k, int sigma);

/// A pair (x, y) together with its verified distance k = f(x, y).
struct Witness {
    Str x;
    Str y;
    std::int64_t k = 0;
};

/// Builds a witness, computing k from the pair; never assumes a claimed k.
Witness make_witness(Str x, Str y);

}  // namespace conjdist
