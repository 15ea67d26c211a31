#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace conjdist {

using Symbol = std::uint8_t;

// Largest alphabet the library works with: symbols 0, 1, 2. Constructions
// never need a fourth symbol, so anything else is rejected at the boundary.
inline constexpr int kMaxAlphabet = 3;

/// Immutable string over the alphabet {0,1,2}, rendered as ASCII '0'..'2'
/// at I/O boundaries. Comparison is lexicographic with 0 < 1 < 2.
class Str {
public:
    Str() = default;

    /// Wraps a symbol vector; throws std::invalid_argument on a symbol >= 3.
    explicit Str(std::vector<Symbol> symbols);

    /// Parses an ASCII rendering; accepts only '0', '1', '2'.
    static Str parse(std::string_view text);

    static Str zeros(std::size_t count);
    static Str repeat(Symbol symbol, std::size_t count);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const Symbol> view() const { return symbols_; }

    /// True when every symbol is < sigma (e.g. sigma = 2 means binary).
    bool uses_only(int sigma) const;

    std::string text() const;

    friend bool operator==(const Str&, const Str&) = default;
    friend auto operator<=>(const Str& a, const Str& b) {
        return a.symbols_ <=> b.symbols_;
    }

private:
    std::vector<Symbol> symbols_;
};

Str concat(const Str& a, const Str& b);

/// Cyclic left shift: rotated_left(s, r)[i] = s[(i + r) mod |s|].
Str rotated_left(const Str& s, std::size_t offset);

}  // namespace conjdist
