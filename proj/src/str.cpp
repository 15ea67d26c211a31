#include "conjdist/str.hpp"

#include <stdexcept>
#include <utility>

namespace conjdist {

Str::Str(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (Symbol s : symbols_) {
        if (s >= kMaxAlphabet) {
            throw std::invalid_argument("Str: symbol value " + std::to_string(int(s)) +
                                        " outside alphabet {0,1,2}");
        }
    }
}

Str Str::parse(std::string_view text) {
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '2') {
            throw std::invalid_argument(std::string("Str::parse: character '") + c +
                                        "' outside alphabet {0,1,2}");
        }
        symbols.push_back(static_cast<Symbol>(c - '0'));
    }
    Str out;
    out.symbols_ = std::move(symbols);  // already validated
    return out;
}

Str Str::zeros(std::size_t count) { return repeat(0, count); }

Str Str::repeat(Symbol symbol, std::size_t count) {
    if (symbol >= kMaxAlphabet) {
        throw std::invalid_argument("Str::repeat: symbol outside alphabet {0,1,2}");
    }
    Str out;
    out.symbols_.assign(count, symbol);
    return out;
}

bool Str::uses_only(int sigma) const {
    for (Symbol s : symbols_) {
        if (int(s) >= sigma) return false;
    }
    return true;
}

std::string Str::text() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
    return out;
}

Str concat(const Str& a, const Str& b) {
    std::vector<Symbol> symbols;
    symbols.reserve(a.size() + b.size());
    symbols.insert(symbols.end(), a.view().begin(), a.view().end());
    symbols.insert(symbols.end(), b.view().begin(), b.view().end());
    return Str(std::move(symbols));
}

Str rotated_left(const Str& s, std::size_t offset) {
    if (s.empty()) return s;
    const std::size_t len = s.size();
    const std::size_t r = offset % len;
    std::vector<Symbol> symbols;
    symbols.reserve(len);
    for (std::size_t i = 0; i < len; ++i) symbols.push_back(s[(i + r) % len]);
    return Str(std::move(symbols));
}

}  // namespace conjdist
