#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "conjdist/core.hpp"
#include "conjdist/str.hpp"
#include "test_support.hpp"

using conjdist::Str;
using conjdist::Symbol;
using conjdist::testing::naive_conjugate_mismatch;
using conjdist::testing::next_word;

TEST_CASE("Str parse and text round-trip") {
    const Str s = Str::parse("0120");
    CHECK(s.size() == 4);
    CHECK(s[0] == 0);
    CHECK(s[1] == 1);
    CHECK(s[2] == 2);
    CHECK(s[3] == 0);
    CHECK(s.text() == "0120");
    CHECK(Str::parse("").empty());
}

TEST_CASE("Str rejects symbols outside the alphabet") {
    CHECK_THROWS_AS(Str::parse("013"), std::invalid_argument);
    CHECK_THROWS_AS(Str::parse("0a1"), std::invalid_argument);
    CHECK_THROWS_AS(Str(std::vector<Symbol>{0, 3}), std::invalid_argument);
}

TEST_CASE("Str factories and predicates") {
    CHECK(Str::zeros(4).text() == "0000");
    CHECK(Str::repeat(2, 3).text() == "222");
    CHECK(Str::parse("0101").uses_only(2));
    CHECK_FALSE(Str::parse("012").uses_only(2));
    CHECK(Str::parse("012").uses_only(3));
}

TEST_CASE("Str ordering is lexicographic with 0 < 1 < 2") {
    CHECK(Str::parse("01") < Str::parse("02"));
    CHECK(Str::parse("0") < Str::parse("00"));
    CHECK(Str::parse("1") < Str::parse("20"));
    CHECK(Str::parse("010") == Str::parse("010"));
}

TEST_CASE("concat and rotated_left") {
    CHECK(concat(Str::parse("01"), Str::parse("20")).text() == "0120");
    CHECK(rotated_left(Str{}, 1).empty());
    // rotated_left(s, r)[i] = s[(i + r) mod |s|]
    CHECK(rotated_left(Str::parse("012"), 1).text() == "120");
    CHECK(rotated_left(Str::parse("012"), 3).text() == "012");
    CHECK(rotated_left(Str::parse("0112"), 6).text() == "1201");
}

TEST_CASE("hamming counts differing positions") {
    // "seven" vs "three": encode each position's agreement pattern over
    // {0,1}; the four differing positions survive any injective encoding.
    CHECK(conjdist::hamming(Str::parse("00000"), Str::parse("11101")) == 4);
    const Str s = Str::parse("0120210");
    CHECK(conjdist::hamming(s, s) == 0);
    CHECK(conjdist::hamming(Str::parse("01010"), Str::parse("10101")) == 5);
    CHECK_THROWS_AS(conjdist::hamming(Str::parse("01"), Str::parse("0")),
                    std::invalid_argument);
}

TEST_CASE("conjugate_mismatch golden values") {
    CHECK(conjdist::conjugate_mismatch(Str::parse("000110"), Str::parse("111000000")) == 10);
    CHECK(conjdist::conjugate_mismatch(Str::zeros(4), Str::zeros(7)) == 0);
    CHECK(conjdist::conjugate_mismatch(Str::parse("010"), Str::parse("10101")) == 8);
    CHECK_THROWS_AS(conjdist::conjugate_mismatch(Str::parse(""), Str::parse("0")),
                    std::invalid_argument);
}

TEST_CASE("conjugate_mismatch equals hamming of materialized concatenations") {
    // Exhaustive over all ternary pairs with m + n <= 8.
    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t n = m; m + n <= 8; ++n) {
            std::vector<Symbol> xw(m, 0), yw(n, 0);
            do {
                std::fill(yw.begin(), yw.end(), 0);
                do {
                    const Str x{std::vector<Symbol>(xw)};
                    const Str y{std::vector<Symbol>(yw)};
                    const std::size_t f = conjdist::conjugate_mismatch(x, y);
                    CHECK(f == naive_conjugate_mismatch(x, y));
                    CHECK(f == conjdist::conjugate_mismatch(y, x));
                } while (next_word(yw, 3));
            } while (next_word(xw, 3));
        }
    }
}

TEST_CASE("conjugate_mismatch equals hamming against the rotated concatenation") {
    const Str x = Str::parse("0121");
    const Str y = Str::parse("102");
    const Str z = concat(x, y);
    // yx is z rotated left by |x|.
    CHECK(conjdist::hamming(z, rotated_left(z, x.size())) ==
          conjdist::conjugate_mismatch(x, y));
}

TEST_CASE("cycle_decomposition fixed ordering") {
    const auto d = conjdist::cycle_decomposition(6, 9);
    REQUIRE(d.cycle_count() == 3);
    CHECK(d.cycle_length() == 5);
    CHECK(d.cycles[0] == std::vector<std::size_t>{0, 6, 12, 3, 9});
    CHECK(d.cycles[1] == std::vector<std::size_t>{1, 7, 13, 4, 10});
    CHECK(d.cycles[2] == std::vector<std::size_t>{2, 8, 14, 5, 11});

    const auto single = conjdist::cycle_decomposition(1, 1);
    REQUIRE(single.cycle_count() == 1);
    CHECK(single.cycles[0] == std::vector<std::size_t>{0, 1});
}

TEST_CASE("cycle_decomposition of (4, 6)") {
    // gcd = 2, L = 5; orbits of +4 mod 10 starting at 0 and 1.
    const auto d = conjdist::cycle_decomposition(4, 6);
    REQUIRE(d.cycle_count() == 2);
    CHECK(d.cycles[0] == std::vector<std::size_t>{0, 4, 8, 2, 6});
    CHECK(d.cycles[1] == std::vector<std::size_t>{1, 5, 9, 3, 7});
}

TEST_CASE("cycle_decomposition partitions positions with +m successors") {
    for (std::size_t m = 1; m <= 6; ++m) {
        for (std::size_t n = 1; n <= 7; ++n) {
            const auto d = conjdist::cycle_decomposition(m, n);
            const std::size_t len = m + n;
            const std::size_t g = std::gcd(m, n);
            REQUIRE(d.cycle_count() == g);
            std::vector<int> seen(len, 0);
            for (const auto& cycle : d.cycles) {
                REQUIRE(cycle.size() == len / g);
                for (std::size_t i = 0; i < cycle.size(); ++i) {
                    seen[cycle[i]] += 1;
                    CHECK(cycle[(i + 1) % cycle.size()] == (cycle[i] + m) % len);
                }
            }
            CHECK(std::ranges::all_of(seen, [](int c) { return c == 1; }));
        }
    }
}

TEST_CASE("cycle_disagreements golden values") {
    const auto d69 = conjdist::cycle_decomposition(6, 9);
    CHECK(conjdist::cycle_disagreements(Str::parse("000110111000000"), d69) ==
          std::vector<std::size_t>{4, 4, 2});

    const auto d23 = conjdist::cycle_decomposition(2, 3);
    CHECK(conjdist::cycle_disagreements(Str::zeros(5), d23) ==
          std::vector<std::size_t>{0});

    // z = 0101 splits into x = 01, y = 01; xy = yx, so no cycle disagrees.
    const auto d22 = conjdist::cycle_decomposition(2, 2);
    CHECK(conjdist::cycle_disagreements(Str::parse("0101"), d22) ==
          std::vector<std::size_t>{0, 0});
    // z = 0110 (x = 01, y = 10) disagrees everywhere.
    CHECK(conjdist::cycle_disagreements(Str::parse("0110"), d22) ==
          std::vector<std::size_t>{2, 2});

    CHECK_THROWS_AS(conjdist::cycle_disagreements(Str::parse("01"), d69),
                    std::invalid_argument);
}

TEST_CASE("cycle_disagreements sums to conjugate_mismatch") {
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t n = m; m + n <= 7; ++n) {
            const auto d = conjdist::cycle_decomposition(m, n);
            std::vector<Symbol> zw(m + n, 0);
            do {
                const Str z{std::vector<Symbol>(zw)};
                const auto counts = conjdist::cycle_disagreements(z, d);
                const auto total =
                    std::accumulate(counts.begin(), counts.end(), std::size_t{0});
                const Str x{std::vector<Symbol>(zw.begin(), zw.begin() + m)};
                const Str y{std::vector<Symbol>(zw.begin() + m, zw.end())};
                CHECK(total == conjdist::conjugate_mismatch(x, y));
            } while (next_word(zw, 3));
        }
    }
}

TEST_CASE("primitive_root_length") {
    CHECK(conjdist::primitive_root_length(Str::parse("0101").view()) == 2);
    CHECK(conjdist::primitive_root_length(Str::parse("011").view()) == 3);
    CHECK(conjdist::primitive_root_length(Str::parse("000").view()) == 1);
    CHECK(conjdist::primitive_root_length(Str::parse("012012").view()) == 3);
    // 01010 has border 010 but period 2 does not divide 5.
    CHECK(conjdist::primitive_root_length(Str::parse("01010").view()) == 5);
}

TEST_CASE("have_common_power golden values") {
    CHECK(conjdist::have_common_power(Str::parse("0101"), Str::parse("01")));
    CHECK_FALSE(conjdist::have_common_power(Str::parse("01"), Str::parse("10")));
    CHECK(conjdist::have_common_power(Str::parse("00"), Str::parse("000")));
    CHECK(conjdist::have_common_power(Str::parse("012012"), Str::parse("012")));
}

TEST_CASE("have_common_power matches conjugate_mismatch == 0 exhaustively") {
    // All binary pairs with m + n <= 12.
    for (std::size_t m = 1; m <= 6; ++m) {
        for (std::size_t n = m; m + n <= 12; ++n) {
            std::vector<Symbol> xw(m, 0), yw(n, 0);
            do {
                std::fill(yw.begin(), yw.end(), 0);
                do {
                    const Str x{std::vector<Symbol>(xw)};
                    const Str y{std::vector<Symbol>(yw)};
                    CHECK(conjdist::have_common_power(x, y) ==
                          (conjdist::conjugate_mismatch(x, y) == 0));
                } while (next_word(yw, 2));
            } while (next_word(xw, 2));
        }
    }
}

TEST_CASE("equal lengths double the plain Hamming distance") {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<Symbol> xw(n, 0), yw(n, 0);
        do {
            std::fill(yw.begin(), yw.end(), 0);
            do {
                const Str x{std::vector<Symbol>(xw)};
                const Str y{std::vector<Symbol>(yw)};
                CHECK(conjdist::conjugate_mismatch(x, y) == 2 * conjdist::hamming(x, y));
            } while (next_word(yw, 3));
        } while (next_word(xw, 3));
    }
}

TEST_CASE("make_instance normalizes") {
    const auto inst = conjdist::make_instance(9, 6, 10, 2);
    CHECK(inst.m == 6);
    CHECK(inst.n == 9);
    CHECK(inst.k == 10);
    CHECK(inst.sigma == 2);

    CHECK(conjdist::make_instance(2, 3, 4, 7).sigma == 3);
    CHECK_THROWS_AS(conjdist::make_instance(0, 3, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(conjdist::make_instance(3, 0, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(conjdist::make_instance(2, 3, 0, 1), std::invalid_argument);
}

TEST_CASE("make_witness computes k from the pair") {
    const auto w = conjdist::make_witness(Str::parse("010"), Str::parse("10101"));
    CHECK(w.k == 8);
    CHECK(w.x.text() == "010");
    CHECK(w.y.text() == "10101");
}
