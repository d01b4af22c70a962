#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "debruijn/oracle.hpp"

using namespace debruijn;
using namespace debruijn::oracle;

TEST_CASE("is_de_bruijn") {
    CHECK(is_de_bruijn(Cycle(Word{1, 1, 1, 0, 1, 0, 0, 0}), Alphabet(2), 3).ok);
    CHECK(is_de_bruijn(Cycle(Word{1, 2, 0, 2, 2, 1, 1, 0, 0}), Alphabet(3), 2).ok);

    auto short_rep = is_de_bruijn(Cycle(Word{1, 1, 0, 1, 0, 0}), Alphabet(2), 3);
    CHECK_FALSE(short_rep.ok);
    CHECK(short_rep.missing_windows > 0);

    auto dup = is_de_bruijn(Cycle(Word{1, 1, 1, 1, 1, 0, 0, 0}), Alphabet(2), 3);
    CHECK_FALSE(dup.ok);
    CHECK(dup.duplicate_windows > 0);
    CHECK(dup.first_violation.has_value());
    CHECK(dup.first_violation->second == Word{1, 1, 1});
}

TEST_CASE("is_vertex_disjoint") {
    CHECK(is_vertex_disjoint(Cycle(Word{0, 0, 0, 1, 1, 1, 0, 1}), Alphabet(2), 3));
    CHECK_FALSE(is_vertex_disjoint(Cycle(Word{0, 1, 0, 1}), Alphabet(2), 2));
    CHECK(is_vertex_disjoint(Cycle(Word{2}), Alphabet(3), 4));  // self loop
}

TEST_CASE("enumerate_de_bruijn") {
    auto b3 = enumerate_de_bruijn(Alphabet(2), 3);
    CHECK(b3.size() == 2);
    auto b4 = enumerate_de_bruijn(Alphabet(2), 4);
    CHECK(b4.size() == 16);
    auto t2 = enumerate_de_bruijn(Alphabet(3), 2);
    CHECK(t2.size() == 24);
    for (const auto& c : t2) CHECK(is_de_bruijn(c, Alphabet(3), 2).ok);
    // all distinct as cycles
    std::set<Word> canon;
    for (const auto& c : t2) canon.insert(c.least_rotation());
    CHECK(canon.size() == 24);
    // output is oriented at the all-zero pattern
    for (const auto& c : b4) {
        CHECK(c.window_ending_at(static_cast<long long>(c.length()), 4) == Word(4, 0));
    }
    CHECK_THROWS_AS(enumerate_de_bruijn(Alphabet(2), 7), DomainError);
}

TEST_CASE("enumerate_vertex_disjoint_cycles") {
    auto b1 = enumerate_vertex_disjoint_cycles(Alphabet(2), 1, 2);
    CHECK(b1.size() == 3);  // [0], [1], [0,1]
    for (const auto& c : b1) CHECK(is_vertex_disjoint(c, Alphabet(2), 1));

    auto b3 = enumerate_vertex_disjoint_cycles(Alphabet(2), 3, 8);
    std::set<Word> canon;
    for (const auto& c : b3) {
        CHECK(is_vertex_disjoint(c, Alphabet(2), 3));
        CHECK(c.length() <= 8);
        CHECK(canon.insert(c.least_rotation()).second);
    }
    // the two De Bruijn cycles of order 3 appear among the length-8 cycles
    for (const auto& d : enumerate_de_bruijn(Alphabet(2), 3))
        CHECK(canon.count(d.least_rotation()) == 1);

    // max_len truncates
    auto caps = enumerate_vertex_disjoint_cycles(Alphabet(2), 3, 4);
    for (const auto& c : caps) CHECK(c.length() <= 4);
    CHECK(caps.size() < b3.size());
}

TEST_CASE("check_lift_structure accepts honest decompositions") {
    Kernel lempel = Kernel::lempel();
    // even number of ones: two disjoint lifts of the same length
    Cycle even(Word{0, 1, 1});
    auto dec_even = lift_cycle_decomposition(lempel, even, 2);
    CHECK(dec_even.cycles.size() == 2);
    CHECK(dec_even.cycles[0].length() == 3);
    CHECK(check_lift_structure(lempel, even, dec_even));

    // odd number of ones: one lift of doubled length
    Cycle odd(Word{0, 1});
    auto dec_odd = lift_cycle_decomposition(lempel, odd, 1);
    CHECK(dec_odd.cycles.size() == 1);
    CHECK(dec_odd.cycles[0].length() == 4);
    CHECK(check_lift_structure(lempel, odd, dec_odd));

    Kernel d31 = Kernel::linear(Alphabet(3), 1);
    Cycle g1(Word{1, 2, 0});
    auto dec3 = lift_cycle_decomposition(d31, g1, 1);
    CHECK(dec3.cycles.size() == 3);
    CHECK(check_lift_structure(d31, g1, dec3));
}

TEST_CASE("check_lift_structure rejects corrupted decompositions") {
    Kernel lempel = Kernel::lempel();
    Cycle base(Word{0, 1, 1});
    auto dec = lift_cycle_decomposition(lempel, base, 2);
    REQUIRE(dec.cycles.size() == 2);

    auto missing = dec;
    missing.cycles.pop_back();
    CHECK_FALSE(check_lift_structure(lempel, base, missing));

    auto duplicated = dec;
    duplicated.cycles[1] = duplicated.cycles[0];
    CHECK_FALSE(check_lift_structure(lempel, base, duplicated));

    auto mangled = dec;
    Word w = mangled.cycles[0].symbols();
    w[0] ^= 1;
    mangled.cycles[0] = Cycle(w);
    CHECK_FALSE(check_lift_structure(lempel, base, mangled));
}

TEST_CASE("adjacent-sum dichotomy on small cycles") {
    Kernel lempel = Kernel::lempel();
    Alphabet a(2);
    for (unsigned n = 1; n <= 3; ++n) {
        for (const Cycle& c : enumerate_vertex_disjoint_cycles(a, n, 8)) {
            unsigned ones = 0;
            for (Symbol s : c.symbols()) ones += s;
            auto dec = lift_cycle_decomposition(lempel, c, n);
            if (ones % 2 == 0) {
                CHECK(dec.cycles.size() == 2);
                CHECK(dec.cycles[0].length() == c.length());
                CHECK(dec.cycles[1].length() == c.length());
            } else {
                CHECK(dec.cycles.size() == 1);
                CHECK(dec.cycles[0].length() == 2 * c.length());
            }
            CHECK(check_lift_structure(lempel, c, dec));
        }
    }
}

TEST_CASE("linear lift closure for even and odd alphabets") {
    for (unsigned q : {3u, 4u, 5u, 6u}) {
        Alphabet a(q);
        for (Symbol beta : a.units()) {
            Kernel d = Kernel::linear(a, beta);
            for (unsigned n : {1u, 2u}) {
                if (n == 2 && q > 4) continue;  // keep the sweep quick; depth covered at q<=4
                for (const Cycle& c : enumerate_vertex_disjoint_cycles(a, n, n == 1 ? 6 : 8)) {
                    unsigned w = weight(c, a);
                    std::size_t r = q / std::gcd(w, q);
                    auto dec = lift_cycle_decomposition(d, c, n);
                    for (const Cycle& lc : dec.cycles) CHECK(lc.length() == r * c.length());
                    CHECK(dec.cycles.size() == q / r);
                    CHECK(check_lift_structure(d, c, dec));
                }
            }
        }
    }
}
