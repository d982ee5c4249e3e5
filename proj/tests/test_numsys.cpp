#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "parryseq/builtins.hpp"
#include "parryseq/numsys.hpp"

using namespace parryseq;

namespace {

NumerationSystem fib() { return NumerationSystem::from_recurrence({1, 1}, {1, 2}); }
NumerationSystem modfib() { return NumerationSystem::from_recurrence({1, 1}, {1, 3, 4}); }
NumerationSystem quartic() { return NumerationSystem::from_recurrence({3, 2, 0, 3}, {1, 4, 15, 54}); }
NumerationSystem affine3() { return NumerationSystem::from_recurrence({3}, {1}, 1); }

std::string terms_text(const NumerationSystem& s, std::size_t n) {
    std::string out;
    for (const auto& t : s.terms(n)) out += (out.empty() ? "" : " ") + t.get_str();
    return out;
}

}  // namespace

TEST(NumSys, FibonacciTerms) {
    EXPECT_EQ(terms_text(fib(), 7), "1 2 3 5 8 13 21");
    EXPECT_EQ(fib().digit_bound(), 2u);
}

TEST(NumSys, AffineRecurrenceAlsoSatisfiesHomogeneousForm) {
    const auto b = affine3();
    EXPECT_EQ(terms_text(b, 5), "1 4 13 40 121");
    EXPECT_TRUE(b.satisfies({4, -3}, 0, 100));
    EXPECT_FALSE(b.satisfies({4, -2}, 0, 10));
    EXPECT_EQ(b.digit_bound(), 4u);
}

TEST(NumSys, QuarticRecurrence) {
    EXPECT_EQ(terms_text(quartic(), 8), "1 4 15 54 195 705 2550 9222");
    EXPECT_EQ(quartic().digit_bound(), 4u);
    // 64-bit overflow happens near n = 37; the terms keep growing exactly.
    const auto s = quartic();
    EXPECT_GT(s.term(60), s.term(59) * 3);
    EXPECT_EQ(s.term(60), 3 * s.term(59) + 2 * s.term(58) + 3 * s.term(56));
}

TEST(NumSys, RepExamples) {
    EXPECT_EQ(word_to_string(rep(fib(), std::uint64_t{0})), "eps");
    EXPECT_EQ(word_to_string(rep(modfib(), std::uint64_t{6})), "102");
    EXPECT_EQ(word_to_string(rep(quartic(), std::uint64_t{16})), "101");
    EXPECT_EQ(word_to_string(rep(fib(), std::uint64_t{4})), "101");
}

TEST(NumSys, ValExamples) {
    EXPECT_EQ(val(fib(), {}), 0);
    EXPECT_EQ(val(modfib(), {2, 0}), 6);
    EXPECT_EQ(val(fib(), {1, 0, 1}), 4);
    // Digits beyond the alphabet are allowed in val.
    EXPECT_EQ(val(fib(), {7}), 7);
}

TEST(NumSys, GenealogicalOrder) {
    EXPECT_EQ(genealogical_cmp({}, {0}), std::strong_ordering::less);
    EXPECT_EQ(genealogical_cmp({2}, {1, 0}), std::strong_ordering::less);
    EXPECT_EQ(genealogical_cmp({1, 0, 1}, {1, 1, 0}), std::strong_ordering::less);
    EXPECT_EQ(genealogical_cmp({1, 1}, {1, 1}), std::strong_ordering::equal);
}

TEST(NumSys, RoundTripAndOrderIsomorphism) {
    for (const auto& sys : {fib(), modfib(), quartic(), affine3()}) {
        DigitWord prev;
        for (std::uint64_t n = 0; n <= 10000; ++n) {
            const DigitWord w = rep(sys, n);
            ASSERT_EQ(val(sys, w), n);
            if (n > 0) {
                ASSERT_EQ(genealogical_cmp(prev, w), std::strong_ordering::less) << n;
                ASSERT_NE(w.front(), 0u);
            }
            prev = w;
        }
    }
}

TEST(NumSys, RandomPairsKeepOrder) {
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<std::uint64_t> dist(0, 1000000);
    const auto sys = quartic();
    for (int i = 0; i < 2000; ++i) {
        const auto m = dist(rng), n = dist(rng);
        const auto c = genealogical_cmp(rep(sys, m), rep(sys, n));
        EXPECT_EQ(c == std::strong_ordering::less, m < n);
        EXPECT_EQ(c == std::strong_ordering::equal, m == n);
    }
}

TEST(NumSys, Greediness) {
    for (const auto& sys : {fib(), modfib(), quartic(), affine3()}) {
        for (std::uint64_t n = 0; n <= 3000; ++n) {
            const DigitWord w = rep(sys, n);
            // Suffix of length j has value < U_j.
            for (std::size_t j = 1; j <= w.size(); ++j) {
                DigitWord suffix(w.end() - static_cast<std::ptrdiff_t>(j), w.end());
                ASSERT_LT(val(sys, suffix), sys.term(j));
            }
        }
    }
}

TEST(NumSys, BigRepresentations) {
    const auto sys = quartic();
    const BigInt n = sys.term(80) * 7 + 12345;
    EXPECT_EQ(val(sys, rep(sys, n)), n);
    EXPECT_EQ(rep(sys, sys.term(80)).size(), 81u);
}

TEST(NumSys, DigitBoundStableUnderMaterialization) {
    for (const auto& sys : {fib(), modfib(), quartic(), affine3()}) {
        sys.terms(200);
        EXPECT_GE(sys.materialized(), 200u);
        EXPECT_EQ(sys.probe_digit_bound(199), sys.digit_bound());
    }
}

TEST(NumSys, InvalidSystems) {
    EXPECT_THROW(NumerationSystem::from_recurrence({1, 1}, {2, 3}), InvalidSystem);
    EXPECT_THROW(NumerationSystem::from_terms({1, 3, 3}), InvalidSystem);
    EXPECT_THROW(NumerationSystem::from_recurrence({1}, {1}), InvalidSystem);
    EXPECT_THROW(NumerationSystem::from_recurrence({1, -2}, {1, 2}), InvalidSystem);
}

TEST(NumSys, UnboundedRatio) {
    std::vector<BigInt> factorials{1};
    for (int i = 2; i <= 80; ++i) factorials.push_back(factorials.back() * i);
    EXPECT_THROW(NumerationSystem::from_terms(factorials), UnboundedRatio);
}

TEST(NumSys, ExplicitSystem) {
    const auto s = NumerationSystem::from_terms({1, 2, 4, 8, 16});
    EXPECT_EQ(s.digit_bound(), 2u);
    EXPECT_EQ(word_to_string(rep(s, std::uint64_t{13})), "1101");
    EXPECT_THROW(s.term(5), OutOfRange);
}

TEST(NumSys, ConcurrentReadersShareTheCache) {
    const auto sys = quartic();
    std::vector<std::thread> threads;
    std::vector<std::string> results(8);
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&, i] { results[static_cast<std::size_t>(i)] = sys.term(150 + static_cast<std::size_t>(i) % 3).get_str(); });
    for (auto& t : threads) t.join();
    for (int i = 0; i < 8; ++i) EXPECT_EQ(results[static_cast<std::size_t>(i)], sys.term(150 + static_cast<std::size_t>(i) % 3).get_str());
    // Copies share the cache.
    const auto copy = sys;
    EXPECT_GE(copy.materialized(), 153u);
}

TEST(NumSys, Builtins) {
    EXPECT_EQ(terms_text(builtin_system("base-10").system, 3), "1 10 100");
    EXPECT_EQ(builtin_system("base-10").system.digit_bound(), 10u);
    EXPECT_EQ(terms_text(builtin_system("affine-3").system, 3), "1 4 13");
    EXPECT_THROW(builtin_system("base-1"), InvalidInput);
    EXPECT_THROW(builtin_system("nope"), InvalidInput);
}

TEST(Common, ParseRational) {
    EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
    EXPECT_EQ(parse_rational("-2.20"), Rational(-11, 5));
    EXPECT_EQ(parse_rational("12.79"), Rational(1279, 100));
    EXPECT_THROW(parse_rational("1/0"), InvalidInput);
    EXPECT_THROW(parse_rational("x"), InvalidInput);
    EXPECT_THROW(parse_rational("1."), InvalidInput);
}

TEST(Common, Words) {
    EXPECT_EQ(word_to_string({}), "eps");
    EXPECT_EQ(word_to_string({1, 0, 2}), "102");
    EXPECT_EQ(word_to_string({1, 10, 3}), "1.10.3");
    EXPECT_EQ(parse_word("1.10.3"), (DigitWord{1, 10, 3}));
    EXPECT_EQ(parse_word("102"), (DigitWord{1, 0, 2}));
}
