#include <gtest/gtest.h>

#include "parryseq/beta.hpp"
#include "parryseq/builtins.hpp"

using namespace parryseq;

namespace {

AlgebraicReal quartic_beta() { return AlgebraicReal::largest_root(builtin_beta_polynomial("quartic")); }
AlgebraicReal quartic_gamma() { return AlgebraicReal::root_of(builtin_beta_polynomial("quartic"), 0); }
AlgebraicReal golden() { return AlgebraicReal::largest_root({-1, -1, 1}); }

FieldElement rational_in(const AlgebraicReal& beta, const Rational& x) { return FieldElement(beta, x); }

}  // namespace

TEST(Beta, ExpansionOfOne) {
    const auto beta = quartic_beta();
    auto e = beta_expand(beta, rational_in(beta, 1));
    EXPECT_EQ(word_to_string(e.take(6)), "320300");
    ASSERT_TRUE(e.find_period().has_value());
    EXPECT_EQ(e.render(8), "3203(0)");
}

TEST(Beta, ExpansionOfAThird) {
    const auto beta = quartic_beta();
    auto e = beta_expand(beta, rational_in(beta, Rational(1, 3)));
    const auto p = e.find_period();
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->preperiod, 2u);
    EXPECT_EQ(p->period, 4u);
    EXPECT_EQ(e.render(12), "10(2212)");
}

TEST(Beta, ExpansionOfAHalf) {
    const auto beta = quartic_beta();
    auto e = beta_expand(beta, rational_in(beta, Rational(1, 2)));
    EXPECT_EQ(word_to_string(e.take(21)), "123102303001010220123");
}

TEST(Beta, ExpansionValueMatchesPartialSums) {
    const auto beta = quartic_beta();
    const auto x = rational_in(beta, Rational(2, 7));
    auto e = beta_expand(beta, x);
    const DigitWord d = e.take(30);
    // x = sum_{i<=k} d_i beta^-i + beta^-k x_k.
    const auto b = FieldElement::generator_of(beta);
    for (std::size_t k : {1u, 5u, 30u}) {
        auto copy = beta_expand(beta, x);
        copy.take(k);
        EXPECT_TRUE(partial_value(d, beta, k) + copy.remainder() * b.pow(-static_cast<long>(k)) == x);
        EXPECT_GE(sign(copy.remainder()), 0);
        EXPECT_EQ(compare(copy.remainder(), Rational(1)), -1);
    }
}

TEST(Beta, OutOfRange) {
    const auto beta = quartic_beta();
    EXPECT_THROW(beta_expand(beta, rational_in(beta, Rational(3, 2))), OutOfRange);
    EXPECT_THROW(beta_expand(beta, rational_in(beta, Rational(-1, 2))), OutOfRange);
}

TEST(Beta, QuasiGreedyGolden) {
    const auto qg = quasi_greedy(golden());
    EXPECT_TRUE(qg.finite_d_beta_1);
    EXPECT_EQ(word_to_string(qg.d_beta_1), "11");
    ASSERT_TRUE(qg.periodic());
    EXPECT_EQ(qg.render(), "(10)");
    EXPECT_EQ(word_to_string(qg.take(5)), "10101");
    const auto sys = canonical_system(qg);
    EXPECT_EQ(sys.term(5), 13);
}

TEST(Beta, QuasiGreedyQuartic) {
    const auto qg = quasi_greedy(quartic_beta());
    EXPECT_EQ(qg.render(), "(3202)");
    const auto sys = canonical_system(qg);
    for (std::size_t n = 0; n < 30; ++n)
        EXPECT_EQ(sys.term(n), builtin_system("quartic").system.term(n)) << n;
}

TEST(Beta, IntegerBase) {
    const auto qg = quasi_greedy(AlgebraicReal::largest_root({-3, 1}));
    EXPECT_EQ(qg.render(), "(2)");
    EXPECT_EQ(canonical_system(qg).term(4), 81);
}

TEST(Beta, NonParry) {
    // sqrt 2 is not a Parry number; the plastic number (X^3 - X - 1) is Pisot.
    const auto sqrt2 = AlgebraicReal::largest_root({-2, 0, 1});
    EXPECT_FALSE(is_parry(sqrt2, 300).has_value());
    EXPECT_THROW(canonical_system(quasi_greedy(sqrt2, 300)), NotParry);
    EXPECT_TRUE(is_parry(AlgebraicReal::largest_root({-1, -1, 0, 1})).has_value());
}

TEST(Beta, Admissibility) {
    const auto qg = quasi_greedy(golden());
    EXPECT_TRUE(parry_admissible({1, 0, 1, 0, 0, 1}, qg));
    EXPECT_FALSE(parry_admissible({1, 0, 1, 1}, qg));
    EXPECT_FALSE(parry_admissible({2}, qg));
    const auto q4 = quasi_greedy(quartic_beta());
    EXPECT_TRUE(parry_admissible({3, 2, 0, 2, 3, 2, 0, 1}, q4));
    EXPECT_FALSE(parry_admissible({3, 2, 0, 3}, q4));
    EXPECT_TRUE(parry_admissible_stream({3, 2, 0, 2, 3, 2}, q4, 3));
}

TEST(Beta, LanguageChecks) {
    const auto fib = builtin_system("fibonacci").system;
    const auto ok = bertrand_language_check(golden(), fib, 10);
    EXPECT_TRUE(ok.equal);
    EXPECT_GT(ok.words_checked, 100u);

    const auto mod = builtin_system("modified-fibonacci").system;
    const auto bad = bertrand_language_check(golden(), mod, 8);
    EXPECT_FALSE(bad.equal);
    ASSERT_TRUE(bad.counterexample.has_value());
    EXPECT_EQ(word_to_string(*bad.counterexample), "2");
    EXPECT_TRUE(bad.counterexample_in_numeration);

    EXPECT_TRUE(bertrand_language_check(quartic_beta(), builtin_system("quartic").system, 7).equal);
}

TEST(Beta, TailSumFiniteIsExact) {
    const auto gamma = quartic_gamma();
    const DigitWord d{1, 0, 1, 1, 1, 1, 2, 0, 2, 3};
    const auto s = conjugate_tail_sum(d, gamma, 2, 7, 3);
    ASSERT_TRUE(s.exact.has_value());
    // Independent sum of d_i gamma^(r - i).
    const auto g = FieldElement::generator_of(gamma);
    FieldElement acc(gamma, Rational(0));
    for (std::size_t i = 2; i <= 7; ++i) acc += g.pow(3 - static_cast<long>(i)) * Rational(d[i - 1]);
    EXPECT_TRUE(*s.exact == acc);
    EXPECT_TRUE(s.bounds.contains(s.bounds.lo));
    const auto iv = acc.enclose(80);
    EXPECT_LE(s.bounds.lo, iv.hi);
    EXPECT_GE(s.bounds.hi, iv.lo);
}

TEST(Beta, TailSumInfiniteBounds) {
    const auto gamma = quartic_gamma();
    const auto s = conjugate_tail_sum({}, gamma, 4, std::nullopt, 3);
    ASSERT_TRUE(s.upper.has_value() && s.lower.has_value());
    // Even exponents r - i <= -1 start at -2: 3 g^-2 / (1 - g^-2).
    const auto g = FieldElement::generator_of(gamma);
    const auto q = g.pow(-2);
    const auto expect_upper = q * Rational(3) / (FieldElement(gamma, Rational(1)) - q);
    EXPECT_TRUE(*s.upper == expect_upper);
    EXPECT_EQ(s.upper->to_decimal(2), "14.77");
    EXPECT_EQ(sign(*s.lower), -1);
    EXPECT_EQ(unshifted_even_tail_bound(gamma, 4).to_decimal(3), "12.279");
    EXPECT_EQ(compare(unshifted_even_tail_bound(gamma, 13), Rational(5)), -1);
}

TEST(Beta, TailSumRequiresNegativeConjugate) {
    EXPECT_THROW(conjugate_tail_sum({}, quartic_beta(), 1, std::nullopt, 0), InvalidInput);
}

TEST(Beta, TOverBetaR) {
    const auto beta = quartic_beta();
    const auto v = t_over_beta_r(beta, 4, 2);
    EXPECT_TRUE(v * FieldElement::generator_of(beta).pow(2) == FieldElement(beta, Rational(4)));
}
