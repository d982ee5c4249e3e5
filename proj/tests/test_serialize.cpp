#include <gtest/gtest.h>

#include "parryseq/builtins.hpp"
#include "parryseq/serialize.hpp"

using namespace parryseq;

TEST(Serialize, BigIntForms) {
    EXPECT_EQ(to_json(BigInt(42)), nlohmann::json(42));
    const BigInt big("123456789012345678901234567890");
    EXPECT_TRUE(to_json(big).is_string());
    EXPECT_EQ(bigint_from_json(to_json(big)), big);
    EXPECT_EQ(bigint_from_json(nlohmann::json("-7")), -7);
    EXPECT_EQ(word_from_json(to_json(DigitWord{3, 2, 0, 3})), (DigitWord{3, 2, 0, 3}));
}

TEST(Serialize, SystemRoundTrip) {
    for (const char* name : {"fibonacci", "quartic", "affine-3"}) {
        const auto sys = builtin_system(name).system;
        const auto back = system_from_json(to_json(sys));
        EXPECT_EQ(back.digit_bound(), sys.digit_bound());
        for (std::size_t n = 0; n < 50; ++n) ASSERT_EQ(back.term(n), sys.term(n));
    }
    auto j = to_json(builtin_system("quartic").system);
    j["digit_bound"] = 3;
    EXPECT_THROW(system_from_json(j), InvalidSystem);
}

TEST(Serialize, DfaRoundTrip) {
    const Dfa lang = builtin_system("quartic").language;
    const auto j = to_json(lang);
    EXPECT_EQ(j.at("schema_version"), kAutomatonSchemaVersion);
    const Dfa back = dfa_from_json(j);
    EXPECT_TRUE(equivalent(lang, back).equal);
    EXPECT_EQ(to_json(back), j);

    const Dfa golden = builtin_system("fibonacci").language;
    EXPECT_NE(to_json(golden).dump().find("null"), std::string::npos);  // partial table
}

TEST(Serialize, DfaoRoundTrip) {
    const Dfao parity = digit_sum_parity_machine(2);
    const Dfao xor_machine = pair_product(parity, parity, [](Output a, Output b) { return a ^ b; });
    const Dfao back = dfao_from_json(to_json(xor_machine));
    EXPECT_EQ(back.dfa().pair_base(), 2u);
    EXPECT_EQ(back.outputs(), xor_machine.outputs());
    EXPECT_EQ(to_json(back), to_json(xor_machine));

    Dfao rev = reverse_dfao(parity);
    const Dfao rev_back = dfao_from_json(to_json(rev));
    EXPECT_EQ(rev_back.direction(), ReadDirection::lsd_first);
}

TEST(Serialize, RejectsBadInput) {
    auto j = to_json(builtin_system("fibonacci").language);
    j["schema_version"] = 99;
    EXPECT_THROW(dfa_from_json(j), InvalidInput);
    EXPECT_THROW(dfa_from_json(nlohmann::json::object()), InvalidInput);
}

TEST(Serialize, Dot) {
    const std::string dot = to_dot(builtin_system("fibonacci").language);
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    EXPECT_NE(dot.find("doublecircle"), std::string::npos);
}

TEST(Serialize, Csv) {
    ComplexityTable t;
    t.p = {1, 2, 3};
    EXPECT_EQ(complexity_csv(t).substr(0, 13), "n,p(n),p(n)/n");
    EXPECT_EQ(prefix_csv({0, 1}), "n,x(n)\n0,0\n1,1\n");
    Grid2D g{2, 2, {0, 1, 1, 0}};
    EXPECT_EQ(grid_text(g), "01\n10\n");
}

TEST(Serialize, PolynomialAndInterval) {
    EXPECT_EQ(polynomial_to_json({-1, -1, 1}).dump(), "[-1,-1,1]");
    EXPECT_EQ(interval_to_json({Rational(1, 2), Rational(4, 6)}).dump(), "[\"1/2\",\"2/3\"]");
}
