#include <gtest/gtest.h>

#include <regex>

#include "parryseq/automata.hpp"
#include "parryseq/builtins.hpp"
#include "parryseq/sequences.hpp"

using namespace parryseq;

namespace {

// All words over {0..k-1} of length <= max_len, genealogical order.
std::vector<DigitWord> all_words(std::size_t k, std::size_t max_len) {
    std::vector<DigitWord> out{{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (Digit d = 0; d < k; ++d) {
                DigitWord w = out[i];
                w.push_back(d);
                out.push_back(std::move(w));
            }
        begin = end;
    }
    return out;
}

Dfa golden_language() { return builtin_system("fibonacci").language; }

}  // namespace

TEST(Automata, GoldenLanguageMatchesRegex) {
    const Dfa a = golden_language();
    const std::regex no11("^[01]*$");
    for (const auto& w : all_words(3, 9)) {
        const std::string s = word_to_string(w, "");
        const bool expected = std::regex_match(s, no11) && s.find("11") == std::string::npos;
        ASSERT_EQ(a.accepts(w), expected) << s;
    }
}

TEST(Automata, CanonicalParryAutomaton) {
    const auto qg = quasi_greedy(AlgebraicReal::largest_root(builtin_beta_polynomial("quartic")));
    const Dfa a = canonical_parry_automaton(qg);
    EXPECT_EQ(a.size(), 4u);
    EXPECT_TRUE(a.accepts({3, 2, 0, 2, 3}));
    EXPECT_FALSE(a.accepts({3, 2, 0, 3}));
    EXPECT_FALSE(a.accepts({4}));
    // Same language as the padded representations of the quartic system.
    const auto sys = builtin_system("quartic").system;
    for (const auto& w : all_words(4, 6)) ASSERT_EQ(a.accepts(w), is_padded_representation(sys, w)) << word_to_string(w);
}

TEST(Automata, MinimizeAndEquivalence) {
    // Redundant automaton for "even number of 1s" over {0,1}.
    Dfa d(4, 2);
    d.set(0, 0, 2);
    d.set(0, 1, 1);
    d.set(1, 0, 3);
    d.set(1, 1, 0);
    d.set(2, 0, 0);
    d.set(2, 1, 3);
    d.set(3, 0, 1);
    d.set(3, 1, 2);
    d.set_final(0);
    d.set_final(2);
    const Dfa m = minimize(d);
    EXPECT_EQ(m.size(), 2u);
    EXPECT_TRUE(equivalent(d, m).equal);
    const Dfa golden = golden_language();
    const auto diff = equivalent(golden, full_language(2));
    EXPECT_FALSE(diff.equal);
    ASSERT_TRUE(diff.counterexample.has_value());
    EXPECT_EQ(word_to_string(*diff.counterexample), "11");
}

TEST(Automata, MinimizeKeepsPartiality) {
    const Dfa golden = golden_language();
    const Dfa m = minimize(golden);
    EXPECT_EQ(m.size(), 2u);
    EXPECT_FALSE(m.is_complete());
    EXPECT_TRUE(complete(m).is_complete());
    EXPECT_EQ(minimize(complete(m)).size(), 3u);
}

TEST(Automata, RightQuotientsGolden) {
    const auto rq = right_quotients(golden_language());
    // L, L 1^{-1} = L \ A^*1, and the empty language (suffix 11).
    EXPECT_EQ(rq.count(), 3u);
    EXPECT_EQ(rq.classify({}), rq.epsilon_class());
    EXPECT_EQ(rq.classify({1, 1}), rq.empty_class);
    EXPECT_EQ(rq.classify({0}), rq.classify({}));
    // w01 is in L for every w in L.
    EXPECT_EQ(rq.classify({0, 1}), rq.classify({}));
    EXPECT_NE(rq.classify({1}), rq.classify({0}));
}

TEST(Automata, QuotientMembershipOracle) {
    const Dfa lang = builtin_system("quartic").language;
    const auto rq = right_quotients(lang);
    const auto words = all_words(4, 4);
    for (const auto& s : all_words(4, 3)) {
        const int c = rq.classify(s);
        ASSERT_GE(c, 0);
        for (const auto& w : words) {
            DigitWord ws = w;
            ws.insert(ws.end(), s.begin(), s.end());
            const StateId q = rq.automaton.run(w);
            const bool in_class = q != kNoState && rq.classes[static_cast<std::size_t>(c)][static_cast<std::size_t>(q)];
            ASSERT_EQ(lang.accepts(ws), in_class);
        }
    }
}

TEST(Automata, PathCountsAreFibonacci) {
    const Dfa g = golden_language();
    // Words of length n avoiding 11: F_{n+2}.
    EXPECT_EQ(path_counts(g, 10)[static_cast<std::size_t>(g.initial())], 144);
    EXPECT_EQ(path_counts(g, 0)[static_cast<std::size_t>(g.initial())], 1);
}

TEST(Automata, Primitivity) {
    EXPECT_TRUE(is_primitive(golden_language()));
    Dfa cycle(2, 1);
    cycle.set(0, 0, 1);
    cycle.set(1, 0, 0);
    EXPECT_FALSE(is_primitive(cycle));
}

TEST(Automata, Enumerate) {
    const auto words = enumerate_genealogical(without_leading_zeros(golden_language()), 6);
    std::string s;
    for (const auto& w : words) s += word_to_string(w) + " ";
    EXPECT_EQ(s, "eps 1 10 100 101 1000 ");
}

TEST(Automata, BertrandRegularity) {
    EXPECT_TRUE(is_bertrand_regular(golden_language()).equal);
    EXPECT_TRUE(is_bertrand_regular(affine3_automaton()).equal);
    const auto mod = builtin_system("modified-fibonacci").language;
    const auto r = is_bertrand_regular(mod);
    EXPECT_FALSE(r.equal);
    ASSERT_TRUE(r.counterexample.has_value());
    EXPECT_EQ(word_to_string(*r.counterexample), "2");
}

TEST(Automata, Affine3Shape) {
    const Dfa a = affine3_automaton();
    const std::regex shape("^[012]*(30*)?$");
    for (const auto& w : all_words(4, 7))
        ASSERT_EQ(a.accepts(w), std::regex_match(word_to_string(w, ""), shape)) << word_to_string(w);
}

TEST(Automata, InferenceMatchesKnownAutomata) {
    EXPECT_TRUE(equivalent(infer_numeration_automaton(builtin_system("fibonacci").system), golden_language()).equal);
    EXPECT_TRUE(equivalent(infer_numeration_automaton(builtin_system("affine-3").system), affine3_automaton()).equal);
    EXPECT_TRUE(equivalent(infer_numeration_automaton(builtin_system("quartic").system),
                           builtin_system("quartic").language).equal);
    EXPECT_TRUE(equivalent(infer_numeration_automaton(builtin_system("base-3").system), full_language(3)).equal);
}

TEST(Automata, InferenceRejectsNonRegular) {
    // U_n = (n+1)^2 is not linearly recurrent with bounded ratios forever, but
    // ratios stay bounded; its language is not regular.
    std::vector<BigInt> squares;
    for (int n = 1; n <= 40; ++n) squares.push_back(n * n);
    EXPECT_THROW(infer_numeration_automaton(NumerationSystem::from_terms(squares), 8, 12), InvalidSystem);
}

TEST(Automata, ReverseDfaoComputesTheSameFunction) {
    const Dfao parity = digit_sum_parity_machine(3);
    Dfao counter(Dfa(3, 2), {0, 1, 2});
    // Counts trailing ones mod 3 style machine: 1 advances, 0 resets.
    for (StateId q = 0; q < 3; ++q) {
        counter.dfa().set(q, 0, 0);
        counter.dfa().set(q, 1, (q + 1) % 3);
    }
    for (const Dfao& m : {parity, counter}) {
        const Dfao r = reverse_dfao(m);
        EXPECT_EQ(r.direction(), ReadDirection::lsd_first);
        for (const auto& w : all_words(m.alphabet_size(), 7)) {
            const DigitWord rev(w.rbegin(), w.rend());
            ASSERT_EQ(r.evaluate(rev), m.evaluate(w));
        }
        // Reversing twice recovers the function.
        const Dfao rr = reverse_dfao(r);
        for (const auto& w : all_words(m.alphabet_size(), 6)) ASSERT_EQ(rr.evaluate(w), m.evaluate(w));
    }
}

TEST(Automata, ReverseRequiresComplete) {
    Dfao partial(golden_language(), {0, 1});
    EXPECT_THROW(reverse_dfao(partial), InvalidInput);
}

TEST(Automata, ProductDfaoAndSubstitution) {
    const Dfa lang = golden_language();
    const Dfao product = product_dfao(lang, digit_sum_parity_machine(2));
    EXPECT_FALSE(product.dfa().is_complete());
    EXPECT_THROW(product_dfao(lang, digit_sum_parity_machine(3)), AlphabetMismatch);

    const auto sc = automaton_to_substitution(Dfao(lang, {0, 0}));
    ASSERT_EQ(sc.sigma.alphabet_size(), 2u);
    EXPECT_EQ(sc.sigma.images[0], (LetterWord{0, 1}));
    EXPECT_EQ(sc.sigma.images[1], (LetterWord{0}));
}

TEST(Automata, MakeZeroLoop) {
    Dfao m(Dfa(2, 2), {0, 1});
    m.dfa().set(0, 0, 1);
    m.dfa().set(0, 1, 1);
    m.dfa().set(1, 0, 1);
    m.dfa().set(1, 1, 0);
    EXPECT_FALSE(m.has_zero_loop());
    const Dfao z = make_zero_loop(m);
    EXPECT_TRUE(z.has_zero_loop());
    for (const auto& w : all_words(2, 5))
        if (!w.empty() && w.front() != 0) {
            ASSERT_EQ(z.evaluate(w), m.evaluate(w));
        }
}

TEST(Automata, IntersectAndTrim) {
    const Dfa both = intersect(golden_language(), digit_then_zeros(1, 2));
    EXPECT_TRUE(both.accepts({1, 0, 0}));
    EXPECT_FALSE(both.accepts({0, 1, 0}));
    EXPECT_FALSE(both.accepts({1, 0, 1}));
    EXPECT_LE(trim(both).size(), both.size());
}
