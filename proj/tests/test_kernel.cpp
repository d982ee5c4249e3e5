#include <gtest/gtest.h>

#include <random>

#include "parryseq/builtins.hpp"
#include "parryseq/sequences.hpp"

using namespace parryseq;

namespace {

std::vector<std::string> as_strings(const std::vector<BigInt>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

AutomaticSequence thue_morse() {
    const auto b = builtin_system("base-2");
    return AutomaticSequence(b.system, b.language, digit_sum_parity_machine(2));
}

Dfao fib_xor() {
    const Dfao parity = digit_sum_parity_machine(2);
    return pair_product(parity, parity, [](Output a, Output c) { return a ^ c; });
}

}  // namespace

TEST(Kernel, SuffixIndicesFibonacci) {
    const auto b = builtin_system("fibonacci");
    const auto idx = suffix_indices(b.language, b.system, {0, 1}, 10, 42);
    EXPECT_EQ(as_strings(idx), (std::vector<std::string>{"1", "4", "6", "9", "12", "14", "17", "19", "22", "25"}));
    EXPECT_TRUE(suffix_indices(b.language, b.system, {1, 1}, 5, 42).empty());
    EXPECT_TRUE(suffix_indices_brute(b.system, {1, 1}, 2000).empty());
}

TEST(Kernel, SuffixIndicesAgreeWithBruteForce) {
    std::mt19937 rng(11);
    for (const char* name : {"fibonacci", "quartic", "affine-3"}) {
        const auto b = builtin_system(name);
        const Digit k = b.system.digit_bound();
        std::uniform_int_distribution<Digit> digit(0, k - 1);
        std::uniform_int_distribution<int> len(0, 4);
        for (int trial = 0; trial < 15; ++trial) {
            DigitWord s(static_cast<std::size_t>(len(rng)));
            for (auto& d : s) d = digit(rng);
            const auto brute = suffix_indices_brute(b.system, s, 5000);
            const auto fast = suffix_indices(b.language, b.system, s, brute.size(), s.size() + 40);
            ASSERT_EQ(as_strings(fast), as_strings(brute)) << name << " " << word_to_string(s);
        }
    }
}

TEST(Kernel, ThueMorseHasTwoValueClasses) {
    const auto f = kernel_finiteness(thue_morse(), 32);
    EXPECT_EQ(f.classes, 2u);
    EXPECT_EQ(f.value_classes, 2u);
}

TEST(Kernel, OneDimensionalRoundTrip) {
    const auto tm = thue_morse();
    const auto table = kernel(tm, 3, 16);
    EXPECT_EQ(table.dimension, 1);
    EXPECT_EQ(table.value_classes, 2u);
    EXPECT_GE(table.lookup({{}, {}}), 0);
    const Dfao rebuilt = kernel_to_dfao(table, right_quotients(tm.language()));
    const AutomaticSequence again(tm.system(), tm.language(), rebuilt);
    EXPECT_EQ(again.prefix(256), tm.prefix(256));
}

TEST(Kernel, CharacteristicSequenceRoundTrip) {
    const auto b = builtin_system("quartic");
    const auto x = char_sequence_from_regular_set(b.system, b.language, digit_then_zeros(1, 4));
    const auto table = kernel(x, 3, 24);
    const Dfao rebuilt = kernel_to_dfao(table, right_quotients(b.language));
    const AutomaticSequence again(b.system, b.language, rebuilt);
    EXPECT_EQ(again.prefix(2000), x.prefix(2000));
}

TEST(Kernel, TwoDimensionalRoundTrip) {
    const auto b = builtin_system("fibonacci");
    const Dfao m = fib_xor();
    const auto table = kernel2d(m, b.system, b.language, 4, 4);
    EXPECT_EQ(table.dimension, 2);
    const Dfao rebuilt = kernel_to_dfao(table, right_quotients(b.language));
    for (std::uint64_t i = 0; i < 40; ++i)
        for (std::uint64_t j = 0; j < 40; ++j)
            ASSERT_EQ(evaluate2d(rebuilt, b.system, i, j), evaluate2d(m, b.system, i, j)) << i << "," << j;
}

TEST(Kernel, ShortSuffixesAreIncomplete) {
    const auto b = builtin_system("fibonacci");
    const auto table = kernel2d(fib_xor(), b.system, b.language, 3, 4);
    EXPECT_THROW(kernel_to_dfao(table, right_quotients(b.language)), IncompleteKernel);
}

TEST(Kernel, GridKernelMatchesMachineKernel) {
    const auto b = builtin_system("fibonacci");
    const Dfao m = fib_xor();
    const Grid2D grid = grid_from_machine(m, b.system, 60, 60);
    EXPECT_EQ(grid.at(3, 5), evaluate2d(m, b.system, 3, 5));
    const auto from_grid = kernel2d_from_grid(grid, b.system, b.language, 4, 4);
    const Dfao rebuilt = kernel_to_dfao(from_grid, right_quotients(b.language));
    for (std::size_t i = 0; i < 30; ++i)
        for (std::size_t j = 0; j < 30; ++j) ASSERT_EQ(evaluate2d(rebuilt, b.system, i, j), grid.at(i, j));
}
