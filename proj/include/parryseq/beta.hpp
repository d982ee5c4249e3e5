#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "parryseq/algebraic.hpp"
#include "parryseq/numsys.hpp"

namespace parryseq {

constexpr std::size_t kDefaultMaxSteps = 10'000;

struct Periodicity {
    std::size_t preperiod = 0;
    std::size_t period = 0;
};

/// Greedy expansion d_beta(x) = d_1 d_2 ... of x in [0, 1] (exact digits).
///
/// A stateful single-consumer stream. Copying snapshots the current remainder
/// and the digits produced so far.
class BetaExpansion {
public:
    /// Throws OutOfRange unless 0 <= x <= 1.
    BetaExpansion(AlgebraicReal beta, FieldElement x);

    /// Produces d_{k+1} where k = produced().size().
    Digit next();
    /// Digits d_1..d_count, producing more as needed.
    DigitWord take(std::size_t count);
    const DigitWord& produced() const { return digits_; }

    /// x_k = beta^k x - sum_{i<=k} d_i beta^{k-i}, in [0, 1).
    const FieldElement& remainder() const { return remainder_; }
    const AlgebraicReal& beta() const { return beta_; }

    /// Continues the stream up to `max_steps` digits looking for a repeated
    /// remainder. Remainders are compared exactly, so the result is the minimal
    /// (preperiod, period) of the digit sequence when found.
    std::optional<Periodicity> find_period(std::size_t max_steps = kDefaultMaxSteps);
    std::optional<Periodicity> periodicity() const { return period_; }

    /// "3203(0)", "10(2212)" when periodic, otherwise the first `digits` digits.
    std::string render(std::size_t digits) const;

private:
    AlgebraicReal beta_;
    FieldElement beta_elem_;
    FieldElement remainder_;
    Digit max_digit_;
    DigitWord digits_;
    std::unordered_map<FieldElement, std::size_t, FieldElementHash> seen_;
    std::optional<Periodicity> period_;
};

BetaExpansion beta_expand(const AlgebraicReal& beta, const FieldElement& x);

/// d_beta^*(1) = t_1 t_2 ...
struct QuasiGreedy {
    AlgebraicReal beta;
    /// Digits of d_beta(1) as computed (all of them when finite).
    DigitWord d_beta_1;
    bool finite_d_beta_1 = false;
    /// Present when periodic: t = prefix cycle^omega.
    std::optional<Periodicity> periodicity;
    DigitWord prefix;
    DigitWord cycle;

    bool periodic() const { return periodicity.has_value(); }
    /// t_k for k >= 1. Requires periodic().
    Digit t(std::size_t k) const;
    /// t_1..t_count.
    DigitWord take(std::size_t count) const;
    /// "(3202)", "1(10)".
    std::string render() const;
};

QuasiGreedy quasi_greedy(const AlgebraicReal& beta, std::size_t max_steps = kDefaultMaxSteps);

/// Periodicity of d_beta^*(1) if detected within max_steps.
std::optional<Periodicity> is_parry(const AlgebraicReal& beta, std::size_t max_steps = kDefaultMaxSteps);

/// U_n = t_1 U_{n-1} + ... + t_n U_0 + 1, closed into a homogeneous linear
/// recurrence of order i + p. Throws NotParry if qg is not periodic.
NumerationSystem canonical_system(const QuasiGreedy& qg);

/// Every suffix u of `word` satisfies u <= t_1..t_|u| lexicographically, i.e.
/// `word` is a factor of some beta-expansion. Exact for finite words.
bool parry_admissible(const DigitWord& word, const QuasiGreedy& qg);

/// For a prefix of an infinite digit stream: each shift starting at
/// 0..depth-1 is compared with d_beta^*(1) over the available digits. A
/// comparison that is still tied when the digits run out counts as admissible.
bool parry_admissible_stream(const DigitWord& digits, const QuasiGreedy& qg, std::size_t depth);

struct LanguageCheck {
    bool equal = true;
    std::optional<DigitWord> counterexample;
    /// Which side accepts the counterexample.
    bool counterexample_in_numeration = false;
    std::size_t words_checked = 0;
    std::size_t alphabet_size = 0;
};

/// Compares 0^* rep_U(N) with the factors of beta-expansions on all words of
/// length <= max_len over {0, ..., max(ceil(beta), C_U) - 1}. The
/// counterexample is genealogically least.
LanguageCheck bertrand_language_check(const AlgebraicReal& beta, const NumerationSystem& system,
                                      std::size_t max_len);

/// S_{m,n} = sum_{i=m}^n d_i gamma^{-i+r}, digits d_1 d_2 ... (1-based).
struct TailSum {
    /// Certified enclosure.
    RationalInterval bounds;
    /// Exact value for finite n.
    std::optional<FieldElement> exact;
    /// For n = infinity: the exact geometric bounds in Q(gamma).
    std::optional<FieldElement> upper;
    std::optional<FieldElement> lower;
};

/// Finite n: exact. n = nullopt: the even/odd-exponent geometric bounds using
/// d_i <= digit_max, i.e. digit_max * gamma^E / (1 - gamma^-2) with E the
/// largest even (resp. odd) exponent r - i for i >= m. Requires gamma < -1.
TailSum conjugate_tail_sum(const DigitWord& digits, const AlgebraicReal& gamma, std::size_t m,
                           std::optional<std::size_t> n, long r, Digit digit_max = 3);

/// digit_max * gamma^{-e} / (1 - gamma^{-2}) with e the smallest even integer >= m:
/// the bound printed for S_{m,inf} when the r-shift is dropped.
FieldElement unshifted_even_tail_bound(const AlgebraicReal& gamma, std::size_t m, Digit digit_max = 3);

/// sum_{i=1}^{k} d_i beta^{-i}.
FieldElement partial_value(const DigitWord& digits, const AlgebraicReal& beta, std::size_t k);

/// "t/beta^r" as an element of Q(beta).
FieldElement t_over_beta_r(const AlgebraicReal& beta, const Rational& t, long r);

}  // namespace parryseq
