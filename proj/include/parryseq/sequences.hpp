#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parryseq/automata.hpp"
#include "parryseq/numsys.hpp"

namespace parryseq {

using Letter = std::uint32_t;
using LetterWord = std::vector<Letter>;

/// x_n = tau(delta(q_0, rep_U(n))).
///
/// The machine must be complete on the numeration language; msd-first
/// machines must have the zero loop, lsd-first machines are fed the reversed
/// representation. Values are computed on demand; the type holds no cache and
/// is safe to share between threads.
class AutomaticSequence {
public:
    AutomaticSequence(NumerationSystem system, Dfa language, Dfao machine);

    const NumerationSystem& system() const { return system_; }
    const Dfa& language() const { return language_; }
    const Dfao& machine() const { return machine_; }

    Output at(const BigInt& n) const;
    Output at(std::uint64_t n) const { return at(BigInt(static_cast<unsigned long>(n))); }
    std::vector<Output> prefix(std::size_t count) const;

private:
    NumerationSystem system_;
    Dfa language_;
    Dfao machine_;
};

/// Reads the pair word of 0^{l-|rep(m)|} rep(m) and 0^{l-|rep(n)|} rep(n).
Output evaluate2d(const Dfao& machine, const NumerationSystem& system, const BigInt& m, const BigInt& n,
                  std::size_t extra_padding = 0);
Output evaluate2d(const Dfao& machine, const NumerationSystem& system, std::uint64_t m, std::uint64_t n);

/// Pair word (msd first) for (m, n) padded to a common length.
DigitWord pair_word(const NumerationSystem& system, std::size_t base, const BigInt& m, const BigInt& n,
                    std::size_t extra_padding = 0);

/// A 0/1 machine for {n : some 0^k rep_U(n) is in set_language}. The set
/// language is read over the system's digit alphabet; the result has the zero
/// loop and is minimal.
Dfao char_machine(const Dfa& set_language, std::size_t alphabet);

/// Characteristic sequence of val(0^* rep_U(N) intersected with set_language).
AutomaticSequence char_sequence_from_regular_set(const NumerationSystem& system, const Dfa& language,
                                                 const Dfa& set_language);

/// 2D machine over digit pairs: (q1, q2) --(a,b)--> (delta1(q1,a), delta2(q2,b)),
/// output f(tau1(q1), tau2(q2)). Both machines must be complete and msd-first.
Dfao pair_product(const Dfao& first, const Dfao& second, const std::function<Output(Output, Output)>& f);

/// Parity of the digit sum (1D).
Dfao digit_sum_parity_machine(std::size_t alphabet);

/// Accepts exactly the words of the given finite regular shape `prefix digit
/// 0^*`, e.g. 10^* or 20^*.
Dfa digit_then_zeros(Digit d, std::size_t alphabet);

// ---------------------------------------------------------------------------
// Substitutions

struct Substitution {
    std::vector<LetterWord> images;
    Letter seed = 0;
    std::vector<std::string> letter_names;

    std::size_t alphabet_size() const { return images.size(); }
    /// Common image length, if any.
    std::optional<std::size_t> uniform_length() const;
    /// Letters whose iterated images eventually become empty.
    std::vector<bool> mortal() const;
    std::string render() const;
};

struct SubstitutionWithCoding {
    Substitution sigma;
    std::vector<Output> coding;
};

/// sigma(q) = delta(q, 0) delta(q, 1) ... with undefined transitions omitted.
/// Throws NotProlongable unless delta(q0, 0) = q0 and |sigma(q0)| >= 2.
SubstitutionWithCoding automaton_to_substitution(const Dfao& product);

/// The first `length` letters of sigma^omega(seed).
LetterWord fixed_point(const Substitution& sub, std::size_t length);

/// |sigma^n(q)| for every letter q, via length vectors.
std::vector<BigInt> image_lengths(const Substitution& sub, std::size_t n);
BigInt image_length(const Substitution& sub, Letter q, std::size_t n);

/// Letter at a position of the fixed point, without materializing it.
Letter letter_at(const Substitution& sub, const BigInt& position);

LetterWord apply_coding(const LetterWord& w, const std::vector<Output>& coding);

/// Letter-wise image under a uniform substitution; NotUniform otherwise.
LetterWord apply_uniform_substitution(const LetterWord& w, const Substitution& mu);
/// Keeps positions 0, t, 2t, ...
LetterWord periodic_deletion(const LetterWord& w, std::size_t t);

// ---------------------------------------------------------------------------
// Factor complexity

struct ComplexityTable {
    /// p[n] for n = 0..n_max (p[0] = 1).
    std::vector<std::uint64_t> p;
    /// Largest n such that p(1..n) agree on the prefix and on its first half.
    std::size_t stable_up_to = 0;
    /// False when stable_up_to < n_max: the counts for larger n may still grow.
    bool sufficient = false;
};

/// Distinct factors of each length (suffix automaton), with the half-prefix
/// stability check.
ComplexityTable factor_complexity(const LetterWord& prefix, std::size_t n_max);

/// Exact p(n) of the fixed point of a -> a^k b, b -> b (k >= 2). The fixed
/// point is a b^{v(1)} a b^{v(2)} ... with v the k-adic valuation, so each
/// window is determined by a residue class and one large valuation.
std::uint64_t power_substitution_complexity(unsigned k, std::size_t n);

enum class Growth { bounded, linear, superlinear };

struct GrowthDiagnostic {
    Growth kind = Growth::linear;
    /// max p(n)/n over the inspected range.
    double max_ratio = 0;
    /// p(n)/n strictly increasing on [from, to].
    bool ratio_strictly_increasing = false;
    std::size_t from = 0;
    std::size_t to = 0;
};

/// Evidence only: bounded if p is eventually constant, superlinear if p(n)/n
/// is strictly increasing over the tail window, linear otherwise.
GrowthDiagnostic growth_diagnostic(const std::vector<std::uint64_t>& p, std::size_t from, std::size_t to);

std::string growth_name(Growth g);

// ---------------------------------------------------------------------------
// U-kernels

/// 1D keys have t empty.
struct SuffixKey {
    DigitWord s;
    DigitWord t;
    auto operator<=>(const SuffixKey&) const = default;
};

struct KernelClass {
    SuffixKey representative;
    /// Exact signature: quotient class of s (and t), reversal-machine state.
    std::vector<int> signature;
    /// 1D: x_{i(s,n)} for n < window (fewer if I_s is finite).
    /// 2D: row-major window x window grid of x_{i(s,m), i(t,n)}; cells outside
    /// a finite I_s or I_t are left out and the grid is truncated to rows x cols.
    std::vector<Output> window;
    std::size_t rows = 0;
    std::size_t cols = 0;
    /// Index of the value class (classes with identical windows share it).
    int value_class = 0;
};

struct KernelTable {
    int dimension = 1;
    std::size_t suffix_len_max = 0;
    std::size_t window = 0;
    std::map<SuffixKey, int> index;
    std::vector<KernelClass> classes;
    std::size_t value_classes = 0;

    /// Class of a key, or -1 when the key is not in the table.
    int lookup(const SuffixKey& key) const;
};

/// The first `count` elements of I_s = val(0^* rep_U(N) intersected with A_U^* s),
/// increasing, using words of length at most max_len.
std::vector<BigInt> suffix_indices(const Dfa& language, const NumerationSystem& system, const DigitWord& s,
                                   std::size_t count, std::size_t max_len);

/// Brute force: n in [0, bound) whose representation, zero-padded to at
/// least |s|, ends with s.
std::vector<BigInt> suffix_indices_brute(const NumerationSystem& system, const DigitWord& s, std::uint64_t bound);

KernelTable kernel(const AutomaticSequence& seq, std::size_t suffix_len_max, std::size_t window);

KernelTable kernel2d(const Dfao& machine, const NumerationSystem& system, const Dfa& language,
                     std::size_t suffix_len_max, std::size_t window);

/// Data-only 2D kernel of a finite grid: entries identified by quotient
/// classes and the window values read from the grid. Cells needing indices
/// outside the grid are left out of the window.
struct Grid2D {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Output> values;

    Output at(std::size_t m, std::size_t n) const { return values[m * cols + n]; }
};

Grid2D grid_from_machine(const Dfao& machine, const NumerationSystem& system, std::size_t rows, std::size_t cols);

KernelTable kernel2d_from_grid(const Grid2D& grid, const NumerationSystem& system, const Dfa& language,
                               std::size_t suffix_len_max, std::size_t window);

struct KernelFiniteness {
    /// Reachable (quotient class, reversal state) signatures.
    std::size_t classes = 0;
    /// Distinct value windows among them (evidence; windows may collide).
    std::size_t value_classes = 0;
};

KernelFiniteness kernel_finiteness(const AutomaticSequence& seq, std::size_t window = 32);

/// The J x J x K construction: reversal-reading machine with states
/// (L s^{-1}, L t^{-1}, kernel class), then reversed to read most significant
/// digit first and minimized. Throws IncompleteKernel when an extension
/// (a s, b t) of a reached class is missing from the table. Works for
/// dimension 1 (t stays empty) and 2.
Dfao kernel_to_dfao(const KernelTable& table, const RightQuotients& quotients);

}  // namespace parryseq
