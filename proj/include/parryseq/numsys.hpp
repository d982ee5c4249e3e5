#pragma once

#include <compare>
#include <cstddef>
#include <deque>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "parryseq/common.hpp"

namespace parryseq {

/// A positional numeration system U_0 = 1 < U_1 < U_2 < ...
///
/// Terms are either generated by a linear recurrence (optionally with an
/// affine constant, U_n = c_1 U_{n-1} + ... + c_k U_{n-k} + a) or taken from an
/// explicit finite list. Recurrence terms are materialized on demand into a
/// cache that only grows.
///
/// Thread safety: a NumerationSystem may be shared between threads. The term
/// cache is guarded by a shared mutex; readers take a shared lock and extension
/// takes an exclusive lock. Copies share the same cache.
class NumerationSystem {
public:
    /// Terms U_n for n >= initial_terms.size() follow the recurrence.
    /// `coefficients[i]` multiplies U_{n-1-i}. An empty coefficient list means
    /// the system is the explicit list `initial_terms`.
    static NumerationSystem from_recurrence(std::vector<BigInt> coefficients,
                                            std::vector<BigInt> initial_terms,
                                            BigInt affine_constant = 0);

    static NumerationSystem from_terms(std::vector<BigInt> terms);

    /// U_n. Throws OutOfRange past the end of an explicit system.
    const BigInt& term(std::size_t n) const;
    std::vector<BigInt> terms(std::size_t count) const;

    /// Smallest l with U_l > n.
    std::size_t length_of(const BigInt& n) const;

    /// C_U = sup ceil(U_{n+1} / U_n); the alphabet is {0, ..., C_U - 1}.
    Digit digit_bound() const { return digit_bound_; }
    std::size_t alphabet_size() const { return digit_bound_; }

    bool has_recurrence() const { return !coefficients_.empty(); }
    bool is_explicit() const { return coefficients_.empty(); }
    const std::vector<BigInt>& coefficients() const { return coefficients_; }
    const BigInt& affine_constant() const { return affine_; }
    const std::vector<BigInt>& initial_terms() const { return initial_; }

    /// Number of terms currently cached.
    std::size_t materialized() const;

    /// Whether the first `count` terms also satisfy another recurrence
    /// (checked from index `coefficients.size()` on).
    bool satisfies(const std::vector<BigInt>& coefficients, const BigInt& affine,
                   std::size_t count) const;

    /// ceil(U_{n+1}/U_n) maximized over n < window.
    Digit probe_digit_bound(std::size_t window) const;

    /// Window used for the C_U probe: max(64, 4 * order).
    std::size_t probe_window() const;

private:
    NumerationSystem() = default;

    struct Cache {
        mutable std::shared_mutex mutex;
        std::deque<BigInt> terms;
    };

    void extend_to(std::size_t count) const;
    BigInt next_term(const std::deque<BigInt>& terms) const;

    std::vector<BigInt> coefficients_;
    std::vector<BigInt> initial_;
    BigInt affine_ = 0;
    Digit digit_bound_ = 0;
    std::shared_ptr<Cache> cache_;
};

/// Greedy representation rep_U(n); rep_U(0) is the empty word.
DigitWord rep(const NumerationSystem& system, const BigInt& n);
DigitWord rep(const NumerationSystem& system, std::uint64_t n);

/// val_U(w) = sum w_i U_i for any integer word.
BigInt val(const NumerationSystem& system, const DigitWord& word);

/// Shorter words first, then lexicographic.
std::strong_ordering genealogical_cmp(const DigitWord& a, const DigitWord& b);

DigitWord strip_leading_zeros(const DigitWord& w);

/// w belongs to 0^* rep_U(N): after dropping leading zeros it is the greedy
/// representation of its own value.
bool is_padded_representation(const NumerationSystem& system, const DigitWord& w);

}  // namespace parryseq
