#include "parryseq/beta.hpp"

#include <algorithm>
#include <cmath>

namespace parryseq {

BetaExpansion::BetaExpansion(AlgebraicReal beta, FieldElement x)
    : beta_(std::move(beta)),
      beta_elem_(FieldElement::generator_of(beta_)),
      remainder_(std::move(x)),
      max_digit_(0) {
    if (!remainder_.generator().same_root(beta_)) throw FieldMismatch("x is not an element of Q(beta)");
    if (compare(beta_elem_, Rational(1)) <= 0) throw InvalidInput("beta must exceed 1");
    if (sign(remainder_) < 0 || compare(remainder_, Rational(1)) > 0)
        throw OutOfRange("x must lie in [0, 1]");
    // floor(beta x) <= floor(beta); equality only for x = 1.
    const BigInt fl = beta_.floor();
    max_digit_ = static_cast<Digit>(fl.get_ui());
    seen_.emplace(remainder_, 0);
}

Digit BetaExpansion::next() {
    FieldElement v = remainder_.times_generator();
    const double guess = std::floor(v.approx());
    Digit k = guess <= 0 ? 0 : std::min<Digit>(max_digit_, static_cast<Digit>(guess));
    while (k > 0 && compare(v, Rational(k)) < 0) --k;
    while (k < max_digit_ && compare(v, Rational(k + 1)) >= 0) ++k;
    v -= Rational(k);
    remainder_ = std::move(v);
    digits_.push_back(k);
    if (!period_) {
        auto [it, inserted] = seen_.emplace(remainder_, digits_.size());
        if (!inserted) period_ = Periodicity{it->second, digits_.size() - it->second};
    }
    return k;
}

DigitWord BetaExpansion::take(std::size_t count) {
    while (digits_.size() < count) next();
    return {digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::optional<Periodicity> BetaExpansion::find_period(std::size_t max_steps) {
    while (!period_ && digits_.size() < max_steps) next();
    return period_;
}

std::string BetaExpansion::render(std::size_t digits) const {
    if (period_) {
        const auto pre = static_cast<std::ptrdiff_t>(period_->preperiod);
        const auto end = pre + static_cast<std::ptrdiff_t>(period_->period);
        DigitWord prefix(digits_.begin(), digits_.begin() + pre);
        DigitWord cycle(digits_.begin() + pre, digits_.begin() + end);
        return word_to_string(prefix, "") + "(" + word_to_string(cycle, "") + ")";
    }
    const std::size_t n = std::min(digits, digits_.size());
    return word_to_string(DigitWord(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(n)), "");
}

BetaExpansion beta_expand(const AlgebraicReal& beta, const FieldElement& x) { return BetaExpansion(beta, x); }

// ---------------------------------------------------------------------------

Digit QuasiGreedy::t(std::size_t k) const {
    if (k == 0) throw InvalidInput("t_k is 1-based");
    if (!periodic()) {
        if (k <= d_beta_1.size()) return d_beta_1[k - 1];
        throw NotParry("quasi-greedy expansion is not known to be periodic");
    }
    if (k <= prefix.size()) return prefix[k - 1];
    return cycle[(k - 1 - prefix.size()) % cycle.size()];
}

DigitWord QuasiGreedy::take(std::size_t count) const {
    DigitWord out;
    out.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) out.push_back(t(k));
    return out;
}

std::string QuasiGreedy::render() const {
    if (!periodic()) return word_to_string(d_beta_1, "") + "...";
    return word_to_string(prefix, "") + "(" + word_to_string(cycle, "") + ")";
}

namespace {

/// Smallest p dividing |w| with w p-periodic.
std::size_t primitive_period(const DigitWord& w) {
    for (std::size_t p = 1; p <= w.size(); ++p) {
        if (w.size() % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < w.size() && ok; ++i) ok = w[i] == w[i - p];
        if (ok) return p;
    }
    return w.size();
}

}  // namespace

QuasiGreedy quasi_greedy(const AlgebraicReal& beta, std::size_t max_steps) {
    QuasiGreedy qg{beta, {}, false, std::nullopt, {}, {}};
    BetaExpansion e(beta, FieldElement(beta, Rational(1)));
    auto per = e.find_period(max_steps);
    const DigitWord& d = e.produced();
    if (!per) {
        qg.d_beta_1 = d;
        return qg;
    }
    const auto pre = static_cast<std::ptrdiff_t>(per->preperiod);
    DigitWord cycle(d.begin() + pre, d.begin() + pre + static_cast<std::ptrdiff_t>(per->period));
    if (cycle == DigitWord{0}) {
        // d_beta(1) = t_1..t_m 0^omega  ->  (t_1..t_{m-1} (t_m - 1))^omega
        qg.finite_d_beta_1 = true;
        qg.d_beta_1.assign(d.begin(), d.begin() + pre);
        DigitWord w = qg.d_beta_1;
        w.back() -= 1;
        w.resize(primitive_period(w));
        qg.cycle = w;
        qg.periodicity = Periodicity{0, w.size()};
    } else {
        qg.d_beta_1 = d;
        qg.prefix.assign(d.begin(), d.begin() + pre);
        qg.cycle = std::move(cycle);
        qg.periodicity = per;
    }
    return qg;
}

std::optional<Periodicity> is_parry(const AlgebraicReal& beta, std::size_t max_steps) {
    return quasi_greedy(beta, max_steps).periodicity;
}

NumerationSystem canonical_system(const QuasiGreedy& qg) {
    if (!qg.periodic()) throw NotParry("d_beta^*(1) is not known to be eventually periodic");
    const std::size_t i = qg.periodicity->preperiod, p = qg.periodicity->period;
    const std::size_t order = i + p;
    std::vector<BigInt> coeffs(order);
    for (std::size_t k = 1; k <= order; ++k) {
        BigInt c = qg.t(k);
        if (k == p) c += 1;
        if (k > p) c -= qg.t(k - p);
        coeffs[k - 1] = c;
    }
    std::vector<BigInt> initial;
    for (std::size_t n = 0; n < order; ++n) {
        BigInt u = 1;
        for (std::size_t j = 1; j <= n; ++j) u += initial[n - j] * static_cast<unsigned long>(qg.t(j));
        initial.push_back(u);
    }
    return NumerationSystem::from_recurrence(std::move(coeffs), std::move(initial));
}

namespace {

/// Compares digits[from..] with t_1 t_2 ...; -1 below, +1 above, 0 tied until
/// the digits (or the known part of t) run out.
int compare_with_t(const DigitWord& digits, std::size_t from, const QuasiGreedy& qg) {
    const std::size_t known = qg.periodic() ? SIZE_MAX : qg.d_beta_1.size();
    for (std::size_t j = from, k = 1; j < digits.size() && k <= known; ++j, ++k) {
        const Digit t = qg.t(k);
        if (digits[j] < t) return -1;
        if (digits[j] > t) return 1;
    }
    return 0;
}

}  // namespace

bool parry_admissible(const DigitWord& word, const QuasiGreedy& qg) {
    for (std::size_t s = 0; s < word.size(); ++s)
        if (compare_with_t(word, s, qg) > 0) return false;
    return true;
}

bool parry_admissible_stream(const DigitWord& digits, const QuasiGreedy& qg, std::size_t depth) {
    for (std::size_t s = 0; s < std::min(depth, digits.size()); ++s)
        if (compare_with_t(digits, s, qg) > 0) return false;
    return true;
}

LanguageCheck bertrand_language_check(const AlgebraicReal& beta, const NumerationSystem& system,
                                      std::size_t max_len) {
    const QuasiGreedy qg = quasi_greedy(beta);
    LanguageCheck out;
    out.alphabet_size = std::max<std::size_t>(beta.ceil().get_ui(), system.alphabet_size());
    const auto k = static_cast<Digit>(out.alphabet_size);
    for (std::size_t len = 0; len <= max_len; ++len) {
        DigitWord w(len, 0);
        for (;;) {
            ++out.words_checked;
            const bool in_num = is_padded_representation(system, w);
            const bool in_beta = parry_admissible(w, qg);
            if (in_num != in_beta) {
                out.equal = false;
                out.counterexample = w;
                out.counterexample_in_numeration = in_num;
                return out;
            }
            // Next word of the same length in lexicographic order.
            std::size_t pos = len;
            while (pos > 0 && w[pos - 1] == k - 1) w[--pos] = 0;
            if (pos == 0) break;
            ++w[pos - 1];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

long largest_with_parity_at_most(long x, int parity) {
    long r = x;
    if (((r % 2) + 2) % 2 != parity) --r;
    return r;
}

}  // namespace

TailSum conjugate_tail_sum(const DigitWord& digits, const AlgebraicReal& gamma, std::size_t m,
                           std::optional<std::size_t> n, long r, Digit digit_max) {
    if (m == 0) throw InvalidInput("tail sums are indexed from 1");
    const FieldElement g = FieldElement::generator_of(gamma);
    TailSum out;
    if (n) {
        if (*n > digits.size()) throw InvalidInput("not enough digits for S_{m,n}");
        FieldElement power = g.pow(r - static_cast<long>(m));
        const FieldElement g_inv = g.inverse();
        FieldElement sum(gamma, Rational(0));
        for (std::size_t i = m; i <= *n; ++i) {
            if (digits[i - 1] != 0) sum += power * Rational(digits[i - 1]);
            power *= g_inv;
        }
        out.bounds = sum.enclose(128);
        out.exact = std::move(sum);
        return out;
    }
    if (compare(g, Rational(-1)) >= 0) throw InvalidInput("geometric tail bounds need gamma < -1");
    const long top = r - static_cast<long>(m);
    FieldElement denom = FieldElement(gamma, Rational(1)) - g.pow(-2);
    FieldElement upper = g.pow(largest_with_parity_at_most(top, 0)) / denom * Rational(digit_max);
    FieldElement lower = g.pow(largest_with_parity_at_most(top, 1)) / denom * Rational(digit_max);
    out.bounds = {lower.enclose(128).lo, upper.enclose(128).hi};
    out.upper = std::move(upper);
    out.lower = std::move(lower);
    return out;
}

FieldElement unshifted_even_tail_bound(const AlgebraicReal& gamma, std::size_t m, Digit digit_max) {
    const FieldElement g = FieldElement::generator_of(gamma);
    const long e = static_cast<long>(m % 2 == 0 ? m : m + 1);
    FieldElement denom = FieldElement(gamma, Rational(1)) - g.pow(-2);
    return g.pow(-e) / denom * Rational(digit_max);
}

FieldElement partial_value(const DigitWord& digits, const AlgebraicReal& beta, std::size_t k) {
    if (k > digits.size()) throw InvalidInput("not enough digits");
    const FieldElement b_inv = FieldElement::generator_of(beta).inverse();
    FieldElement power = b_inv;
    FieldElement sum(beta, Rational(0));
    for (std::size_t i = 1; i <= k; ++i) {
        if (digits[i - 1] != 0) sum += power * Rational(digits[i - 1]);
        power *= b_inv;
    }
    return sum;
}

FieldElement t_over_beta_r(const AlgebraicReal& beta, const Rational& t, long r) {
    return FieldElement::generator_of(beta).pow(-r) * t;
}

}  // namespace parryseq
