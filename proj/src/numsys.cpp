#include "parryseq/numsys.hpp"

#include <algorithm>
#include <mutex>

namespace parryseq {

namespace {

constexpr std::size_t kMinProbe = 64;
constexpr std::size_t kMonotoneRun = 16;

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

NumerationSystem NumerationSystem::from_recurrence(std::vector<BigInt> coefficients,
                                                   std::vector<BigInt> initial_terms,
                                                   BigInt affine_constant) {
    if (coefficients.empty()) return from_terms(std::move(initial_terms));
    if (initial_terms.empty() || initial_terms.front() != 1)
        throw InvalidSystem("initial terms must start with U_0 = 1");
    if (initial_terms.size() < coefficients.size())
        throw InvalidSystem("need at least as many initial terms as coefficients");

    NumerationSystem s;
    s.coefficients_ = std::move(coefficients);
    s.initial_ = std::move(initial_terms);
    s.affine_ = std::move(affine_constant);
    s.cache_ = std::make_shared<Cache>();
    s.cache_->terms.assign(s.initial_.begin(), s.initial_.end());

    const std::size_t window = s.probe_window();
    s.extend_to(std::max(window, kMinProbe) + 1);
    for (std::size_t n = 0; n + 1 <= kMinProbe; ++n) {
        if (s.term(n + 1) <= s.term(n))
            throw InvalidSystem("terms are not strictly increasing at n = " + std::to_string(n + 1));
    }
    s.digit_bound_ = s.probe_digit_bound(window);
    return s;
}

NumerationSystem NumerationSystem::from_terms(std::vector<BigInt> terms) {
    if (terms.empty() || terms.front() != 1)
        throw InvalidSystem("terms must start with U_0 = 1");
    for (std::size_t n = 1; n < terms.size(); ++n) {
        if (terms[n] <= terms[n - 1])
            throw InvalidSystem("terms are not strictly increasing at n = " + std::to_string(n));
    }
    NumerationSystem s;
    s.initial_ = std::move(terms);
    s.cache_ = std::make_shared<Cache>();
    s.cache_->terms.assign(s.initial_.begin(), s.initial_.end());
    s.digit_bound_ = s.initial_.size() == 1 ? 2 : s.probe_digit_bound(s.initial_.size() - 1);
    return s;
}

std::size_t NumerationSystem::probe_window() const {
    if (is_explicit()) return initial_.empty() ? 0 : initial_.size() - 1;
    return std::max(kMinProbe, 4 * coefficients_.size());
}

Digit NumerationSystem::probe_digit_bound(std::size_t window) const {
    std::vector<BigInt> ratios;
    ratios.reserve(window);
    BigInt best = 1;
    for (std::size_t n = 0; n < window; ++n) {
        BigInt r = ceil_div(term(n + 1), term(n));
        if (r > best) best = r;
        ratios.push_back(std::move(r));
    }
    if (ratios.size() > kMonotoneRun) {
        bool rising = true;
        for (std::size_t i = ratios.size() - kMonotoneRun; i < ratios.size(); ++i) {
            if (ratios[i] <= ratios[i - 1]) {
                rising = false;
                break;
            }
        }
        if (rising) throw UnboundedRatio("ceil(U_{n+1}/U_n) keeps growing over the probe window");
    }
    if (!best.fits_uint_p() || best.get_ui() > 1'000'000)
        throw UnboundedRatio("digit bound " + best.get_str() + " is too large");
    return static_cast<Digit>(best.get_ui());
}

BigInt NumerationSystem::next_term(const std::deque<BigInt>& terms) const {
    const std::size_t n = terms.size();
    BigInt next = affine_;
    for (std::size_t i = 0; i < coefficients_.size(); ++i) next += coefficients_[i] * terms[n - 1 - i];
    return next;
}

void NumerationSystem::extend_to(std::size_t count) const {
    {
        std::shared_lock lock(cache_->mutex);
        if (cache_->terms.size() >= count) return;
    }
    if (is_explicit())
        throw OutOfRange("explicit system has only " + std::to_string(initial_.size()) + " terms");
    std::unique_lock lock(cache_->mutex);
    auto& terms = cache_->terms;
    while (terms.size() < count) {
        BigInt next = next_term(terms);
        if (next <= terms.back())
            throw InvalidSystem("recurrence stops increasing at n = " + std::to_string(terms.size()));
        terms.push_back(std::move(next));
    }
}

const BigInt& NumerationSystem::term(std::size_t n) const {
    extend_to(n + 1);
    std::shared_lock lock(cache_->mutex);
    return cache_->terms[n];
}

std::vector<BigInt> NumerationSystem::terms(std::size_t count) const {
    extend_to(count);
    std::shared_lock lock(cache_->mutex);
    return {cache_->terms.begin(), cache_->terms.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::size_t NumerationSystem::materialized() const {
    std::shared_lock lock(cache_->mutex);
    return cache_->terms.size();
}

std::size_t NumerationSystem::length_of(const BigInt& n) const {
    std::size_t l = 0;
    while (term(l) <= n) ++l;
    return l;
}

bool NumerationSystem::satisfies(const std::vector<BigInt>& coefficients, const BigInt& affine,
                                 std::size_t count) const {
    const auto u = terms(count);
    for (std::size_t n = coefficients.size(); n < count; ++n) {
        BigInt rhs = affine;
        for (std::size_t i = 0; i < coefficients.size(); ++i) rhs += coefficients[i] * u[n - 1 - i];
        if (rhs != u[n]) return false;
    }
    return true;
}

DigitWord rep(const NumerationSystem& system, const BigInt& n) {
    if (n < 0) throw InvalidInput("rep of a negative integer");
    const std::size_t len = system.length_of(n);
    DigitWord word(len);
    BigInt rest = n;
    BigInt q;
    for (std::size_t k = 0; k < len; ++k) {
        const BigInt& u = system.term(len - 1 - k);
        mpz_fdiv_qr(q.get_mpz_t(), rest.get_mpz_t(), rest.get_mpz_t(), u.get_mpz_t());
        word[k] = static_cast<Digit>(q.get_ui());
    }
    return word;
}

DigitWord rep(const NumerationSystem& system, std::uint64_t n) {
    return rep(system, BigInt(static_cast<unsigned long>(n)));
}

BigInt val(const NumerationSystem& system, const DigitWord& word) {
    BigInt total = 0;
    const std::size_t len = word.size();
    for (std::size_t k = 0; k < len; ++k) {
        if (word[k] != 0) total += system.term(len - 1 - k) * static_cast<unsigned long>(word[k]);
    }
    return total;
}

std::strong_ordering genealogical_cmp(const DigitWord& a, const DigitWord& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

DigitWord strip_leading_zeros(const DigitWord& w) {
    auto it = std::find_if(w.begin(), w.end(), [](Digit d) { return d != 0; });
    return {it, w.end()};
}

bool is_padded_representation(const NumerationSystem& system, const DigitWord& w) {
    DigitWord stripped = strip_leading_zeros(w);
    for (Digit d : stripped)
        if (d >= system.digit_bound()) return false;
    return rep(system, val(system, stripped)) == stripped;
}

}  // namespace parryseq
