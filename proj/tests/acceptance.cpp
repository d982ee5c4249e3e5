// Acceptance suite: one line per criterion, exit status 0 iff every selected
// criterion passes within its time budget. `--criterion N` runs one.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "parryseq/beta.hpp"
#include "parryseq/builtins.hpp"
#include "parryseq/sequences.hpp"

using namespace parryseq;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + std::string("FAILED ") + what;
        }
    }
    void info(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<Outcome()> run;
};

struct Quartic {
    AlgebraicReal beta;
    AlgebraicReal gamma;
    SystemBundle bundle;
};

const Quartic& quartic() {
    static const Quartic q = [] {
        auto roots = isolate_real_roots(builtin_beta_polynomial("quartic"));
        return Quartic{roots.back(), roots.front(), builtin_system("quartic")};
    }();
    return q;
}

FieldElement in_beta(const Rational& x) { return FieldElement(quartic().beta, x); }

// t - S_{1,k} with the digits of d_beta(t / beta^r).
struct TMinusS {
    DigitWord digits;
    FieldElement value;
};

TMinusS t_minus_s(long t, long r, std::size_t k) {
    const auto& q = quartic();
    auto e = beta_expand(q.beta, t_over_beta_r(q.beta, Rational(t), r));
    DigitWord d = e.take(k);
    const auto s = conjugate_tail_sum(d, q.gamma, 1, k, r);
    return {d, FieldElement(q.gamma, Rational(t)) - *s.exact};
}

BigInt floor_of(const FieldElement& x) {
    const Rational lo = x.enclose(64).lo;
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    while (compare(x, Rational(f + 1)) >= 0) ++f;
    while (compare(x, Rational(f)) < 0) --f;
    return f;
}

BigInt ceil_of(const FieldElement& x) {
    const BigInt f = floor_of(x);
    return compare(x, Rational(f)) == 0 ? f : f + 1;
}

// Calls f on every word of length exactly len over {0..k-1}.
void for_each_word(std::size_t k, std::size_t len, const std::function<void(const DigitWord&)>& f) {
    DigitWord w(len, 0);
    while (true) {
        f(w);
        std::size_t i = len;
        while (i > 0 && w[i - 1] + 1 == k) w[--i] = 0;
        if (i == 0) return;
        ++w[i - 1];
    }
}

// ---------------------------------------------------------------------------

Outcome c1() {
    Outcome o;
    auto e = beta_expand(quartic().beta, in_beta(1));
    const DigitWord d = e.take(4);
    o.require(word_to_string(d) == "3203", "d_beta(1) starts 3203, got " + word_to_string(d));
    o.require(e.remainder().is_zero(), "expansion ends after 4 digits");
    o.info("d_beta(1) = " + word_to_string(d));
    return o;
}

Outcome c2() {
    Outcome o;
    const auto& q = quartic();
    auto e = beta_expand(q.beta, in_beta(Rational(1, 2)));
    const DigitWord d = e.take(21);
    o.require(word_to_string(d) == "123102303001010220123", "digits " + word_to_string(d));
    const auto head = conjugate_tail_sum(d, q.gamma, 1, 21, 0);
    const auto tail = conjugate_tail_sum(d, q.gamma, 22, std::nullopt, 0);
    o.require(compare(*head.exact, Rational(-11, 5)) < 0, "S_{1,21} < -2.20");
    o.require(compare(*tail.upper, Rational(233, 100)) < 0, "tail bound < 2.33");
    o.info("S_{1,21} = " + head.exact->to_decimal(6) + ", tail bound = " + tail.upper->to_decimal(6));
    return o;
}

Outcome c3() {
    Outcome o;
    auto e = beta_expand(quartic().beta, in_beta(Rational(1, 3)));
    const auto p = e.find_period(kDefaultMaxSteps);
    o.require(p.has_value(), "period detected");
    if (p) {
        o.require(p->preperiod == 2 && p->period == 4,
                  "preperiod/period 2/4, got " + std::to_string(p->preperiod) + "/" + std::to_string(p->period));
    }
    o.require(e.render(12) == "10(2212)", "rendered " + e.render(12));
    o.info("d_beta(1/3) = " + e.render(12));
    return o;
}

Outcome c4() {
    Outcome o;
    static const char* const kRows[] = {"10",      "101",      "1011",      "10111",      "101111",
                                        "1011112", "10111120", "101111203", "1011112023", "10111120230"};
    const auto& sys = quartic().bundle.system;
    std::string mismatches;
    for (std::size_t n = 0; n < 10; ++n) {
        const std::string got = word_to_string(rep(sys, BigInt(4 * sys.term(n))));
        if (got != kRows[n]) mismatches += " n=" + std::to_string(n) + ":" + got + "!=" + kRows[n];
    }
    o.require(mismatches.empty(), "rows" + mismatches);
    return o;
}

Outcome c5() {
    Outcome o;
    const struct {
        long t;
        const char* value;
    } spots[] = {{14, "12.797"}, {17, "16.894"}, {47, "45.584"}};
    for (const auto& s : spots) {
        const auto v = t_minus_s(s.t, 3, 3);
        o.require(v.value.to_decimal(3) == s.value,
                  "t=" + std::to_string(s.t) + " gives " + v.value.to_decimal(3) + ", expected " + s.value);
    }

    const FieldElement b = FieldElement::generator_of(quartic().beta);
    auto minimizer = [&](long r, std::size_t k, const FieldElement& lo_x, const FieldElement& hi_x) {
        const long lo = ceil_of(lo_x).get_si(), hi = floor_of(hi_x).get_si();
        long best_t = lo;
        TMinusS best = t_minus_s(lo, r, k);
        for (long t = lo + 1; t <= hi; ++t) {
            auto v = t_minus_s(t, r, k);
            if (compare(v.value, best.value) < 0) {
                best = std::move(v);
                best_t = t;
            }
        }
        return std::make_pair(best_t, best);
    };

    const auto [t3, m3] = minimizer(3, 3, b * b, b * b * b);
    o.require(t3 == 14, "r=3 minimizer 14, got " + std::to_string(t3));
    o.require(word_to_string(m3.digits) == "100", "r=3 digits 100, got " + word_to_string(m3.digits));
    o.require(compare(m3.value, Rational(1279, 100)) > 0, "r=3 minimum > 12.79");

    const auto [t2, m2] = minimizer(2, 12, b, b * b);
    o.require(t2 == 4, "r=2 minimizer 4, got " + std::to_string(t2));
    o.require(word_to_string(m2.digits) == "101111202300", "r=2 digits, got " + word_to_string(m2.digits));
    o.require(compare(m2.value, Rational(538, 100)) > 0, "r=2 minimum > 5.38");

    // S_{13,inf} for the digits of d_beta(4/beta^2): exact head plus a
    // certified geometric remainder.
    const auto& q = quartic();
    constexpr std::size_t kHead = 120;
    auto e = beta_expand(q.beta, t_over_beta_r(q.beta, 4, 2));
    const DigitWord d = e.take(kHead);
    const auto head = conjugate_tail_sum(d, q.gamma, 13, kHead, 2);
    const auto rest = conjugate_tail_sum(d, q.gamma, kHead + 1, std::nullopt, 2);
    const FieldElement s13 = *head.exact + *rest.upper;
    o.require(compare(s13, Rational(5)) < 0, "S_{13,inf} < 5");
    o.info("min r=3 " + m3.value.to_decimal(4) + ", min r=2 " + m2.value.to_decimal(4) + ", S_{13,inf} <= " +
           s13.to_decimal(4));
    return o;
}

Outcome c6() {
    Outcome o;
    const auto fib = builtin_system("fibonacci");
    const Dfa reps = without_leading_zeros(fib.language);
    // Oracle for 1{0,01}^* u {eps}: empty, or starts with 1, binary, no 11.
    auto shape = [](const DigitWord& w) {
        if (w.empty()) return true;
        if (w[0] != 1) return false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] > 1) return false;
            if (i > 0 && w[i] == 1 && w[i - 1] == 1) return false;
        }
        return true;
    };
    std::size_t checked = 0, bad = 0;
    for (std::size_t len = 0; len <= 10; ++len) {
        for_each_word(3, len, [&](const DigitWord& w) {
            const bool greedy = rep(fib.system, val(fib.system, w)) == w;
            if (greedy != shape(w) || reps.accepts(w) != shape(w)) ++bad;
            ++checked;
        });
    }
    o.require(bad == 0, std::to_string(bad) + " disagreements");
    o.info(std::to_string(checked) + " words over {0,1,2}");

    const auto mod = builtin_system("modified-fibonacci");
    const auto br = is_bertrand_regular(mod.language);
    o.require(!br.equal, "modified Fibonacci is not Bertrand");
    o.require(br.counterexample && word_to_string(*br.counterexample) == "2",
              "counterexample 2, got " + (br.counterexample ? word_to_string(*br.counterexample) : "none"));
    const std::string r = word_to_string(rep(mod.system, val(mod.system, parse_word("20"))));
    o.require(r == "102", "rep(val(20)) = 102, got " + r);
    return o;
}

Outcome c7() {
    Outcome o;
    const auto b = builtin_system("affine-3");
    // Oracle for {0,1,2}^*({eps} u 30^*): after the first 3 only zeros.
    auto shape = [](const DigitWord& w) {
        bool seen3 = false;
        for (Digit d : w) {
            if (d > 3) return false;
            if (seen3 && d != 0) return false;
            if (d == 3) seen3 = true;
        }
        return true;
    };
    // Both languages are closed under adding or removing leading zeros, so
    // length exactly 10 decides every length <= 10.
    const Dfa inferred = infer_numeration_automaton(b.system);
    std::size_t bad = 0, shape_count = 0;
    for_each_word(4, 10, [&](const DigitWord& w) {
        const bool s = shape(w);
        shape_count += s;
        if (inferred.accepts(w) != s || b.language.accepts(w) != s) ++bad;
    });
    o.require(bad == 0, std::to_string(bad) + " automaton disagreements on length 10");
    // Greedy side: the padded representations of n < B_10 all have the shape,
    // are distinct, and there are exactly as many as shape words.
    const BigInt b10 = b.system.term(10);
    std::size_t greedy_bad = 0;
    for (unsigned long n = 0; n < b10.get_ui(); ++n) {
        DigitWord w = rep(b.system, BigInt(n));
        w.insert(w.begin(), 10 - w.size(), 0);
        if (!shape(w)) ++greedy_bad;
    }
    o.require(greedy_bad == 0, std::to_string(greedy_bad) + " representations outside the shape");
    o.require(BigInt(static_cast<unsigned long>(shape_count)) == b10,
              "shape words of length 10 = B_10 (" + std::to_string(shape_count) + " vs " + b10.get_str() + ")");
    o.require(is_bertrand_regular(inferred).equal, "is_bertrand_regular");
    o.require(b.system.satisfies({4, -3}, 0, 100), "B_n = 4B_{n-1} - 3B_{n-2} for 100 terms");
    o.info("B_10 = " + b10.get_str());
    return o;
}

std::size_t convergence_index(const std::vector<DigitWord>& reps, const DigitWord& target, std::size_t k) {
    std::size_t n0 = reps.size();
    for (std::size_t n = reps.size(); n-- > 0;) {
        const auto& w = reps[n];
        if (w.size() < k || !std::equal(target.begin(), target.begin() + static_cast<std::ptrdiff_t>(k), w.begin()))
            break;
        n0 = n;
    }
    return n0;
}

Outcome c8() {
    Outcome o;
    const auto& q = quartic();
    const auto& sys = q.bundle.system;
    constexpr std::size_t kTerms = 80, kMargin = 10;
    auto e = beta_expand(q.beta, t_over_beta_r(q.beta, 4, 2));
    const DigitWord four = e.take(10);
    auto h = beta_expand(q.beta, in_beta(Rational(1, 2)));
    const DigitWord half = h.take(10);
    std::vector<DigitWord> reps4, reps_half;
    for (std::size_t n = 0; n < kTerms; ++n) {
        reps4.push_back(rep(sys, BigInt(4 * sys.term(n))));
        BigInt hq;
        mpz_fdiv_q_ui(hq.get_mpz_t(), sys.term(n).get_mpz_t(), 2);
        reps_half.push_back(rep(sys, hq));
    }
    std::string n0_four, n0_half;
    for (std::size_t k = 1; k <= 10; ++k) {
        const std::size_t a = convergence_index(reps4, four, k);
        const std::size_t c = convergence_index(reps_half, half, k);
        o.require(a + kMargin <= kTerms, "4U_n prefix k=" + std::to_string(k));
        o.require(c + kMargin <= kTerms, "floor(U_n/2) prefix k=" + std::to_string(k));
        n0_four += (k > 1 ? "," : "") + std::to_string(a);
        n0_half += (k > 1 ? "," : "") + std::to_string(c);
    }
    o.info("n_0(k) for 4U_n: " + n0_four + "; for floor(U_n/2): " + n0_half);
    return o;
}

struct PoolEntry {
    std::string name;
    NumerationSystem system;
    Dfa language;
    Dfao machine;
};

std::vector<PoolEntry> parry_pool() {
    std::vector<PoolEntry> pool;
    const auto fib = builtin_system("fibonacci");
    const auto q = builtin_system("quartic");
    const auto trib_qg = quasi_greedy(AlgebraicReal::largest_root({-1, -1, -1, 1}));
    const NumerationSystem trib = canonical_system(trib_qg);
    const Dfa trib_lang = canonical_parry_automaton(trib_qg);
    pool.push_back({"golden x digit parity", fib.system, fib.language, digit_sum_parity_machine(2)});
    pool.push_back({"golden x char(10*)", fib.system, fib.language, char_machine(digit_then_zeros(1, 2), 2)});
    pool.push_back({"quartic x char(10*)", q.system, q.language, char_machine(digit_then_zeros(1, 4), 4)});
    pool.push_back({"quartic x char(20*)", q.system, q.language, char_machine(digit_then_zeros(2, 4), 4)});
    pool.push_back({"quartic x digit parity", q.system, q.language, digit_sum_parity_machine(4)});
    pool.push_back({"tribonacci x digit parity", trib, trib_lang, digit_sum_parity_machine(2)});
    return pool;
}

Outcome c9() {
    Outcome o;
    const auto pool = parry_pool();
    for (const auto& e : pool) {
        const Dfao product = product_dfao(e.language, e.machine);
        const auto sc = automaton_to_substitution(product);
        const auto coded = apply_coding(fixed_point(sc.sigma, 2000), sc.coding);
        const auto direct = AutomaticSequence(e.system, e.language, e.machine).prefix(2000);
        o.require(std::equal(coded.begin(), coded.end(), direct.begin(), direct.end()), e.name + ": prefix 2000");
        for (std::size_t n = 0; n <= 25; ++n) {
            if (image_lengths(sc.sigma, n) != path_counts(product.dfa(), n)) {
                o.require(false, e.name + ": |sigma^n(q)| = path counts at n=" + std::to_string(n));
                break;
            }
        }
        const auto l24 = image_lengths(sc.sigma, 24), l25 = image_lengths(sc.sigma, 25);
        double lo = 1e300, hi = 0;
        for (std::size_t i = 0; i < l24.size(); ++i) {
            if (l24[i] == 0) continue;
            const double r = Rational(l25[i], l24[i]).get_d();
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        o.require(hi <= lo * 1.01, e.name + ": growth ratios within 1%");
    }
    for (const char* beta : {"golden", "quartic"}) {
        const auto qg = quasi_greedy(AlgebraicReal::largest_root(builtin_beta_polynomial(beta)));
        o.require(is_primitive(canonical_parry_automaton(qg)), std::string(beta) + ": A_beta primitive");
    }
    o.require(is_primitive(canonical_parry_automaton(quasi_greedy(AlgebraicReal::largest_root({-1, -1, -1, 1})))),
              "tribonacci: A_beta primitive");
    o.info(std::to_string(pool.size()) + " products");
    return o;
}

Outcome c10() {
    Outcome o;
    const Dfa a = affine3_automaton();
    const auto sub = automaton_to_substitution(Dfao(a, std::vector<Output>(a.size(), 0))).sigma;
    o.require(sub.images.size() == 2 && sub.images[sub.seed].size() == 4, "sigma is a -> aaab, b -> b");
    const Letter la = sub.seed, lb = 1 - sub.seed;

    // p(n)/n strictly increasing: p(n+1) n > p(n) (n+1).
    for (std::size_t n = 10; n < 60; ++n) {
        const std::uint64_t p = power_substitution_complexity(3, n), p1 = power_substitution_complexity(3, n + 1);
        if (p1 * n <= p * (n + 1)) {
            o.require(false, "p(n)/n increasing at n=" + std::to_string(n));
            break;
        }
    }
    // The formula against direct counts where a prefix holds every factor.
    const auto w = fixed_point(sub, 1u << 21);
    const auto table = factor_complexity(w, 10);
    for (std::size_t n = 1; n <= 10; ++n)
        o.require(table.p[n] == power_substitution_complexity(3, n), "formula vs counts at n=" + std::to_string(n));

    // The j-th a (j >= 1) is followed by b^{v_3(j)}. It sits at position
    // (j - 1) + v_3((j - 1)!), and v_3(m!) = (m - s_3(m)) / 2.
    for (unsigned k = 0; k <= 20; ++k) {
        BigInt j;
        mpz_ui_pow_ui(j.get_mpz_t(), 3, k);
        const BigInt m = j - 1;
        BigInt digit_sum = 0, rest = m;
        while (rest > 0) {
            digit_sum += rest % 3;
            rest /= 3;
        }
        const BigInt pos = m + (m - digit_sum) / 2;
        bool ok = letter_at(sub, pos) == la && letter_at(sub, pos + k + 1) == la;
        for (unsigned i = 1; ok && i <= k; ++i) ok = letter_at(sub, pos + i) == lb;
        o.require(ok, "ab^" + std::to_string(k) + "a at position " + pos.get_str());
    }
    o.info("p(60) = " + std::to_string(power_substitution_complexity(3, 60)));
    return o;
}

Outcome c11() {
    Outcome o;
    const auto pool = parry_pool();
    std::string counts;
    for (const auto& e : pool) {
        const AutomaticSequence seq(e.system, e.language, e.machine);
        const auto f = kernel_finiteness(seq, 32);
        o.require(f.classes > 0, e.name + ": kernel classes");
        counts += (counts.empty() ? "" : ",") + std::to_string(f.classes);
    }

    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 50; ++trial) {
        const auto& e = pool[static_cast<std::size_t>(trial) % pool.size()];
        const AutomaticSequence seq(e.system, e.language, e.machine);
        std::uniform_int_distribution<Digit> digit(0, e.system.digit_bound() - 1);
        std::uniform_int_distribution<int> len(1, 5);
        DigitWord s(static_cast<std::size_t>(len(rng)));
        for (auto& d : s) d = digit(rng);
        const auto brute = suffix_indices_brute(e.system, s, 10000);
        const auto fast = suffix_indices(e.language, e.system, s, brute.size(), s.size() + 40);
        bool ok = fast == brute;
        for (std::size_t i = 0; ok && i < brute.size(); ++i) ok = seq.at(fast[i]) == seq.at(brute[i]);
        o.require(ok, e.name + ": suffix " + word_to_string(s));
    }

    struct Machine2D {
        std::string name;
        SystemBundle bundle;
        Dfao machine;
        std::size_t suffix_len;
    };
    const Dfao p2 = digit_sum_parity_machine(2);
    const Dfao c4 = char_machine(digit_then_zeros(1, 4), 4);
    const std::vector<Machine2D> machines{
        {"golden parity xor", builtin_system("fibonacci"), pair_product(p2, p2, [](Output a, Output b) { return a ^ b; }), 4},
        {"quartic char and", builtin_system("quartic"), pair_product(c4, c4, [](Output a, Output b) { return a & b; }), 3},
        {"base-2 parity xor", builtin_system("base-2"), pair_product(p2, p2, [](Output a, Output b) { return a ^ b; }), 3},
    };
    for (const auto& m : machines) {
        const auto table = kernel2d(m.machine, m.bundle.system, m.bundle.language, m.suffix_len, 4);
        const Dfao rebuilt = kernel_to_dfao(table, right_quotients(m.bundle.language));
        std::size_t bad = 0;
        for (std::uint64_t i = 0; i < 30; ++i)
            for (std::uint64_t j = 0; j < 30; ++j)
                bad += evaluate2d(rebuilt, m.bundle.system, i, j) != evaluate2d(m.machine, m.bundle.system, i, j);
        o.require(bad == 0, m.name + ": " + std::to_string(bad) + " grid mismatches");
    }
    o.info("kernel classes " + counts);
    return o;
}

Outcome c12() {
    Outcome o;
    const auto& q = quartic();
    auto four = beta_expand(q.beta, t_over_beta_r(q.beta, 4, 2));
    auto half = beta_expand(q.beta, in_beta(Rational(1, 2)));
    o.require(!four.find_period(10000).has_value(), "d_beta(4/beta^2) has no period within 10^4 steps");
    o.require(!half.find_period(10000).has_value(), "d_beta(1/2) has no period within 10^4 steps");
    return o;
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "d_beta(1) = 3203", 1, c1},
        {2, "d_beta(1/2) digits and conjugate bounds", 5, c2},
        {3, "d_beta(1/3) = 10(2212)^w", 5, c3},
        {4, "rep_U(4U_n) for n = 0..9", 1, c4},
        {5, "t - S_{1,k} spot values and constants", 5, c5},
        {6, "Fibonacci and modified Fibonacci", 2, c6},
        {7, "U_n = 3U_{n-1} + 1", 2, c7},
        {8, "prefix convergence", 10, c8},
        {9, "substitutions of Parry products", 30, c9},
        {10, "a -> aaab, b -> b complexity", 30, c10},
        {11, "kernels", 60, c11},
        {12, "no period within 10^4 steps", 60, c12},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: parryseq_acceptance [--criterion N]\n";
            return 2;
        }
    }
    if (only < 0 || only > static_cast<int>(criteria().size())) {
        std::cerr << "no criterion " << only << "\n";
        return 2;
    }

    bool all_pass = true;
    for (const auto& c : criteria()) {
        if (only != 0 && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.budget_seconds;
        const bool pass = out.pass && in_time;
        all_pass = all_pass && pass;
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << std::fixed
             << std::setprecision(2) << secs << " s / " << c.budget_seconds << " s" << (in_time ? "" : ", over budget")
             << "]";
        if (!out.detail.empty()) line << " " << out.detail;
        std::cout << line.str() << std::endl;
    }
    return all_pass ? 0 : 1;
}
