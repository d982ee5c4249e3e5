#include "parryseq/sequences.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

namespace parryseq {

AutomaticSequence::AutomaticSequence(NumerationSystem system, Dfa language, Dfao machine)
    : system_(std::move(system)), language_(std::move(language)), machine_(std::move(machine)) {
    if (machine_.alphabet_size() < system_.alphabet_size())
        throw AlphabetMismatch("machine alphabet is smaller than the digit alphabet");
    if (machine_.direction() == ReadDirection::msd_first && !machine_.has_zero_loop())
        throw InvalidInput("machine needs delta(q0, 0) = q0");
}

Output AutomaticSequence::at(const BigInt& n) const {
    DigitWord w = rep(system_, n);
    if (machine_.direction() == ReadDirection::lsd_first) std::reverse(w.begin(), w.end());
    return machine_.evaluate(w);
}

std::vector<Output> AutomaticSequence::prefix(std::size_t count) const {
    std::vector<Output> out;
    out.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n) out.push_back(at(n));
    return out;
}

DigitWord pair_word(const NumerationSystem& system, std::size_t base, const BigInt& m, const BigInt& n,
                    std::size_t extra_padding) {
    DigitWord a = rep(system, m), b = rep(system, n);
    const std::size_t len = std::max(a.size(), b.size()) + extra_padding;
    a.insert(a.begin(), len - a.size(), 0);
    b.insert(b.begin(), len - b.size(), 0);
    DigitWord w(len);
    for (std::size_t i = 0; i < len; ++i) w[i] = pair_symbol(a[i], b[i], base);
    return w;
}

Output evaluate2d(const Dfao& machine, const NumerationSystem& system, const BigInt& m, const BigInt& n,
                  std::size_t extra_padding) {
    const std::size_t base = machine.dfa().pair_base();
    if (base == 0) throw InvalidInput("machine does not read digit pairs");
    DigitWord w = pair_word(system, base, m, n, extra_padding);
    if (machine.direction() == ReadDirection::lsd_first) std::reverse(w.begin(), w.end());
    return machine.evaluate(w);
}

Output evaluate2d(const Dfao& machine, const NumerationSystem& system, std::uint64_t m, std::uint64_t n) {
    return evaluate2d(machine, system, BigInt(static_cast<unsigned long>(m)), BigInt(static_cast<unsigned long>(n)));
}

Dfao char_machine(const Dfa& set_language, std::size_t alphabet) {
    const std::size_t n = set_language.size();
    auto step = [&](const std::vector<bool>& x, Symbol a) {
        std::vector<bool> y(n, false);
        for (StateId q = 0; q < static_cast<StateId>(n); ++q)
            if (x[static_cast<std::size_t>(q)])
                if (StateId r = set_language.next(q, a); r != kNoState) y[static_cast<std::size_t>(r)] = true;
        return y;
    };
    // Zero closure of the initial state.
    std::vector<bool> z(n, false);
    z[static_cast<std::size_t>(set_language.initial())] = true;
    for (bool grew = true; grew;) {
        grew = false;
        auto y = step(z, 0);
        for (std::size_t q = 0; q < n; ++q)
            if (y[q] && !z[q]) z[q] = grew = true;
    }
    using Key = std::pair<bool, std::vector<bool>>;
    std::map<Key, StateId> ids;
    std::vector<Key> states{{true, z}};
    ids.emplace(states[0], 0);
    std::vector<std::tuple<StateId, Symbol, StateId>> edges;
    for (std::size_t k = 0; k < states.size(); ++k) {
        for (Symbol a = 0; a < alphabet; ++a) {
            Key next = (states[k].first && a == 0) ? states[k] : Key{false, step(states[k].second, a)};
            auto [it, inserted] = ids.emplace(next, static_cast<StateId>(states.size()));
            if (inserted) states.push_back(std::move(next));
            edges.emplace_back(static_cast<StateId>(k), a, it->second);
        }
    }
    Dfa d(states.size(), alphabet, 0);
    for (auto [from, a, to] : edges) d.set(from, a, to);
    std::vector<Output> outs;
    for (const auto& [phase, x] : states) {
        bool hit = false;
        for (StateId q = 0; q < static_cast<StateId>(n) && !hit; ++q) hit = x[static_cast<std::size_t>(q)] && set_language.is_final(q);
        outs.push_back(hit ? 1 : 0);
    }
    return minimize(Dfao(std::move(d), std::move(outs)));
}

AutomaticSequence char_sequence_from_regular_set(const NumerationSystem& system, const Dfa& language,
                                                 const Dfa& set_language) {
    return AutomaticSequence(system, language, char_machine(set_language, system.alphabet_size()));
}

Dfao pair_product(const Dfao& first, const Dfao& second, const std::function<Output(Output, Output)>& f) {
    if (first.alphabet_size() != second.alphabet_size()) throw AlphabetMismatch("pair product needs equal alphabets");
    if (!first.dfa().is_complete() || !second.dfa().is_complete()) throw InvalidInput("pair product needs complete machines");
    const std::size_t k = first.alphabet_size();
    std::map<std::pair<StateId, StateId>, StateId> ids;
    std::vector<std::pair<StateId, StateId>> states{{first.initial(), second.initial()}};
    ids.emplace(states[0], 0);
    std::vector<std::tuple<StateId, Symbol, StateId>> edges;
    for (std::size_t i = 0; i < states.size(); ++i) {
        auto [p, q] = states[i];
        for (Digit a = 0; a < k; ++a)
            for (Digit b = 0; b < k; ++b) {
                std::pair<StateId, StateId> nxt{first.next(p, a), second.next(q, b)};
                auto [it, inserted] = ids.emplace(nxt, static_cast<StateId>(states.size()));
                if (inserted) states.push_back(nxt);
                edges.emplace_back(static_cast<StateId>(i), pair_symbol(a, b, k), it->second);
            }
    }
    Dfa d(states.size(), k * k, 0);
    d.set_pair_base(k);
    for (auto [from, s, to] : edges) d.set(from, s, to);
    std::vector<Output> outs;
    for (auto [p, q] : states) outs.push_back(f(first.output(p), second.output(q)));
    return minimize(Dfao(std::move(d), std::move(outs)));
}

Dfao digit_sum_parity_machine(std::size_t alphabet) {
    Dfa d(2, alphabet, 0);
    for (StateId q = 0; q < 2; ++q)
        for (Symbol a = 0; a < alphabet; ++a) d.set(q, a, (a % 2 == 1) ? 1 - q : q);
    return Dfao(std::move(d), {0, 1});
}

Dfa digit_then_zeros(Digit digit, std::size_t alphabet) {
    Dfa d(2, alphabet, 0);
    d.set(0, digit, 1);
    d.set(1, 0, 1);
    d.set_final(1);
    return d;
}

// ---------------------------------------------------------------------------
// Substitutions

std::optional<std::size_t> Substitution::uniform_length() const {
    if (images.empty()) return std::nullopt;
    const std::size_t len = images[0].size();
    for (const auto& im : images)
        if (im.size() != len) return std::nullopt;
    return len;
}

std::vector<bool> Substitution::mortal() const {
    std::vector<bool> m(images.size(), false);
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t q = 0; q < images.size(); ++q) {
            if (m[q]) continue;
            if (std::all_of(images[q].begin(), images[q].end(), [&](Letter b) { return m[b]; })) m[q] = grew = true;
        }
    }
    return m;
}

std::string Substitution::render() const {
    auto name = [&](Letter q) { return q < letter_names.size() && !letter_names[q].empty() ? letter_names[q] : std::to_string(q); };
    bool single = true;
    for (Letter q = 0; q < images.size(); ++q) single = single && name(q).size() == 1;
    std::ostringstream out;
    for (Letter q = 0; q < images.size(); ++q) {
        if (q) out << ", ";
        out << name(q) << " -> ";
        if (images[q].empty()) out << "eps";
        for (std::size_t i = 0; i < images[q].size(); ++i) out << (single || i == 0 ? "" : ".") << name(images[q][i]);
    }
    return out.str();
}

SubstitutionWithCoding automaton_to_substitution(const Dfao& product) {
    const StateId q0 = product.initial();
    if (product.next(q0, 0) != q0) throw NotProlongable("initial state has no 0-loop");
    SubstitutionWithCoding out;
    out.sigma.seed = static_cast<Letter>(q0);
    for (StateId q = 0; q < static_cast<StateId>(product.size()); ++q) {
        LetterWord im;
        for (Symbol a = 0; a < product.alphabet_size(); ++a)
            if (StateId r = product.next(q, a); r != kNoState) im.push_back(static_cast<Letter>(r));
        out.sigma.images.push_back(std::move(im));
        const auto& n = product.dfa().name(q);
        out.sigma.letter_names.push_back(n.empty() ? "q" + std::to_string(q) : n);
    }
    if (out.sigma.images[static_cast<std::size_t>(q0)].size() < 2)
        throw NotProlongable("image of the initial state has length < 2");
    out.coding = product.outputs();
    return out;
}

LetterWord fixed_point(const Substitution& sub, std::size_t length) {
    const LetterWord& start = sub.images.at(sub.seed);
    if (start.size() < 2 || start[0] != sub.seed) throw NotProlongable("substitution is not prolongable on its seed");
    LetterWord w = start;
    for (std::size_t i = 1; w.size() < length; ++i) {
        if (i >= w.size()) throw NotProlongable("fixed point is finite (remaining letters are mortal)");
        const auto& im = sub.images[w[i]];
        w.insert(w.end(), im.begin(), im.end());
    }
    w.resize(length);
    return w;
}

std::vector<BigInt> image_lengths(const Substitution& sub, std::size_t n) {
    std::vector<BigInt> len(sub.images.size(), BigInt(1));
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<BigInt> next(sub.images.size(), BigInt(0));
        for (std::size_t q = 0; q < sub.images.size(); ++q)
            for (Letter b : sub.images[q]) next[q] += len[b];
        len = std::move(next);
    }
    return len;
}

BigInt image_length(const Substitution& sub, Letter q, std::size_t n) { return image_lengths(sub, n).at(q); }

Letter letter_at(const Substitution& sub, const BigInt& position) {
    if (position < 0) throw OutOfRange("negative position");
    std::vector<std::vector<BigInt>> levels{std::vector<BigInt>(sub.images.size(), BigInt(1))};
    while (levels.back()[sub.seed] <= position) {
        std::vector<BigInt> next(sub.images.size(), BigInt(0));
        for (std::size_t q = 0; q < sub.images.size(); ++q)
            for (Letter b : sub.images[q]) next[q] += levels.back()[b];
        if (next[sub.seed] == levels.back()[sub.seed]) throw OutOfRange("fixed point is shorter than the position");
        levels.push_back(std::move(next));
    }
    Letter letter = sub.seed;
    BigInt pos = position;
    for (std::size_t level = levels.size() - 1; level > 0; --level) {
        for (Letter b : sub.images[letter]) {
            const BigInt& len = levels[level - 1][b];
            if (pos < len) {
                letter = b;
                break;
            }
            pos -= len;
        }
    }
    return letter;
}

LetterWord apply_coding(const LetterWord& w, const std::vector<Output>& coding) {
    LetterWord out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(coding.at(l));
    return out;
}

LetterWord apply_uniform_substitution(const LetterWord& w, const Substitution& mu) {
    if (!mu.uniform_length()) throw NotUniform("images have different lengths");
    LetterWord out;
    out.reserve(w.size() * *mu.uniform_length());
    for (Letter l : w) {
        const auto& im = mu.images.at(l);
        out.insert(out.end(), im.begin(), im.end());
    }
    return out;
}

LetterWord periodic_deletion(const LetterWord& w, std::size_t t) {
    if (t == 0) throw InvalidInput("deletion period must be positive");
    LetterWord out;
    for (std::size_t i = 0; i < w.size(); i += t) out.push_back(w[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Factor complexity

namespace {

/// Distinct factor counts for lengths 0..n_max via a suffix automaton.
std::vector<std::uint64_t> count_factors(const LetterWord& w, std::size_t n_max) {
    struct State {
        std::size_t len = 0;
        long link = -1;
        std::map<Letter, std::size_t> next;
    };
    std::vector<State> st(1);
    st.reserve(2 * w.size() + 2);
    std::size_t last = 0;
    for (Letter c : w) {
        const std::size_t cur = st.size();
        st.push_back({st[last].len + 1, -1, {}});
        long p = static_cast<long>(last);
        while (p != -1 && !st[static_cast<std::size_t>(p)].next.count(c)) {
            st[static_cast<std::size_t>(p)].next[c] = cur;
            p = st[static_cast<std::size_t>(p)].link;
        }
        if (p == -1) {
            st[cur].link = 0;
        } else {
            const std::size_t q = st[static_cast<std::size_t>(p)].next[c];
            if (st[static_cast<std::size_t>(p)].len + 1 == st[q].len) {
                st[cur].link = static_cast<long>(q);
            } else {
                const std::size_t clone = st.size();
                st.push_back({st[static_cast<std::size_t>(p)].len + 1, st[q].link, st[q].next});
                while (p != -1 && st[static_cast<std::size_t>(p)].next[c] == q) {
                    st[static_cast<std::size_t>(p)].next[c] = clone;
                    p = st[static_cast<std::size_t>(p)].link;
                }
                st[q].link = static_cast<long>(clone);
                st[cur].link = static_cast<long>(clone);
            }
        }
        last = cur;
    }
    std::vector<std::int64_t> diff(n_max + 2, 0);
    for (std::size_t v = 1; v < st.size(); ++v) {
        const std::size_t lo = st[static_cast<std::size_t>(st[v].link)].len + 1;
        const std::size_t hi = std::min(st[v].len, n_max);
        if (lo > hi) continue;
        diff[lo] += 1;
        diff[hi + 1] -= 1;
    }
    std::vector<std::uint64_t> p(n_max + 1, 0);
    p[0] = 1;
    std::int64_t run = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        run += diff[n];
        p[n] = static_cast<std::uint64_t>(run);
    }
    return p;
}

}  // namespace

ComplexityTable factor_complexity(const LetterWord& prefix, std::size_t n_max) {
    ComplexityTable out;
    out.p = count_factors(prefix, n_max);
    const LetterWord half(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(prefix.size() / 2));
    const auto q = count_factors(half, n_max);
    std::size_t n = 0;
    while (n < n_max && q[n + 1] == out.p[n + 1]) ++n;
    out.stable_up_to = n;
    out.sufficient = n >= n_max;
    return out;
}

std::uint64_t power_substitution_complexity(unsigned k, std::size_t n) {
    if (k < 2) throw InvalidInput("k must be at least 2");
    if (n == 0) return 1;
    const std::size_t blocks = n + 1;  // a length-n window meets at most n+1 blocks
    const std::size_t cap = n + 1;     // longer b-runs look the same inside a window
    // Smallest modulus k^c exceeding the block count: at most one index of
    // the range is a multiple of it.
    std::size_t modulus = 1, c = 0;
    while (modulus <= blocks) {
        modulus *= k;
        ++c;
    }
    auto valuation = [k](std::size_t v) {
        std::size_t e = 0;
        while (v % k == 0) {
            v /= k;
            ++e;
        }
        return e;
    };
    std::unordered_set<std::string> seen;
    std::string s;
    for (std::size_t r = 0; r < modulus; ++r) {
        const std::size_t special = (modulus - r) % modulus;
        const bool has_special = special < blocks;
        const std::size_t v_lo = has_special ? c : 0, v_hi = has_special ? cap : 0;
        for (std::size_t v = v_lo; v <= v_hi; ++v) {
            s.clear();
            std::size_t first_block = 0;
            for (std::size_t d = 0; d < blocks; ++d) {
                const std::size_t e = (has_special && d == special) ? v : valuation((r + d) % modulus);
                s.push_back('a');
                s.append(std::min(e, cap), 'b');
                if (d == 0) first_block = s.size();
            }
            for (std::size_t start = 0; start < first_block && start + n <= s.size(); ++start)
                seen.insert(s.substr(start, n));
        }
    }
    return seen.size();
}

GrowthDiagnostic growth_diagnostic(const std::vector<std::uint64_t>& p, std::size_t from, std::size_t to) {
    if (from == 0 || to >= p.size() || from > to) throw InvalidInput("bad growth window");
    GrowthDiagnostic g;
    g.from = from;
    g.to = to;
    bool increasing = true;
    for (std::size_t n = from; n <= to; ++n) {
        const double r = static_cast<double>(p[n]) / static_cast<double>(n);
        g.max_ratio = std::max(g.max_ratio, r);
        // p(n)/n < p(n+1)/(n+1)  <=>  (n+1) p(n) < n p(n+1), exact in integers.
        if (n < to && !((n + 1) * p[n] < n * p[n + 1])) increasing = false;
    }
    g.ratio_strictly_increasing = increasing;
    const std::size_t mid = from + (to - from) / 2;
    if (p[mid] == p[to]) g.kind = Growth::bounded;
    else if (increasing) g.kind = Growth::superlinear;
    else g.kind = Growth::linear;
    return g;
}

std::string growth_name(Growth g) {
    switch (g) {
        case Growth::bounded: return "bounded";
        case Growth::linear: return "linear";
        case Growth::superlinear: return "superlinear";
    }
    return "?";
}

}  // namespace parryseq
