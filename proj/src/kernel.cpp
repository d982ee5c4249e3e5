#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "parryseq/sequences.hpp"

namespace parryseq {

namespace {

constexpr std::size_t kExtraDigits = 40;

/// All words of length `len` over k letters, lexicographic.
std::vector<DigitWord> words_of_length(std::size_t len, std::size_t k) {
    std::vector<DigitWord> out;
    DigitWord w(len, 0);
    for (;;) {
        out.push_back(w);
        std::size_t pos = len;
        while (pos > 0 && w[pos - 1] == k - 1) w[--pos] = 0;
        if (pos == 0) break;
        ++w[pos - 1];
    }
    return out;
}

DigitWord reversed(DigitWord w) {
    std::reverse(w.begin(), w.end());
    return w;
}

/// Reversal-reading machine of a sequence machine.
Dfao lsd_machine(const Dfao& machine) {
    if (machine.direction() == ReadDirection::lsd_first) return minimize(complete(machine));
    return reverse_dfao(complete(machine));
}

class IndexCache {
public:
    IndexCache(const Dfa& language, const NumerationSystem& system, std::size_t count)
        : language_(language), system_(system), count_(count) {}
    const std::vector<BigInt>& get(const DigitWord& s) {
        auto it = cache_.find(s);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(s, suffix_indices(language_, system_, s, count_, s.size() + kExtraDigits)).first->second;
    }

private:
    const Dfa& language_;
    const NumerationSystem& system_;
    std::size_t count_;
    std::map<DigitWord, std::vector<BigInt>> cache_;
};

/// Adds a key to the table, merging with an existing class only when both
/// the signature and the window agree.
void insert_key(KernelTable& table, std::map<std::pair<std::vector<int>, std::vector<Output>>, int>& by_sig,
                std::map<std::vector<Output>, int>& by_window, const SuffixKey& key, std::vector<int> sig,
                std::vector<Output> window, std::size_t rows, std::size_t cols) {
    auto found = by_sig.find({sig, window});
    if (found != by_sig.end()) {
        table.index.emplace(key, found->second);
        return;
    }
    KernelClass c;
    c.representative = key;
    c.signature = sig;
    c.window = window;
    c.rows = rows;
    c.cols = cols;
    c.value_class = by_window.emplace(window, static_cast<int>(by_window.size())).first->second;
    const int id = static_cast<int>(table.classes.size());
    table.classes.push_back(std::move(c));
    by_sig.emplace(std::make_pair(std::move(sig), std::move(window)), id);
    table.index.emplace(key, id);
}

}  // namespace

int KernelTable::lookup(const SuffixKey& key) const {
    auto it = index.find(key);
    return it == index.end() ? -1 : it->second;
}

std::vector<BigInt> suffix_indices(const Dfa& language, const NumerationSystem& system, const DigitWord& s,
                                   std::size_t count, std::size_t max_len) {
    std::vector<BigInt> out;
    if (count == 0) return out;
    const std::size_t n = language.size();
    const std::size_t k = language.alphabet_size();
    // reach[r][q]: some u of length r leads from q into T = {q : delta(q, s) final}.
    std::vector<std::vector<bool>> reach(1, std::vector<bool>(n, false));
    for (StateId q = 0; q < static_cast<StateId>(n); ++q) {
        StateId r = language.run(s, q);
        reach[0][static_cast<std::size_t>(q)] = r != kNoState && language.is_final(r);
    }
    auto grow = [&]() {
        std::vector<bool> cur(n, false);
        const auto& prev = reach.back();
        for (StateId q = 0; q < static_cast<StateId>(n); ++q)
            for (Symbol a = 0; a < k && !cur[static_cast<std::size_t>(q)]; ++a) {
                StateId r = language.next(q, a);
                if (r != kNoState && prev[static_cast<std::size_t>(r)]) cur[static_cast<std::size_t>(q)] = true;
            }
        reach.push_back(std::move(cur));
    };
    DigitWord u;
    std::function<void(StateId, std::size_t)> dfs = [&](StateId q, std::size_t remaining) {
        if (out.size() >= count) return;
        if (remaining == 0) {
            DigitWord w = u;
            w.insert(w.end(), s.begin(), s.end());
            out.push_back(val(system, w));
            return;
        }
        for (Symbol a = (u.empty() ? 1 : 0); a < k && out.size() < count; ++a) {
            StateId r = language.next(q, a);
            if (r == kNoState || !reach[remaining - 1][static_cast<std::size_t>(r)]) continue;
            u.push_back(a);
            dfs(r, remaining - 1);
            u.pop_back();
        }
    };
    for (std::size_t len = s.size(); len <= max_len && out.size() < count; ++len) {
        const std::size_t r = len - s.size();
        while (reach.size() <= r) grow();
        if (std::none_of(reach[r].begin(), reach[r].end(), [](bool b) { return b; })) break;
        if (reach[r][static_cast<std::size_t>(language.initial())]) dfs(language.initial(), r);
    }
    return out;
}

std::vector<BigInt> suffix_indices_brute(const NumerationSystem& system, const DigitWord& s, std::uint64_t bound) {
    std::vector<BigInt> out;
    for (std::uint64_t n = 0; n < bound; ++n) {
        DigitWord w = rep(system, n);
        if (w.size() < s.size()) w.insert(w.begin(), s.size() - w.size(), 0);
        if (std::equal(s.begin(), s.end(), w.end() - static_cast<std::ptrdiff_t>(s.size())))
            out.emplace_back(static_cast<unsigned long>(n));
    }
    return out;
}

KernelTable kernel(const AutomaticSequence& seq, std::size_t suffix_len_max, std::size_t window) {
    const RightQuotients rq = right_quotients(seq.language());
    const Dfao rev = lsd_machine(seq.machine());
    IndexCache indices(seq.language(), seq.system(), window);
    KernelTable table;
    table.dimension = 1;
    table.suffix_len_max = suffix_len_max;
    table.window = window;
    std::map<std::pair<std::vector<int>, std::vector<Output>>, int> by_sig;
    std::map<std::vector<Output>, int> by_window;
    std::map<std::vector<int>, std::vector<Output>> window_of_sig;
    const std::size_t k = seq.system().alphabet_size();
    for (std::size_t len = 0; len <= suffix_len_max; ++len) {
        for (const auto& s : words_of_length(len, k)) {
            std::vector<int> sig{rq.classify(s), rev.dfa().run(reversed(s))};
            std::vector<Output> values;
            for (const auto& i : indices.get(s)) values.push_back(seq.at(i));
            auto [it, inserted] = window_of_sig.emplace(sig, values);
            if (!inserted && it->second != values)
                throw std::logic_error("kernel signature collision with different values for suffix " + word_to_string(s));
            insert_key(table, by_sig, by_window, {s, {}}, std::move(sig), values, values.size(), 1);
        }
    }
    table.value_classes = by_window.size();
    return table;
}

KernelTable kernel2d(const Dfao& machine, const NumerationSystem& system, const Dfa& language,
                     std::size_t suffix_len_max, std::size_t window) {
    const std::size_t k = machine.dfa().pair_base();
    if (k == 0) throw InvalidInput("kernel2d needs a machine over digit pairs");
    const RightQuotients rq = right_quotients(language);
    const Dfao rev = lsd_machine(machine);
    IndexCache indices(language, system, window);
    KernelTable table;
    table.dimension = 2;
    table.suffix_len_max = suffix_len_max;
    table.window = window;
    std::map<std::pair<std::vector<int>, std::vector<Output>>, int> by_sig;
    std::map<std::vector<Output>, int> by_window;
    for (std::size_t len = 0; len <= suffix_len_max; ++len) {
        for (const auto& pw : words_of_length(len, k * k)) {
            DigitWord s(len), t(len);
            for (std::size_t i = 0; i < len; ++i) {
                s[i] = static_cast<Digit>(pw[i] / k);
                t[i] = static_cast<Digit>(pw[i] % k);
            }
            std::vector<int> sig{rq.classify(s), rq.classify(t), rev.dfa().run(reversed(pw))};
            const auto is = indices.get(s);
            const auto& it = indices.get(t);
            std::vector<Output> values;
            for (const auto& m : is)
                for (const auto& n : it) values.push_back(evaluate2d(machine, system, m, n));
            insert_key(table, by_sig, by_window, {s, t}, std::move(sig), values, is.size(), it.size());
        }
    }
    table.value_classes = by_window.size();
    return table;
}

Grid2D grid_from_machine(const Dfao& machine, const NumerationSystem& system, std::size_t rows, std::size_t cols) {
    Grid2D g;
    g.rows = rows;
    g.cols = cols;
    g.values.reserve(rows * cols);
    for (std::uint64_t m = 0; m < rows; ++m)
        for (std::uint64_t n = 0; n < cols; ++n) g.values.push_back(evaluate2d(machine, system, m, n));
    return g;
}

KernelTable kernel2d_from_grid(const Grid2D& grid, const NumerationSystem& system, const Dfa& language,
                               std::size_t suffix_len_max, std::size_t window) {
    const RightQuotients rq = right_quotients(language);
    const std::size_t k = rq.automaton.alphabet_size();
    IndexCache indices(language, system, window);
    KernelTable table;
    table.dimension = 2;
    table.suffix_len_max = suffix_len_max;
    table.window = window;
    std::map<std::pair<std::vector<int>, std::vector<Output>>, int> by_sig;
    std::map<std::vector<Output>, int> by_window;
    auto inside = [](const std::vector<BigInt>& idx, std::size_t bound) {
        std::vector<std::size_t> out;
        for (const auto& i : idx)
            if (i < static_cast<unsigned long>(bound)) out.push_back(i.get_ui());
        return out;
    };
    for (std::size_t len = 0; len <= suffix_len_max; ++len) {
        for (const auto& pw : words_of_length(len, k * k)) {
            DigitWord s(len), t(len);
            for (std::size_t i = 0; i < len; ++i) {
                s[i] = static_cast<Digit>(pw[i] / k);
                t[i] = static_cast<Digit>(pw[i] % k);
            }
            const auto is = inside(indices.get(s), grid.rows);
            const auto it = inside(indices.get(t), grid.cols);
            std::vector<Output> values;
            for (auto m : is)
                for (auto n : it) values.push_back(grid.at(m, n));
            std::vector<int> sig{rq.classify(s), rq.classify(t)};
            insert_key(table, by_sig, by_window, {s, t}, std::move(sig), values, is.size(), it.size());
        }
    }
    table.value_classes = by_window.size();
    return table;
}

KernelFiniteness kernel_finiteness(const AutomaticSequence& seq, std::size_t window) {
    const RightQuotients rq = right_quotients(seq.language());
    const Dfao rev = lsd_machine(seq.machine());
    const std::size_t k = seq.system().alphabet_size();
    std::map<std::pair<int, StateId>, DigitWord> seen;
    std::deque<std::pair<int, StateId>> queue;
    seen.emplace(std::make_pair(0, rev.initial()), DigitWord{});
    queue.emplace_back(0, rev.initial());
    while (!queue.empty()) {
        auto [c, r] = queue.front();
        queue.pop_front();
        const DigitWord s = seen[{c, r}];
        for (Digit a = 0; a < k; ++a) {
            std::pair<int, StateId> nxt{rq.extend[static_cast<std::size_t>(c)][a], rev.next(r, a)};
            if (seen.count(nxt)) continue;
            DigitWord as = s;
            as.insert(as.begin(), a);
            seen.emplace(nxt, std::move(as));
            queue.push_back(nxt);
        }
    }
    KernelFiniteness out;
    out.classes = seen.size();
    std::map<std::vector<Output>, int> windows;
    for (const auto& [sig, s] : seen) {
        std::vector<Output> values;
        for (const auto& i : suffix_indices(seq.language(), seq.system(), s, window, s.size() + kExtraDigits))
            values.push_back(seq.at(i));
        windows.emplace(values, 0);
    }
    out.value_classes = windows.size();
    return out;
}

Dfao kernel_to_dfao(const KernelTable& table, const RightQuotients& quotients) {
    const std::size_t k = quotients.automaton.alphabet_size();
    const int dim = table.dimension;
    const std::size_t symbols = dim == 2 ? k * k : k;
    const int start = table.lookup({{}, {}});
    if (start < 0) throw IncompleteKernel("the table has no entry for the empty suffix");

    using Triple = std::tuple<int, int, int>;
    std::map<Triple, StateId> ids;
    std::vector<Triple> states{{quotients.epsilon_class(), quotients.epsilon_class(), start}};
    ids.emplace(states[0], 0);
    std::vector<std::tuple<StateId, Symbol, StateId>> edges;
    auto is_dead = [&](const Triple& t) {
        return std::get<0>(t) == quotients.empty_class || std::get<1>(t) == quotients.empty_class;
    };
    for (std::size_t i = 0; i < states.size(); ++i) {
        const Triple cur = states[i];
        if (is_dead(cur)) {
            for (Symbol a = 0; a < symbols; ++a) edges.emplace_back(static_cast<StateId>(i), a, static_cast<StateId>(i));
            continue;
        }
        const auto& rep_key = table.classes[static_cast<std::size_t>(std::get<2>(cur))].representative;
        for (Symbol sym = 0; sym < symbols; ++sym) {
            const Digit a = dim == 2 ? static_cast<Digit>(sym / k) : static_cast<Digit>(sym);
            const Digit b = dim == 2 ? static_cast<Digit>(sym % k) : 0;
            SuffixKey ext = rep_key;
            ext.s.insert(ext.s.begin(), a);
            if (dim == 2) ext.t.insert(ext.t.begin(), b);
            const int cls = table.lookup(ext);
            if (cls < 0)
                throw IncompleteKernel("extension (" + word_to_string(ext.s) + ", " + word_to_string(ext.t) +
                                       ") is not in the table; increase the suffix length");
            Triple nxt{quotients.extend[static_cast<std::size_t>(std::get<0>(cur))][a],
                       dim == 2 ? quotients.extend[static_cast<std::size_t>(std::get<1>(cur))][b] : std::get<1>(cur), cls};
            auto [it, inserted] = ids.emplace(nxt, static_cast<StateId>(states.size()));
            if (inserted) states.push_back(nxt);
            edges.emplace_back(static_cast<StateId>(i), sym, it->second);
        }
    }
    Dfa d(states.size(), symbols, 0);
    if (dim == 2) d.set_pair_base(k);
    for (auto [from, sym, to] : edges) d.set(from, sym, to);
    std::vector<Output> outs;
    for (const auto& t : states) {
        const auto& w = table.classes[static_cast<std::size_t>(std::get<2>(t))].window;
        outs.push_back(is_dead(t) || w.empty() ? 0 : w[0]);
    }
    Dfao reading_lsd(std::move(d), std::move(outs), ReadDirection::lsd_first);
    return minimize(make_zero_loop(reverse_dfao(reading_lsd)));
}

}  // namespace parryseq
