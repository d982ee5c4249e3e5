#include "parryseq/automata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace parryseq {

// ---------------------------------------------------------------------------
// Dfa / Dfao

Dfa::Dfa(std::size_t states, std::size_t alphabet, StateId initial)
    : alphabet_(alphabet),
      initial_(initial),
      delta_(states * alphabet, kNoState),
      finals_(states, false),
      names_(states) {}

void Dfa::set_pair_base(std::size_t k) {
    if (k != 0 && k * k != alphabet_) throw AlphabetMismatch("pair base squared must equal the alphabet size");
    pair_base_ = k;
}

void Dfa::set(StateId q, Symbol a, StateId r) {
    if (a >= alphabet_) throw AlphabetMismatch("symbol " + std::to_string(a) + " outside the alphabet");
    delta_[static_cast<std::size_t>(q) * alphabet_ + a] = r;
}

StateId Dfa::add_state(bool final) {
    delta_.resize(delta_.size() + alphabet_, kNoState);
    finals_.push_back(final);
    names_.emplace_back();
    return static_cast<StateId>(finals_.size() - 1);
}

StateId Dfa::run(const DigitWord& w, StateId from) const {
    StateId q = from;
    for (Digit d : w) {
        if (q == kNoState) return kNoState;
        q = next(q, d);
    }
    return q;
}

bool Dfa::accepts(const DigitWord& w) const {
    StateId q = run(w);
    return q != kNoState && is_final(q);
}

bool Dfa::is_complete() const {
    return std::none_of(delta_.begin(), delta_.end(), [](StateId q) { return q == kNoState; });
}

Dfao::Dfao(Dfa dfa, std::vector<Output> outputs, ReadDirection direction)
    : dfa_(std::move(dfa)), outputs_(std::move(outputs)), direction_(direction) {
    if (outputs_.size() != dfa_.size()) throw InvalidInput("one output per state is required");
}

StateId Dfao::add_state(Output o) {
    outputs_.push_back(o);
    return dfa_.add_state(false);
}

Output Dfao::evaluate(const DigitWord& w) const {
    StateId q = dfa_.run(w);
    if (q == kNoState) throw InvalidInput("word " + word_to_string(w) + " leaves the machine");
    return output(q);
}

bool Dfao::has_zero_loop() const { return dfa_.size() > 0 && next(initial(), 0) == initial(); }

std::string Dfao::output_name(Output o) const {
    if (o < output_names_.size()) return output_names_[o];
    return std::to_string(o);
}

// ---------------------------------------------------------------------------
// Construction

Dfa canonical_parry_automaton(const QuasiGreedy& qg) {
    if (!qg.periodic()) throw NotParry("canonical automaton needs a periodic d_beta^*(1)");
    const std::size_t i = qg.periodicity->preperiod, n = i + qg.periodicity->period;
    const std::size_t alphabet = qg.t(1) + 1;
    Dfa a(n, alphabet, 0);
    for (std::size_t j = 1; j <= n; ++j) {
        const auto from = static_cast<StateId>(j - 1);
        const Digit t = qg.t(j);
        for (Digit d = 0; d < t; ++d) a.set(from, d, 0);
        a.set(from, t, static_cast<StateId>(j < n ? j : i));
        a.set_final(from);
        a.set_name(from, "q" + std::to_string(j - 1));
    }
    return a;
}

Dfa full_language(std::size_t alphabet) {
    Dfa a(1, alphabet, 0);
    for (Symbol s = 0; s < alphabet; ++s) a.set(0, s, 0);
    a.set_final(0);
    return a;
}

Dfa affine3_automaton() {
    Dfa a(2, 4, 0);
    for (Digit d = 0; d < 3; ++d) a.set(0, d, 0);
    a.set(0, 3, 1);
    a.set(1, 0, 1);
    a.set_final(0);
    a.set_final(1);
    a.set_name(0, "a");
    a.set_name(1, "b");
    return a;
}

Dfa complete(const Dfa& dfa) {
    if (dfa.is_complete()) return dfa;
    Dfa out = dfa;
    const StateId sink = out.add_state(false);
    out.set_name(sink, "sink");
    for (StateId q = 0; q < static_cast<StateId>(out.size()); ++q)
        for (Symbol a = 0; a < out.alphabet_size(); ++a)
            if (out.next(q, a) == kNoState) out.set(q, a, sink);
    return out;
}

namespace {

std::vector<StateId> bfs_order(const Dfa& dfa) {
    std::vector<StateId> order;
    if (dfa.size() == 0) return order;
    std::vector<bool> seen(dfa.size(), false);
    order.push_back(dfa.initial());
    seen[static_cast<std::size_t>(dfa.initial())] = true;
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (Symbol a = 0; a < dfa.alphabet_size(); ++a) {
            StateId r = dfa.next(order[k], a);
            if (r != kNoState && !seen[static_cast<std::size_t>(r)]) {
                seen[static_cast<std::size_t>(r)] = true;
                order.push_back(r);
            }
        }
    }
    return order;
}

std::vector<bool> coaccessible(const Dfa& dfa) {
    std::vector<std::vector<StateId>> rev(dfa.size());
    for (StateId q = 0; q < static_cast<StateId>(dfa.size()); ++q)
        for (Symbol a = 0; a < dfa.alphabet_size(); ++a)
            if (StateId r = dfa.next(q, a); r != kNoState) rev[static_cast<std::size_t>(r)].push_back(q);
    std::vector<bool> good(dfa.size(), false);
    std::deque<StateId> queue;
    for (StateId q = 0; q < static_cast<StateId>(dfa.size()); ++q)
        if (dfa.is_final(q)) {
            good[static_cast<std::size_t>(q)] = true;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        for (StateId p : rev[static_cast<std::size_t>(q)])
            if (!good[static_cast<std::size_t>(p)]) {
                good[static_cast<std::size_t>(p)] = true;
                queue.push_back(p);
            }
    }
    return good;
}

/// Copies the states in `keep` (in order) into a fresh automaton; edges to
/// dropped states become undefined.
Dfa restrict_to(const Dfa& dfa, const std::vector<StateId>& keep) {
    std::vector<StateId> map(dfa.size(), kNoState);
    for (std::size_t k = 0; k < keep.size(); ++k) map[static_cast<std::size_t>(keep[k])] = static_cast<StateId>(k);
    Dfa out(keep.size(), dfa.alphabet_size(), map[static_cast<std::size_t>(dfa.initial())]);
    if (dfa.pair_base()) out.set_pair_base(dfa.pair_base());
    for (std::size_t k = 0; k < keep.size(); ++k) {
        const StateId q = keep[k];
        const auto nk = static_cast<StateId>(k);
        out.set_final(nk, dfa.is_final(q));
        out.set_name(nk, dfa.name(q));
        for (Symbol a = 0; a < dfa.alphabet_size(); ++a) {
            StateId r = dfa.next(q, a);
            if (r != kNoState && map[static_cast<std::size_t>(r)] != kNoState)
                out.set(nk, a, map[static_cast<std::size_t>(r)]);
        }
    }
    return out;
}

/// Moore refinement. `initial_class` seeds the partition; kNoState targets
/// are a class of their own. Returns the class of each state.
std::vector<int> refine_partition(const Dfa& dfa, std::vector<int> cls) {
    std::size_t count = 0;
    for (;;) {
        std::map<std::vector<int>, int> ids;
        std::vector<int> next(dfa.size());
        std::vector<int> sig;
        for (StateId q = 0; q < static_cast<StateId>(dfa.size()); ++q) {
            sig.clear();
            sig.push_back(cls[static_cast<std::size_t>(q)]);
            for (Symbol a = 0; a < dfa.alphabet_size(); ++a) {
                StateId r = dfa.next(q, a);
                sig.push_back(r == kNoState ? -1 : cls[static_cast<std::size_t>(r)]);
            }
            auto [it, inserted] = ids.emplace(sig, static_cast<int>(ids.size()));
            next[static_cast<std::size_t>(q)] = it->second;
        }
        cls = std::move(next);
        if (ids.size() == count) return cls;
        count = ids.size();
    }
}

/// Quotient of an accessible automaton by a partition, numbered in BFS order.
template <typename OnState>
Dfa quotient(const Dfa& dfa, const std::vector<int>& cls, OnState&& on_state) {
    const int k = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<StateId> rep(static_cast<std::size_t>(k), kNoState);
    for (StateId q = 0; q < static_cast<StateId>(dfa.size()); ++q)
        if (rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(q)])] == kNoState)
            rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(q)])] = q;
    Dfa merged(static_cast<std::size_t>(k), dfa.alphabet_size(),
               static_cast<StateId>(cls[static_cast<std::size_t>(dfa.initial())]));
    if (dfa.pair_base()) merged.set_pair_base(dfa.pair_base());
    for (int c = 0; c < k; ++c) {
        const StateId q = rep[static_cast<std::size_t>(c)];
        merged.set_final(c, dfa.is_final(q));
        merged.set_name(c, dfa.name(q));
        on_state(c, q);
        for (Symbol a = 0; a < dfa.alphabet_size(); ++a) {
            StateId r = dfa.next(q, a);
            if (r != kNoState) merged.set(c, a, cls[static_cast<std::size_t>(r)]);
        }
    }
    return merged;
}

}  // namespace

Dfa trim(const Dfa& dfa) {
    if (dfa.size() == 0) return dfa;
    const auto co = coaccessible(dfa);
    std::vector<StateId> keep;
    for (StateId q : bfs_order(dfa))
        if (q == dfa.initial() || co[static_cast<std::size_t>(q)]) keep.push_back(q);
    // Re-run BFS on the restricted graph so every kept state is accessible.
    Dfa r = restrict_to(dfa, keep);
    return restrict_to(r, bfs_order(r));
}

Dfa minimize(const Dfa& dfa) {
    if (dfa.size() == 0) return dfa;
    const bool was_complete = dfa.is_complete();
    Dfa c = complete(dfa);
    c = restrict_to(c, bfs_order(c));
    std::vector<int> cls(c.size());
    for (StateId q = 0; q < static_cast<StateId>(c.size()); ++q) cls[static_cast<std::size_t>(q)] = c.is_final(q) ? 1 : 0;
    cls = refine_partition(c, std::move(cls));
    Dfa m = quotient(c, cls, [](int, StateId) {});
    m = restrict_to(m, bfs_order(m));
    if (!was_complete) m = trim(m);
    return m;
}

Dfao minimize(const Dfao& machine) {
    if (machine.size() == 0) return machine;
    const auto order = bfs_order(machine.dfa());
    Dfa acc = restrict_to(machine.dfa(), order);
    std::vector<Output> outs;
    for (StateId q : order) outs.push_back(machine.output(q));
    std::map<Output, int> seed;
    std::vector<int> cls(acc.size());
    for (std::size_t q = 0; q < acc.size(); ++q)
        cls[q] = seed.emplace(outs[q], static_cast<int>(seed.size())).first->second;
    cls = refine_partition(acc, std::move(cls));
    std::vector<Output> merged_out(static_cast<std::size_t>(*std::max_element(cls.begin(), cls.end()) + 1));
    Dfa m = quotient(acc, cls, [&](int c, StateId q) { merged_out[static_cast<std::size_t>(c)] = outs[static_cast<std::size_t>(q)]; });
    const auto order2 = bfs_order(m);
    std::vector<Output> final_out;
    for (StateId q : order2) final_out.push_back(merged_out[static_cast<std::size_t>(q)]);
    Dfao out(restrict_to(m, order2), std::move(final_out), machine.direction());
    out.set_output_names(machine.output_names());
    return out;
}

Dfa without_leading_zeros(const Dfa& dfa) {
    Dfa out = dfa;
    const StateId start = out.add_state(dfa.is_final(dfa.initial()));
    out.set_name(start, "start");
    for (Symbol a = 1; a < out.alphabet_size(); ++a) {
        StateId r = dfa.next(dfa.initial(), a);
        if (r != kNoState) out.set(start, a, r);
    }
    out.set_initial(start);
    return trim(out);
}

namespace {

template <typename Visit>
std::vector<std::pair<StateId, StateId>> pair_bfs(const Dfa& a, const Dfa& b, std::size_t alphabet, Visit&& visit) {
    // kNoState is encoded as index size().
    const std::size_t nb = b.size() + 1;
    auto enc = [&](StateId p, StateId q) {
        return static_cast<std::size_t>(p == kNoState ? static_cast<StateId>(a.size()) : p) * nb +
               static_cast<std::size_t>(q == kNoState ? static_cast<StateId>(b.size()) : q);
    };
    std::unordered_map<std::size_t, StateId> ids;
    std::vector<std::pair<StateId, StateId>> states;
    ids.emplace(enc(a.initial(), b.initial()), 0);
    states.emplace_back(a.initial(), b.initial());
    for (std::size_t k = 0; k < states.size(); ++k) {
        auto [p, q] = states[k];
        for (Symbol s = 0; s < alphabet; ++s) {
            StateId p2 = p == kNoState ? kNoState : a.next(p, s);
            StateId q2 = q == kNoState ? kNoState : b.next(q, s);
            StateId id;
            auto it = ids.find(enc(p2, q2));
            bool fresh = it == ids.end();
            if (fresh) {
                id = static_cast<StateId>(states.size());
                ids.emplace(enc(p2, q2), id);
                states.emplace_back(p2, q2);
            } else {
                id = it->second;
            }
            visit(static_cast<StateId>(k), s, id, fresh, states);
        }
    }
    return states;
}

}  // namespace

Dfa intersect(const Dfa& a, const Dfa& b) {
    if (a.alphabet_size() != b.alphabet_size()) throw AlphabetMismatch("intersection needs equal alphabets");
    std::vector<std::tuple<StateId, Symbol, StateId>> edges;
    const auto pairs = pair_bfs(a, b, a.alphabet_size(), [&](StateId from, Symbol s, StateId to, bool, const auto&) {
        edges.emplace_back(from, s, to);
    });
    Dfa out(pairs.size(), a.alphabet_size(), 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto [p, q] = pairs[k];
        out.set_final(static_cast<StateId>(k), p != kNoState && q != kNoState && a.is_final(p) && b.is_final(q));
    }
    for (auto [from, s, to] : edges) {
        auto [p, q] = pairs[static_cast<std::size_t>(to)];
        if (p != kNoState && q != kNoState) out.set(from, s, to);
    }
    return trim(out);
}

Dfao product_dfao(const Dfa& numeration, const Dfao& machine) {
    if (numeration.alphabet_size() != machine.alphabet_size())
        throw AlphabetMismatch("numeration automaton has " + std::to_string(numeration.alphabet_size()) +
                               " symbols, machine has " + std::to_string(machine.alphabet_size()));
    std::map<std::pair<StateId, StateId>, StateId> ids;
    std::vector<std::pair<StateId, StateId>> states{{numeration.initial(), machine.initial()}};
    ids.emplace(states[0], 0);
    Dfa d(0, numeration.alphabet_size(), 0);
    if (numeration.pair_base()) d.set_pair_base(numeration.pair_base());
    std::vector<Output> outs;
    d.add_state(numeration.is_final(states[0].first));
    outs.push_back(machine.output(states[0].second));
    for (std::size_t k = 0; k < states.size(); ++k) {
        auto [p, q] = states[k];
        d.set_name(static_cast<StateId>(k), "(" + (numeration.name(p).empty() ? std::to_string(p) : numeration.name(p)) +
                                                "," + (machine.dfa().name(q).empty() ? std::to_string(q) : machine.dfa().name(q)) + ")");
        for (Symbol s = 0; s < numeration.alphabet_size(); ++s) {
            StateId p2 = numeration.next(p, s);
            if (p2 == kNoState) continue;
            StateId q2 = machine.next(q, s);
            if (q2 == kNoState) throw InvalidInput("product needs a complete machine");
            auto [it, inserted] = ids.emplace(std::make_pair(p2, q2), static_cast<StateId>(states.size()));
            if (inserted) {
                states.emplace_back(p2, q2);
                d.add_state(numeration.is_final(p2));
                outs.push_back(machine.output(q2));
            }
            d.set(static_cast<StateId>(k), s, it->second);
        }
    }
    Dfao out(std::move(d), std::move(outs), machine.direction());
    out.set_output_names(machine.output_names());
    return out;
}

Dfao complete(const Dfao& machine, Output sink_output) {
    if (machine.dfa().is_complete()) return machine;
    Dfao out = machine;
    const StateId sink = out.add_state(sink_output);
    out.dfa().set_name(sink, "sink");
    for (StateId q = 0; q < static_cast<StateId>(out.size()); ++q)
        for (Symbol a = 0; a < out.alphabet_size(); ++a)
            if (out.next(q, a) == kNoState) out.dfa().set(q, a, sink);
    return out;
}

Dfao make_zero_loop(const Dfao& machine) {
    if (machine.has_zero_loop()) return machine;
    Dfao out = machine;
    const StateId old = machine.initial();
    const StateId start = out.add_state(machine.output(old));
    out.dfa().set_final(start, machine.dfa().is_final(old));
    out.dfa().set(start, 0, start);
    for (Symbol a = 1; a < out.alphabet_size(); ++a)
        if (StateId r = machine.next(old, a); r != kNoState) out.dfa().set(start, a, r);
    out.dfa().set_initial(start);
    return out;
}

// ---------------------------------------------------------------------------
// Analysis

int RightQuotients::classify(const DigitWord& s) const {
    int c = 0;
    for (std::size_t k = s.size(); k-- > 0;) {
        if (s[k] >= automaton.alphabet_size()) throw AlphabetMismatch("suffix digit outside the alphabet");
        c = extend[static_cast<std::size_t>(c)][s[k]];
    }
    return c;
}

RightQuotients right_quotients(const Dfa& language) {
    RightQuotients out;
    out.automaton = minimize(language);
    const Dfa& m = out.automaton;
    std::map<std::vector<bool>, int> ids;
    std::vector<bool> start(m.size());
    for (StateId q = 0; q < static_cast<StateId>(m.size()); ++q) start[static_cast<std::size_t>(q)] = m.is_final(q);
    ids.emplace(start, 0);
    out.classes.push_back(start);
    for (std::size_t c = 0; c < out.classes.size(); ++c) {
        out.extend.emplace_back(m.alphabet_size(), -1);
        for (Symbol a = 0; a < m.alphabet_size(); ++a) {
            std::vector<bool> pre(m.size(), false);
            for (StateId q = 0; q < static_cast<StateId>(m.size()); ++q) {
                StateId r = m.next(q, a);
                pre[static_cast<std::size_t>(q)] = r != kNoState && out.classes[c][static_cast<std::size_t>(r)];
            }
            auto [it, inserted] = ids.emplace(pre, static_cast<int>(out.classes.size()));
            if (inserted) out.classes.push_back(pre);
            out.extend[c][a] = it->second;
        }
    }
    for (std::size_t c = 0; c < out.classes.size(); ++c)
        if (std::none_of(out.classes[c].begin(), out.classes[c].end(), [](bool b) { return b; }))
            out.empty_class = static_cast<int>(c);
    return out;
}

Equivalence equivalent(const Dfa& a, const Dfa& b) {
    const std::size_t alphabet = std::max(a.alphabet_size(), b.alphabet_size());
    auto accepts = [](const Dfa& d, StateId q) { return q != kNoState && d.is_final(q); };
    std::vector<std::pair<StateId, Symbol>> parent{{kNoState, 0}};
    Equivalence out;
    auto word_of = [&](StateId id) {
        DigitWord w;
        while (parent[static_cast<std::size_t>(id)].first != kNoState) {
            w.push_back(parent[static_cast<std::size_t>(id)].second);
            id = parent[static_cast<std::size_t>(id)].first;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    if (accepts(a, a.initial()) != accepts(b, b.initial())) {
        out.equal = false;
        out.counterexample = DigitWord{};
        return out;
    }
    // BFS in queue order with ascending symbols reaches each pair by its
    // genealogically least word, so the first disagreement found is least.
    std::optional<StateId> bad;
    pair_bfs(a, b, alphabet, [&](StateId from, Symbol s, StateId to, bool fresh, const auto& states) {
        if (!fresh) return;
        parent.emplace_back(from, s);
        if (bad) return;
        auto [p, q] = states[static_cast<std::size_t>(to)];
        if (accepts(a, p) != accepts(b, q)) bad = to;
    });
    if (bad) {
        out.equal = false;
        out.counterexample = word_of(*bad);
    }
    return out;
}

Equivalence is_bertrand_regular(const Dfa& language) {
    Dfa shifted = language;
    for (StateId q = 0; q < static_cast<StateId>(language.size()); ++q) {
        StateId r = language.next(q, 0);
        shifted.set_final(q, r != kNoState && language.is_final(r));
    }
    return equivalent(language, shifted);
}

std::vector<DigitWord> enumerate_genealogical(const Dfa& language, std::size_t count) {
    std::vector<DigitWord> out;
    if (count == 0 || language.size() == 0) return out;
    const Dfa t = trim(language);
    const std::size_t n = t.size();
    // reach[r][q]: some word of length exactly r leads from q to a final state.
    std::vector<std::vector<bool>> reach;
    reach.emplace_back(n);
    for (StateId q = 0; q < static_cast<StateId>(n); ++q) reach[0][static_cast<std::size_t>(q)] = t.is_final(q);
    auto extend_reach = [&]() {
        const auto& prev = reach.back();
        std::vector<bool> cur(n, false);
        for (StateId q = 0; q < static_cast<StateId>(n); ++q)
            for (Symbol a = 0; a < t.alphabet_size() && !cur[static_cast<std::size_t>(q)]; ++a) {
                StateId r = t.next(q, a);
                if (r != kNoState && prev[static_cast<std::size_t>(r)]) cur[static_cast<std::size_t>(q)] = true;
            }
        reach.push_back(std::move(cur));
    };
    DigitWord w;
    std::function<void(StateId, std::size_t)> dfs = [&](StateId q, std::size_t remaining) {
        if (out.size() >= count) return;
        if (remaining == 0) {
            out.push_back(w);
            return;
        }
        for (Symbol a = 0; a < t.alphabet_size() && out.size() < count; ++a) {
            StateId r = t.next(q, a);
            if (r == kNoState || !reach[remaining - 1][static_cast<std::size_t>(r)]) continue;
            w.push_back(a);
            dfs(r, remaining - 1);
            w.pop_back();
        }
    };
    for (std::size_t len = 0; out.size() < count; ++len) {
        while (reach.size() <= len) extend_reach();
        const auto& r = reach[len];
        if (std::none_of(r.begin(), r.end(), [](bool b) { return b; })) break;
        if (r[static_cast<std::size_t>(t.initial())]) dfs(t.initial(), len);
    }
    return out;
}

std::vector<BigInt> path_counts(const Dfa& dfa, std::size_t n) {
    std::vector<BigInt> k(dfa.size(), BigInt(1));
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<BigInt> next(dfa.size(), BigInt(0));
        for (StateId q = 0; q < static_cast<StateId>(dfa.size()); ++q)
            for (Symbol a = 0; a < dfa.alphabet_size(); ++a)
                if (StateId r = dfa.next(q, a); r != kNoState) next[static_cast<std::size_t>(q)] += k[static_cast<std::size_t>(r)];
        k = std::move(next);
    }
    return k;
}

bool is_primitive(const Dfa& dfa) {
    const std::size_t n = dfa.size();
    if (n == 0) return false;
    // Forward BFS from state 0 with levels.
    std::vector<long> level(n, -1);
    std::deque<StateId> queue{0};
    level[0] = 0;
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        for (Symbol a = 0; a < dfa.alphabet_size(); ++a) {
            StateId r = dfa.next(q, a);
            if (r != kNoState && level[static_cast<std::size_t>(r)] < 0) {
                level[static_cast<std::size_t>(r)] = level[static_cast<std::size_t>(q)] + 1;
                queue.push_back(r);
            }
        }
    }
    if (std::any_of(level.begin(), level.end(), [](long l) { return l < 0; })) return false;
    // Backward reachability to state 0.
    std::vector<std::vector<StateId>> rev(n);
    for (StateId q = 0; q < static_cast<StateId>(n); ++q)
        for (Symbol a = 0; a < dfa.alphabet_size(); ++a)
            if (StateId r = dfa.next(q, a); r != kNoState) rev[static_cast<std::size_t>(r)].push_back(q);
    std::vector<bool> back(n, false);
    back[0] = true;
    queue.push_back(0);
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        for (StateId p : rev[static_cast<std::size_t>(q)])
            if (!back[static_cast<std::size_t>(p)]) {
                back[static_cast<std::size_t>(p)] = true;
                queue.push_back(p);
            }
    }
    if (std::any_of(back.begin(), back.end(), [](bool b) { return !b; })) return false;
    long g = 0;
    for (StateId q = 0; q < static_cast<StateId>(n); ++q)
        for (Symbol a = 0; a < dfa.alphabet_size(); ++a)
            if (StateId r = dfa.next(q, a); r != kNoState)
                g = std::gcd(g, std::abs(level[static_cast<std::size_t>(q)] + 1 - level[static_cast<std::size_t>(r)]));
    return g == 1;
}

Dfao reverse_dfao(const Dfao& machine) {
    if (!machine.dfa().is_complete()) throw InvalidInput("reversal needs a complete machine");
    const std::size_t n = machine.size();
    std::map<std::vector<Output>, StateId> ids;
    std::vector<std::vector<Output>> funcs{machine.outputs()};
    ids.emplace(funcs[0], 0);
    std::vector<std::tuple<StateId, Symbol, StateId>> edges;
    for (std::size_t k = 0; k < funcs.size(); ++k) {
        for (Symbol a = 0; a < machine.alphabet_size(); ++a) {
            std::vector<Output> g(n);
            for (StateId q = 0; q < static_cast<StateId>(n); ++q)
                g[static_cast<std::size_t>(q)] = funcs[k][static_cast<std::size_t>(machine.next(q, a))];
            auto [it, inserted] = ids.emplace(g, static_cast<StateId>(funcs.size()));
            if (inserted) funcs.push_back(std::move(g));
            edges.emplace_back(static_cast<StateId>(k), a, it->second);
        }
    }
    Dfa d(funcs.size(), machine.alphabet_size(), 0);
    if (machine.dfa().pair_base()) d.set_pair_base(machine.dfa().pair_base());
    for (auto [from, a, to] : edges) d.set(from, a, to);
    std::vector<Output> outs;
    for (const auto& f : funcs) outs.push_back(f[static_cast<std::size_t>(machine.initial())]);
    const auto dir = machine.direction() == ReadDirection::msd_first ? ReadDirection::lsd_first : ReadDirection::msd_first;
    Dfao out(std::move(d), std::move(outs), dir);
    out.set_output_names(machine.output_names());
    return minimize(out);
}

Dfa infer_numeration_automaton(const NumerationSystem& system, std::size_t verify_len, std::size_t max_states) {
    const std::size_t k = system.alphabet_size();
    std::map<DigitWord, bool> memo;
    auto member = [&](const DigitWord& w) {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        bool v = is_padded_representation(system, w);
        memo.emplace(w, v);
        return v;
    };
    auto all_words = [&](std::size_t max_len) {
        std::vector<DigitWord> words{{}};
        for (std::size_t start = 0; start < words.size(); ++start) {
            if (words[start].size() == max_len) continue;
            for (Digit a = 0; a < k; ++a) {
                DigitWord w = words[start];
                w.push_back(a);
                words.push_back(std::move(w));
            }
        }
        return words;
    };
    for (std::size_t test_len = 1; test_len <= verify_len; ++test_len) {
        const auto tests = all_words(test_len);
        auto row = [&](const DigitWord& prefix) {
            std::vector<bool> r;
            r.reserve(tests.size());
            DigitWord w;
            for (const auto& s : tests) {
                w = prefix;
                w.insert(w.end(), s.begin(), s.end());
                r.push_back(member(w));
            }
            return r;
        };
        std::map<std::vector<bool>, StateId> ids;
        std::vector<DigitWord> reps{{}};
        ids.emplace(row({}), 0);
        Dfa h(1, k, 0);
        bool overflow = false;
        for (std::size_t i = 0; i < reps.size() && !overflow; ++i) {
            h.set_final(static_cast<StateId>(i), member(reps[i]));
            for (Digit a = 0; a < k; ++a) {
                DigitWord w = reps[i];
                w.push_back(a);
                auto [it, inserted] = ids.emplace(row(w), static_cast<StateId>(reps.size()));
                if (inserted) {
                    if (reps.size() >= max_states) {
                        overflow = true;
                        break;
                    }
                    reps.push_back(w);
                    h.add_state(false);
                }
                h.set(static_cast<StateId>(i), a, it->second);
            }
        }
        if (overflow) continue;
        // Verify on every word up to verify_len. Words grow by prepending a
        // digit: w is greedy iff each suffix of length j has value < U_j, and
        // prepending d to a greedy word of length j only adds d U_j < U_{j+1}.
        // Non-greedy words stay non-greedy under prepending.
        bool ok = true;
        DigitWord rev;  // w reversed, least significant digit first
        std::function<void(const BigInt&, bool)> check = [&](const BigInt& value, bool greedy) {
            if (!ok) return;
            const StateId q = h.run(DigitWord(rev.rbegin(), rev.rend()));
            if ((q != kNoState && h.is_final(q)) != greedy) {
                ok = false;
                return;
            }
            if (rev.size() == verify_len) return;
            const BigInt& u = system.term(rev.size());
            const BigInt& u_next = system.term(rev.size() + 1);
            for (Digit a = 0; a < k && ok; ++a) {
                BigInt next = value + a * u;
                rev.push_back(a);
                check(next, greedy && next < u_next);
                rev.pop_back();
            }
        };
        check(BigInt(0), true);
        if (ok) return minimize(trim(h));
    }
    throw InvalidSystem("no automaton with at most " + std::to_string(max_states) +
                        " states matches the numeration language");
}

}  // namespace parryseq
