#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parryseq/beta.hpp"
#include "parryseq/common.hpp"
#include "parryseq/numsys.hpp"

namespace parryseq {

using Symbol = std::uint32_t;
using StateId = std::int32_t;
using Output = std::uint32_t;
constexpr StateId kNoState = -1;

/// Digit pair (a, b) over A_U x A_U encoded as a * base + b.
inline Symbol pair_symbol(Digit a, Digit b, std::size_t base) { return static_cast<Symbol>(a * base + b); }

/// Deterministic automaton with dense state ids and a possibly partial
/// transition table. Symbols are 0..alphabet_size()-1; for automata over digit
/// pairs, pair_base() is the digit alphabet size k and alphabet_size() = k^2.
class Dfa {
public:
    Dfa() = default;
    Dfa(std::size_t states, std::size_t alphabet, StateId initial = 0);

    std::size_t size() const { return finals_.size(); }
    std::size_t alphabet_size() const { return alphabet_; }
    std::size_t pair_base() const { return pair_base_; }
    void set_pair_base(std::size_t k);

    StateId initial() const { return initial_; }
    void set_initial(StateId q) { initial_ = q; }

    StateId next(StateId q, Symbol a) const {
        return a < alphabet_ ? delta_[static_cast<std::size_t>(q) * alphabet_ + a] : kNoState;
    }
    void set(StateId q, Symbol a, StateId r);

    bool is_final(StateId q) const { return finals_[static_cast<std::size_t>(q)]; }
    void set_final(StateId q, bool f = true) { finals_[static_cast<std::size_t>(q)] = f; }

    StateId add_state(bool final = false);

    /// State after reading w from q, or kNoState.
    StateId run(const DigitWord& w, StateId from) const;
    StateId run(const DigitWord& w) const { return run(w, initial_); }
    bool accepts(const DigitWord& w) const;

    bool is_complete() const;

    const std::string& name(StateId q) const { return names_[static_cast<std::size_t>(q)]; }
    void set_name(StateId q, std::string n) { names_[static_cast<std::size_t>(q)] = std::move(n); }

private:
    std::size_t alphabet_ = 0;
    std::size_t pair_base_ = 0;
    StateId initial_ = 0;
    std::vector<StateId> delta_;
    std::vector<bool> finals_;
    std::vector<std::string> names_;
};

enum class ReadDirection { msd_first, lsd_first };

/// A Dfa with an output per state. The transition table may be partial for
/// products with partial numeration automata; operations that need a complete
/// machine check it.
class Dfao {
public:
    Dfao() = default;
    Dfao(Dfa dfa, std::vector<Output> outputs, ReadDirection direction = ReadDirection::msd_first);

    const Dfa& dfa() const { return dfa_; }
    Dfa& dfa() { return dfa_; }
    std::size_t size() const { return dfa_.size(); }
    std::size_t alphabet_size() const { return dfa_.alphabet_size(); }
    StateId initial() const { return dfa_.initial(); }
    StateId next(StateId q, Symbol a) const { return dfa_.next(q, a); }

    Output output(StateId q) const { return outputs_[static_cast<std::size_t>(q)]; }
    const std::vector<Output>& outputs() const { return outputs_; }
    void set_output(StateId q, Output o) { outputs_[static_cast<std::size_t>(q)] = o; }
    StateId add_state(Output o);

    ReadDirection direction() const { return direction_; }
    void set_direction(ReadDirection d) { direction_ = d; }

    /// Output after reading w exactly as given. Throws InvalidInput when a
    /// transition is undefined.
    Output evaluate(const DigitWord& w) const;

    /// For msd-first machines: delta(q0, 0) = q0.
    bool has_zero_loop() const;

    /// Printable output letters; defaults to the decimal value.
    std::string output_name(Output o) const;
    void set_output_names(std::vector<std::string> names) { output_names_ = std::move(names); }
    const std::vector<std::string>& output_names() const { return output_names_; }

private:
    Dfa dfa_;
    std::vector<Output> outputs_;
    ReadDirection direction_ = ReadDirection::msd_first;
    std::vector<std::string> output_names_;
};

// ---------------------------------------------------------------------------
// Construction

/// A_beta: states q_0..q_{i+p-1}, all final. From q_{j-1}: digits 0..t_j-1 go
/// to q_0 and t_j goes to q_j (to q_i for j = i+p). Throws NotParry.
Dfa canonical_parry_automaton(const QuasiGreedy& qg);

/// One state looping on every symbol; accepting.
Dfa full_language(std::size_t alphabet);

/// Numeration automaton of U_n = 3 U_{n-1} + 1, U_0 = 1: {0,1,2}^*({eps} u 30^*).
Dfa affine3_automaton();

/// Adds a non-final sink if needed.
Dfa complete(const Dfa& dfa);
/// Keeps accessible and co-accessible states (the initial state always stays).
Dfa trim(const Dfa& dfa);
/// Minimal automaton of the same language. A partial input yields the trim
/// minimal (partial) automaton; a complete input stays complete.
Dfa minimize(const Dfa& dfa);
/// Minimal DFAO computing the same function of the input word; undefined
/// transitions are kept undefined.
Dfao minimize(const Dfao& machine);

/// Accepts the words of `dfa` that do not start with 0.
Dfa without_leading_zeros(const Dfa& dfa);

/// Language intersection, restricted to reachable pairs.
Dfa intersect(const Dfa& a, const Dfa& b);

/// Output of (q_A, q_B) is the output of q_B; transitions only where the
/// numeration automaton is defined. Throws AlphabetMismatch.
Dfao product_dfao(const Dfa& numeration, const Dfao& machine);

/// Completes the machine with a sink whose output is `sink_output`.
Dfao complete(const Dfao& machine, Output sink_output = 0);

/// Adds a fresh initial state with a 0-loop (if delta(q0, 0) != q0) that
/// otherwise behaves like the old initial state.
Dfao make_zero_loop(const Dfao& machine);

// ---------------------------------------------------------------------------
// Analysis

/// Classes of right quotients L s^{-1} = {w : ws in L}.
struct RightQuotients {
    /// Minimal automaton the classes are expressed on.
    Dfa automaton;
    /// classes[c][q]: q is in P_s = {q : delta(q, s) in F}.
    std::vector<std::vector<bool>> classes;
    /// extend[c][a]: class of L (a s)^{-1} given that s is in class c.
    std::vector<std::vector<int>> extend;
    /// Class of the empty language, or -1 if never reached.
    int empty_class = -1;

    int epsilon_class() const { return 0; }
    int classify(const DigitWord& s) const;
    std::size_t count() const { return classes.size(); }
};

RightQuotients right_quotients(const Dfa& language);

struct Equivalence {
    bool equal = true;
    /// Genealogically least word in the symmetric difference.
    std::optional<DigitWord> counterexample;
};

/// Language equality over the union of both alphabets.
Equivalence equivalent(const Dfa& a, const Dfa& b);

/// Decides w in L <=> w0 in L for the padded numeration language L.
Equivalence is_bertrand_regular(const Dfa& language);

/// The first `count` accepted words in genealogical order (fewer if the
/// language is finite).
std::vector<DigitWord> enumerate_genealogical(const Dfa& language, std::size_t count);

/// K_q(n): number of length-n words readable from q (undefined transitions
/// end a path).
std::vector<BigInt> path_counts(const Dfa& dfa, std::size_t n);

/// Strongly connected (over defined transitions) with period 1.
bool is_primitive(const Dfa& dfa);

/// Same sequence when reading in the opposite direction. States are the
/// functions g_w : Q -> B, g_w(q) = tau(delta(q, w reversed)). Requires a
/// complete machine (InvalidInput otherwise). The result is minimized.
Dfao reverse_dfao(const Dfao& machine);

/// Learns 0^* rep_U(N) from the greedy algorithm: Myhill-Nerode rows over
/// test suffixes of growing length, accepted once the hypothesis agrees with
/// the oracle on every word of length <= verify_len. Throws InvalidSystem if no
/// hypothesis with at most max_states states is found.
Dfa infer_numeration_automaton(const NumerationSystem& system, std::size_t verify_len = 10,
                               std::size_t max_states = 512);

}  // namespace parryseq
