#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parryseq/algebraic.hpp"
#include "parryseq/automata.hpp"
#include "parryseq/numsys.hpp"

namespace parryseq {

/// A numeration system with what is known about it: its numeration
/// automaton (0^* rep_U(N), msd first) and, for Parry-type systems, the
/// polynomial whose largest root is the associated beta.
struct SystemBundle {
    std::string name;
    NumerationSystem system;
    Dfa language;
    std::optional<IntPoly> beta_polynomial;
};

struct BuiltinInfo {
    std::string name;
    std::string description;
};

/// fibonacci, modified-fibonacci, base-<k>, affine-3, quartic.
std::vector<BuiltinInfo> list_builtins();

/// Throws InvalidInput for unknown names.
SystemBundle builtin_system(const std::string& name);

/// Builtin name, or a path to a JSON system file (see system_from_json). The
/// numeration automaton of a file system is inferred from the greedy algorithm.
/// With a cache directory, inferred automata and the materialized terms are
/// stored there and reused when the stored system matches.
SystemBundle resolve_system(const std::string& spec, const std::optional<std::string>& cache_dir = std::nullopt);

/// Polynomial of a builtin beta: golden (X^2 - X - 1), quartic, base-<k>
/// (X - k), fibonacci (alias of golden). Throws InvalidInput.
IntPoly builtin_beta_polynomial(const std::string& name);

/// Parses "c0,c1,...,cd" (constant term first).
IntPoly parse_polynomial(const std::string& text);

}  // namespace parryseq
