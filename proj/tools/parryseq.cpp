// parryseq: command-line front end for the numeration, beta-expansion,
// automaton and sequence library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "parryseq/beta.hpp"
#include "parryseq/builtins.hpp"
#include "parryseq/experiments.hpp"
#include "parryseq/sequences.hpp"
#include "parryseq/serialize.hpp"

using namespace parryseq;
using nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Globals {
    std::string system = "quartic";
    std::string format = "text";
    std::size_t digits = 20;
    std::size_t max_len = 0;
    std::string out;
};

std::optional<std::string> cache_dir() {
    if (const char* dir = std::getenv("PARRYSEQ_CACHE_DIR"); dir && *dir) return std::string(dir);
    return std::nullopt;
}

SystemBundle load_system(const Globals& g) { return resolve_system(g.system, cache_dir()); }

void require_format(const Globals& g, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (g.format == f) return;
    std::string list;
    for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
    throw InvalidInput("--format " + g.format + " is not available here (" + list + ")");
}

BigInt parse_natural(const std::string& text) {
    try {
        BigInt n(text);
        if (n < 0) throw InvalidInput("expected a non-negative integer: " + text);
        return n;
    } catch (const std::invalid_argument&) {
        throw InvalidInput("expected a non-negative integer: " + text);
    }
}

/// 1D sequences: char:<d> (characteristic sequence of d0^*), thue-morse
/// (digit-sum parity) or a DFAO JSON file.
AutomaticSequence load_sequence(const SystemBundle& b, const std::string& spec) {
    const std::size_t k = b.system.alphabet_size();
    if (spec.rfind("char:", 0) == 0) {
        const DigitWord d = parse_word(spec.substr(5));
        if (d.size() != 1 || d[0] == 0 || d[0] >= k) throw InvalidInput("char:<d> needs one nonzero digit of the system");
        return char_sequence_from_regular_set(b.system, b.language, digit_then_zeros(d[0], k));
    }
    if (spec == "thue-morse") return AutomaticSequence(b.system, b.language, digit_sum_parity_machine(k));
    std::ifstream in(spec);
    if (!in) throw InvalidInput("unknown sequence '" + spec + "' (char:<d>, thue-morse, or a DFAO JSON file)");
    json j;
    in >> j;
    return AutomaticSequence(b.system, b.language, dfao_from_json(j));
}

/// 2D machines: xor:<d> / eq:<d> (pair product of char:<d> with itself) or a
/// DFAO JSON file over digit pairs.
Dfao load_machine2d(const SystemBundle& b, const std::string& spec) {
    const std::size_t k = b.system.alphabet_size();
    auto op = spec.substr(0, spec.find(':'));
    if ((op == "xor" || op == "eq") && spec.size() > op.size() + 1) {
        const DigitWord d = parse_word(spec.substr(op.size() + 1));
        if (d.size() != 1 || d[0] == 0 || d[0] >= k) throw InvalidInput(op + ":<d> needs one nonzero digit of the system");
        const Dfao c = complete(char_machine(digit_then_zeros(d[0], k), k));
        if (op == "xor") return pair_product(c, c, [](Output x, Output y) { return x ^ y; });
        return pair_product(c, c, [](Output x, Output y) { return static_cast<Output>(x == y); });
    }
    std::ifstream in(spec);
    if (!in) throw InvalidInput("unknown 2D machine '" + spec + "' (xor:<d>, eq:<d>, or a DFAO JSON file)");
    json j;
    in >> j;
    return dfao_from_json(j);
}

std::string output_word(const std::vector<Output>& values) {
    const bool wide = std::any_of(values.begin(), values.end(), [](Output o) { return o >= 10; });
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) s += (wide && i ? "," : "") + std::to_string(values[i]);
    return s;
}

// ---------------------------------------------------------------------------

int cmd_rep(const Globals& g, const std::vector<std::string>& args, std::ostream& out) {
    require_format(g, {"text", "json", "csv"});
    const auto b = load_system(g);
    json rows = json::array();
    if (g.format == "csv") out << "n,rep\n";
    for (const auto& a : args) {
        const BigInt n = parse_natural(a);
        const DigitWord w = rep(b.system, n);
        if (g.format == "text") out << word_to_string(w) << "\n";
        else if (g.format == "csv") out << to_string(n) << "," << word_to_string(w) << "\n";
        else rows.push_back({{"n", to_json(n)}, {"rep", to_json(w)}});
    }
    if (g.format == "json") out << rows.dump(2) << "\n";
    return 0;
}

int cmd_val(const Globals& g, const std::vector<std::string>& args, std::ostream& out) {
    require_format(g, {"text", "json", "csv"});
    const auto b = load_system(g);
    json rows = json::array();
    if (g.format == "csv") out << "word,val\n";
    for (const auto& a : args) {
        const DigitWord w = a == "eps" ? DigitWord{} : parse_word(a);
        const BigInt v = val(b.system, w);
        if (g.format == "text") out << to_string(v) << "\n";
        else if (g.format == "csv") out << word_to_string(w) << "," << to_string(v) << "\n";
        else rows.push_back({{"word", to_json(w)}, {"val", to_json(v)}});
    }
    if (g.format == "json") out << rows.dump(2) << "\n";
    return 0;
}

int cmd_enumerate(const Globals& g, std::size_t count, std::ostream& out) {
    require_format(g, {"text", "json", "csv"});
    const auto b = load_system(g);
    std::vector<DigitWord> words;
    if (g.max_len > 0) {
        // Every representation of length <= max_len: n < U_{max_len}.
        const BigInt bound = b.system.term(g.max_len);
        for (BigInt n = 0; n < bound; ++n) words.push_back(rep(b.system, n));
    } else {
        for (std::uint64_t n = 0; n < count; ++n) words.push_back(rep(b.system, n));
    }
    json rows = json::array();
    if (g.format == "csv") out << "n,rep\n";
    for (std::size_t n = 0; n < words.size(); ++n) {
        if (g.format == "text") out << n << " " << word_to_string(words[n]) << "\n";
        else if (g.format == "csv") out << n << "," << word_to_string(words[n]) << "\n";
        else rows.push_back({{"n", n}, {"rep", to_json(words[n])}});
    }
    if (g.format == "json") out << rows.dump(2) << "\n";
    return 0;
}

struct BetaArgs {
    std::string builtin;
    std::string poly;
    std::string x = "1";
    std::size_t max_steps = kDefaultMaxSteps;
    bool quasi = false;
};

int cmd_beta(const Globals& g, const BetaArgs& a, std::ostream& out) {
    require_format(g, {"text", "json"});
    if (a.builtin.empty() == a.poly.empty()) throw InvalidInput("give exactly one of --builtin and --poly");
    const IntPoly p = a.poly.empty() ? builtin_beta_polynomial(a.builtin) : parse_polynomial(a.poly);
    const AlgebraicReal beta = AlgebraicReal::largest_root(p);
    if (compare(FieldElement::generator_of(beta), Rational(1)) <= 0) throw InvalidInput("beta must exceed 1");
    if (a.quasi) {
        const auto qg = quasi_greedy(beta, a.max_steps);
        const std::string text = qg.periodic() ? qg.render() : word_to_string(qg.take(std::min(g.digits, qg.d_beta_1.size())));
        if (g.format == "text") out << text << "\n";
        else out << json{{"beta", beta.to_decimal(12)}, {"quasi_greedy", text}, {"periodic", qg.periodic()}}.dump(2) << "\n";
        return 0;
    }
    auto exp = beta_expand(beta, FieldElement(beta, parse_rational(a.x)));
    const auto per = exp.find_period(std::max(a.max_steps, g.digits));
    exp.take(g.digits);
    const std::string text = exp.render(g.digits);
    if (g.format == "text") {
        out << text << "\n";
    } else {
        json j{{"beta", beta.to_decimal(12)}, {"polynomial", polynomial_to_json(p)}, {"x", a.x}, {"expansion", text},
               {"digits", to_json(DigitWord(exp.produced().begin(), exp.produced().begin() + static_cast<std::ptrdiff_t>(g.digits)))}};
        if (per) j["periodicity"] = {{"preperiod", per->preperiod}, {"period", per->period}};
        else j["periodicity"] = nullptr;
        out << j.dump(2) << "\n";
    }
    return 0;
}

struct AutomatonArgs {
    std::string beta;
    bool check = false;
};

int cmd_automaton(const Globals& g, const AutomatonArgs& a, std::ostream& out) {
    require_format(g, {"text", "json", "dot"});
    Dfa dfa;
    std::string title;
    if (!a.beta.empty()) {
        dfa = canonical_parry_automaton(quasi_greedy(AlgebraicReal::largest_root(builtin_beta_polynomial(a.beta))));
        title = "A_beta(" + a.beta + ")";
    } else {
        dfa = load_system(g).language;
        title = "numeration automaton of " + g.system;
    }
    if (g.format == "dot") {
        out << to_dot(dfa);
        return 0;
    }
    json j = to_json(dfa);
    if (a.check) {
        const auto bert = is_bertrand_regular(dfa);
        j["bertrand"] = bert.equal;
        if (bert.counterexample) j["bertrand_counterexample"] = word_to_string(*bert.counterexample);
        j["primitive"] = is_primitive(dfa);
    }
    if (g.format == "json") {
        out << j.dump(2) << "\n";
        return 0;
    }
    out << title << ": " << dfa.size() << " states, alphabet " << dfa.alphabet_size() << "\n";
    for (StateId q = 0; q < static_cast<StateId>(dfa.size()); ++q) {
        out << (q == dfa.initial() ? "-> " : "   ") << (dfa.name(q).empty() ? "q" + std::to_string(q) : dfa.name(q))
            << (dfa.is_final(q) ? " (final)" : "") << ":";
        for (Symbol s = 0; s < dfa.alphabet_size(); ++s)
            if (StateId r = dfa.next(q, s); r != kNoState)
                out << " " << s << "->" << (dfa.name(r).empty() ? "q" + std::to_string(r) : dfa.name(r));
        out << "\n";
    }
    if (a.check) {
        out << "bertrand: " << (j["bertrand"].get<bool>() ? "yes" : "no");
        if (j.contains("bertrand_counterexample")) out << " (counterexample " << j["bertrand_counterexample"].get<std::string>() << ")";
        out << "\nprimitive: " << (j["primitive"].get<bool>() ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_substitution(const Globals& g, const std::string& machine_spec, std::ostream& out) {
    require_format(g, {"text", "json"});
    const auto b = load_system(g);
    Dfao machine;
    if (machine_spec.empty()) {
        // The numeration automaton read as its own DFAO (output = state).
        machine = Dfao(b.language, std::vector<Output>(b.language.size(), 0));
        for (StateId q = 0; q < static_cast<StateId>(b.language.size()); ++q) machine.set_output(q, static_cast<Output>(q));
    } else {
        machine = product_dfao(b.language, complete(load_sequence(b, machine_spec).machine()));
    }
    const auto sc = automaton_to_substitution(machine);
    const auto fp = apply_coding(fixed_point(sc.sigma, g.digits), sc.coding);
    if (g.format == "json") {
        json images = json::array();
        for (const auto& im : sc.sigma.images) images.push_back(im);
        out << json{{"images", images}, {"seed", sc.sigma.seed}, {"coding", sc.coding}, {"render", sc.sigma.render()},
                    {"prefix", fp}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << sc.sigma.render() << "\n";
    out << "coding: " << output_word(sc.coding) << "\n";
    out << "prefix: " << output_word(fp) << "\n";
    return 0;
}

int cmd_complexity(const Globals& g, const std::string& sequence, std::size_t prefix_len, std::ostream& out) {
    require_format(g, {"text", "json", "csv"});
    const std::size_t n_max = g.max_len > 0 ? g.max_len : 20;
    ComplexityTable table;
    if (sequence.rfind("power:", 0) == 0) {
        // a -> a^k b, b -> b: exact counts.
        const unsigned k = static_cast<unsigned>(std::stoul(sequence.substr(6)));
        table.p.assign(n_max + 1, 1);
        for (std::size_t n = 1; n <= n_max; ++n) table.p[n] = power_substitution_complexity(k, n);
        table.stable_up_to = n_max;
        table.sufficient = true;
    } else {
        const auto seq = load_sequence(load_system(g), sequence);
        const auto values = seq.prefix(prefix_len);
        table = factor_complexity(LetterWord(values.begin(), values.end()), n_max);
    }
    const auto diag = growth_diagnostic(table.p, std::min<std::size_t>(10, n_max), n_max);
    if (g.format == "csv") {
        out << complexity_csv(table);
    } else if (g.format == "json") {
        out << json{{"p", std::vector<std::uint64_t>(table.p.begin() + 1, table.p.end())},
                    {"stable_up_to", table.stable_up_to},
                    {"sufficient", table.sufficient},
                    {"growth", growth_name(diag.kind)},
                    {"max_ratio", diag.max_ratio}}
                   .dump(2)
            << "\n";
    } else {
        for (std::size_t n = 1; n <= n_max; ++n) out << n << " " << table.p[n] << "\n";
        out << "growth evidence: " << growth_name(diag.kind) << " (max p(n)/n = " << diag.max_ratio << ")\n";
        if (!table.sufficient) out << "prefix insufficient: counts stable only up to n = " << table.stable_up_to << "\n";
    }
    return table.sufficient ? 0 : kExitMismatch;
}

int cmd_kernel(const Globals& g, const std::string& sequence, std::size_t window, std::ostream& out) {
    require_format(g, {"text", "json"});
    const auto b = load_system(g);
    const auto seq = load_sequence(b, sequence);
    const std::size_t len = g.max_len > 0 ? g.max_len : 4;
    const auto table = kernel(seq, len, window);
    const auto fin = kernel_finiteness(seq, window);
    const Dfao back = kernel_to_dfao(table, right_quotients(b.language));
    std::size_t mismatches = 0;
    constexpr std::uint64_t kCheck = 500;
    for (std::uint64_t n = 0; n < kCheck; ++n)
        if (back.evaluate(rep(b.system, n)) != seq.at(n)) ++mismatches;
    if (g.format == "json") {
        json j = to_json(table);
        j["signature_classes"] = fin.classes;
        j["rebuilt_states"] = back.size();
        j["mismatches"] = mismatches;
        out << j.dump(2) << "\n";
    } else {
        out << "kernel classes (exact): " << fin.classes << "\n";
        out << "value classes: " << fin.value_classes << "\n";
        out << "table classes up to length " << len << ": " << table.classes.size() << "\n";
        out << "rebuilt machine: " << back.size() << " states, " << mismatches << " mismatches on [0," << kCheck << ")\n";
    }
    return mismatches == 0 ? 0 : kExitMismatch;
}

int cmd_kernel2d(const Globals& g, const std::string& machine_spec, std::size_t window, std::size_t grid,
                 std::ostream& out) {
    require_format(g, {"text", "json", "csv"});
    const auto b = load_system(g);
    const Dfao machine = load_machine2d(b, machine_spec);
    const std::size_t len = g.max_len > 0 ? g.max_len : 5;
    const auto table = kernel2d(machine, b.system, b.language, len, window);
    const Dfao back = kernel_to_dfao(table, right_quotients(b.language));
    const Grid2D original = grid_from_machine(machine, b.system, grid, grid);
    const Grid2D rebuilt = grid_from_machine(back, b.system, grid, grid);
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < original.values.size(); ++i) mismatches += original.values[i] != rebuilt.values[i];
    if (g.format == "csv") {
        out << grid_csv(rebuilt);
    } else if (g.format == "json") {
        json j = to_json(table);
        j["rebuilt_states"] = back.size();
        j["grid"] = grid;
        j["mismatches"] = mismatches;
        out << j.dump(2) << "\n";
    } else {
        out << "kernel classes up to length " << len << ": " << table.classes.size() << " (" << table.value_classes
            << " value classes)\n";
        out << "rebuilt machine: " << back.size() << " states\n";
        out << "grid [0," << grid << ")^2: " << mismatches << " mismatches\n";
        out << grid_text(rebuilt);
    }
    return mismatches == 0 ? 0 : kExitMismatch;
}

int cmd_reproduce(const Globals& g, std::vector<std::string> names, bool parallel, bool timing, std::ostream& out) {
    require_format(g, {"text", "json", "csv"});
    if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end()) {
        names.clear();
        for (const auto& e : experiment_registry()) names.push_back(e.name);
    }
    const auto reports = run_experiments(names, parallel);
    bool ok = true;
    json all = json::array();
    for (const auto& r : reports) {
        ok = ok && (r.pass || r.finding);
        if (g.format == "text") out << render_report(r) << "\n";
        else if (g.format == "csv") out << report_table_csv(r);
        else all.push_back(report_to_json(r, timing));
        if (timing) std::cerr << r.name << ": " << r.seconds << " s\n";
    }
    if (g.format == "json") out << all.dump(2) << "\n";
    return ok ? 0 : kExitMismatch;
}

int cmd_list_builtins(const Globals& g, std::ostream& out) {
    require_format(g, {"text", "json"});
    if (g.format == "json") {
        json systems = json::array(), experiments = json::array();
        for (const auto& b : list_builtins()) systems.push_back({{"name", b.name}, {"description", b.description}});
        for (const auto& e : experiment_registry())
            experiments.push_back({{"name", e.name}, {"title", e.title}, {"finding", e.finding}});
        out << json{{"systems", systems},
                    {"betas", {"golden", "quartic", "base-<k>"}},
                    {"sequences", {"char:<d>", "thue-morse", "power:<k>"}},
                    {"machines2d", {"xor:<d>", "eq:<d>"}},
                    {"experiments", experiments}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "systems:\n";
    for (const auto& b : list_builtins()) out << "  " << b.name << "  " << b.description << "\n";
    out << "betas: golden, quartic, base-<k>\n";
    out << "sequences: char:<d>, thue-morse, power:<k> (complexity only), DFAO JSON file\n";
    out << "2D machines: xor:<d>, eq:<d>, DFAO JSON file\n";
    out << "experiments:\n";
    for (const auto& e : experiment_registry()) out << "  " << e.name << (e.finding ? " (finding)" : "") << "  " << e.title << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Positional numeration systems, beta-expansions and automatic sequences"};
    app.require_subcommand(1);
    // Global options may also follow the subcommand.
    app.fallthrough();
    Globals g;
    app.add_option("--system", g.system, "Builtin system name or JSON file")->capture_default_str();
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}))
        ->capture_default_str();
    app.add_option("--digits", g.digits, "Digits or prefix length to print")->capture_default_str();
    app.add_option("--max-len", g.max_len, "Length bound (enumerate, complexity n_max, kernel suffix length)");
    app.add_option("--out", g.out, "Write output to FILE");

    std::vector<std::string> numbers, words, names;
    auto* rep_cmd = app.add_subcommand("rep", "Greedy representations");
    rep_cmd->add_option("n", numbers, "Non-negative integers")->required();
    auto* val_cmd = app.add_subcommand("val", "Values of digit words");
    val_cmd->add_option("word", words, "Digit words (\"102\", \"1.10.3\", \"eps\")")->required();
    std::size_t count = 20;
    auto* enum_cmd = app.add_subcommand("enumerate", "Representations in genealogical order");
    enum_cmd->add_option("--count", count, "Number of integers")->capture_default_str();

    BetaArgs beta_args;
    auto* beta_cmd = app.add_subcommand("beta", "Beta-expansions");
    beta_cmd->add_option("--builtin", beta_args.builtin, "golden, quartic, base-<k>");
    beta_cmd->add_option("--poly", beta_args.poly, "Integer coefficients, constant term first");
    beta_cmd->add_option("--x", beta_args.x, "Rational in [0,1]")->capture_default_str();
    beta_cmd->add_option("--max-steps", beta_args.max_steps, "Cycle search bound")->capture_default_str();
    beta_cmd->add_flag("--quasi-greedy", beta_args.quasi, "Print d_beta^*(1)");

    AutomatonArgs aut_args;
    auto* aut_cmd = app.add_subcommand("automaton", "Export the numeration automaton or A_beta");
    aut_cmd->add_option("--beta", aut_args.beta, "Export A_beta for a builtin beta instead");
    aut_cmd->add_flag("--check", aut_args.check, "Report Bertrand property and primitivity");

    std::string machine_spec;
    auto* sub_cmd = app.add_subcommand("substitution", "Substitution of a product automaton");
    sub_cmd->add_option("--machine", machine_spec, "Sequence (char:<d>, thue-morse, DFAO file); default: the automaton itself");

    std::string sequence = "char:1";
    std::size_t prefix_len = 20000;
    auto* cx_cmd = app.add_subcommand("complexity", "Factor complexity table");
    cx_cmd->add_option("--sequence", sequence, "char:<d>, thue-morse, power:<k>, DFAO file")->capture_default_str();
    cx_cmd->add_option("--prefix", prefix_len, "Prefix length")->capture_default_str();

    std::size_t window = 16;
    auto* k_cmd = app.add_subcommand("kernel", "U-kernel of a 1D sequence");
    k_cmd->add_option("--sequence", sequence, "char:<d>, thue-morse, DFAO file")->capture_default_str();
    k_cmd->add_option("--window", window, "Values per kernel entry")->capture_default_str();

    std::string machine2d = "xor:1";
    std::size_t window2d = 4, grid = 30;
    auto* k2_cmd = app.add_subcommand("kernel2d", "2D kernel and the rebuilt machine");
    k2_cmd->add_option("--machine", machine2d, "xor:<d>, eq:<d>, DFAO file")->capture_default_str();
    k2_cmd->add_option("--window", window2d, "Window side")->capture_default_str();
    k2_cmd->add_option("--grid", grid, "Grid side for the round trip")->capture_default_str();

    bool parallel = false, timing = false;
    auto* rp_cmd = app.add_subcommand("reproduce", "Regenerate published values and compare");
    rp_cmd->add_option("name", names, "Experiment names (default: all)");
    rp_cmd->add_flag("--parallel", parallel, "Run experiments concurrently");
    rp_cmd->add_flag("--timing", timing, "Report runtimes (stderr; JSON field)");

    auto* list_cmd = app.add_subcommand("list-builtins", "Builtin systems, betas and experiments");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    std::ostringstream buffer;
    int code = 0;
    try {
        if (rep_cmd->parsed()) code = cmd_rep(g, numbers, buffer);
        else if (val_cmd->parsed()) code = cmd_val(g, words, buffer);
        else if (enum_cmd->parsed()) code = cmd_enumerate(g, count, buffer);
        else if (beta_cmd->parsed()) code = cmd_beta(g, beta_args, buffer);
        else if (aut_cmd->parsed()) code = cmd_automaton(g, aut_args, buffer);
        else if (sub_cmd->parsed()) code = cmd_substitution(g, machine_spec, buffer);
        else if (cx_cmd->parsed()) code = cmd_complexity(g, sequence, prefix_len, buffer);
        else if (k_cmd->parsed()) code = cmd_kernel(g, sequence, window, buffer);
        else if (k2_cmd->parsed()) code = cmd_kernel2d(g, machine2d, window2d, grid, buffer);
        else if (rp_cmd->parsed()) code = cmd_reproduce(g, names, parallel, timing, buffer);
        else if (list_cmd->parsed()) code = cmd_list_builtins(g, buffer);
    } catch (const IncompleteKernel& e) {
        std::cout << buffer.str();
        std::cerr << e.what() << "\n";
        return kExitMismatch;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "InvalidInput: " << e.what() << "\n";
        return kExitUsage;
    }

    if (g.out.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream f(g.out);
        if (!f) {
            std::cerr << "cannot write " << g.out << "\n";
            return kExitUsage;
        }
        f << buffer.str();
    }
    return code;
}
