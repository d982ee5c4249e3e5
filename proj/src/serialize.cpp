#include "parryseq/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace parryseq {

using nlohmann::json;

json to_json(const BigInt& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw InvalidInput("expected an integer, got " + j.dump());
}

json to_json(const DigitWord& w) { return json(std::vector<Digit>(w.begin(), w.end())); }

DigitWord word_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("digit word must be an array");
    DigitWord w;
    for (const auto& d : j) {
        if (!d.is_number_unsigned()) throw InvalidInput("digits must be non-negative integers");
        w.push_back(d.get<Digit>());
    }
    return w;
}

json to_json(const NumerationSystem& system) {
    json coeffs = json::array();
    json initial = json::array();
    for (const auto& c : system.coefficients()) coeffs.push_back(to_json(c));
    for (const auto& t : system.initial_terms()) initial.push_back(to_json(t));
    return {{"coefficients", coeffs},
            {"affine_constant", to_json(system.affine_constant())},
            {"initial_terms", initial},
            {"digit_bound", system.digit_bound()}};
}

NumerationSystem system_from_json(const json& j) {
    if (!j.is_object() || !j.contains("initial_terms")) throw InvalidInput("system JSON needs initial_terms");
    std::vector<BigInt> coeffs, initial;
    if (j.contains("coefficients"))
        for (const auto& c : j.at("coefficients")) coeffs.push_back(bigint_from_json(c));
    for (const auto& t : j.at("initial_terms")) initial.push_back(bigint_from_json(t));
    BigInt affine = j.contains("affine_constant") ? bigint_from_json(j.at("affine_constant")) : BigInt(0);
    NumerationSystem sys = coeffs.empty() && affine == 0 ? NumerationSystem::from_terms(initial)
                                                          : NumerationSystem::from_recurrence(coeffs, initial, affine);
    if (j.contains("digit_bound") && !j.at("digit_bound").is_null()) {
        const auto stated = bigint_from_json(j.at("digit_bound"));
        if (stated != sys.digit_bound())
            throw InvalidSystem("digit_bound " + to_string(stated) + " disagrees with computed " +
                                std::to_string(sys.digit_bound()));
    }
    return sys;
}

json polynomial_to_json(const IntPoly& p) {
    json out = json::array();
    for (const auto& c : p) out.push_back(to_json(c));
    return out;
}

json interval_to_json(const RationalInterval& iv) { return json::array({to_string(iv.lo), to_string(iv.hi)}); }

namespace {

json dfa_body(const Dfa& dfa) {
    json transitions = json::array();
    json finals = json::array();
    json names = json::array();
    bool named = false;
    for (StateId q = 0; q < static_cast<StateId>(dfa.size()); ++q) {
        json row = json::array();
        for (Symbol a = 0; a < dfa.alphabet_size(); ++a) {
            StateId r = dfa.next(q, a);
            row.push_back(r == kNoState ? json(nullptr) : json(r));
        }
        transitions.push_back(row);
        if (dfa.is_final(q)) finals.push_back(q);
        names.push_back(dfa.name(q));
        named = named || !dfa.name(q).empty();
    }
    json j{{"schema_version", kAutomatonSchemaVersion},
           {"states", dfa.size()},
           {"alphabet_size", dfa.alphabet_size()},
           {"initial", dfa.initial()},
           {"final", finals},
           {"transitions", transitions}};
    if (dfa.pair_base() != 0) j["pair_base"] = dfa.pair_base();
    if (named) j["names"] = names;
    return j;
}

void check_schema(const json& j) {
    if (!j.is_object() || j.value("schema_version", 0) != kAutomatonSchemaVersion)
        throw InvalidInput("automaton JSON needs schema_version " + std::to_string(kAutomatonSchemaVersion));
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string symbol_label(Symbol a, std::size_t pair_base) {
    if (pair_base == 0) return std::to_string(a);
    return "(" + std::to_string(a / pair_base) + "," + std::to_string(a % pair_base) + ")";
}

std::string dot_graph(const Dfa& dfa, const std::string& graph_name, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n  rankdir=LR;\n  __start [shape=point];\n";
    for (StateId q = 0; q < static_cast<StateId>(dfa.size()); ++q)
        out << "  " << q << " [shape=" << (dfa.is_final(q) ? "doublecircle" : "circle") << ", label=\""
            << dot_escape(labels[static_cast<std::size_t>(q)]) << "\"];\n";
    out << "  __start -> " << dfa.initial() << ";\n";
    for (StateId q = 0; q < static_cast<StateId>(dfa.size()); ++q) {
        // Parallel edges are merged into one comma-separated label.
        std::map<StateId, std::vector<std::string>> edges;
        for (Symbol a = 0; a < dfa.alphabet_size(); ++a)
            if (StateId r = dfa.next(q, a); r != kNoState) edges[r].push_back(symbol_label(a, dfa.pair_base()));
        for (const auto& [r, syms] : edges) {
            std::string label;
            for (const auto& s : syms) label += (label.empty() ? "" : ",") + s;
            out << "  " << q << " -> " << r << " [label=\"" << label << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string state_label(const Dfa& dfa, StateId q) {
    return dfa.name(q).empty() ? "q" + std::to_string(q) : dfa.name(q);
}

}  // namespace

json to_json(const Dfa& dfa) {
    json j = dfa_body(dfa);
    j["kind"] = "dfa";
    return j;
}

json to_json(const Dfao& machine) {
    json j = dfa_body(machine.dfa());
    j["kind"] = "dfao";
    j["outputs"] = machine.outputs();
    j["direction"] = machine.direction() == ReadDirection::msd_first ? "msd_first" : "lsd_first";
    if (!machine.output_names().empty()) j["output_names"] = machine.output_names();
    return j;
}

Dfa dfa_from_json(const json& j) {
    check_schema(j);
    try {
        const auto states = j.at("states").get<std::size_t>();
        const auto alphabet = j.at("alphabet_size").get<std::size_t>();
        Dfa d(states, alphabet, j.at("initial").get<StateId>());
        if (j.contains("pair_base")) d.set_pair_base(j.at("pair_base").get<std::size_t>());
        const auto& rows = j.at("transitions");
        if (rows.size() != states) throw InvalidInput("transition table has the wrong number of rows");
        for (StateId q = 0; q < static_cast<StateId>(states); ++q) {
            const auto& row = rows[static_cast<std::size_t>(q)];
            if (row.size() != alphabet) throw InvalidInput("transition row has the wrong width");
            for (Symbol a = 0; a < alphabet; ++a)
                if (!row[a].is_null()) {
                    auto r = row[a].get<StateId>();
                    if (r < 0 || r >= static_cast<StateId>(states)) throw InvalidInput("transition target out of range");
                    d.set(q, a, r);
                }
        }
        for (const auto& f : j.at("final")) d.set_final(f.get<StateId>());
        if (j.contains("names"))
            for (StateId q = 0; q < static_cast<StateId>(states); ++q)
                d.set_name(q, j.at("names")[static_cast<std::size_t>(q)].get<std::string>());
        return d;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed automaton JSON: ") + e.what());
    }
}

Dfao dfao_from_json(const json& j) {
    Dfa d = dfa_from_json(j);
    try {
        auto outputs = j.at("outputs").get<std::vector<Output>>();
        if (outputs.size() != d.size()) throw InvalidInput("outputs has the wrong length");
        auto dir = j.value("direction", std::string("msd_first")) == "lsd_first" ? ReadDirection::lsd_first
                                                                                 : ReadDirection::msd_first;
        Dfao m(std::move(d), std::move(outputs), dir);
        if (j.contains("output_names")) m.set_output_names(j.at("output_names").get<std::vector<std::string>>());
        return m;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed automaton JSON: ") + e.what());
    }
}

std::string to_dot(const Dfa& dfa, const std::string& graph_name) {
    std::vector<std::string> labels;
    for (StateId q = 0; q < static_cast<StateId>(dfa.size()); ++q) labels.push_back(state_label(dfa, q));
    return dot_graph(dfa, graph_name, labels);
}

std::string to_dot(const Dfao& machine, const std::string& graph_name) {
    std::vector<std::string> labels;
    for (StateId q = 0; q < static_cast<StateId>(machine.size()); ++q)
        labels.push_back(state_label(machine.dfa(), q) + "/" + machine.output_name(machine.output(q)));
    return dot_graph(machine.dfa(), graph_name, labels);
}

json to_json(const KernelTable& table) {
    json entries = json::object();
    for (const auto& [key, cls] : table.index) {
        std::string name = word_to_string(key.s);
        if (table.dimension == 2) name += "|" + word_to_string(key.t);
        entries[name] = cls;
    }
    json classes = json::array();
    for (const auto& c : table.classes) {
        json rep{{"s", to_json(c.representative.s)}};
        if (table.dimension == 2) rep["t"] = to_json(c.representative.t);
        classes.push_back({{"representative", rep},
                           {"signature", c.signature},
                           {"window", c.window},
                           {"rows", c.rows},
                           {"cols", c.cols},
                           {"value_class", c.value_class}});
    }
    return {{"dimension", table.dimension},
            {"suffix_len_max", table.suffix_len_max},
            {"window", table.window},
            {"value_classes", table.value_classes},
            {"classes", classes},
            {"entries", entries}};
}

std::string complexity_csv(const ComplexityTable& table) {
    std::ostringstream out;
    out << "n,p(n),p(n)/n\n" << std::fixed << std::setprecision(6);
    for (std::size_t n = 1; n < table.p.size(); ++n)
        out << n << "," << table.p[n] << "," << static_cast<double>(table.p[n]) / static_cast<double>(n) << "\n";
    return out.str();
}

std::string prefix_csv(const std::vector<Output>& values) {
    std::ostringstream out;
    out << "n,x(n)\n";
    for (std::size_t n = 0; n < values.size(); ++n) out << n << "," << values[n] << "\n";
    return out.str();
}

std::string grid_csv(const Grid2D& grid) {
    std::ostringstream out;
    for (std::size_t m = 0; m < grid.rows; ++m) {
        for (std::size_t n = 0; n < grid.cols; ++n) out << (n ? "," : "") << grid.at(m, n);
        out << "\n";
    }
    return out.str();
}

std::string grid_text(const Grid2D& grid) {
    const bool wide = std::any_of(grid.values.begin(), grid.values.end(), [](Output o) { return o >= 10; });
    std::ostringstream out;
    for (std::size_t m = 0; m < grid.rows; ++m) {
        for (std::size_t n = 0; n < grid.cols; ++n) out << (wide && n ? " " : "") << grid.at(m, n);
        out << "\n";
    }
    return out.str();
}

}  // namespace parryseq
