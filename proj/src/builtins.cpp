#include "parryseq/builtins.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "parryseq/beta.hpp"
#include "parryseq/serialize.hpp"

namespace parryseq {

namespace {

const IntPoly kGolden{-1, -1, 1};
const IntPoly kQuartic{-3, 0, -2, -3, 1};

std::optional<unsigned> base_of(const std::string& name) {
    if (name.rfind("base-", 0) != 0) return std::nullopt;
    unsigned k = 0;
    const char* first = name.data() + 5;
    const char* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec != std::errc() || ptr != last || k < 2) throw InvalidInput("base-<k> needs an integer k >= 2: " + name);
    return k;
}

Dfa parry_language(const IntPoly& poly) {
    return canonical_parry_automaton(quasi_greedy(AlgebraicReal::largest_root(poly)));
}

}  // namespace

std::vector<BuiltinInfo> list_builtins() {
    return {
        {"fibonacci", "U_n = U_{n-1} + U_{n-2}, U = 1, 2, 3, 5, ...; beta = golden mean"},
        {"modified-fibonacci", "U_n = U_{n-1} + U_{n-2}, U = 1, 3, 4, 7, ...; not a Bertrand system"},
        {"base-<k>", "U_n = k^n, e.g. base-2, base-10"},
        {"affine-3", "U_n = 3 U_{n-1} + 1, U = 1, 4, 13, 40, ...; also U_n = 4 U_{n-1} - 3 U_{n-2}"},
        {"quartic", "U_n = 3 U_{n-1} + 2 U_{n-2} + 3 U_{n-4}, U = 1, 4, 15, 54, ...; d_beta(1) = 3203"},
    };
}

SystemBundle builtin_system(const std::string& name) {
    if (name == "fibonacci")
        return {name, NumerationSystem::from_recurrence({1, 1}, {1, 2}), parry_language(kGolden), kGolden};
    if (name == "modified-fibonacci") {
        auto sys = NumerationSystem::from_recurrence({1, 1}, {1, 3, 4});
        return {name, sys, infer_numeration_automaton(sys), std::nullopt};
    }
    if (name == "affine-3")
        return {name, NumerationSystem::from_recurrence({3}, {1}, 1), affine3_automaton(), std::nullopt};
    if (name == "quartic")
        return {name, NumerationSystem::from_recurrence({3, 2, 0, 3}, {1, 4, 15, 54}), parry_language(kQuartic), kQuartic};
    if (auto k = base_of(name)) {
        IntPoly p{-BigInt(*k), 1};
        return {name, NumerationSystem::from_recurrence({BigInt(*k)}, {1}), full_language(*k), p};
    }
    throw InvalidInput("unknown system '" + name + "' (see list-builtins)");
}

namespace {

Dfa cached_inference(const NumerationSystem& sys, const std::string& key, const std::optional<std::string>& cache_dir) {
    if (!cache_dir) return infer_numeration_automaton(sys);
    namespace fs = std::filesystem;
    const nlohmann::json sys_json = to_json(sys);
    const fs::path file = fs::path(*cache_dir) / ("system-" + std::to_string(std::hash<std::string>{}(key + sys_json.dump())) + ".json");
    if (fs::exists(file)) {
        try {
            std::ifstream in(file);
            nlohmann::json cached;
            in >> cached;
            if (cached.at("system") == sys_json) return dfa_from_json(cached.at("language"));
        } catch (const std::exception&) {
            // Unreadable cache entries are recomputed and overwritten.
        }
    }
    Dfa language = infer_numeration_automaton(sys);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : sys.terms(sys.materialized())) terms.push_back(to_json(t));
    std::error_code ec;
    fs::create_directories(*cache_dir, ec);
    std::ofstream out(file);
    if (out) out << nlohmann::json{{"system", sys_json}, {"terms", terms}, {"language", to_json(language)}}.dump() << "\n";
    return language;
}

}  // namespace

SystemBundle resolve_system(const std::string& spec, const std::optional<std::string>& cache_dir) {
    if (spec == "modified-fibonacci") {
        auto sys = NumerationSystem::from_recurrence({1, 1}, {1, 3, 4});
        return {spec, sys, cached_inference(sys, spec, cache_dir), std::nullopt};
    }
    if (!std::filesystem::exists(spec)) return builtin_system(spec);
    std::ifstream in(spec);
    if (!in) throw InvalidInput("cannot read system file " + spec);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("malformed system file " + spec + ": " + e.what());
    }
    auto sys = system_from_json(j);
    return {spec, sys, cached_inference(sys, "file", cache_dir), std::nullopt};
}

IntPoly builtin_beta_polynomial(const std::string& name) {
    if (name == "golden" || name == "fibonacci") return kGolden;
    if (name == "quartic") return kQuartic;
    if (auto k = base_of(name)) return IntPoly{-BigInt(*k), 1};
    throw InvalidInput("unknown beta '" + name + "' (golden, quartic, base-<k>)");
}

IntPoly parse_polynomial(const std::string& text) {
    IntPoly p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            p.emplace_back(item);
        } catch (const std::invalid_argument&) {
            throw InvalidInput("bad polynomial coefficient '" + item + "'");
        }
    }
    if (p.empty()) throw InvalidInput("empty polynomial");
    return p;
}

}  // namespace parryseq
