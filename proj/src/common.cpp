#include "parryseq/common.hpp"

#include <charconv>

namespace parryseq {

std::string word_to_string(const DigitWord& w, std::string_view empty) {
    if (w.empty()) return std::string(empty);
    bool small = true;
    for (Digit d : w) small = small && d < 10;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!small && i > 0) out += '.';
        out += std::to_string(w[i]);
    }
    return out;
}

DigitWord parse_word(std::string_view text) {
    DigitWord w;
    if (text.empty() || text == "eps") return w;
    const bool dotted = text.find('.') != std::string_view::npos;
    if (!dotted) {
        for (char c : text) {
            if (c < '0' || c > '9') throw InvalidInput("bad digit '" + std::string(1, c) + "' in word");
            w.push_back(static_cast<Digit>(c - '0'));
        }
        return w;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('.', pos);
        if (end == std::string_view::npos) end = text.size();
        Digit d = 0;
        auto [p, ec] = std::from_chars(text.data() + pos, text.data() + end, d);
        if (ec != std::errc() || p != text.data() + end) throw InvalidInput("bad word '" + std::string(text) + "'");
        w.push_back(d);
        pos = end + 1;
    }
    return w;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        // Decimal notation: digits after the point become the denominator power.
        std::string digits(text.substr(0, dot));
        const std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string_view::npos)
            throw InvalidInput("not a rational: '" + std::string(text) + "'");
        digits += frac;
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        return parse_rational(digits) / Rational(den);
    }
    try {
        Rational r(std::string(text), 10);
        if (r.get_den() == 0) throw InvalidInput("zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InvalidInput("not a rational: '" + std::string(text) + "'");
    }
}

}  // namespace parryseq
