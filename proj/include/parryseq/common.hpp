#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parryseq {

using BigInt = mpz_class;
using Rational = mpq_class;

using Digit = std::uint32_t;

/// A finite word over an integer alphabet, most significant digit first.
using DigitWord = std::vector<Digit>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PARRYSEQ_ERROR(Name)                        \
    class Name : public Error {                     \
    public:                                         \
        explicit Name(const std::string& what)      \
            : Error(#Name ": " + what) {}           \
    }

PARRYSEQ_ERROR(InvalidSystem);
PARRYSEQ_ERROR(UnboundedRatio);
PARRYSEQ_ERROR(InvalidInput);
PARRYSEQ_ERROR(FieldMismatch);
PARRYSEQ_ERROR(OutOfRange);
PARRYSEQ_ERROR(NotParry);
PARRYSEQ_ERROR(AlphabetMismatch);
PARRYSEQ_ERROR(NotProlongable);
PARRYSEQ_ERROR(NotUniform);
PARRYSEQ_ERROR(IncompleteKernel);

#undef PARRYSEQ_ERROR

/// Renders digits without separators when every digit is below 10, otherwise
/// as a dot-separated list ("1.12.3"). The empty word renders as `eps`.
std::string word_to_string(const DigitWord& w, std::string_view empty = "eps");

/// Parses the output of word_to_string. Accepts "eps" and "" for the empty word.
DigitWord parse_word(std::string_view text);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

/// Parses "p", "-p", "p/q" or a decimal such as "-2.20" into a canonical rational.
Rational parse_rational(std::string_view text);

}  // namespace parryseq
