#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parryseq/common.hpp"

namespace parryseq {

/// Integer polynomial, constant term first. The zero polynomial is empty.
using IntPoly = std::vector<BigInt>;
/// Rational polynomial, constant term first.
using RatPoly = std::vector<Rational>;

namespace poly {

int degree(const IntPoly& p);
int degree(const RatPoly& p);
void trim(IntPoly& p);
void trim(RatPoly& p);

RatPoly to_rational(const IntPoly& p);
/// Positive multiple of p with coprime integer coefficients.
IntPoly primitive(const RatPoly& p);
IntPoly primitive(const IntPoly& p);

RatPoly derivative(const RatPoly& p);
/// Quotient and remainder of a by b (b nonzero).
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// Monic gcd; empty when both are zero.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
/// p / gcd(p, p'), as a primitive integer polynomial.
IntPoly squarefree_part(const IntPoly& p);

Rational eval(const IntPoly& p, const Rational& x);
int sign_at(const IntPoly& p, const Rational& x);

/// Sturm chain of a squarefree polynomial, each member primitive.
std::vector<IntPoly> sturm_chain(const IntPoly& p);

bool equal_up_to_scale(const IntPoly& a, const IntPoly& b);

std::string to_string(const IntPoly& p);

}  // namespace poly

struct RationalInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool within(const RationalInterval& outer) const { return outer.lo <= lo && hi <= outer.hi; }
};

/// A real root of an integer polynomial, identified by an isolating interval.
///
/// The interval only ever shrinks. Copies share the refinement cache, which is
/// guarded by a mutex so a root can be refined from several threads.
class AlgebraicReal {
public:
    /// The `index`-th real root in increasing order.
    static AlgebraicReal root_of(const IntPoly& p, std::size_t index);
    /// The largest real root.
    static AlgebraicReal largest_root(const IntPoly& p);
    /// The unique root of p in the closed interval [lo, hi].
    static AlgebraicReal root_in(const IntPoly& p, const Rational& lo, const Rational& hi);

    /// Squarefree, primitive, positive leading coefficient.
    const IntPoly& min_poly() const;
    int degree() const;

    RationalInterval interval() const;
    /// Refines until the isolating interval is no wider than `width`.
    RationalInterval refine_to(const Rational& width) const;
    /// Refines until the width is at most 2^-bits.
    void refine_bits(unsigned long bits) const;

    std::optional<Rational> exact_value() const;

    BigInt floor() const;
    BigInt ceil() const;
    double approx() const;
    /// Rounded to `places` decimals (half away from zero), certified.
    std::string to_decimal(int places) const;

    bool same_root(const AlgebraicReal& other) const;

    /// Dyadic view of the current interval: [lo, hi] / 2^exp.
    struct Dyadic {
        BigInt lo;
        BigInt hi;
        unsigned long exp = 0;
    };
    Dyadic dyadic() const;

private:
    struct State;
    explicit AlgebraicReal(std::shared_ptr<State> state) : state_(std::move(state)) {}
    friend std::vector<AlgebraicReal> isolate_real_roots(const IntPoly& p);

    std::shared_ptr<State> state_;
};

/// All distinct real roots of p, in increasing order. Throws InvalidInput for
/// the zero polynomial.
std::vector<AlgebraicReal> isolate_real_roots(const IntPoly& p);

/// An element of Q(theta), written q^{-1} (p_0 + p_1 theta + ... + p_{d-1} theta^{d-1})
/// with integers p_i and q > 0 in lowest terms, d the degree of theta's polynomial.
///
/// Values are immutable; arithmetic is exact and reduces modulo the generator's
/// polynomial. Elements from different generators only mix when the
/// generators are the same root.
class FieldElement {
public:
    FieldElement(AlgebraicReal generator, const RatPoly& coefficients);
    FieldElement(AlgebraicReal generator, const Rational& value);

    static FieldElement generator_of(const AlgebraicReal& generator);

    const AlgebraicReal& generator() const { return generator_; }
    const std::vector<BigInt>& numerators() const { return num_; }
    const BigInt& denominator() const { return den_; }
    RatPoly coefficients() const;

    bool is_zero() const;
    bool is_rational() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    FieldElement& operator+=(const Rational& r);
    FieldElement& operator-=(const Rational& r);
    FieldElement& operator*=(const Rational& r);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend FieldElement operator+(FieldElement a, const Rational& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const Rational& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const Rational& b) { return a *= b; }

    FieldElement inverse() const;
    /// Integer power; negative exponents invert.
    FieldElement pow(long exponent) const;
    /// Multiplication by the generator (the hot path of beta-expansions).
    FieldElement times_generator() const;

    /// Exact equality of canonical coefficients (same generator required).
    bool operator==(const FieldElement& o) const;
    std::size_t hash() const;

    /// Interval containing the value, computed at the generator's current
    /// precision after refining it to at least `bits`.
    RationalInterval enclose(unsigned long bits = 64) const;
    double approx() const;
    /// Rounded to `places` decimals (half away from zero), certified.
    std::string to_decimal(int places) const;

private:
    FieldElement(AlgebraicReal generator, std::vector<BigInt> num, BigInt den);
    void normalize();
    void require_same_field(const FieldElement& o) const;
    static void reduce(std::vector<BigInt>& num, BigInt& den, const IntPoly& modulus);

    AlgebraicReal generator_;
    std::vector<BigInt> num_;
    BigInt den_ = 1;
};

/// -1, 0 or +1. Zero is certified by a gcd with the generator's polynomial,
/// never by an interval alone.
int sign(const FieldElement& x);

int compare(const FieldElement& a, const Rational& b);
int compare(const FieldElement& a, const FieldElement& b);

/// The element with the same rational coordinates, read in Q(target).
/// Throws FieldMismatch unless target is a root of the same polynomial.
FieldElement evaluate_at_conjugate(const FieldElement& x, const AlgebraicReal& target);

struct FieldElementHash {
    std::size_t operator()(const FieldElement& x) const { return x.hash(); }
};

}  // namespace parryseq
