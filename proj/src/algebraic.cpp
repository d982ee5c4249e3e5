#include "parryseq/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

namespace parryseq {

// ---------------------------------------------------------------------------
// Polynomials

namespace poly {

int degree(const IntPoly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<int>(i);
    return -1;
}

int degree(const RatPoly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<int>(i);
    return -1;
}

void trim(IntPoly& p) { p.resize(static_cast<std::size_t>(degree(p) + 1)); }
void trim(RatPoly& p) { p.resize(static_cast<std::size_t>(degree(p) + 1)); }

RatPoly to_rational(const IntPoly& p) {
    RatPoly r;
    r.reserve(p.size());
    for (const auto& c : p) r.emplace_back(c);
    trim(r);
    return r;
}

IntPoly primitive(const RatPoly& p) {
    RatPoly q = p;
    trim(q);
    if (q.empty()) return {};
    BigInt lcm_den = 1;
    for (const auto& c : q) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    IntPoly out;
    out.reserve(q.size());
    for (const auto& c : q) out.push_back(BigInt(c.get_num() * (lcm_den / c.get_den())));
    return primitive(out);
}

IntPoly primitive(const IntPoly& p) {
    IntPoly q = p;
    trim(q);
    if (q.empty()) return q;
    BigInt g = 0;
    for (const auto& c : q) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (q.back() < 0) g = -g;
    for (auto& c : q) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return q;
}

RatPoly derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
    trim(d);
    return d;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    RatPoly r = a;
    trim(r);
    RatPoly d = b;
    trim(d);
    if (d.empty()) throw InvalidInput("polynomial division by zero");
    const int db = degree(d);
    RatPoly q;
    if (degree(r) >= db) q.assign(static_cast<std::size_t>(degree(r) - db + 1), Rational(0));
    while (degree(r) >= db) {
        const int dr = degree(r);
        Rational c = r[static_cast<std::size_t>(dr)] / d[static_cast<std::size_t>(db)];
        const auto shift = static_cast<std::size_t>(dr - db);
        q[shift] = c;
        for (int i = 0; i <= db; ++i) r[shift + static_cast<std::size_t>(i)] -= c * d[static_cast<std::size_t>(i)];
        r[static_cast<std::size_t>(dr)] = 0;
        trim(r);
    }
    trim(q);
    return {q, r};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    trim(x);
    trim(y);
    while (!y.empty()) {
        RatPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return x;
    Rational lead = x.back();
    for (auto& c : x) c /= lead;
    return x;
}

IntPoly squarefree_part(const IntPoly& p) {
    RatPoly r = to_rational(p);
    if (degree(r) <= 0) return primitive(r);
    RatPoly g = gcd(r, derivative(r));
    return primitive(divmod(r, g).first);
}

Rational eval(const IntPoly& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

int sign_at(const IntPoly& p, const Rational& x) { return sgn(eval(p, x)); }

namespace {

// Like primitive() but keeps the sign, which Sturm sequences depend on.
IntPoly positive_rescale(const RatPoly& p) {
    IntPoly q = primitive(p);
    if (!q.empty() && (q.back() > 0) != (p[static_cast<std::size_t>(degree(p))] > 0))
        for (auto& c : q) c = -c;
    return q;
}

}  // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    chain.push_back(positive_rescale(to_rational(p)));
    chain.push_back(positive_rescale(derivative(to_rational(p))));
    while (degree(chain.back()) > 0) {
        RatPoly r = divmod(to_rational(chain[chain.size() - 2]), to_rational(chain.back())).second;
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(positive_rescale(r));
    }
    return chain;
}

bool equal_up_to_scale(const IntPoly& a, const IntPoly& b) { return primitive(a) == primitive(b); }

std::string to_string(const IntPoly& p) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        BigInt c = p[i];
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        c = abs(c);
        if (c != 1 || i == 0) out << c.get_str();
        if (i >= 1) out << "X";
        if (i >= 2) out << "^" << i;
        first = false;
    }
    return first ? "0" : out.str();
}

}  // namespace poly

// ---------------------------------------------------------------------------
// Dyadic helpers

namespace {

/// 2^{e*deg p} * p(y / 2^e), exact.
BigInt scaled_eval(const IntPoly& p, const BigInt& y, unsigned long e) {
    const int k = poly::degree(p);
    if (k < 0) return 0;
    BigInt acc = p[static_cast<std::size_t>(k)];
    BigInt scale;
    for (int i = k - 1; i >= 0; --i) {
        acc *= y;
        mpz_mul_2exp(scale.get_mpz_t(), p[static_cast<std::size_t>(i)].get_mpz_t(),
                     e * static_cast<unsigned long>(k - i));
        acc += scale;
    }
    return acc;
}

int scaled_sign(const IntPoly& p, const BigInt& y, unsigned long e) { return sgn(scaled_eval(p, y, e)); }

/// Interval enclosure of 2^{e*deg p} p([lo, hi] / 2^e).
std::pair<BigInt, BigInt> scaled_eval_interval(const std::vector<BigInt>& p, const BigInt& lo,
                                               const BigInt& hi, unsigned long e) {
    int k = -1;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] != 0) {
            k = static_cast<int>(i);
            break;
        }
    }
    if (k < 0) return {BigInt(0), BigInt(0)};
    BigInt a = p[static_cast<std::size_t>(k)], b = a;
    BigInt t1, t2, t3, t4, scale;
    for (int i = k - 1; i >= 0; --i) {
        t1 = a * lo;
        t2 = a * hi;
        t3 = b * lo;
        t4 = b * hi;
        a = std::min({t1, t2, t3, t4});
        b = std::max({t1, t2, t3, t4});
        mpz_mul_2exp(scale.get_mpz_t(), p[static_cast<std::size_t>(i)].get_mpz_t(),
                     e * static_cast<unsigned long>(k - i));
        a += scale;
        b += scale;
    }
    return {a, b};
}

Rational dyadic_value(const BigInt& m, unsigned long e) {
    Rational r(m);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), e);
    return r;
}

int sign_variations(const std::vector<IntPoly>& chain, const BigInt& y, unsigned long e) {
    int changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        int s = scaled_sign(q, y, e);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int sign_variations(const std::vector<IntPoly>& chain, const Rational& x) {
    int changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        int s = poly::sign_at(q, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

unsigned long bit_length(const BigInt& v) { return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2); }

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraicReal

struct AlgebraicReal::State {
    IntPoly poly;
    mutable std::mutex mutex;
    BigInt lo, hi;
    unsigned long exp = 0;
    int sign_lo = 0;
    std::optional<Rational> exact;

    void bisect() {
        lo *= 2;
        hi *= 2;
        ++exp;
        BigInt mid = (lo + hi) / 2;
        const int s = scaled_sign(poly, mid, exp);
        if (s == 0) {
            exact = dyadic_value(mid, exp);
            lo = mid;
            hi = mid;
        } else if (s == sign_lo) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }

    bool narrow_enough(unsigned long bits) const {
        if (exact) return true;
        // (hi - lo) / 2^exp <= 2^-bits
        return exp >= bits && bit_length(hi - lo) <= exp - bits + 1 &&
               (hi - lo) <= (BigInt(1) << static_cast<mp_bitcnt_t>(exp - bits));
    }
};

namespace {

BigInt shifted(const BigInt& v, unsigned long by) {
    BigInt r;
    mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), by);
    return r;
}

}  // namespace

std::vector<AlgebraicReal> isolate_real_roots(const IntPoly& p) {
    IntPoly in = p;
    poly::trim(in);
    if (in.empty()) throw InvalidInput("cannot isolate the roots of the zero polynomial");
    IntPoly sf = poly::squarefree_part(in);
    std::vector<AlgebraicReal> roots;
    const int d = poly::degree(sf);
    if (d <= 0) return roots;

    auto make = [&](BigInt lo, BigInt hi, unsigned long e) {
        auto st = std::make_shared<AlgebraicReal::State>();
        st->poly = sf;
        st->lo = std::move(lo);
        st->hi = std::move(hi);
        st->exp = e;
        st->sign_lo = scaled_sign(sf, st->lo, e);
        return st;
    };

    if (d == 1) {
        Rational r(-sf[0], sf[1]);
        r.canonicalize();
        auto st = std::make_shared<AlgebraicReal::State>();
        st->poly = sf;
        st->exact = r;
        BigInt f;
        mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
        st->lo = f;
        st->hi = (r.get_den() == 1) ? f : f + 1;
        roots.push_back(AlgebraicReal(st));
        return roots;
    }

    // Cauchy bound, rounded up to a power of two.
    Rational bound = 0;
    for (int i = 0; i < d; ++i) {
        Rational r(abs(sf[static_cast<std::size_t>(i)]), abs(sf[static_cast<std::size_t>(d)]));
        r.canonicalize();
        if (r > bound) bound = r;
    }
    bound += 1;
    unsigned long k = 0;
    while (Rational(shifted(BigInt(1), k)) <= bound) ++k;

    const auto chain = poly::sturm_chain(sf);

    struct Piece {
        BigInt lo, hi;
        unsigned long e;
    };
    std::vector<Piece> stack;
    stack.push_back({-shifted(BigInt(1), k), shifted(BigInt(1), k), 0});
    std::vector<Piece> found;
    while (!stack.empty()) {
        Piece piece = std::move(stack.back());
        stack.pop_back();
        const int n = sign_variations(chain, piece.lo, piece.e) - sign_variations(chain, piece.hi, piece.e);
        if (n == 0) continue;
        if (n == 1) {
            found.push_back(std::move(piece));
            continue;
        }
        // Split at a dyadic point that is not itself a root.
        unsigned long e = piece.e + 1;
        BigInt lo = piece.lo * 2, hi = piece.hi * 2;
        BigInt mid = (lo + hi) / 2;
        for (unsigned long extra = 0; scaled_sign(sf, mid, e) == 0; ++extra) {
            lo *= 2;
            hi *= 2;
            ++e;
            mid = (lo + hi) / 2 + BigInt(static_cast<unsigned long>(extra + 1));
        }
        const auto scale_to = [](const BigInt& v, unsigned long from, unsigned long to) { return shifted(v, to - from); };
        // Push right first so the left half is processed first.
        stack.push_back({mid, scale_to(piece.hi, piece.e, e), e});
        stack.push_back({scale_to(piece.lo, piece.e, e), mid, e});
    }
    std::sort(found.begin(), found.end(), [](const Piece& a, const Piece& b) {
        return dyadic_value(a.lo, a.e) < dyadic_value(b.lo, b.e);
    });
    for (auto& piece : found) roots.push_back(AlgebraicReal(make(piece.lo, piece.hi, piece.e)));
    return roots;
}

AlgebraicReal AlgebraicReal::root_of(const IntPoly& p, std::size_t index) {
    auto roots = isolate_real_roots(p);
    if (index >= roots.size())
        throw InvalidInput("polynomial " + poly::to_string(p) + " has only " + std::to_string(roots.size()) +
                           " real roots");
    return roots[index];
}

AlgebraicReal AlgebraicReal::largest_root(const IntPoly& p) {
    auto roots = isolate_real_roots(p);
    if (roots.empty()) throw InvalidInput("polynomial " + poly::to_string(p) + " has no real root");
    return roots.back();
}

AlgebraicReal AlgebraicReal::root_in(const IntPoly& p, const Rational& lo, const Rational& hi) {
    if (lo > hi) throw InvalidInput("empty interval");
    IntPoly sf = poly::squarefree_part(p);
    const auto chain = poly::sturm_chain(sf);
    const int in_closed = sign_variations(chain, lo) - sign_variations(chain, hi) + (poly::sign_at(sf, lo) == 0 ? 1 : 0);
    if (in_closed != 1)
        throw InvalidInput("interval contains " + std::to_string(in_closed) + " roots, expected exactly one");
    auto roots = isolate_real_roots(p);
    for (auto& r : roots) {
        // Refine until the root's interval is inside [lo, hi] or disjoint from it.
        for (unsigned long bits = 8;; bits += 8) {
            auto iv = r.interval();
            if (iv.within({lo, hi})) return r;
            if (iv.hi < lo || iv.lo > hi) break;
            if (auto ex = r.exact_value()) {
                if (*ex >= lo && *ex <= hi) return r;
                break;
            }
            r.refine_bits(bits);
        }
    }
    throw InvalidInput("no root located in the interval");
}

const IntPoly& AlgebraicReal::min_poly() const { return state_->poly; }
int AlgebraicReal::degree() const { return poly::degree(state_->poly); }

RationalInterval AlgebraicReal::interval() const {
    std::lock_guard lock(state_->mutex);
    if (state_->exact) return {*state_->exact, *state_->exact};
    return {dyadic_value(state_->lo, state_->exp), dyadic_value(state_->hi, state_->exp)};
}

void AlgebraicReal::refine_bits(unsigned long bits) const {
    std::lock_guard lock(state_->mutex);
    while (!state_->narrow_enough(bits)) state_->bisect();
}

RationalInterval AlgebraicReal::refine_to(const Rational& width) const {
    if (width <= 0) throw InvalidInput("refinement width must be positive");
    {
        std::lock_guard lock(state_->mutex);
        while (!state_->exact && dyadic_value(state_->hi - state_->lo, state_->exp) > width) state_->bisect();
    }
    return interval();
}

std::optional<Rational> AlgebraicReal::exact_value() const {
    std::lock_guard lock(state_->mutex);
    return state_->exact;
}

AlgebraicReal::Dyadic AlgebraicReal::dyadic() const {
    std::lock_guard lock(state_->mutex);
    return {state_->lo, state_->hi, state_->exp};
}

BigInt AlgebraicReal::floor() const {
    for (unsigned long bits = 4;; bits *= 2) {
        auto iv = interval();
        BigInt a, b;
        mpz_fdiv_q(a.get_mpz_t(), iv.lo.get_num_mpz_t(), iv.lo.get_den_mpz_t());
        mpz_fdiv_q(b.get_mpz_t(), iv.hi.get_num_mpz_t(), iv.hi.get_den_mpz_t());
        // A non-exact root never sits on an integer; interval endpoints may.
        if (a == b) return a;
        if (!exact_value() && b == a + 1 && Rational(b) == iv.hi) return a;
        refine_bits(bits);
    }
}

BigInt AlgebraicReal::ceil() const {
    if (auto ex = exact_value()) {
        BigInt c;
        mpz_cdiv_q(c.get_mpz_t(), ex->get_num_mpz_t(), ex->get_den_mpz_t());
        return c;
    }
    return floor() + 1;
}

double AlgebraicReal::approx() const {
    refine_bits(60);
    auto iv = interval();
    return Rational((iv.lo + iv.hi) / 2).get_d();
}

std::string AlgebraicReal::to_decimal(int places) const {
    return FieldElement::generator_of(*this).to_decimal(places);
}

bool AlgebraicReal::same_root(const AlgebraicReal& other) const {
    if (state_ == other.state_) return true;
    if (state_->poly != other.state_->poly) return false;
    auto a = interval();
    auto b = other.interval();
    Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo > hi) return false;
    const auto chain = poly::sturm_chain(state_->poly);
    const int count = sign_variations(chain, lo) - sign_variations(chain, hi) + (poly::sign_at(state_->poly, lo) == 0 ? 1 : 0);
    return count >= 1;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(AlgebraicReal generator, std::vector<BigInt> num, BigInt den)
    : generator_(std::move(generator)), num_(std::move(num)), den_(std::move(den)) {
    reduce(num_, den_, generator_.min_poly());
    normalize();
}

FieldElement::FieldElement(AlgebraicReal generator, const RatPoly& coefficients)
    : generator_(std::move(generator)) {
    BigInt lcm_den = 1;
    for (const auto& c : coefficients) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    num_.reserve(coefficients.size());
    for (const auto& c : coefficients) num_.push_back(BigInt(c.get_num() * (lcm_den / c.get_den())));
    den_ = lcm_den;
    reduce(num_, den_, generator_.min_poly());
    normalize();
}

FieldElement::FieldElement(AlgebraicReal generator, const Rational& value)
    : FieldElement(std::move(generator), RatPoly{value}) {}

FieldElement FieldElement::generator_of(const AlgebraicReal& generator) {
    return FieldElement(generator, RatPoly{Rational(0), Rational(1)});
}

void FieldElement::reduce(std::vector<BigInt>& num, BigInt& den, const IntPoly& m) {
    const auto d = static_cast<std::size_t>(poly::degree(m));
    const BigInt& lead = m[d];
    while (num.size() > d) {
        BigInt c = num.back();
        num.pop_back();
        if (c == 0) continue;
        if (lead != 1) {
            for (auto& x : num) x *= lead;
            den *= lead;
        }
        const std::size_t shift = num.size() - d;
        for (std::size_t j = 0; j < d; ++j) num[shift + j] -= c * m[j];
    }
    num.resize(d, BigInt(0));
}

void FieldElement::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& x : num_) x = -x;
    }
    BigInt g = den_;
    for (const auto& x : num_) {
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g != 1) {
        for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
    bool zero = std::all_of(num_.begin(), num_.end(), [](const BigInt& x) { return x == 0; });
    if (zero) den_ = 1;
}

RatPoly FieldElement::coefficients() const {
    RatPoly out;
    for (const auto& x : num_) {
        Rational r(x, den_);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

bool FieldElement::is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const BigInt& x) { return x == 0; });
}

bool FieldElement::is_rational() const {
    return std::all_of(num_.begin() + (num_.empty() ? 0 : 1), num_.end(), [](const BigInt& x) { return x == 0; });
}

void FieldElement::require_same_field(const FieldElement& o) const {
    if (!generator_.same_root(o.generator_))
        throw FieldMismatch("elements belong to different generators");
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& x : r.num_) x = -x;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    require_same_field(o);
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    require_same_field(o);
    std::vector<BigInt> prod(num_.size() + o.num_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        for (std::size_t j = 0; j < o.num_.size(); ++j) prod[i + j] += num_[i] * o.num_[j];
    }
    den_ *= o.den_;
    num_ = std::move(prod);
    reduce(num_, den_, generator_.min_poly());
    normalize();
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement& FieldElement::operator+=(const Rational& r) {
    if (num_.empty()) return *this;
    num_[0] = num_[0] * r.get_den() + r.get_num() * den_;
    for (std::size_t i = 1; i < num_.size(); ++i) num_[i] *= r.get_den();
    den_ *= r.get_den();
    normalize();
    return *this;
}

FieldElement& FieldElement::operator-=(const Rational& r) { return *this += Rational(-r); }

FieldElement& FieldElement::operator*=(const Rational& r) {
    for (auto& x : num_) x *= r.get_num();
    den_ *= r.get_den();
    normalize();
    return *this;
}

FieldElement FieldElement::times_generator() const {
    std::vector<BigInt> shifted_num;
    shifted_num.reserve(num_.size() + 1);
    shifted_num.emplace_back(0);
    shifted_num.insert(shifted_num.end(), num_.begin(), num_.end());
    return FieldElement(generator_, std::move(shifted_num), den_);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw InvalidInput("division by zero in Q(theta)");
    // Extended Euclid: a*s + m*t = g.
    RatPoly a = coefficients();
    poly::trim(a);
    RatPoly m = poly::to_rational(generator_.min_poly());
    RatPoly r0 = m, r1 = a;
    RatPoly s0{}, s1{Rational(1)};
    while (poly::degree(r1) > 0) {
        auto [q, r] = poly::divmod(r0, r1);
        // s2 = s0 - q*s1
        RatPoly qs(q.size() + s1.size(), Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        RatPoly s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        poly::trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) {
        // a shares a factor with the (reducible) polynomial.
        if (sign(*this) == 0) throw InvalidInput("division by zero in Q(theta)");
        throw InvalidInput("element is not invertible modulo the reducible polynomial " +
                           poly::to_string(generator_.min_poly()));
    }
    const Rational g = r1[0];
    for (auto& c : s1) c /= g;
    return FieldElement(generator_, s1);
}

FieldElement FieldElement::pow(long exponent) const {
    FieldElement base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    FieldElement result(generator_, Rational(1));
    while (e > 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return den_ == o.den_ && num_ == o.num_ && generator_.same_root(o.generator_);
}

std::size_t FieldElement::hash() const {
    std::size_t h = mpz_getlimbn(den_.get_mpz_t(), 0);
    for (const auto& x : num_) {
        std::size_t v = mpz_getlimbn(x.get_mpz_t(), 0) ^ static_cast<std::size_t>(mpz_size(x.get_mpz_t()));
        if (x < 0) v = ~v;
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

RationalInterval FieldElement::enclose(unsigned long bits) const {
    if (is_rational()) {
        Rational v(num_.empty() ? BigInt(0) : num_[0], den_);
        v.canonicalize();
        return {v, v};
    }
    if (auto ex = generator_.exact_value()) {
        Rational v = 0;
        for (std::size_t i = num_.size(); i-- > 0;) v = v * *ex + num_[i];
        v /= den_;
        return {v, v};
    }
    generator_.refine_bits(bits);
    const auto d = generator_.dyadic();
    auto [a, b] = scaled_eval_interval(num_, d.lo, d.hi, d.exp);
    int k = 0;
    for (std::size_t i = num_.size(); i-- > 0;) {
        if (num_[i] != 0) {
            k = static_cast<int>(i);
            break;
        }
    }
    Rational lo = dyadic_value(a, d.exp * static_cast<unsigned long>(k)) / den_;
    Rational hi = dyadic_value(b, d.exp * static_cast<unsigned long>(k)) / den_;
    return {lo, hi};
}

double FieldElement::approx() const {
    auto iv = enclose(64);
    return Rational((iv.lo + iv.hi) / 2).get_d();
}

namespace {

/// round-half-away-from-zero of v * 10^places
BigInt round_scaled(const Rational& v, const BigInt& pow10) {
    Rational s = v * pow10;
    BigInt twice_num = s.get_num() * 2;
    BigInt den2 = s.get_den() * 2;
    BigInt r;
    if (s >= 0) {
        mpz_fdiv_q(r.get_mpz_t(), BigInt(twice_num + s.get_den()).get_mpz_t(), den2.get_mpz_t());
    } else {
        mpz_cdiv_q(r.get_mpz_t(), BigInt(twice_num - s.get_den()).get_mpz_t(), den2.get_mpz_t());
    }
    return r;
}

std::string format_scaled(const BigInt& scaled, int places) {
    std::string digits = BigInt(abs(scaled)).get_str();
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places))
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    return (scaled < 0 ? "-" : "") + digits;
}

}  // namespace

std::string FieldElement::to_decimal(int places) const {
    BigInt pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::max(places, 0)));
    for (unsigned long bits = 64;; bits *= 2) {
        auto iv = enclose(bits);
        BigInt a = round_scaled(iv.lo, pow10), b = round_scaled(iv.hi, pow10);
        if (a == b) return format_scaled(a, places);
        if (bits > (1UL << 20)) return format_scaled(a, places);
    }
}

int sign(const FieldElement& x) {
    if (x.is_zero()) return 0;
    if (x.is_rational()) return sgn(x.numerators()[0]);
    const AlgebraicReal& gen = x.generator();
    if (auto ex = gen.exact_value()) return sgn(x.enclose().lo);

    const auto& num = x.numerators();
    bool gcd_checked = false;
    unsigned long bits = 64;
    for (;;) {
        const auto d = gen.dyadic();
        auto [a, b] = scaled_eval_interval(num, d.lo, d.hi, d.exp);
        if (a > 0) return 1;
        if (b < 0) return -1;
        if (!gcd_checked) {
            gcd_checked = true;
            RatPoly p;
            for (const auto& c : num) p.emplace_back(c);
            RatPoly g = poly::gcd(p, poly::to_rational(gen.min_poly()));
            if (poly::degree(g) >= 1) {
                IntPoly gi = poly::primitive(g);
                // gen's interval isolates it among the roots of min_poly, and g
                // divides min_poly, so g vanishes at gen iff it changes sign.
                if (scaled_sign(gi, d.lo, d.exp) * scaled_sign(gi, d.hi, d.exp) < 0) return 0;
            }
        }
        const unsigned long have = d.exp > bit_length(d.hi - d.lo) ? d.exp - bit_length(d.hi - d.lo) : 0;
        bits = std::max(bits, 2 * have + 32);
        gen.refine_bits(bits);
    }
}

int compare(const FieldElement& a, const Rational& b) { return sign(a - b); }
int compare(const FieldElement& a, const FieldElement& b) { return sign(a - b); }

FieldElement evaluate_at_conjugate(const FieldElement& x, const AlgebraicReal& target) {
    if (!poly::equal_up_to_scale(x.generator().min_poly(), target.min_poly()))
        throw FieldMismatch("target is not a root of " + poly::to_string(x.generator().min_poly()));
    return FieldElement(target, x.coefficients());
}

}  // namespace parryseq
