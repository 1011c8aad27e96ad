/**
 * Exact scalar fields: the rationals (GMP-backed) and prime fields GF(p).
 *
 * Every algorithm in the library is templated on a field object that owns
 * the arithmetic.  Elements are plain values (`mpq_class` or a reduced
 * residue); the field object carries whatever context the arithmetic needs,
 * in the spirit of the FFLAS/LinBox field interface.
 */
#ifndef HOPFCYC_FIELD_HPP
#define HOPFCYC_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "hopfcyc/error.hpp"

namespace hopfcyc {

/// Declarative description of a field: kind plus characteristic.
struct FieldSpec
{
    enum class Kind { rationals, prime_field };

    Kind kind = Kind::rationals;
    std::uint32_t characteristic = 0;

    static FieldSpec rationals() { return {Kind::rationals, 0}; }
    static FieldSpec prime(std::uint32_t p);

    std::string name() const
    {
        return kind == Kind::rationals ? std::string("Q") : "GF(" + std::to_string(characteristic) + ")";
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline FieldSpec FieldSpec::prime(std::uint32_t p)
{
    if (!is_prime(p))
        throw PreconditionError("GF(p) requires a prime characteristic, got " + std::to_string(p));
    return {Kind::prime_field, p};
}

/**
 * Field interface used throughout.  A field object is cheap to copy and
 * immutable once constructed.
 */
template <typename F>
concept Field = requires(const F& f, const typename F::value_type& a, typename F::value_type& acc, long n) {
    typename F::value_type;
    { f.spec() } -> std::same_as<FieldSpec>;
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.from_int(n) } -> std::same_as<typename F::value_type>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.is_one(a) } -> std::same_as<bool>;
    { f.add(a, a) } -> std::same_as<typename F::value_type>;
    { f.sub(a, a) } -> std::same_as<typename F::value_type>;
    { f.mul(a, a) } -> std::same_as<typename F::value_type>;
    { f.neg(a) } -> std::same_as<typename F::value_type>;
    { f.inv(a) } -> std::same_as<typename F::value_type>;
    { f.equal(a, a) } -> std::same_as<bool>;
    { f.to_string(a) } -> std::same_as<std::string>;
    f.axpy_in_place(acc, a, a);
};

/// The field of rational numbers, exact and in lowest terms.
class Rationals
{
public:
    using value_type = mpq_class;

    FieldSpec spec() const { return FieldSpec::rationals(); }
    std::uint32_t characteristic() const { return 0; }

    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type from_int(long n) const { return value_type(n); }

    value_type from_fraction(const mpz_class& num, const mpz_class& den) const
    {
        if (den == 0)
            throw PreconditionError("zero denominator in rational literal");
        value_type q(num, den);
        q.canonicalize();
        return q;
    }

    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool is_one(const value_type& a) const { return a == 1; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }

    value_type inv(const value_type& a) const
    {
        if (is_zero(a))
            throw PreconditionError("division by zero");
        return 1 / a;
    }

    /// acc += a * b
    void axpy_in_place(value_type& acc, const value_type& a, const value_type& b) const
    {
        acc += a * b;
    }

    std::string to_string(const value_type& a) const { return a.get_str(); }
};

/// GF(p) for a prime p < 2^31, elements stored as reduced residues.
class PrimeField
{
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(FieldSpec::prime(p).characteristic)
    {
        if (p_ >= (1u << 31))
            throw PreconditionError("GF(p) supports primes below 2^31");
    }

    FieldSpec spec() const { return FieldSpec::prime(p_); }
    std::uint32_t characteristic() const { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1 % p_; }

    value_type from_int(long n) const
    {
        long r = n % static_cast<long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }

    value_type from_fraction(const mpz_class& num, const mpz_class& den) const
    {
        mpz_class pp(p_);
        mpz_class d = den % pp;
        if (d < 0)
            d += pp;
        if (d == 0)
            throw PreconditionError("denominator vanishes in GF(" + std::to_string(p_) + ")");
        mpz_class n = num % pp;
        if (n < 0)
            n += pp;
        return mul(static_cast<value_type>(n.get_ui()), inv(static_cast<value_type>(d.get_ui())));
    }

    bool is_zero(const value_type& a) const { return a == 0; }
    bool is_one(const value_type& a) const { return a == one(); }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }

    value_type add(value_type a, value_type b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
    }

    value_type inv(value_type a) const
    {
        if (a == 0)
            throw PreconditionError("division by zero");
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = a, e = p_ - 2;
        while (e) {
            if (e & 1)
                result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<value_type>(result);
    }

    void axpy_in_place(value_type& acc, value_type a, value_type b) const { acc = add(acc, mul(a, b)); }

    std::string to_string(value_type a) const { return std::to_string(a); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

static_assert(Field<Rationals>);
static_assert(Field<PrimeField>);

/**
 * Parse a scalar literal ("3", "-2", "5/7") into a field element.
 */
template <typename K>
typename K::value_type parse_scalar(const K& field, const std::string& text)
{
    auto slash = text.find('/');
    try {
        mpz_class num(text.substr(0, slash), 10);
        mpz_class den(1);
        if (slash != std::string::npos)
            den = mpz_class(text.substr(slash + 1), 10);
        return field.from_fraction(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed scalar '" + text + "'");
    }
}

inline bool operator==(const Rationals&, const Rationals&) { return true; }

}  // namespace hopfcyc

#endif  // HOPFCYC_FIELD_HPP
