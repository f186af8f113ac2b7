#ifndef FANO_FIELD_HPP
#define FANO_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include <Eigen/Core>
#include <gmpxx.h>

#include "fano/error.hpp"

namespace fano {

using BigInt = mpz_class;

enum class FieldKind { Rationals, PrimeField };

/// Deterministic Miller-Rabin, exact for every 32-bit input.
bool is_prime(std::uint64_t n);

/// Coefficient domain: Q, or F_p with 2 <= p < 2^31 and p prime.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec prime(std::uint64_t p);

    FieldKind kind() const noexcept { return kind_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    bool is_prime_field() const noexcept { return kind_ == FieldKind::PrimeField; }

    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(FieldKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

    FieldKind kind_;
    std::uint32_t modulus_;
};

void require_same_field(const FieldSpec& a, const FieldSpec& b);

/// Element of a prime field whose modulus is carried at runtime.
///
/// A value built from a bare integer (as Eigen does for Zero() and Identity())
/// is "unbound": it adopts the modulus of the first bound operand it meets.
class Fp {
public:
    Fp() = default;
    Fp(int v) : value_(v), modulus_(0) {} // NOLINT: implicit by design of Eigen scalars
    Fp(std::int64_t v, std::uint32_t p) : value_(reduce(v, p)), modulus_(p) {}

    static Fp from(const BigInt& v, const FieldSpec& field);
    static Fp zero(const FieldSpec& field) { return Fp(0, field.modulus()); }
    static Fp one(const FieldSpec& field) { return Fp(1, field.modulus()); }

    /// Canonical representative in [0, p) (raw value while unbound).
    std::uint32_t value() const noexcept { return static_cast<std::uint32_t>(value_); }
    std::uint32_t modulus() const noexcept { return modulus_; }
    bool bound() const noexcept { return modulus_ != 0; }
    bool is_zero() const noexcept { return value_ == 0; }
    FieldSpec field() const { return FieldSpec::prime(modulus_); }

    Fp inverse() const;
    std::string to_string() const { return std::to_string(value_); }

    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    Fp operator-() const { return Fp(0, modulus_) -= *this; }

    friend bool operator==(const Fp& a, const Fp& b);
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value_; }

private:
    static std::int64_t reduce(std::int64_t v, std::uint32_t p) {
        if (p == 0) return v;
        v %= static_cast<std::int64_t>(p);
        return v < 0 ? v + p : v;
    }
    std::uint32_t unify(const Fp& o);

    std::int64_t value_ = 0;
    std::uint32_t modulus_ = 0;
};

/// Exact rational number, always stored in lowest terms.
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {} // NOLINT
    explicit Rational(const BigInt& v) : q_(v) {}
    Rational(const BigInt& num, const BigInt& den);

    static Rational from(const BigInt& v, const FieldSpec&) { return Rational(v); }
    static Rational zero(const FieldSpec&) { return Rational(0); }
    static Rational one(const FieldSpec&) { return Rational(1); }

    const mpq_class& get() const noexcept { return q_; }
    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    FieldSpec field() const { return FieldSpec::rationals(); }

    Rational inverse() const;
    std::string to_string() const { return q_.get_str(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.q_ = -q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.q_.get_str(); }

private:
    mpq_class q_;
};

/// Scalars usable as polynomial coefficients and matrix entries.
template <class S>
concept FieldScalar = requires(const S& a, const S& b, const BigInt& z, const FieldSpec& f) {
    { a + b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::convertible_to<S>;
    { a.to_string() } -> std::convertible_to<std::string>;
    { S::from(z, f) } -> std::convertible_to<S>;
    { S::zero(f) } -> std::convertible_to<S>;
    { S::one(f) } -> std::convertible_to<S>;
};

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

} // namespace fano

namespace Eigen {

template <>
struct NumTraits<fano::Fp> : GenericNumTraits<fano::Fp> {
    using Real = fano::Fp;
    using NonInteger = fano::Fp;
    using Nested = fano::Fp;
    using Literal = fano::Fp;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<fano::Rational> : GenericNumTraits<fano::Rational> {
    using Real = fano::Rational;
    using NonInteger = fano::Rational;
    using Nested = fano::Rational;
    using Literal = fano::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 50,
        MulCost = 50
    };
    static inline int digits10() { return 0; }
};

} // namespace Eigen

#endif // FANO_FIELD_HPP
