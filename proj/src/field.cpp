#include "fano/field.hpp"

#include <array>

namespace fano {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::VariableOutOfRange: return "VariableOutOfRange";
    case ErrorCode::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NegativeDegree: return "NegativeDegree";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::NotOnFano: return "NotOnFano";
    case ErrorCode::ZeroCount: return "ZeroCount";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    }
    return "Error";
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // These bases are a deterministic witness set for all n < 3.3e24.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw Error(ErrorCode::InvalidField, "modulus " + std::to_string(p) + " is not a prime below 2^31");
    return FieldSpec(FieldKind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const {
    return is_prime_field() ? "F_" + std::to_string(modulus_) : "Q";
}

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (a != b) throw Error(ErrorCode::FieldMismatch, a.name() + " vs " + b.name());
}

// ---------------------------------------------------------------------------
// Fp

Fp Fp::from(const BigInt& v, const FieldSpec& field) {
    if (!field.is_prime_field()) throw Error(ErrorCode::FieldMismatch, "F_p scalar requested over Q");
    BigInt r = v % field.modulus();
    if (r < 0) r += field.modulus();
    return Fp(static_cast<std::int64_t>(r.get_si()), field.modulus());
}

std::uint32_t Fp::unify(const Fp& o) {
    if (modulus_ == o.modulus_) return modulus_;
    if (modulus_ == 0) {
        value_ = reduce(value_, o.modulus_);
        modulus_ = o.modulus_;
        return modulus_;
    }
    if (o.modulus_ == 0) return modulus_;
    throw Error(ErrorCode::FieldMismatch,
                "F_" + std::to_string(modulus_) + " vs F_" + std::to_string(o.modulus_));
}

Fp& Fp::operator+=(const Fp& o) {
    const std::uint32_t p = unify(o);
    if (p == 0) {
        value_ += o.value_;
        return *this;
    }
    value_ += reduce(o.value_, p);
    if (value_ >= p) value_ -= p;
    return *this;
}

Fp& Fp::operator-=(const Fp& o) {
    const std::uint32_t p = unify(o);
    if (p == 0) {
        value_ -= o.value_;
        return *this;
    }
    value_ -= reduce(o.value_, p);
    if (value_ < 0) value_ += p;
    return *this;
}

Fp& Fp::operator*=(const Fp& o) {
    const std::uint32_t p = unify(o);
    if (p == 0) {
        value_ *= o.value_;
        return *this;
    }
    value_ = (value_ * reduce(o.value_, p)) % p;
    return *this;
}

Fp Fp::inverse() const {
    if (value_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in F_p");
    if (modulus_ == 0) {
        if (value_ == 1 || value_ == -1) return *this;
        throw Error(ErrorCode::FieldMismatch, "inverse of an F_p value with no modulus");
    }
    return Fp(static_cast<std::int64_t>(pow_mod(static_cast<std::uint64_t>(value_), modulus_ - 2, modulus_)),
              modulus_);
}

bool operator==(const Fp& a, const Fp& b) {
    if (a.modulus_ == b.modulus_) return a.value_ == b.value_;
    const std::uint32_t p = a.modulus_ ? a.modulus_ : b.modulus_;
    if (a.modulus_ && b.modulus_)
        throw Error(ErrorCode::FieldMismatch,
                    "F_" + std::to_string(a.modulus_) + " vs F_" + std::to_string(b.modulus_));
    return Fp::reduce(a.value_, p) == Fp::reduce(b.value_, p);
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in Q");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by 0 in Q");
    q_ /= o.q_;
    return *this;
}

} // namespace fano
