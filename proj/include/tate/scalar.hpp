#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tate {

struct FieldMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Ground field: characteristic 0 means the rationals, otherwise F_p.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(std::uint32_t p);
    // Accepts "Q", "F2", "Fp:3", "F_5".
    static Field parse(const std::string& text);

    std::uint32_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }
    std::string name() const;

    friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }
    friend bool operator!=(Field a, Field b) { return a.p_ != b.p_; }

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// Exact scalar. Rationals use an int64 fast path and spill to GMP on overflow.
class Scalar {
public:
    Scalar() = default;
    Scalar(Field f, std::int64_t v);
    Scalar(Field f, std::int64_t num, std::int64_t den);
    Scalar(Field f, const mpq_class& q);

    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }
    // "num/den" or integer text for rationals, an integer for residues.
    static Scalar parse(Field f, const std::string& text);

    Field field() const { return field_; }
    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    mpq_class to_mpq() const;
    std::string to_string() const;
    // Residue for F_p, numerator for an integral rational.
    std::int64_t small_numerator() const { return num_; }
    std::int64_t small_denominator() const { return den_; }
    bool is_small() const { return !big_; }

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    void set_big(mpq_class q);
    void normalize_small();

    Field field_;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

Scalar add(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);

}  // namespace tate
