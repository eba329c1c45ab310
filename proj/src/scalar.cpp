#include "tate/scalar.hpp"

#include <numeric>

namespace tate {

namespace {

void check_same(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field())
        throw FieldMismatch("scalar field mismatch: " + a.field().name() + " vs " + b.field().name());
}

std::int64_t mod_p(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
}

std::int64_t pow_mod(std::int64_t b, std::uint64_t e, std::uint32_t p) {
    std::int64_t r = 1;
    b = mod_p(b, p);
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

bool fits(const mpz_class& z) { return z.fits_slong_p(); }

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (p > (1u << 30)) throw std::invalid_argument("characteristic too large");
    return Field(p);
}

Field Field::parse(const std::string& text) {
    if (text == "Q" || text == "q" || text == "QQ" || text == "0") return rationals();
    std::string digits;
    if (text.rfind("Fp:", 0) == 0) digits = text.substr(3);
    else if (text.rfind("F_", 0) == 0) digits = text.substr(2);
    else if (!text.empty() && (text[0] == 'F' || text[0] == 'f')) digits = text.substr(1);
    else digits = text;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("unknown field '" + text + "'");
    return prime(static_cast<std::uint32_t>(std::stoul(digits)));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Scalar::Scalar(Field f, std::int64_t v) : field_(f), num_(v), den_(1) {
    if (!f.is_rational()) num_ = mod_p(v, f.characteristic());
}

Scalar::Scalar(Field f, std::int64_t num, std::int64_t den) : field_(f) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (f.is_rational()) {
        set_big(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
    } else {
        auto p = f.characteristic();
        std::int64_t d = mod_p(den, p);
        if (d == 0) throw std::domain_error("denominator vanishes in " + f.name());
        num_ = mod_p(num, p) * pow_mod(d, p - 2, p) % p;
        den_ = 1;
    }
}

Scalar::Scalar(Field f, const mpq_class& q) : field_(f) {
    if (f.is_rational()) {
        set_big(q);
    } else {
        auto p = f.characteristic();
        mpz_class n = q.get_num() % p, d = q.get_den() % p;
        std::int64_t nn = mod_p(n.get_si(), p), dd = mod_p(d.get_si(), p);
        if (dd == 0) throw std::domain_error("denominator vanishes in " + f.name());
        num_ = nn * pow_mod(dd, p - 2, p) % p;
    }
}

void Scalar::set_big(mpq_class q) {
    q.canonicalize();
    if (fits(q.get_num()) && fits(q.get_den())) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const mpq_class>(std::move(q));
    }
}

void Scalar::normalize_small() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Scalar Scalar::parse(Field f, const std::string& text) {
    auto slash = text.find('/');
    if (!f.is_rational()) {
        if (slash != std::string::npos)
            return Scalar(f, std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
        return Scalar(f, std::stoll(text));
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
    if (q.get_den() == 0) throw std::domain_error("zero denominator");
    return Scalar(f, q);
}

mpq_class Scalar::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Scalar::to_string() const {
    if (big_) {
        if (big_->get_den() == 1) return big_->get_num().get_str();
        return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (!field_.is_rational()) {
        r.num_ = num_ == 0 ? 0 : field_.characteristic() - num_;
        return r;
    }
    if (big_ || num_ == INT64_MIN) {
        r.set_big(-to_mpq());
        return r;
    }
    r.num_ = -num_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar r(field_, 0);
    if (!field_.is_rational()) {
        r.num_ = pow_mod(num_, field_.characteristic() - 2, field_.characteristic());
        return r;
    }
    r.set_big(1 / to_mpq());
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    Scalar r(a.field_, 0);
    if (!a.field_.is_rational()) {
        std::int64_t p = a.field_.characteristic();
        r.num_ = a.num_ + b.num_;
        if (r.num_ >= p) r.num_ -= p;
        return r;
    }
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            if (!__builtin_add_overflow(a.num_, b.num_, &r.num_)) return r;
        } else {
            std::int64_t x, y, n, d;
            if (!__builtin_mul_overflow(a.num_, b.den_, &x) && !__builtin_mul_overflow(b.num_, a.den_, &y) &&
                !__builtin_add_overflow(x, y, &n) && !__builtin_mul_overflow(a.den_, b.den_, &d)) {
                r.num_ = n;
                r.den_ = d;
                r.normalize_small();
                return r;
            }
        }
    }
    r.set_big(a.to_mpq() + b.to_mpq());
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    Scalar r(a.field_, 0);
    if (!a.field_.is_rational()) {
        r.num_ = a.num_ * b.num_ % static_cast<std::int64_t>(a.field_.characteristic());
        return r;
    }
    if (!a.big_ && !b.big_) {
        std::int64_t n, d;
        if (!__builtin_mul_overflow(a.num_, b.num_, &n) && !__builtin_mul_overflow(a.den_, b.den_, &d)) {
            r.num_ = n;
            r.den_ = d;
            if (d != 1) r.normalize_small();
            return r;
        }
    }
    r.set_big(a.to_mpq() * b.to_mpq());
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.to_mpq() == b.to_mpq();
}

Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }

}  // namespace tate
