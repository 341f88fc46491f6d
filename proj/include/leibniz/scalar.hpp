#ifndef LEIBNIZ_SCALAR_HPP
#define LEIBNIZ_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "leibniz/errors.hpp"

namespace leibniz {

/// Field context: the rational field Q, or a prime field F_p.
/// p == 0 encodes the rational field.
struct Field {
    long p = 0;

    static Field rational() { return Field{0}; }
    static Field prime(long p) {
        if (p < 2 || !is_prime(p)) throw InputError("modulus must be prime: " + std::to_string(p));
        return Field{p};
    }

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;

    static bool is_prime(long n) {
        if (n < 2) return false;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
};

/// An exact field element: a canonical rational (GMP) or a residue in [0, p).
/// Values from different field contexts never mix silently.
class Scalar {
public:
    Scalar() : field_{0}, q_(0) {}
    explicit Scalar(Field f) : field_(f), q_(0) {}
    Scalar(Field f, long n) : field_(f), q_(n) { reduce(); }

    static Scalar from_int(Field f, long n) { return Scalar(f, n); }

    static Scalar from_rational(long num, long den) {
        if (den == 0) throw DivisionByZero();
        Scalar s;
        s.q_ = mpq_class(num, den);
        s.q_.canonicalize();
        return s;
    }

    /// Parses "p/q" or "k" (rational field), or a decimal residue (F_p).
    static Scalar parse(Field f, const std::string& text) {
        Scalar s(f);
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw InputError("bad scalar literal: '" + text + "'");
        q.canonicalize();
        if (f.is_rational()) {
            s.q_ = q;
        } else {
            if (q.get_den() != 1) throw InputError("prime-field scalar must be an integer: '" + text + "'");
            s.q_ = q;
            s.reduce();
        }
        return s;
    }

    Field field() const { return field_; }
    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }

    std::string str() const { return q_.get_str(); }

    const mpq_class& value() const { return q_; }
    long residue() const { return static_cast<long>(q_.get_num().get_si()); }

    Scalar operator-() const {
        Scalar r(*this);
        r.q_ = -r.q_;
        r.reduce();
        return r;
    }

    Scalar operator+(const Scalar& o) const {
        check(o);
        Scalar r(*this);
        r.q_ += o.q_;
        r.reduce();
        return r;
    }
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    Scalar operator*(const Scalar& o) const {
        check(o);
        Scalar r(*this);
        r.q_ *= o.q_;
        r.reduce();
        return r;
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const {
        if (is_zero()) throw DivisionByZero();
        Scalar r(field_);
        if (field_.is_rational()) {
            r.q_ = 1 / q_;
        } else {
            mpz_class inv;
            mpz_class p(field_.p);
            if (mpz_invert(inv.get_mpz_t(), q_.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
                throw DivisionByZero();
            r.q_ = mpq_class(inv);
        }
        return r;
    }

    bool operator==(const Scalar& o) const {
        check(o);
        return q_ == o.q_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Total order on canonical forms; used only for deterministic sorting.
    std::strong_ordering operator<=>(const Scalar& o) const {
        check(o);
        int c = cmp(q_, o.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Field field_;
    mpq_class q_;  // for F_p the value is the residue in [0, p) with denominator 1

    void check(const Scalar& o) const {
        if (field_ != o.field_) throw MixedFieldContext();
    }

    void reduce() {
        if (field_.is_rational()) {
            q_.canonicalize();
        } else {
            mpz_class r;
            mpz_class p(field_.p);
            mpz_mod(r.get_mpz_t(), q_.get_num().get_mpz_t(), p.get_mpz_t());
            q_ = mpq_class(r);
        }
    }
};

inline Scalar zero(Field f) { return Scalar(f); }
inline Scalar one(Field f) { return Scalar(f, 1); }

}  // namespace leibniz

#endif
