#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopf {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
};

struct FieldMismatch : std::runtime_error {
    explicit FieldMismatch(const std::string &what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string &what) : std::runtime_error(what) {}
};

/// An exact element of the ground field: either a rational in lowest terms
/// (characteristic 0) or a residue in [0, p) for a prime modulus p.
///
/// The modulus is carried per value; mixing moduli is an error, except that an
/// exact zero of unspecified field (e.g. a default-constructed accumulator)
/// silently adopts the field of the other operand.
class Scalar {
public:
    Scalar() : v_(0), p_(0) {}
    Scalar(long n, std::uint32_t p = 0) : v_(n), p_(p) { reduce(); }

    static Scalar rational(const mpq_class &q) {
        Scalar s;
        s.v_ = q;
        s.v_.canonicalize();
        return s;
    }
    static Scalar fraction(long num, long den) {
        if (den == 0) throw DivisionByZero();
        Scalar s;
        s.v_ = mpq_class(num, den);
        s.v_.canonicalize();
        return s;
    }
    static Scalar residue(const mpz_class &v, std::uint32_t p) {
        Scalar s;
        s.v_ = v;
        s.p_ = p;
        s.reduce();
        return s;
    }
    static Scalar zero(std::uint32_t p = 0) { return Scalar(0, p); }
    static Scalar one(std::uint32_t p = 0) { return Scalar(1, p); }

    std::uint32_t modulus() const { return p_; }
    const mpq_class &value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const {
        Scalar r = *this;
        r.v_ = -r.v_;
        r.reduce();
        return r;
    }

    Scalar operator+(const Scalar &o) const {
        auto [a, b] = harmonized(*this, o);
        a.v_ += b.v_;
        a.reduce();
        return a;
    }
    Scalar operator-(const Scalar &o) const { return *this + (-o); }
    Scalar operator*(const Scalar &o) const {
        auto [a, b] = harmonized(*this, o);
        a.v_ *= b.v_;
        a.reduce();
        return a;
    }
    Scalar operator/(const Scalar &o) const { return *this * o.inv(); }

    Scalar &operator+=(const Scalar &o) { return *this = *this + o; }
    Scalar &operator-=(const Scalar &o) { return *this = *this - o; }
    Scalar &operator*=(const Scalar &o) { return *this = *this * o; }
    Scalar &operator/=(const Scalar &o) { return *this = *this / o; }

    Scalar inv() const {
        if (is_zero()) throw DivisionByZero();
        Scalar r = *this;
        if (p_ == 0) {
            r.v_ = 1 / v_;
        } else {
            mpz_class out;
            if (mpz_invert(out.get_mpz_t(), v_.get_num().get_mpz_t(),
                           mpz_class(p_).get_mpz_t()) == 0)
                throw DivisionByZero();
            r.v_ = out;
        }
        return r;
    }

    bool operator==(const Scalar &o) const {
        if (p_ != o.p_) {
            if (p_ == 0 && is_zero()) return o.is_zero();
            if (o.p_ == 0 && o.is_zero()) return is_zero();
            throw FieldMismatch("comparing scalars over different fields");
        }
        return v_ == o.v_;
    }
    bool operator!=(const Scalar &o) const { return !(*this == o); }

    /// "p/q" or "p" over the rationals; a decimal residue string mod p.
    std::string str() const;

    /// Inverse of str(); the target field must be supplied by the caller.
    static Scalar parse(const std::string &text, std::uint32_t p);

private:
    void reduce() {
        if (p_ == 0) {
            v_.canonicalize();
        } else {
            if (v_.get_den() != 1)
                throw FieldMismatch("non-integer residue in prime field");
            mpz_class r = v_.get_num() % p_;
            if (r < 0) r += p_;
            v_ = r;
        }
    }

    static std::pair<Scalar, Scalar> harmonized(Scalar a, Scalar b) {
        if (a.p_ != b.p_) {
            if (a.p_ == 0 && a.is_zero())
                a.p_ = b.p_;
            else if (b.p_ == 0 && b.is_zero())
                b.p_ = a.p_;
            else
                throw FieldMismatch("combining scalars over different fields");
        }
        return {a, b};
    }

    mpq_class v_;
    std::uint32_t p_;  // 0 = rationals, otherwise a prime modulus
};

}  // namespace hopf
