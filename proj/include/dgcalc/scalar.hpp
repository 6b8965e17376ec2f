#ifndef DGCALC_SCALAR_HPP
#define DGCALC_SCALAR_HPP

#include <cstdint>
#include <string>
#include <gmpxx.h>

#include "dgcalc/error.hpp"

namespace dgc {

/* Ground field of a session: the rationals (p == 0) or Z/p for a prime p.
 * Every Scalar carries its field tag; arithmetic across different fields throws. */
struct Field {
    std::uint32_t p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field& o) const { return p == o.p; }
    bool operator!=(const Field& o) const { return p != o.p; }
    std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

bool is_prime(std::uint32_t n);

/* Exact field element. No floating point anywhere. */
class Scalar {
  public:
    Scalar() : p_(0), res_(0), rat_(0) {}

    static Scalar zero(Field f) { return from_int(0, f); }
    static Scalar one(Field f) { return from_int(1, f); }

    static Scalar from_int(long v, Field f) {
        Scalar s;
        s.p_ = f.p;
        if (f.p == 0)
            s.rat_ = v;
        else
            s.res_ = norm(v, f.p);
        return s;
    }

    static Scalar rational(long num, long den) {
        if (den == 0)
            throw Error("zero denominator");
        Scalar s;
        s.p_ = 0;
        s.rat_ = mpq_class(num, den);
        s.rat_.canonicalize();
        return s;
    }

    static Scalar from_mpq(const mpq_class& q) {
        Scalar s;
        s.p_ = 0;
        s.rat_ = q;
        s.rat_.canonicalize();
        return s;
    }

    /* num/den reduced into F_p */
    static Scalar fraction(long num, long den, Field f) {
        if (f.p == 0)
            return rational(num, den);
        Scalar n = from_int(num, f), d = from_int(den, f);
        return n / d;
    }

    Field field() const { return Field{p_}; }

    bool is_zero() const { return p_ == 0 ? rat_ == 0 : res_ == 0; }
    bool is_one() const { return p_ == 0 ? rat_ == 1 : res_ == 1; }

    Scalar operator-() const {
        Scalar r(*this);
        if (p_ == 0)
            r.rat_ = -rat_;
        else
            r.res_ = res_ == 0 ? 0 : p_ - res_;
        return r;
    }

    Scalar operator+(const Scalar& o) const {
        check(o);
        Scalar r(*this);
        if (p_ == 0)
            r.rat_ += o.rat_;
        else
            r.res_ = (res_ + o.res_) % p_;
        return r;
    }

    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator*(const Scalar& o) const {
        check(o);
        Scalar r(*this);
        if (p_ == 0)
            r.rat_ *= o.rat_;
        else
            r.res_ = (res_ * o.res_) % p_;
        return r;
    }

    Scalar inverse() const {
        if (is_zero())
            throw Error("division by zero");
        Scalar r(*this);
        if (p_ == 0)
            r.rat_ = 1 / rat_;
        else
            r.res_ = inv_mod(res_, p_);
        return r;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        check(o);
        return p_ == 0 ? rat_ == o.rat_ : res_ == o.res_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /* canonical text form: "a/b" over Q, residue over F_p */
    std::string str() const {
        if (p_ == 0)
            return rat_.get_str();
        return std::to_string(res_);
    }

    /* deterministic total order, for canonical output only */
    bool less(const Scalar& o) const {
        check(o);
        return p_ == 0 ? rat_ < o.rat_ : res_ < o.res_;
    }

  private:
    std::uint32_t p_;
    std::int64_t res_;
    mpq_class rat_;

    void check(const Scalar& o) const {
        if (p_ != o.p_)
            throw FieldMismatch();
    }

    static std::int64_t norm(long v, std::uint32_t p) {
        std::int64_t r = v % (std::int64_t)p;
        return r < 0 ? r + p : r;
    }

    static std::int64_t inv_mod(std::int64_t a, std::uint32_t p);
};

Field parse_field(const std::string& spec);  // "q" | "fp:<p>"

}  // namespace dgc

#endif
