#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sicverify {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Equality is canonical-form equality.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);

    static Rational from_raw(mpq_class q);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_even_integer() const;
    int sign() const { return sgn(v_); }

    Rational operator-() const { return from_raw(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return from_raw(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return from_raw(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return from_raw(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

/// a + b*i with rational a, b.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational& o) const;

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    std::string str() const;
};

/// a + b*w where w = exp(2*pi*i/3), so w^2 = -1 - w. Conjugation sends
/// a + b*w to (a - b) - b*w; the norm a^2 - a*b + b^2 is a nonnegative
/// rational, zero only at zero.
struct EisensteinRational {
    Rational a, b;

    EisensteinRational() = default;
    EisensteinRational(Rational a_, Rational b_ = Rational(0)) : a(std::move(a_)), b(std::move(b_)) {}
    static EisensteinRational omega() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    EisensteinRational conj() const { return {a - b, -b}; }
    Rational norm() const { return a * a - a * b + b * b; }

    EisensteinRational operator-() const { return {-a, -b}; }
    EisensteinRational operator+(const EisensteinRational& o) const { return {a + o.a, b + o.b}; }
    EisensteinRational operator-(const EisensteinRational& o) const { return {a - o.a, b - o.b}; }
    EisensteinRational operator*(const EisensteinRational& o) const {
        // (a+bw)(c+dw) = ac - bd + (ad + bc - bd) w
        return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
    }
    EisensteinRational operator/(const EisensteinRational& o) const;

    bool operator==(const EisensteinRational& o) const { return a == o.a && b == o.b; }
    bool operator!=(const EisensteinRational& o) const { return !(*this == o); }

    std::string str() const;
};

/// w + x*i + y*j + z*k with the Hamilton product.
struct Quaternion {
    Rational w, x, y, z;

    Quaternion() = default;
    Quaternion(Rational w_, Rational x_, Rational y_, Rational z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
    Quaternion conj() const { return {w, -x, -y, -z}; }
    Rational norm() const { return w * w + x * x + y * y + z * z; }

    Quaternion operator-() const { return {-w, -x, -y, -z}; }
    Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    Quaternion operator*(const Quaternion& o) const;

    bool operator==(const Quaternion& o) const { return w == o.w && x == o.x && y == o.y && z == o.z; }
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

    std::string str() const;
};

/// Octonion over the basis {1, e1..e7}. The basis products follow the fixed
/// oriented Fano triples (1,2,3) (1,4,5) (1,7,6) (2,4,6) (2,5,7) (3,4,7)
/// (3,6,5): e_a e_b = e_c for each cyclic rotation of a triple, e_a^2 = -1.
/// Multiplication is alternative and norm-multiplicative but NOT associative.
struct Octonion {
    std::array<Rational, 8> c{};

    Octonion() = default;
    explicit Octonion(std::array<Rational, 8> coords) : c(std::move(coords)) {}
    static Octonion basis(int i);

    /// Basis product e_i * e_j as (sign, index); index 0 means the real unit.
    struct BasisProduct {
        int sign;
        int index;
    };
    static BasisProduct basis_mul(int i, int j);

    bool is_zero() const;
    Octonion conj() const;
    Rational norm() const;

    Octonion operator-() const;
    Octonion operator+(const Octonion& o) const;
    Octonion operator-(const Octonion& o) const;
    Octonion operator*(const Octonion& o) const;

    bool operator==(const Octonion& o) const { return c == o.c; }
    bool operator!=(const Octonion& o) const { return !(*this == o); }

    std::string str() const;
};

}  // namespace sicverify
