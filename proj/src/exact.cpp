#include "sicverify/exact.hpp"

#include <sstream>

namespace sicverify {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::from_raw(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return from_raw(mpq_class(v_ / o.v_));
}

bool Rational::is_even_integer() const {
    return is_integer() && mpz_even_p(v_.get_num().get_mpz_t());
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    const Rational n = o.norm();
    const GaussianRational t = *this * o.conj();
    return {t.re / n, t.im / n};
}

std::string GaussianRational::str() const {
    std::ostringstream os;
    os << re.str();
    if (!im.is_zero()) os << (im.sign() < 0 ? "" : "+") << im.str() << "i";
    return os.str();
}

EisensteinRational EisensteinRational::operator/(const EisensteinRational& o) const {
    if (o.is_zero()) throw std::domain_error("EisensteinRational: division by zero");
    const Rational n = o.norm();
    const EisensteinRational t = *this * o.conj();
    return {t.a / n, t.b / n};
}

std::string EisensteinRational::str() const {
    std::ostringstream os;
    os << a.str();
    if (!b.is_zero()) os << (b.sign() < 0 ? "" : "+") << b.str() << "w";
    return os.str();
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
    return {
        w * o.w - x * o.x - y * o.y - z * o.z,
        w * o.x + x * o.w + y * o.z - z * o.y,
        w * o.y - x * o.z + y * o.w + z * o.x,
        w * o.z + x * o.y - y * o.x + z * o.w,
    };
}

std::string Quaternion::str() const {
    std::ostringstream os;
    os << "(" << w.str() << "," << x.str() << "," << y.str() << "," << z.str() << ")";
    return os.str();
}

namespace {

struct OctTable {
    int8_t sign[8][8];
    int8_t index[8][8];
};

OctTable build_oct_table() {
    OctTable t{};
    for (int i = 0; i < 8; ++i) {
        t.sign[0][i] = t.sign[i][0] = 1;
        t.index[0][i] = t.index[i][0] = static_cast<int8_t>(i);
    }
    for (int i = 1; i < 8; ++i) {
        t.sign[i][i] = -1;
        t.index[i][i] = 0;
    }
    static constexpr int triples[7][3] = {
        {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5},
    };
    for (const auto& tr : triples) {
        const int rot[3][3] = {{tr[0], tr[1], tr[2]}, {tr[1], tr[2], tr[0]}, {tr[2], tr[0], tr[1]}};
        for (const auto& r : rot) {
            t.sign[r[0]][r[1]] = 1;
            t.index[r[0]][r[1]] = static_cast<int8_t>(r[2]);
            t.sign[r[1]][r[0]] = -1;
            t.index[r[1]][r[0]] = static_cast<int8_t>(r[2]);
        }
    }
    return t;
}

const OctTable& oct_table() {
    static const OctTable t = build_oct_table();
    return t;
}

}  // namespace

Octonion Octonion::basis(int i) {
    Octonion o;
    o.c[static_cast<size_t>(i)] = Rational(1);
    return o;
}

Octonion::BasisProduct Octonion::basis_mul(int i, int j) {
    const OctTable& t = oct_table();
    return {t.sign[i][j], t.index[i][j]};
}

bool Octonion::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

Octonion Octonion::conj() const {
    Octonion o;
    o.c[0] = c[0];
    for (size_t i = 1; i < 8; ++i) o.c[i] = -c[i];
    return o;
}

Rational Octonion::norm() const {
    Rational n(0);
    for (const auto& x : c) n += x * x;
    return n;
}

Octonion Octonion::operator-() const {
    Octonion o;
    for (size_t i = 0; i < 8; ++i) o.c[i] = -c[i];
    return o;
}

Octonion Octonion::operator+(const Octonion& o) const {
    Octonion r;
    for (size_t i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

Octonion Octonion::operator-(const Octonion& o) const {
    Octonion r;
    for (size_t i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

Octonion Octonion::operator*(const Octonion& o) const {
    const OctTable& t = oct_table();
    Octonion r;
    for (int i = 0; i < 8; ++i) {
        if (c[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < 8; ++j) {
            if (o.c[static_cast<size_t>(j)].is_zero()) continue;
            const Rational p = c[static_cast<size_t>(i)] * o.c[static_cast<size_t>(j)];
            auto& slot = r.c[static_cast<size_t>(t.index[i][j])];
            slot = (t.sign[i][j] > 0) ? slot + p : slot - p;
        }
    }
    return r;
}

std::string Octonion::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < 8; ++i) {
        if (i) os << ",";
        os << c[i].str();
    }
    os << ")";
    return os.str();
}

}  // namespace sicverify
