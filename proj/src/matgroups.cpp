#include "sicverify/matgroups.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace sicverify {

namespace gf {

namespace {

int order_of(int q) { return q; }

void check_field(int q) {
    if (q != 2 && q != 3 && q != 9) throw std::invalid_argument("gf: unsupported field");
}

}  // namespace

std::uint8_t add(int q, std::uint8_t x, std::uint8_t y) {
    check_field(q);
    if (q == 9) {
        return static_cast<std::uint8_t>((x % 3 + y % 3) % 3 + 3 * ((x / 3 + y / 3) % 3));
    }
    return static_cast<std::uint8_t>((x + y) % q);
}

std::uint8_t neg(int q, std::uint8_t x) {
    check_field(q);
    if (q == 9) {
        return static_cast<std::uint8_t>((3 - x % 3) % 3 + 3 * ((3 - x / 3) % 3));
    }
    return static_cast<std::uint8_t>((q - x) % q);
}

std::uint8_t sub(int q, std::uint8_t x, std::uint8_t y) { return add(q, x, neg(q, y)); }

std::uint8_t mul(int q, std::uint8_t x, std::uint8_t y) {
    check_field(q);
    if (q == 9) {
        const int a = x % 3, b = x / 3, c = y % 3, d = y / 3;
        // (a+bt)(c+dt) = ac - bd + (ad+bc) t,   t^2 = -1
        const int re = ((a * c - b * d) % 3 + 3) % 3;
        const int im = (a * d + b * c) % 3;
        return static_cast<std::uint8_t>(re + 3 * im);
    }
    return static_cast<std::uint8_t>((x * y) % q);
}

std::uint8_t inv(int q, std::uint8_t x) {
    check_field(q);
    if (x == 0) throw std::domain_error("gf: inverse of zero");
    for (int y = 0; y < order_of(q); ++y) {
        if (mul(q, x, static_cast<std::uint8_t>(y)) == 1) return static_cast<std::uint8_t>(y);
    }
    throw std::logic_error("gf: no inverse found");
}

std::uint8_t frobenius(int q, std::uint8_t x) {
    check_field(q);
    if (q == 9) return static_cast<std::uint8_t>(x % 3 + 3 * ((3 - x / 3) % 3));
    return x;  // x^q = x on the prime field
}

}  // namespace gf

// ---------------------------------------------------------------------------
// GFMatrix

GFMatrix GFMatrix::identity(int q, int dim) {
    GFMatrix r;
    r.q = q;
    r.dim = dim;
    for (int i = 0; i < dim; ++i) r.set(i, i, 1);
    return r;
}

GFMatrix GFMatrix::operator*(const GFMatrix& o) const {
    GFMatrix r;
    r.q = q;
    r.dim = dim;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            std::uint8_t s = 0;
            for (int k = 0; k < dim; ++k) s = gf::add(q, s, gf::mul(q, at(i, k), o.at(k, j)));
            r.set(i, j, s);
        }
    }
    return r;
}

GFMatrix GFMatrix::inverse() const {
    GFMatrix a = *this;
    GFMatrix inv = identity(q, dim);
    for (int col = 0; col < dim; ++col) {
        int pivot = -1;
        for (int r = col; r < dim; ++r) {
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw std::domain_error("GFMatrix: singular");
        if (pivot != col) {
            for (int c = 0; c < dim; ++c) {
                std::swap(a.m[static_cast<std::size_t>(pivot * dim + c)],
                          a.m[static_cast<std::size_t>(col * dim + c)]);
                std::swap(inv.m[static_cast<std::size_t>(pivot * dim + c)],
                          inv.m[static_cast<std::size_t>(col * dim + c)]);
            }
        }
        const std::uint8_t scale = gf::inv(q, a.at(col, col));
        for (int c = 0; c < dim; ++c) {
            a.set(col, c, gf::mul(q, a.at(col, c), scale));
            inv.set(col, c, gf::mul(q, inv.at(col, c), scale));
        }
        for (int r = 0; r < dim; ++r) {
            if (r == col || a.at(r, col) == 0) continue;
            const std::uint8_t f = a.at(r, col);
            for (int c = 0; c < dim; ++c) {
                a.set(r, c, gf::sub(q, a.at(r, c), gf::mul(q, f, a.at(col, c))));
                inv.set(r, c, gf::sub(q, inv.at(r, c), gf::mul(q, f, inv.at(col, c))));
            }
        }
    }
    return inv;
}

GFMatrix GFMatrix::conj_transpose() const {
    GFMatrix r;
    r.q = q;
    r.dim = dim;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) r.set(i, j, gf::frobenius(q, at(j, i)));
    return r;
}

std::uint8_t GFMatrix::det() const {
    GFMatrix a = *this;
    std::uint8_t d = 1;
    for (int col = 0; col < dim; ++col) {
        int pivot = -1;
        for (int r = col; r < dim; ++r) {
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int c = 0; c < dim; ++c)
                std::swap(a.m[static_cast<std::size_t>(pivot * dim + c)],
                          a.m[static_cast<std::size_t>(col * dim + c)]);
            d = gf::neg(q, d);
        }
        d = gf::mul(q, d, a.at(col, col));
        const std::uint8_t scale = gf::inv(q, a.at(col, col));
        for (int r = col + 1; r < dim; ++r) {
            if (a.at(r, col) == 0) continue;
            const std::uint8_t f = gf::mul(q, a.at(r, col), scale);
            for (int c = col; c < dim; ++c)
                a.set(r, c, gf::sub(q, a.at(r, c), gf::mul(q, f, a.at(col, c))));
        }
    }
    return d;
}

Elem GFMatrix::serialize() const {
    return Elem(m.begin(), m.begin() + dim * dim);
}

GFMatrix GFMatrix::deserialize(int q, int dim, const Elem& e) {
    GFMatrix r;
    r.q = q;
    r.dim = dim;
    std::copy(e.begin(), e.end(), r.m.begin());
    return r;
}

Elem GFMatrixCarrier::identity() const { return GFMatrix::identity(q_, dim_).serialize(); }

Elem GFMatrixCarrier::compose(const Elem& a, const Elem& b) const {
    return (GFMatrix::deserialize(q_, dim_, a) * GFMatrix::deserialize(q_, dim_, b)).serialize();
}

Elem GFMatrixCarrier::inverse(const Elem& a) const {
    return GFMatrix::deserialize(q_, dim_, a).inverse().serialize();
}

std::string GFMatrixCarrier::describe(const Elem& e) const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < dim_; ++r) {
        if (r) os << "; ";
        for (int c = 0; c < dim_; ++c) {
            if (c) os << " ";
            os << static_cast<int>(e[static_cast<std::size_t>(r * dim_ + c)]);
        }
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// named groups

FiniteGroupModel build_sl23() {
    auto law = std::make_shared<GFMatrixCarrier>(3, 2);
    std::vector<Elem> elems;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    GFMatrix m;
                    m.q = 3;
                    m.dim = 2;
                    m.set(0, 0, static_cast<std::uint8_t>(a));
                    m.set(0, 1, static_cast<std::uint8_t>(b));
                    m.set(1, 0, static_cast<std::uint8_t>(c));
                    m.set(1, 1, static_cast<std::uint8_t>(d));
                    if (m.det() == 1) elems.push_back(m.serialize());
                }
    return model_from_elements(std::move(law), std::move(elems));
}

namespace {

std::uint8_t hermitian_ip(const std::array<std::uint8_t, 3>& u, const std::array<std::uint8_t, 3>& v) {
    std::uint8_t s = 0;
    for (int i = 0; i < 3; ++i) s = gf::add(9, s, gf::mul(9, gf::frobenius(9, u[i]), v[i]));
    return s;
}

}  // namespace

FiniteGroupModel build_gu33() {
    // unit-norm columns of the identity Hermitian form
    std::vector<std::array<std::uint8_t, 3>> unit;
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y)
            for (int z = 0; z < 9; ++z) {
                std::array<std::uint8_t, 3> v{static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y),
                                              static_cast<std::uint8_t>(z)};
                if (hermitian_ip(v, v) == 1) unit.push_back(v);
            }
    std::vector<Elem> elems;
    for (const auto& c0 : unit) {
        for (const auto& c1 : unit) {
            if (hermitian_ip(c0, c1) != 0) continue;
            for (const auto& c2 : unit) {
                if (hermitian_ip(c0, c2) != 0 || hermitian_ip(c1, c2) != 0) continue;
                GFMatrix m;
                m.q = 9;
                m.dim = 3;
                for (int r = 0; r < 3; ++r) {
                    m.set(r, 0, c0[static_cast<std::size_t>(r)]);
                    m.set(r, 1, c1[static_cast<std::size_t>(r)]);
                    m.set(r, 2, c2[static_cast<std::size_t>(r)]);
                }
                elems.push_back(m.serialize());
            }
        }
    }
    return model_from_elements(std::make_shared<GFMatrixCarrier>(9, 3), std::move(elems));
}

FiniteGroupModel build_psu33() {
    FiniteGroupModel gu = build_gu33();
    FiniteGroupModel z = center(gu);
    return quotient(gu, z);
}

// ---------------------------------------------------------------------------
// Sp(6,2)

Sp62 sp62_identity() {
    Sp62 m = 0;
    for (int i = 0; i < 6; ++i) m |= 1ULL << (6 * i + i);
    return m;
}

Sp62 sp62_mul(Sp62 a, Sp62 b) {
    // row r of result = xor of rows of b picked by bits of row r of a
    Sp62 r = 0;
    for (int row = 0; row < 6; ++row) {
        unsigned arow = static_cast<unsigned>((a >> (6 * row)) & 0x3f);
        unsigned out = 0;
        while (arow) {
            const int k = __builtin_ctz(arow);
            arow &= arow - 1;
            out ^= static_cast<unsigned>((b >> (6 * k)) & 0x3f);
        }
        r |= static_cast<Sp62>(out) << (6 * row);
    }
    return r;
}

Sp62 sp62_transpose(Sp62 a) {
    Sp62 r = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (a >> (6 * i + j) & 1) r |= 1ULL << (6 * j + i);
    return r;
}

int sp62_form(unsigned x, unsigned y) {
    const unsigned cross = ((x >> 3) & y & 7u) ^ ((y >> 3) & x & 7u);
    return __builtin_popcount(cross) & 1;
}

unsigned sp62_apply(Sp62 a, unsigned x) {
    unsigned out = 0;
    for (int row = 0; row < 6; ++row) {
        const unsigned arow = static_cast<unsigned>((a >> (6 * row)) & 0x3f);
        out |= static_cast<unsigned>(__builtin_popcount(arow & x) & 1) << row;
    }
    return out;
}

bool sp62_is_symplectic(Sp62 a) {
    unsigned col[6];
    for (int c = 0; c < 6; ++c) {
        unsigned v = 0;
        for (int r = 0; r < 6; ++r) v |= static_cast<unsigned>((a >> (6 * r + c)) & 1) << r;
        col[c] = v;
    }
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) {
            const int want = (j == i + 3 || i == j + 3) ? 1 : 0;
            if (sp62_form(col[i], col[j]) != want) return false;
        }
    return true;
}

Sp62 sp62_transvection(unsigned v) {
    // T_v(x) = x + <x,v> v; column c of the matrix is T_v(e_c)
    Sp62 m = 0;
    for (int c = 0; c < 6; ++c) {
        unsigned img = (1u << c) ^ (sp62_form(1u << c, v) ? v : 0u);
        for (int r = 0; r < 6; ++r)
            if (img >> r & 1) m |= 1ULL << (6 * r + c);
    }
    return m;
}

void sp62_enumerate(const std::function<void(Sp62)>& visit) {
    // choose a symplectic basis (v1,v2,v3,w1,w2,w3): <vi,wj> = delta_ij,
    // <vi,vj> = <wi,wj> = 0; the matrix with columns (v1,v2,v3,w1,w2,w3)
    // is symplectic for J = [[0,I],[I,0]] and all arise exactly once.
    auto emit = [&](unsigned v1, unsigned v2, unsigned v3, unsigned w1, unsigned w2, unsigned w3) {
        const unsigned cols[6] = {v1, v2, v3, w1, w2, w3};
        Sp62 m = 0;
        for (int c = 0; c < 6; ++c)
            for (int r = 0; r < 6; ++r)
                if (cols[c] >> r & 1) m |= 1ULL << (6 * r + c);
        visit(m);
    };
    for (unsigned v1 = 1; v1 < 64; ++v1) {
        for (unsigned w1 = 1; w1 < 64; ++w1) {
            if (sp62_form(v1, w1) != 1) continue;
            for (unsigned v2 = 1; v2 < 64; ++v2) {
                if (sp62_form(v1, v2) != 0 || sp62_form(w1, v2) != 0) continue;
                for (unsigned w2 = 1; w2 < 64; ++w2) {
                    if (sp62_form(v2, w2) != 1) continue;
                    if (sp62_form(v1, w2) != 0 || sp62_form(w1, w2) != 0) continue;
                    for (unsigned v3 = 1; v3 < 64; ++v3) {
                        if (sp62_form(v1, v3) != 0 || sp62_form(w1, v3) != 0 ||
                            sp62_form(v2, v3) != 0 || sp62_form(w2, v3) != 0)
                            continue;
                        for (unsigned w3 = 1; w3 < 64; ++w3) {
                            if (sp62_form(v3, w3) != 1) continue;
                            if (sp62_form(v1, w3) != 0 || sp62_form(w1, w3) != 0 ||
                                sp62_form(v2, w3) != 0 || sp62_form(w2, w3) != 0)
                                continue;
                            emit(v1, v2, v3, w1, w2, w3);
                        }
                    }
                }
            }
        }
    }
}

std::vector<Sp62> sp62_elements() {
    std::vector<Sp62> out;
    out.reserve(1'451'520);
    sp62_enumerate([&](Sp62 m) { out.push_back(m); });
    return out;
}

std::vector<Sp62> sp62_closure(const std::vector<Sp62>& generators, std::size_t limit) {
    std::vector<Sp62> elems;
    std::unordered_set<Sp62> seen;
    elems.push_back(sp62_identity());
    seen.insert(elems[0]);
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (Sp62 g : generators) {
            const Sp62 p = sp62_mul(elems[head], g);
            if (seen.insert(p).second) {
                elems.push_back(p);
                if (elems.size() > limit)
                    throw SizeLimitError("sp62_closure: exceeded limit " + std::to_string(limit));
            }
        }
    }
    return elems;
}

Elem sp62_to_elem(Sp62 a) {
    Elem e(36);
    for (int i = 0; i < 36; ++i) e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((a >> i) & 1);
    return e;
}

Sp62 sp62_from_elem(const Elem& e) {
    Sp62 a = 0;
    for (int i = 0; i < 36; ++i)
        if (e[static_cast<std::size_t>(i)]) a |= 1ULL << i;
    return a;
}

}  // namespace sicverify
