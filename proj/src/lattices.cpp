#include "sicverify/lattices.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace sicverify {

Rational family_ip(const VectorFamily& f, std::size_t i, std::size_t j) {
    const auto& u = f.vectors[i];
    const auto& v = f.vectors[j];
    Rational s(0);
    for (std::size_t a = 0; a < u.size(); ++a) {
        if (u[a].is_zero()) continue;
        for (std::size_t b = 0; b < v.size(); ++b) {
            if (v[b].is_zero()) continue;
            s += u[a] * f.form[a][b] * v[b];
        }
    }
    return s;
}

std::vector<std::vector<Rational>> gram(const VectorFamily& f) {
    const std::size_t n = f.vectors.size();
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = family_ip(f, i, j);
    return g;
}

VectorFamily eisenstein_family(const std::vector<EisensteinInt>& zs) {
    VectorFamily f;
    // Re(z * conj(w)) for z = a+bw, w = c+dw is ac + bd - (ad + bc)/2
    f.form = {{Rational(1), Rational(-1, 2)}, {Rational(-1, 2), Rational(1)}};
    for (const auto& z : zs) f.vectors.push_back({Rational(z.a), Rational(z.b)});
    return f;
}

VectorFamily quaternion_family(const std::vector<Quaternion>& qs) {
    VectorFamily f;
    f.form.assign(4, std::vector<Rational>(4, Rational(0)));
    for (int i = 0; i < 4; ++i) f.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Rational(1);
    for (const auto& q : qs) f.vectors.push_back({q.w, q.x, q.y, q.z});
    return f;
}

VectorFamily octonion_family(const std::vector<Octonion>& os) {
    VectorFamily f;
    f.form.assign(8, std::vector<Rational>(8, Rational(0)));
    for (int i = 0; i < 8; ++i) f.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Rational(1);
    for (const auto& o : os) f.vectors.push_back(std::vector<Rational>(o.c.begin(), o.c.end()));
    return f;
}

VectorFamily scale_form(VectorFamily f, const Rational& factor) {
    for (auto& row : f.form)
        for (auto& x : row) x = x * factor;
    return f;
}

namespace {

std::size_t coordinate_rank(const VectorFamily& f) {
    // rank of the coordinate matrix; the forms in use are positive definite,
    // so this equals the Gram rank
    std::vector<std::vector<Rational>> rows = f.vectors;
    const std::size_t dim = f.ambient_dim();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const Rational factor = rows[r][col] / rows[rank][col];
            for (std::size_t c2 = col; c2 < dim; ++c2) rows[r][c2] -= factor * rows[rank][c2];
        }
        ++rank;
    }
    return rank;
}

std::string vec_key(const std::vector<Rational>& v) {
    std::string k;
    for (const auto& x : v) {
        k += x.str();
        k += "|";
    }
    return k;
}

Rational det_rational(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r) {
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            const Rational factor = a[r][col] / a[col][col];
            for (std::size_t c2 = col; c2 < n; ++c2) a[r][c2] -= factor * a[col][c2];
        }
    }
    return det;
}

}  // namespace

RootSystemID identify_root_system(const VectorFamily& f) {
    RootSystemID id;
    id.root_count = f.vectors.size();
    if (f.vectors.empty()) return id;

    const Rational s = family_ip(f, 0, 0);
    for (std::size_t i = 0; i < f.vectors.size(); ++i) {
        if (family_ip(f, i, i) != s) {
            id.mixed_norms = true;
            return id;
        }
    }

    id.rank = coordinate_rank(f);

    const Rational half = s / Rational(2);
    bool simply_laced = true;
    for (std::size_t i = 0; i < f.vectors.size(); ++i) {
        for (std::size_t j = i + 1; j < f.vectors.size(); ++j) {
            const Rational ip = family_ip(f, i, j);
            id.inner_product_multiset[ip.str()] += 2;
            if (!(ip.is_zero() || ip == half || ip == -half || ip == s || ip == -s))
                simply_laced = false;
        }
    }

    // reflection closure: s_a(b) = b - (2 <b,a> / <a,a>) a stays in the family
    std::unordered_set<std::string> members;
    for (const auto& v : f.vectors) members.insert(vec_key(v));
    id.reflection_closed = true;
    const std::size_t dim = f.ambient_dim();
    for (std::size_t a = 0; a < f.vectors.size() && id.reflection_closed; ++a) {
        for (std::size_t b = 0; b < f.vectors.size(); ++b) {
            const Rational factor = Rational(2) * family_ip(f, b, a) / s;
            std::vector<Rational> refl(dim);
            for (std::size_t c = 0; c < dim; ++c)
                refl[c] = f.vectors[b][c] - factor * f.vectors[a][c];
            if (members.find(vec_key(refl)) == members.end()) {
                id.reflection_closed = false;
                break;
            }
        }
    }
    if (!id.reflection_closed || !simply_laced) return id;

    if (id.root_count == 6 && id.rank == 2) {
        id.label = RootLabel::A2;
    } else if (id.root_count == 24 && id.rank == 4) {
        id.label = RootLabel::D4;
    } else if (id.root_count == 240 && id.rank == 8) {
        // E8 additionally needs even unimodularity at norm 2
        const VectorFamily scaled = scale_form(f, Rational(2) / s);
        id.even_unimodular = is_even_unimodular(scaled);
        if (*id.even_unimodular) id.label = RootLabel::E8;
    }
    return id;
}

namespace {

// basis of the integer row span, by unimodular row operations
std::vector<std::vector<mpz_class>> integer_span_basis(const std::vector<std::vector<mpz_class>>& rows) {
    const std::size_t dim = rows.empty() ? 0 : rows[0].size();
    std::vector<std::vector<mpz_class>> basis;   // echelon rows
    std::vector<std::size_t> pivot_col;
    for (const auto& row_in : rows) {
        std::vector<mpz_class> v = row_in;
        for (std::size_t c = 0; c < dim; ++c) {
            if (sgn(v[c]) == 0) continue;
            std::size_t p = basis.size();
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (pivot_col[k] == c) {
                    p = k;
                    break;
                }
            }
            if (p == basis.size()) {
                basis.push_back(v);
                pivot_col.push_back(c);
                v.clear();
                break;
            }
            mpz_class g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), basis[p][c].get_mpz_t(),
                       v[c].get_mpz_t());
            const mpz_class pc = basis[p][c] / g;
            const mpz_class vc = v[c] / g;
            for (std::size_t c2 = 0; c2 < dim; ++c2) {
                const mpz_class np = x * basis[p][c2] + y * v[c2];
                const mpz_class nv = pc * v[c2] - vc * basis[p][c2];
                basis[p][c2] = np;
                v[c2] = nv;
            }
        }
    }
    return basis;
}

}  // namespace

LatticeBasisInfo lattice_basis(const VectorFamily& f) {
    // clear denominators
    mpz_class lcm(1);
    for (const auto& v : f.vectors)
        for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
    std::vector<std::vector<mpz_class>> rows;
    rows.reserve(f.vectors.size());
    for (const auto& v : f.vectors) {
        std::vector<mpz_class> r;
        r.reserve(v.size());
        for (const auto& x : v) r.push_back(x.numerator() * (lcm / x.denominator()));
        rows.push_back(std::move(r));
    }
    const auto ibasis = integer_span_basis(rows);

    LatticeBasisInfo info;
    const Rational scale(mpz_class(1), lcm);
    for (const auto& r : ibasis) {
        std::vector<Rational> v;
        v.reserve(r.size());
        for (const auto& x : r) v.push_back(Rational(x) * scale);
        info.basis.push_back(std::move(v));
    }

    VectorFamily bf{info.basis, f.form};
    info.gram = gram(bf);
    info.gram_det = det_rational(info.gram);
    info.all_diagonal_even = true;
    for (std::size_t i = 0; i < info.gram.size(); ++i)
        info.all_diagonal_even = info.all_diagonal_even && info.gram[i][i].is_even_integer();
    return info;
}

bool is_even_unimodular(const VectorFamily& f) {
    const LatticeBasisInfo info = lattice_basis(f);
    return info.gram_det == Rational(1) && info.all_diagonal_even;
}

const char* root_label_name(RootLabel label) {
    switch (label) {
        case RootLabel::A2: return "A2";
        case RootLabel::D4: return "D4";
        case RootLabel::E8: return "E8";
        default: return "unknown";
    }
}

}  // namespace sicverify
