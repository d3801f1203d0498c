#include "sicverify/algebras.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace sicverify {

// ---------------------------------------------------------------------------
// Eisenstein units

EisensteinUnitGroup eisenstein_units() {
    std::vector<EisensteinInt> units;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            if (EisensteinInt{a, b}.norm() == 1) units.push_back({a, b});

    const auto n = units.size();
    auto key = [](const EisensteinRational& z) { return z.str(); };
    std::map<std::string, std::uint16_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(key(units[i].value()), static_cast<std::uint16_t>(i));
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] = index.at(key(units[i].value() * units[j].value()));

    auto law = std::make_shared<TableCarrier>(n, std::move(table));
    std::vector<Elem> elems;
    for (std::uint16_t i = 0; i < n; ++i) elems.push_back(TableCarrier::encode(i));
    return EisensteinUnitGroup{std::move(units), model_from_elements(std::move(law), std::move(elems))};
}

// ---------------------------------------------------------------------------
// Hurwitz units

HurwitzUnitGroup hurwitz_units() {
    // doubled coordinates: all even (Lipschitz) or all odd (half-integer)
    std::vector<Quaternion> units;
    std::vector<std::array<int, 4>> doubled;
    std::array<int, 4> d{};
    for (d[0] = -2; d[0] <= 2; ++d[0])
        for (d[1] = -2; d[1] <= 2; ++d[1])
            for (d[2] = -2; d[2] <= 2; ++d[2])
                for (d[3] = -2; d[3] <= 2; ++d[3]) {
                    if (d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3] != 4) continue;
                    const bool all_even = (d[0] | d[1] | d[2] | d[3]) % 2 == 0;
                    bool all_odd = true;
                    for (int c : d) all_odd = all_odd && (c % 2 != 0);
                    if (!all_even && !all_odd) continue;
                    units.emplace_back(Rational(d[0], 2), Rational(d[1], 2), Rational(d[2], 2),
                                       Rational(d[3], 2));
                    doubled.push_back(d);
                }

    const auto n = units.size();
    auto key = [](const std::array<int, 4>& v) {
        return (v[0] + 2) | ((v[1] + 2) << 3) | ((v[2] + 2) << 6) | ((v[3] + 2) << 9);
    };
    std::unordered_map<int, std::uint16_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(key(doubled[i]), static_cast<std::uint16_t>(i));
    std::vector<std::uint16_t> table(n * n);
    const Rational two(2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Quaternion p = units[i] * units[j];
            std::array<int, 4> pd{};
            const Rational coords[4] = {p.w * two, p.x * two, p.y * two, p.z * two};
            for (int k = 0; k < 4; ++k) {
                if (!coords[k].is_integer()) throw std::logic_error("hurwitz_units: non half-integer product");
                pd[static_cast<std::size_t>(k)] = static_cast<int>(coords[k].numerator().get_si());
            }
            auto it = index.find(key(pd));
            if (it == index.end()) throw std::logic_error("hurwitz_units: product left the unit set");
            table[i * n + j] = it->second;
        }
    }

    auto law = std::make_shared<TableCarrier>(n, std::move(table));
    std::vector<Elem> elems;
    for (std::uint16_t i = 0; i < n; ++i) elems.push_back(TableCarrier::encode(i));
    return HurwitzUnitGroup{std::move(units), model_from_elements(std::move(law), std::move(elems))};
}

// ---------------------------------------------------------------------------
// Cayley ring

namespace {

constexpr int kFanoTriples[7][3] = {
    {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5},
};

std::vector<unsigned> halving_code_with_swap(int t) {
    std::vector<unsigned> gens;
    for (const auto& tr : kFanoTriples) {
        unsigned mask = 1u;  // coordinate 0
        for (int i : tr) mask |= 1u << i;
        if (t != 0) {
            // exchange coordinates 0 and t in the support
            const bool has0 = mask & 1u, hast = mask & (1u << t);
            mask &= ~((1u << t) | 1u);
            if (has0) mask |= 1u << t;
            if (hast) mask |= 1u;
        }
        gens.push_back(mask);
    }
    std::vector<unsigned> code{0};
    for (unsigned g : gens) {
        std::vector<unsigned> next = code;
        for (unsigned c : code) {
            if (std::find(code.begin(), code.end(), c ^ g) == code.end() &&
                std::find(next.begin(), next.end(), c ^ g) == next.end())
                next.push_back(c ^ g);
        }
        code = std::move(next);
    }
    std::sort(code.begin(), code.end());
    return code;
}

// lattice basis from the code: half-lifts of a reduced row echelon basis of
// the code plus unit vectors on the non-pivot coordinates
std::array<Octonion, 8> basis_from_code(const std::vector<unsigned>& code) {
    std::vector<unsigned> work;
    for (unsigned c : code)
        if (c != 0) work.push_back(c);
    // reduced row echelon form over F2; each pivot ends up in one row only
    std::vector<unsigned> basis_rows;
    for (int bit = 0; bit < 8; ++bit) {
        auto it = std::find_if(work.begin(), work.end(), [&](unsigned r) { return r >> bit & 1; });
        if (it == work.end()) continue;
        const unsigned pivot_row = *it;
        work.erase(it);
        for (auto& r : work)
            if (r >> bit & 1) r ^= pivot_row;
        for (auto& r : basis_rows)
            if (r >> bit & 1) r ^= pivot_row;
        basis_rows.push_back(pivot_row);
    }
    if (basis_rows.size() != 4) throw std::logic_error("basis_from_code: code rank is not 4");
    unsigned pivots = 0;
    for (unsigned r : basis_rows) pivots |= 1u << __builtin_ctz(r);

    std::array<Octonion, 8> basis;
    std::size_t k = 0;
    for (unsigned r : basis_rows) {
        std::array<Rational, 8> coords{};
        for (int i = 0; i < 8; ++i)
            if (r >> i & 1) coords[static_cast<std::size_t>(i)] = Rational(1, 2);
        basis[k++] = Octonion(coords);
    }
    for (int i = 0; i < 8 && k < 8; ++i) {
        if (pivots >> i & 1) continue;
        basis[k++] = Octonion::basis(i);
    }
    if (k != 8) throw std::logic_error("basis_from_code: rank defect");
    return basis;
}

bool doubled_from_octonion(const Octonion& x, std::array<int, 8>& out) {
    const Rational two(2);
    for (int i = 0; i < 8; ++i) {
        const Rational d = x.c[static_cast<std::size_t>(i)] * two;
        if (!d.is_integer()) return false;
        out[static_cast<std::size_t>(i)] = static_cast<int>(d.numerator().get_si());
    }
    return true;
}

}  // namespace

CayleyRing::CayleyRing() {
    for (int t = 0; t < 8; ++t) {
        code_ = halving_code_with_swap(t);
        basis_ = basis_from_code(code_);
        bool closed = true;
        for (int i = 0; i < 8 && closed; ++i)
            for (int j = 0; j < 8 && closed; ++j)
                closed = contains(basis_[static_cast<std::size_t>(i)] * basis_[static_cast<std::size_t>(j)]);
        if (closed) {
            swap_ = t;
            return;
        }
    }
    throw std::runtime_error("CayleyRing: no multiplicatively closed halving system found");
}

bool CayleyRing::contains_doubled(const std::array<int, 8>& doubled) const {
    unsigned parity = 0;
    for (int i = 0; i < 8; ++i)
        if (doubled[static_cast<std::size_t>(i)] & 1) parity |= 1u << i;
    return std::binary_search(code_.begin(), code_.end(), parity);
}

bool CayleyRing::contains(const Octonion& x) const {
    std::array<int, 8> d{};
    if (!doubled_from_octonion(x, d)) return false;
    return contains_doubled(d);
}

// ---------------------------------------------------------------------------
// unit loop

namespace {

// doubled-coordinate octonion product: (2u)(2v) = 4uv, so halving the
// integer product of doubled vectors doubles the true product
std::array<int, 8> doubled_mul(const std::array<std::int8_t, 8>& x, const std::array<std::int8_t, 8>& y) {
    std::array<int, 8> r{};
    for (int i = 0; i < 8; ++i) {
        if (x[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < 8; ++j) {
            if (y[static_cast<std::size_t>(j)] == 0) continue;
            const auto bp = Octonion::basis_mul(i, j);
            r[static_cast<std::size_t>(bp.index)] +=
                bp.sign * x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
        }
    }
    return r;
}

}  // namespace

std::uint32_t UnitLoop::doubled_key(const std::array<std::int8_t, 8>& d) {
    std::uint32_t k = 0;
    for (int i = 0; i < 8; ++i)
        k |= static_cast<std::uint32_t>(d[static_cast<std::size_t>(i)] + 2) << (3 * i);
    return k;
}

UnitLoop::UnitLoop(const CayleyRing& ring) {
    std::array<int, 8> d{};
    std::array<std::int8_t, 8> d8{};
    // lexicographic scan of doubled coordinates in {-2..2}^8
    std::array<int, 8> c{};
    for (c[0] = -2; c[0] <= 2; ++c[0])
        for (c[1] = -2; c[1] <= 2; ++c[1])
            for (c[2] = -2; c[2] <= 2; ++c[2])
                for (c[3] = -2; c[3] <= 2; ++c[3])
                    for (c[4] = -2; c[4] <= 2; ++c[4])
                        for (c[5] = -2; c[5] <= 2; ++c[5])
                            for (c[6] = -2; c[6] <= 2; ++c[6])
                                for (c[7] = -2; c[7] <= 2; ++c[7]) {
                                    int norm4 = 0;
                                    for (int v : c) norm4 += v * v;
                                    if (norm4 != 4) continue;
                                    d = c;
                                    if (!ring.contains_doubled(d)) continue;
                                    std::array<Rational, 8> coords{};
                                    for (int i = 0; i < 8; ++i) {
                                        coords[static_cast<std::size_t>(i)] =
                                            Rational(c[static_cast<std::size_t>(i)], 2);
                                        d8[static_cast<std::size_t>(i)] =
                                            static_cast<std::int8_t>(c[static_cast<std::size_t>(i)]);
                                    }
                                    units_.emplace_back(coords);
                                    doubled_.push_back(d8);
                                }
    if (units_.size() != 240)
        throw std::runtime_error("UnitLoop: expected 240 norm-1 elements, found " +
                                 std::to_string(units_.size()));

    for (int i = 0; i < 240; ++i) index_.emplace(doubled_key(doubled_[static_cast<std::size_t>(i)]), i);

    table_.resize(240 * 240);
    for (int i = 0; i < 240; ++i) {
        for (int j = 0; j < 240; ++j) {
            const std::array<int, 8> p =
                doubled_mul(doubled_[static_cast<std::size_t>(i)], doubled_[static_cast<std::size_t>(j)]);
            std::array<std::int8_t, 8> half{};
            for (int k = 0; k < 8; ++k) {
                if (p[static_cast<std::size_t>(k)] % 2 != 0)
                    throw std::logic_error("UnitLoop: product not in the ring");
                half[static_cast<std::size_t>(k)] = static_cast<std::int8_t>(p[static_cast<std::size_t>(k)] / 2);
            }
            auto it = index_.find(doubled_key(half));
            if (it == index_.end()) throw std::logic_error("UnitLoop: unit product is not a unit");
            table_[static_cast<std::size_t>(i) * 240 + static_cast<std::size_t>(j)] =
                static_cast<std::uint8_t>(it->second);
        }
    }

    neg_.resize(240);
    inv_.resize(240);
    for (int i = 0; i < 240; ++i) {
        std::array<std::int8_t, 8> n{}, cj{};
        for (int k = 0; k < 8; ++k) {
            n[static_cast<std::size_t>(k)] = static_cast<std::int8_t>(-doubled_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
            cj[static_cast<std::size_t>(k)] = static_cast<std::int8_t>(
                (k == 0 ? 1 : -1) * doubled_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
        }
        neg_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(index_.at(doubled_key(n)));
        inv_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(index_.at(doubled_key(cj)));
    }
    std::array<std::int8_t, 8> one_d{};
    one_d[0] = 2;
    one_ = index_.at(doubled_key(one_d));
}

std::optional<int> UnitLoop::index_of_doubled(const std::array<int, 8>& d) const {
    std::array<std::int8_t, 8> d8{};
    for (int i = 0; i < 8; ++i) {
        if (d[static_cast<std::size_t>(i)] < -2 || d[static_cast<std::size_t>(i)] > 2) return std::nullopt;
        d8[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(d[static_cast<std::size_t>(i)]);
    }
    auto it = index_.find(doubled_key(d8));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool UnitLoop::moufang_left_exhaustive() const {
    const std::uint8_t* t = table_.data();
    for (int z = 0; z < 240; ++z) {
        const std::uint8_t* zrow = t + static_cast<std::size_t>(z) * 240;
        for (int x = 0; x < 240; ++x) {
            const std::uint8_t* xrow = t + static_cast<std::size_t>(x) * 240;
            const int zx = t[static_cast<std::size_t>(z) * 240 + static_cast<std::size_t>(x)];
            const int zxz = t[static_cast<std::size_t>(zx) * 240 + static_cast<std::size_t>(z)];
            const std::uint8_t* lrow = t + static_cast<std::size_t>(zxz) * 240;
            for (int y = 0; y < 240; ++y) {
                const int zy = zrow[y];
                if (zrow[xrow[zy]] != lrow[y]) return false;
            }
        }
    }
    return true;
}

bool UnitLoop::moufang_sampled(std::size_t samples_per_form) const {
    std::mt19937 rng(0x5eedu);
    auto next = [&]() { return static_cast<int>(rng() % 240); };
    for (std::size_t s = 0; s < samples_per_form; ++s) {
        const int x = next(), y = next(), z = next();
        // x(z(yz)) = ((xz)y)z
        if (mul(x, mul(z, mul(y, z))) != mul(mul(mul(x, z), y), z)) return false;
    }
    for (std::size_t s = 0; s < samples_per_form; ++s) {
        const int x = next(), y = next(), z = next();
        // (zx)(yz) = z((xy)z)
        if (mul(mul(z, x), mul(y, z)) != mul(z, mul(mul(x, y), z))) return false;
    }
    return true;
}

std::optional<std::array<int, 3>> UnitLoop::first_associativity_failure() const {
    for (int i = 0; i < 240; ++i)
        for (int j = 0; j < 240; ++j) {
            const int ij = mul(i, j);
            for (int k = 0; k < 240; ++k)
                if (mul(ij, k) != mul(i, mul(j, k))) return std::array<int, 3>{i, j, k};
        }
    return std::nullopt;
}

UnitLoop cayley_units(const CayleyRing& ring) { return UnitLoop(ring); }

// ---------------------------------------------------------------------------
// automorphisms

Octonion OctonionAutomorphism::apply(const Octonion& x) const {
    std::array<Rational, 8> out{};
    for (int c = 0; c < 8; ++c) {
        if (x.c[static_cast<std::size_t>(c)].is_zero()) continue;
        for (int r = 0; r < 8; ++r)
            out[static_cast<std::size_t>(r)] +=
                matrix[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * x.c[static_cast<std::size_t>(c)];
    }
    return Octonion(out);
}

OctonionAutomorphism automorphism_matrix(const UnitLoop& loop, const std::array<int, 3>& triple) {
    const int a = triple[0], b = triple[1], c = triple[2];
    const int cols[8] = {loop.one(), a,
                         b,          loop.mul(a, b),
                         c,          loop.mul(a, c),
                         loop.mul(b, c), loop.mul(loop.mul(a, b), c)};
    OctonionAutomorphism out;
    for (int col = 0; col < 8; ++col) {
        const auto& d = loop.doubled(cols[col]);
        for (int r = 0; r < 8; ++r)
            out.matrix[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] =
                Rational(d[static_cast<std::size_t>(r)], 2);
    }
    return out;
}

CayleyAutomorphisms cayley_automorphisms(const CayleyRing& ring, const UnitLoop& loop) {
    const int n = loop.size();
    std::vector<int> imag;
    for (int i = 0; i < n; ++i)
        if (loop.doubled(i)[0] == 0) imag.push_back(i);

    auto dot = [&](int i, int j) {
        int s = 0;
        const auto& u = loop.doubled(i);
        const auto& v = loop.doubled(j);
        for (int k = 0; k < 8; ++k)
            s += u[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(k)];
        return s;
    };

    // doubled coordinates of the ring basis, for the lattice-preservation gate
    std::array<std::array<int, 8>, 8> dbasis{};
    for (int i = 0; i < 8; ++i) {
        if (!doubled_from_octonion(ring.basis()[static_cast<std::size_t>(i)], dbasis[static_cast<std::size_t>(i)]))
            throw std::logic_error("cayley_automorphisms: basis not half-integral");
    }

    std::vector<std::array<int, 3>> triples;
    std::vector<Elem> perms;

    std::array<const std::int8_t*, 8> dcol{};
    static const std::array<std::int8_t, 8> one_doubled{2, 0, 0, 0, 0, 0, 0, 0};

    for (int ia : imag) {
        for (int ib : imag) {
            if (dot(ia, ib) != 0) continue;
            const int iab = loop.mul(ia, ib);
            for (int ic : imag) {
                if (dot(ic, ia) != 0 || dot(ic, ib) != 0 || dot(ic, iab) != 0) continue;

                const int cols[8] = {loop.one(), ia,  ib,  iab,
                                     ic,         loop.mul(ia, ic), loop.mul(ib, ic),
                                     loop.mul(iab, ic)};
                // multiplication preserved on all basis pairs, via the table
                bool ok = true;
                for (int i = 1; i < 8 && ok; ++i) {
                    for (int j = 1; j < 8; ++j) {
                        const int lhs = loop.mul(cols[i], cols[j]);
                        const auto bp = Octonion::basis_mul(i, j);
                        const int base = bp.index == 0 ? loop.one() : cols[bp.index];
                        const int rhs = bp.sign > 0 ? base : loop.negate(base);
                        if (lhs != rhs) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (!ok) continue;

                dcol[0] = one_doubled.data();
                for (int i = 1; i < 8; ++i) dcol[static_cast<std::size_t>(i)] = loop.doubled(cols[i]).data();

                // ring preserved: images of the 8 basis vectors stay in the ring
                for (int bidx = 0; bidx < 8 && ok; ++bidx) {
                    std::array<int, 8> img{};
                    for (int i = 0; i < 8; ++i) {
                        const int coeff = dbasis[static_cast<std::size_t>(bidx)][static_cast<std::size_t>(i)];
                        if (coeff == 0) continue;
                        for (int r = 0; r < 8; ++r)
                            img[static_cast<std::size_t>(r)] += coeff * dcol[static_cast<std::size_t>(i)][r];
                    }
                    for (int r = 0; r < 8 && ok; ++r) ok = img[static_cast<std::size_t>(r)] % 2 == 0;
                    if (!ok) break;
                    std::array<int, 8> half{};
                    for (int r = 0; r < 8; ++r) half[static_cast<std::size_t>(r)] = img[static_cast<std::size_t>(r)] / 2;
                    ok = ring.contains_doubled(half);
                }
                if (!ok) continue;

                // induced permutation of the 240 units
                Elem perm(static_cast<std::size_t>(n));
                for (int u = 0; u < n && ok; ++u) {
                    std::array<int, 8> img{};
                    const auto& du = loop.doubled(u);
                    for (int i = 0; i < 8; ++i) {
                        const int coeff = du[static_cast<std::size_t>(i)];
                        if (coeff == 0) continue;
                        for (int r = 0; r < 8; ++r)
                            img[static_cast<std::size_t>(r)] += coeff * dcol[static_cast<std::size_t>(i)][r];
                    }
                    bool even = true;
                    for (int r = 0; r < 8; ++r) even = even && img[static_cast<std::size_t>(r)] % 2 == 0;
                    if (!even) {
                        ok = false;
                        break;
                    }
                    std::array<int, 8> half{};
                    for (int r = 0; r < 8; ++r) half[static_cast<std::size_t>(r)] = img[static_cast<std::size_t>(r)] / 2;
                    const auto idx = loop.index_of_doubled(half);
                    if (!idx) {
                        ok = false;
                        break;
                    }
                    perm[static_cast<std::size_t>(u)] = static_cast<std::uint8_t>(*idx);
                }
                if (!ok) continue;

                triples.push_back({ia, ib, ic});
                perms.push_back(std::move(perm));
            }
        }
    }

    FiniteGroupModel group = model_from_elements(std::make_shared<PermCarrier>(n), std::move(perms));
    return CayleyAutomorphisms{std::move(triples), std::move(group)};
}

}  // namespace sicverify
