#include "sicverify/sic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace sicverify {

namespace {

template <class S>
S inner_product(const std::vector<S>& u, const std::vector<S>& v) {
    S s{};
    for (std::size_t i = 0; i < u.size(); ++i) s = s + u[i].conj() * v[i];
    return s;
}

EisensteinRational omega_pow(int k) {
    static const EisensteinRational w[3] = {
        EisensteinRational(Rational(1)),
        EisensteinRational(Rational(0), Rational(1)),
        EisensteinRational(Rational(-1), Rational(-1)),
    };
    return w[((k % 3) + 3) % 3];
}

}  // namespace

SicSystem<EisensteinRational> wh_qutrit_orbit(const std::vector<EisensteinRational>& fiducial) {
    if (fiducial.size() != 3) throw std::invalid_argument("wh_qutrit_orbit: need 3 coordinates");
    SicSystem<EisensteinRational> s;
    s.d = 3;
    s.vectors.resize(9);
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            std::vector<EisensteinRational> v(3);
            for (int j = 0; j < 3; ++j) {
                const int src = ((j - a) % 3 + 3) % 3;
                v[static_cast<std::size_t>(j)] =
                    omega_pow(b * src) * fiducial[static_cast<std::size_t>(src)];
            }
            s.vectors[static_cast<std::size_t>(3 * a + b)] = std::move(v);
        }
    }
    s.norm_sq = inner_product(s.vectors[0], s.vectors[0]).a;
    return s;
}

SicSystem<GaussianRational> pauli3_orbit(const std::vector<GaussianRational>& fiducial) {
    if (fiducial.size() != 8) throw std::invalid_argument("pauli3_orbit: need 8 coordinates");
    SicSystem<GaussianRational> s;
    s.d = 8;
    s.vectors.resize(64);
    for (unsigned p = 0; p < 64; ++p) {
        const unsigned a = p & 7, b = (p >> 3) & 7;
        std::vector<GaussianRational> v(8);
        for (unsigned j = 0; j < 8; ++j) {
            const unsigned src = j ^ a;
            const bool flip = __builtin_popcount(b & src) & 1;
            v[j] = flip ? -fiducial[src] : fiducial[src];
        }
        s.vectors[p] = std::move(v);
    }
    s.norm_sq = inner_product(s.vectors[0], s.vectors[0]).re;
    return s;
}

SicSystem<EisensteinRational> hesse_sic() {
    return wh_qutrit_orbit({EisensteinRational(Rational(0)), EisensteinRational(Rational(1)),
                            EisensteinRational(Rational(-1))});
}

SicSystem<GaussianRational> hoggar_sic() {
    std::vector<GaussianRational> f(8, GaussianRational(Rational(1)));
    f[0] = GaussianRational(Rational(-1), Rational(2));
    return pauli3_orbit(f);
}

template <class S>
bool verify_sic(const SicSystem<S>& s) {
    const auto n = s.size();
    const Rational ns = s.norm_sq;
    const Rational ns2 = ns * ns;
    const Rational dp1(s.d + 1);
    const S ns_scalar{ns};
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j; k < n; ++k) {
            const S ip = inner_product(s.vectors[j], s.vectors[k]);
            if (j == k) {
                if (ip != ns_scalar) return false;
            } else {
                if (dp1 * ip.norm() != ns2) return false;
            }
        }
    }
    return true;
}

template <class S>
TripleProductTable<S>::TripleProductTable(const SicSystem<S>& s) : n_(static_cast<int>(s.size())) {
    ip_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p)
        for (int q = 0; q < n_; ++q)
            ip_[static_cast<std::size_t>(p * n_ + q)] =
                inner_product(s.vectors[static_cast<std::size_t>(p)],
                              s.vectors[static_cast<std::size_t>(q)]);
    t0_.resize(ip_.size());
    std::map<std::string, std::uint8_t> ids;
    tid_.resize(ip_.size());
    cid_.resize(ip_.size());
    for (int p = 0; p < n_; ++p) {
        for (int q = 0; q < n_; ++q) {
            const S t = ip(0, p) * ip(p, q) * ip(q, 0);
            t0_[static_cast<std::size_t>(p * n_ + q)] = t;
            auto [it, fresh] = ids.emplace(t.str(), static_cast<std::uint8_t>(ids.size()));
            if (fresh && ids.size() > 255) throw std::logic_error("TripleProductTable: id overflow");
            tid_[static_cast<std::size_t>(p * n_ + q)] = it->second;
        }
    }
    for (std::size_t i = 0; i < t0_.size(); ++i) {
        auto it = ids.find(t0_[i].conj().str());
        // conj T(0,p,q) = T(0,q,p), so the conjugate value is always present
        if (it == ids.end()) throw std::logic_error("TripleProductTable: conjugate value missing");
        cid_[i] = it->second;
    }
}

template <class S>
S TripleProductTable<S>::triple(int p, int q, int r) const {
    return ip(p, q) * ip(q, r) * ip(r, p);
}

// ---------------------------------------------------------------------------
// Hesse symmetry scan

HesseSymmetries hesse_symmetries(const TripleProductTable<EisensteinRational>& t) {
    if (t.n() != 9) throw std::invalid_argument("hesse_symmetries: need the 9-label table");

    // dense ids for all 729 general triples and their conjugates
    std::map<std::string, std::uint8_t> ids;
    std::uint8_t tid[9][9][9];
    std::uint8_t cid[9][9][9];
    for (int p = 0; p < 9; ++p)
        for (int q = 0; q < 9; ++q)
            for (int r = 0; r < 9; ++r) {
                const EisensteinRational v = t.triple(p, q, r);
                auto [it, fresh] = ids.emplace(v.str(), static_cast<std::uint8_t>(ids.size()));
                (void)fresh;
                tid[p][q][r] = it->second;
            }
    for (int p = 0; p < 9; ++p)
        for (int q = 0; q < 9; ++q)
            for (int r = 0; r < 9; ++r) {
                auto it = ids.find(t.triple(p, q, r).conj().str());
                cid[p][q][r] = it == ids.end() ? 255 : it->second;
            }

    std::vector<Elem> unitary;
    std::size_t anti = 0;
    std::array<std::uint8_t, 9> perm{0, 1, 2, 3, 4, 5, 6, 7, 8};
    do {
        bool still_u = true, still_a = true;
        for (int p = 0; p < 9 && (still_u || still_a); ++p)
            for (int q = 0; q < 9 && (still_u || still_a); ++q)
                for (int r = 0; r < 9; ++r) {
                    const std::uint8_t img = tid[perm[static_cast<std::size_t>(p)]]
                                                [perm[static_cast<std::size_t>(q)]]
                                                [perm[static_cast<std::size_t>(r)]];
                    if (still_u && img != tid[p][q][r]) still_u = false;
                    if (still_a && img != cid[p][q][r]) still_a = false;
                    if (!still_u && !still_a) break;
                }
        if (still_u) unitary.emplace_back(perm.begin(), perm.end());
        if (still_a) ++anti;
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto carrier = std::make_shared<PermCarrier>(9);
    std::vector<Elem> stab0;
    for (const Elem& e : unitary)
        if (e[0] == 0) stab0.push_back(e);

    HesseSymmetries out{model_from_elements(carrier, std::move(unitary)),
                        model_from_elements(carrier, std::move(stab0)), anti};
    return out;
}

// ---------------------------------------------------------------------------
// Hoggar stabilizer scan

namespace {

struct ScanChunk {
    std::vector<Sp62> unitary;
    std::vector<Sp62> antiunitary;
};

void scan_range(const std::vector<Sp62>& stream, std::size_t lo, std::size_t hi,
                const std::uint8_t* tid, const std::uint8_t* cid, ScanChunk& out) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
        const Sp62 m = stream[idx];
        unsigned col[6];
        for (int c = 0; c < 6; ++c) {
            unsigned v = 0;
            for (int r = 0; r < 6; ++r) v |= static_cast<unsigned>((m >> (6 * r + c)) & 1) << r;
            col[c] = v;
        }
        std::uint8_t img[64];
        img[0] = 0;
        for (unsigned x = 1; x < 64; ++x)
            img[x] = static_cast<std::uint8_t>(img[x & (x - 1)] ^ col[__builtin_ctz(x)]);

        bool still_u = true, still_a = true;
        for (unsigned p = 0; p < 64 && (still_u || still_a); ++p) {
            const std::uint8_t* trow = tid + p * 64;
            const std::uint8_t* crow = cid + p * 64;
            const unsigned ip64 = static_cast<unsigned>(img[p]) * 64;
            for (unsigned q = 0; q < 64; ++q) {
                const std::uint8_t v = tid[ip64 + img[q]];
                if (still_u && v != trow[q]) still_u = false;
                if (still_a && v != crow[q]) still_a = false;
                if (!still_u && !still_a) break;
            }
        }
        if (still_u) out.unitary.push_back(m);
        if (still_a) out.antiunitary.push_back(m);
    }
}

}  // namespace

HoggarStabilizer hoggar_stabilizer(const TripleProductTable<GaussianRational>& t,
                                   const std::vector<Sp62>& sp_stream, int threads) {
    if (t.n() != 64) throw std::invalid_argument("hoggar_stabilizer: need the 64-label table");
    const std::uint8_t* tid = t.base0_ids().data();
    const std::uint8_t* cid = t.base0_conj_ids().data();

    std::vector<ScanChunk> chunks;
    if (threads <= 1) {
        chunks.resize(1);
        scan_range(sp_stream, 0, sp_stream.size(), tid, cid, chunks[0]);
    } else {
        const std::size_t nt = static_cast<std::size_t>(threads);
        chunks.resize(nt);
        std::vector<std::thread> pool;
        const std::size_t step = (sp_stream.size() + nt - 1) / nt;
        for (std::size_t k = 0; k < nt; ++k) {
            const std::size_t lo = std::min(k * step, sp_stream.size());
            const std::size_t hi = std::min(lo + step, sp_stream.size());
            pool.emplace_back(scan_range, std::cref(sp_stream), lo, hi, tid, cid,
                              std::ref(chunks[k]));
        }
        for (auto& th : pool) th.join();
    }

    std::vector<Sp62> unitary, antiunitary;
    for (const auto& c : chunks) {
        unitary.insert(unitary.end(), c.unitary.begin(), c.unitary.end());
        antiunitary.insert(antiunitary.end(), c.antiunitary.begin(), c.antiunitary.end());
    }

    std::vector<Elem> perms;
    perms.reserve(unitary.size());
    for (Sp62 m : unitary) {
        Elem img(64);
        for (unsigned x = 0; x < 64; ++x) img[x] = static_cast<std::uint8_t>(sp62_apply(m, x));
        perms.push_back(std::move(img));
    }
    FiniteGroupModel group = model_from_elements(std::make_shared<PermCarrier>(64), std::move(perms));
    return HoggarStabilizer{std::move(unitary), std::move(antiunitary), std::move(group)};
}

FiniteGroupModel hoggar_full_symmetry(const HoggarStabilizer& stab) {
    std::vector<Elem> gens;
    for (int k = 0; k < 6; ++k) {
        Elem tr(64);
        for (unsigned p = 0; p < 64; ++p) tr[p] = static_cast<std::uint8_t>(p ^ (1u << k));
        gens.push_back(std::move(tr));
    }
    for (std::uint32_t id : stab.unitary_group.generator_ids())
        gens.push_back(stab.unitary_group.element(id));
    return closure(std::make_shared<PermCarrier>(64), gens);
}

// ---------------------------------------------------------------------------
// qubit model

BlochTetrahedron qubit_model() {
    return BlochTetrahedron{{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}}};
}

namespace {

using Mat3 = std::array<std::array<Rational, 3>, 3>;

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational s(0);
            for (int k = 0; k < 3; ++k)
                s += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                     b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
        }
    return r;
}

Rational mat_det(const Mat3& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 mat_inverse(const Mat3& a) {
    const Rational d = mat_det(a);
    if (d.is_zero()) throw std::domain_error("mat_inverse: singular");
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
            const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            // adjugate: cofactor of (j, i)
            r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (a[static_cast<std::size_t>(j1)][static_cast<std::size_t>(i1)] *
                     a[static_cast<std::size_t>(j2)][static_cast<std::size_t>(i2)] -
                 a[static_cast<std::size_t>(j1)][static_cast<std::size_t>(i2)] *
                     a[static_cast<std::size_t>(j2)][static_cast<std::size_t>(i1)]) /
                d;
        }
    return r;
}

Mat3 mat_transpose(const Mat3& a) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return r;
}

bool mat_is_identity(const Mat3& a) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Rational want(i == j ? 1 : 0);
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != want) return false;
        }
    return true;
}

}  // namespace

QubitSymmetries qubit_symmetries() {
    const BlochTetrahedron tet = qubit_model();
    Mat3 basis{};  // columns v0 v1 v2
    for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 3; ++c)
            basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
                Rational(tet.vertices[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)]);
    const Mat3 basis_inv = mat_inverse(basis);

    std::vector<Elem> rot, stab, stab_refl;
    std::array<std::uint8_t, 4> perm{0, 1, 2, 3};
    do {
        Mat3 target{};  // columns v_{perm(0)} v_{perm(1)} v_{perm(2)}
        for (int i = 0; i < 3; ++i)
            for (int c = 0; c < 3; ++c)
                target[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
                    Rational(tet.vertices[perm[static_cast<std::size_t>(c)]][static_cast<std::size_t>(i)]);
        const Mat3 m = mat_mul(target, basis_inv);
        // the induced map must send v3 to v_{perm(3)} and be orthogonal
        bool v3_ok = true;
        for (int i = 0; i < 3; ++i) {
            Rational s(0);
            for (int k = 0; k < 3; ++k)
                s += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                     Rational(tet.vertices[3][static_cast<std::size_t>(k)]);
            if (s != Rational(tet.vertices[perm[3]][static_cast<std::size_t>(i)])) v3_ok = false;
        }
        if (!v3_ok || !mat_is_identity(mat_mul(mat_transpose(m), m))) continue;
        const Rational d = mat_det(m);
        Elem e(perm.begin(), perm.end());
        if (d == Rational(1)) {
            rot.push_back(e);
            if (perm[0] == 0) stab.push_back(e);
        }
        if (perm[0] == 0 && (d == Rational(1) || d == Rational(-1))) stab_refl.push_back(e);
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto carrier = std::make_shared<PermCarrier>(4);
    return QubitSymmetries{model_from_elements(carrier, std::move(rot)),
                           model_from_elements(carrier, std::move(stab)),
                           model_from_elements(carrier, std::move(stab_refl))};
}

// ---------------------------------------------------------------------------
// twin checks

namespace {

template <class S>
std::string projective_key(const std::vector<S>& v) {
    const S* lead = nullptr;
    for (const S& c : v) {
        if (!c.is_zero()) {
            lead = &c;
            break;
        }
    }
    if (lead == nullptr) throw std::invalid_argument("projective_key: zero vector");
    std::string key;
    for (const S& c : v) {
        key += (c / *lead).str();
        key += "|";
    }
    return key;
}

}  // namespace

template <class S>
TwinStatus twin_check(const SicSystem<S>& s) {
    std::unordered_set<std::string> original, conjugated;
    for (const auto& v : s.vectors) {
        original.insert(projective_key(v));
        std::vector<S> c(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i].conj();
        conjugated.insert(projective_key(c));
    }
    return original == conjugated ? TwinStatus::self_conjugate : TwinStatus::twinned;
}

TwinStatus qubit_twin_check() {
    const BlochTetrahedron tet = qubit_model();
    std::set<std::array<int, 3>> original, mirrored;
    for (const auto& v : tet.vertices) {
        original.insert(v);
        mirrored.insert({v[0], -v[1], v[2]});
    }
    return original == mirrored ? TwinStatus::self_conjugate : TwinStatus::twinned;
}

// ---------------------------------------------------------------------------
// explicit instantiations

template bool verify_sic<EisensteinRational>(const SicSystem<EisensteinRational>&);
template bool verify_sic<GaussianRational>(const SicSystem<GaussianRational>&);
template class TripleProductTable<EisensteinRational>;
template class TripleProductTable<GaussianRational>;
template TwinStatus twin_check<EisensteinRational>(const SicSystem<EisensteinRational>&);
template TwinStatus twin_check<GaussianRational>(const SicSystem<GaussianRational>&);

}  // namespace sicverify
