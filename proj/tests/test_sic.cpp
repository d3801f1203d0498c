#include "doctest.h"

#include <random>
#include <string>

#include "sicverify/claims.hpp"
#include "sicverify/sic.hpp"

using namespace sicverify;

namespace {

EisensteinRational eis(long a, long b = 0) { return {Rational(a), Rational(b)}; }

template <class S>
std::string proj_key(const std::vector<S>& v) {
    const S* lead = nullptr;
    for (const S& c : v)
        if (!c.is_zero()) {
            lead = &c;
            break;
        }
    std::string key;
    for (const S& c : v) key += (c / *lead).str() + "|";
    return key;
}

}  // namespace

TEST_CASE("hesse orbit vectors") {
    const auto s = hesse_sic();
    CHECK(s.d == 3);
    CHECK(s.size() == 9);
    CHECK(s.norm_sq == Rational(2));
    // label (0,0): the fiducial itself
    CHECK(s.vectors[0] == std::vector<EisensteinRational>{eis(0), eis(1), eis(-1)});
    // label (1,0): coordinate shift
    CHECK(s.vectors[3] == std::vector<EisensteinRational>{eis(-1), eis(0), eis(1)});
    CHECK(verify_sic(s));
}

TEST_CASE("hesse SIC condition fails under deliberate corruption") {
    auto s = hesse_sic();
    REQUIRE(!s.vectors[4][2].is_zero());
    s.vectors[4][2] = -s.vectors[4][2];
    CHECK(!verify_sic(s));
}

TEST_CASE("hoggar orbit vectors") {
    const auto s = hoggar_sic();
    CHECK(s.d == 8);
    CHECK(s.size() == 64);
    CHECK(s.norm_sq == Rational(12));  // |-1+2i|^2 + 7
    // label 0 is the fiducial
    CHECK(s.vectors[0][0] == GaussianRational(Rational(-1), Rational(2)));
    for (int j = 1; j < 8; ++j)
        CHECK(s.vectors[0][static_cast<std::size_t>(j)] == GaussianRational(Rational(1)));
    CHECK(verify_sic(s));

    // frozen orbit fingerprint: coordinate j of vector (a|b) has Gaussian
    // norm 5 exactly at j = a, and 1 elsewhere
    for (unsigned p = 0; p < 64; ++p) {
        const unsigned a = p & 7;
        for (unsigned j = 0; j < 8; ++j) {
            const Rational n = s.vectors[p][j].norm();
            CHECK(n == (j == a ? Rational(5) : Rational(1)));
        }
    }
}

TEST_CASE("group covariance of the orbits") {
    const auto hesse = hesse_sic();
    // applying a displacement to any orbit vector lands projectively on
    // another orbit vector: regenerating from vector (a,b) permutes labels
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const auto moved = wh_qutrit_orbit(hesse.vectors[static_cast<std::size_t>(3 * a + b)]);
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    const auto& got = moved.vectors[static_cast<std::size_t>(3 * c + d)];
                    const auto& want =
                        hesse.vectors[static_cast<std::size_t>(3 * ((a + c) % 3) + (b + d) % 3)];
                    CHECK(proj_key(got) == proj_key(want));
                }
        }

    const auto hoggar = hoggar_sic();
    std::mt19937 rng(31u);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned p = rng() % 64, q = rng() % 64;
        const auto moved = pauli3_orbit(hoggar.vectors[p]);
        CHECK(proj_key(moved.vectors[q]) == proj_key(hoggar.vectors[p ^ q]));
    }
}

TEST_CASE("triple products") {
    const auto s = hesse_sic();
    const TripleProductTable<EisensteinRational> t(s);
    const Rational ns3 = s.norm_sq * s.norm_sq * s.norm_sq;
    for (int p = 0; p < 9; ++p) CHECK(t.triple(p, p, p) == EisensteinRational(ns3));
    // conjugation reverses orientation; cyclic rotation is invariant
    for (int p = 0; p < 9; ++p)
        for (int q = 0; q < 9; ++q)
            for (int r = 0; r < 9; ++r) {
                CHECK(t.triple(p, q, r).conj() == t.triple(r, q, p));
                CHECK(t.triple(p, q, r) == t.triple(q, r, p));
            }

    const auto h = hoggar_sic();
    const TripleProductTable<GaussianRational> th(h);
    // ring closure: base-0 triples of the Hoggar system are Gaussian integers
    for (int p = 0; p < 64; ++p)
        for (int q = 0; q < 64; ++q) {
            CHECK(th.base0(p, q).re.is_integer());
            CHECK(th.base0(p, q).im.is_integer());
        }
}

TEST_CASE("hesse symmetry scan") {
    const auto s = hesse_sic();
    const TripleProductTable<EisensteinRational> t(s);
    const HesseSymmetries sym = hesse_symmetries(t);
    CHECK(sym.full.order() == 216);
    CHECK(sym.stabilizer0.order() == 24);
    CHECK(sym.antiunitary_count == 216);
    CHECK(transitivity(sym.full) == Transitivity::doubly_transitive);
    CHECK(pair_orbit_size(sym.full) == 72);

    // every reported symmetry passes an independent exact re-verification
    // over a fresh random sample of triples
    std::mt19937 rng(500u);
    for (std::uint32_t id = 0; id < sym.full.order(); ++id) {
        const Elem& perm = sym.full.element(id);
        for (int k = 0; k < 3; ++k) {
            const int p = static_cast<int>(rng() % 9), q = static_cast<int>(rng() % 9),
                      r = static_cast<int>(rng() % 9);
            CHECK(t.triple(perm[static_cast<std::size_t>(p)], perm[static_cast<std::size_t>(q)],
                           perm[static_cast<std::size_t>(r)]) == t.triple(p, q, r));
        }
    }

    // homogeneity: stabilizers at other base points have the same structure
    for (int base : {1, 4, 8}) {
        std::vector<Elem> stab;
        for (std::uint32_t id = 0; id < sym.full.order(); ++id) {
            const Elem& e = sym.full.element(id);
            if (e[static_cast<std::size_t>(base)] == base) stab.push_back(e);
        }
        CHECK(stab.size() == 24);
        FiniteGroupModel stab_model = model_from_elements(sym.full.law_ptr(), std::move(stab));
        CHECK(fingerprint(stab_model) == fingerprint(sym.stabilizer0));
    }
}

TEST_CASE("qubit tetrahedron and its symmetries") {
    const BlochTetrahedron tet = qubit_model();
    // pairwise dot products are -1 when the self-dots are 3
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int dot = 0;
            for (int k = 0; k < 3; ++k)
                dot += tet.vertices[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                       tet.vertices[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            CHECK(dot == (i == j ? 3 : -1));
        }

    const QubitSymmetries q = qubit_symmetries();
    CHECK(q.rotations.order() == 12);
    CHECK(transitivity(q.rotations) == Transitivity::doubly_transitive);
    CHECK(q.stabilizer0.order() == 3);
    bool cyclic = false;
    for (std::uint32_t id = 0; id < 3; ++id) cyclic = cyclic || q.stabilizer0.element_order(id) == 3;
    CHECK(cyclic);
    CHECK(q.stabilizer0_with_reflections.order() == 6);
}

TEST_CASE("twin checks") {
    CHECK(twin_check(hesse_sic()) == TwinStatus::self_conjugate);
    CHECK(twin_check(hoggar_sic()) == TwinStatus::twinned);
    // the chosen tetrahedron maps to its mirror twin under the Bloch
    // conjugation surrogate; reported, not asserted against a target
    CHECK(qubit_twin_check() == TwinStatus::twinned);
}
