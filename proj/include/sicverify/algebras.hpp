#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sicverify/exact.hpp"
#include "sicverify/groups.hpp"

namespace sicverify {

/// a + b*w with integer a, b.
struct EisensteinInt {
    long a = 0, b = 0;
    long norm() const { return a * a - a * b + b * b; }
    EisensteinRational value() const { return {Rational(a), Rational(b)}; }
};

struct EisensteinUnitGroup {
    std::vector<EisensteinInt> units;  // exactly {±1, ±w, ±w^2}
    FiniteGroupModel group;            // cyclic of order 6 (table carrier)
};
EisensteinUnitGroup eisenstein_units();

struct HurwitzUnitGroup {
    std::vector<Quaternion> units;  // the 24 vertices of the 24-cell
    FiniteGroupModel group;         // binary tetrahedral group (table carrier)
};
HurwitzUnitGroup hurwitz_units();

/// The ring of integral octonions: the Gravesian integers extended by
/// half-coordinate vectors supported on a halving code built from the Fano
/// lines. The naive halving system is not multiplicatively closed; the
/// constructor iterates the coordinate swap (0 <-> t) until the closure gate
/// on all basis pairs passes, and records the swap that worked. Construction
/// failure throws std::runtime_error.
class CayleyRing {
public:
    CayleyRing();

    const std::array<Octonion, 8>& basis() const { return basis_; }
    bool contains(const Octonion& x) const;
    /// Swap applied to the halving system; 0 means the unswapped candidate.
    int swap_index() const { return swap_; }
    /// The 16 support masks of the halving code (bit i = coordinate i).
    const std::vector<unsigned>& halving_code() const { return code_; }

    /// Doubled-coordinate membership: v integral with parity pattern in the
    /// halving code means v/2 is a ring element.
    bool contains_doubled(const std::array<int, 8>& doubled) const;

private:
    std::vector<unsigned> code_;
    std::array<Octonion, 8> basis_;
    int swap_ = -1;
};

/// The 240 unit-norm elements of the Cayley ring: closed under
/// multiplication, Moufang, not associative. Units are indexed in
/// lexicographic order of their doubled coordinate vectors.
class UnitLoop {
public:
    explicit UnitLoop(const CayleyRing& ring);

    const std::vector<Octonion>& units() const { return units_; }
    const std::array<std::int8_t, 8>& doubled(int i) const {
        return doubled_[static_cast<std::size_t>(i)];
    }
    int size() const { return static_cast<int>(units_.size()); }
    int mul(int i, int j) const { return table_[static_cast<std::size_t>(i) * 240 + static_cast<std::size_t>(j)]; }
    int one() const { return one_; }
    int negate(int i) const { return neg_[static_cast<std::size_t>(i)]; }
    int inverse(int i) const { return inv_[static_cast<std::size_t>(i)]; }
    std::optional<int> index_of_doubled(const std::array<int, 8>& d) const;

    /// z(x(zy)) = ((zx)z)y over all 240^3 triples.
    bool moufang_left_exhaustive() const;
    /// The other two Moufang forms, x(z(yz)) = ((xz)y)z and
    /// (zx)(yz) = z((xy)z), on deterministic pseudo-random triples.
    bool moufang_sampled(std::size_t samples_per_form = 100'000) const;
    /// First (i,j,k) in index order with (u_i u_j) u_k != u_i (u_j u_k).
    std::optional<std::array<int, 3>> first_associativity_failure() const;

private:
    static std::uint32_t doubled_key(const std::array<std::int8_t, 8>& d);

    std::vector<Octonion> units_;
    std::vector<std::array<std::int8_t, 8>> doubled_;
    std::unordered_map<std::uint32_t, int> index_;
    std::vector<std::uint8_t> table_;
    std::vector<std::uint8_t> neg_, inv_;
    int one_ = -1;
};

UnitLoop cayley_units(const CayleyRing& ring);

/// Automorphism of the octonion algebra as an 8x8 rational matrix acting on
/// coordinates; fixes 1 and preserves the basis multiplication table.
struct OctonionAutomorphism {
    std::array<std::array<Rational, 8>, 8> matrix;  // column c = image of e_c
    Octonion apply(const Octonion& x) const;
};

/// The automorphism group of the Cayley ring, found by backtracking over
/// images (a, b, c) of the basic generating triple (e1, e2, e4): a, b
/// orthogonal imaginary units and c an imaginary unit orthogonal to the
/// quaternion algebra spanned by {1, a, b, ab}. A candidate survives iff it
/// preserves the basis multiplication table and maps the ring onto itself.
/// Order 12,096.
struct CayleyAutomorphisms {
    std::vector<std::array<int, 3>> basic_triples;  // unit indices (a, b, c)
    FiniteGroupModel group;                         // permutations of the 240 units
};
CayleyAutomorphisms cayley_automorphisms(const CayleyRing& ring, const UnitLoop& loop);

OctonionAutomorphism automorphism_matrix(const UnitLoop& loop, const std::array<int, 3>& triple);

}  // namespace sicverify
