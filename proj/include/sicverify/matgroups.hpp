#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "sicverify/groups.hpp"

namespace sicverify {

/// Finite-field scalars for q in {2, 3, 9}, coded as a byte.
/// F9 = F3[t]/(t^2+1); code a + 3b means a + b*t, so the prime field sits at
/// codes 0..2. The Frobenius map x -> x^3 is (a, b) -> (a, -b), fixing
/// exactly F3.
namespace gf {
std::uint8_t add(int q, std::uint8_t x, std::uint8_t y);
std::uint8_t sub(int q, std::uint8_t x, std::uint8_t y);
std::uint8_t mul(int q, std::uint8_t x, std::uint8_t y);
std::uint8_t neg(int q, std::uint8_t x);
std::uint8_t inv(int q, std::uint8_t x);  // throws std::domain_error at 0
std::uint8_t frobenius(int q, std::uint8_t x);
}  // namespace gf

/// Square matrix over GF(q), row-major byte codes.
struct GFMatrix {
    int q = 3;
    int dim = 0;
    std::array<std::uint8_t, 36> m{};

    static GFMatrix identity(int q, int dim);
    std::uint8_t at(int r, int c) const { return m[static_cast<std::size_t>(r * dim + c)]; }
    void set(int r, int c, std::uint8_t v) { m[static_cast<std::size_t>(r * dim + c)] = v; }
    GFMatrix operator*(const GFMatrix& o) const;
    GFMatrix inverse() const;  // Gaussian elimination; throws if singular
    GFMatrix conj_transpose() const;  // Frobenius entrywise + transpose
    std::uint8_t det() const;
    bool operator==(const GFMatrix& o) const { return q == o.q && dim == o.dim && m == o.m; }

    Elem serialize() const;
    static GFMatrix deserialize(int q, int dim, const Elem& e);
};

/// Carrier for materialized matrix groups over GF(q).
class GFMatrixCarrier final : public Carrier {
public:
    GFMatrixCarrier(int q, int dim) : q_(q), dim_(dim) {}
    int field() const { return q_; }
    int dim() const { return dim_; }
    Elem identity() const override;
    Elem compose(const Elem& a, const Elem& b) const override;
    Elem inverse(const Elem& a) const override;
    std::string describe(const Elem& e) const override;

private:
    int q_;
    int dim_;
};

/// All 2x2 matrices over F3 with determinant 1; order 24.
FiniteGroupModel build_sl23();

/// GU(3,3): 3x3 matrices M over F9 with M† M = I (identity Hermitian form),
/// materialized by column backtracking; order 24,192.
FiniteGroupModel build_gu33();

/// PSU(3,3) = GU(3,3) / scalar center; order 6048, simple.
FiniteGroupModel build_psu33();

// ---------------------------------------------------------------------------
// Sp(6,2), bit-packed: 6x6 matrix over F2 in the low 36 bits, entry (r,c) at
// bit 6r+c. Vectors are 6-bit ints, coordinate i at bit i; coordinates 0..2
// are the shift block, 3..5 the phase block, and the symplectic form is
// <x,y> = x_a.y_b + x_b.y_a, i.e. J = [[0,I],[I,0]] over F2.

using Sp62 = std::uint64_t;

Sp62 sp62_identity();
Sp62 sp62_mul(Sp62 a, Sp62 b);
Sp62 sp62_transpose(Sp62 a);
bool sp62_is_symplectic(Sp62 a);
int sp62_form(unsigned x, unsigned y);
unsigned sp62_apply(Sp62 a, unsigned x);  // matrix * column vector
Sp62 sp62_transvection(unsigned v);       // x -> x + <x,v> v

/// Deterministic streaming enumeration of all of Sp(6,2) by symplectic-basis
/// backtracking; visits exactly 1,451,520 matrices, no duplicates.
void sp62_enumerate(const std::function<void(Sp62)>& visit);
std::vector<Sp62> sp62_elements();

/// Bit-packed closure of generators inside Sp(6,2) (used as the independent
/// enumeration oracle); throws SizeLimitError past `limit`.
std::vector<Sp62> sp62_closure(const std::vector<Sp62>& generators, std::size_t limit = 2'000'000);

Elem sp62_to_elem(Sp62 a);
Sp62 sp62_from_elem(const Elem& e);

}  // namespace sicverify
