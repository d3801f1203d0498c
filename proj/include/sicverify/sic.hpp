#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sicverify/exact.hpp"
#include "sicverify/groups.hpp"
#include "sicverify/matgroups.hpp"

namespace sicverify {

/// Orbit of an unnormalized fiducial under a discrete displacement group,
/// with all phases dropped (projectors do not see them). vectors[label] has
/// d exact coordinates; norm_sq is the shared self inner product.
///
/// Label conventions:
///   d=3 (Hesse):  label = 3a + b for X^a Z^b, a,b in Z3.
///   d=8 (Hoggar): label bit k = a_{k+1}, bit 3+k = b_{k+1} (k = 0,1,2) for
///                 the three-qubit displacement X^a1 Z^b1 (x) X^a2 Z^b2 (x)
///                 X^a3 Z^b3; Hilbert index j has qubit k at bit k. This
///                 matches the Sp62 vector layout, so a symplectic matrix
///                 acts on labels by sp62_apply.
template <class S>
struct SicSystem {
    int d = 0;
    Rational norm_sq;
    std::vector<std::vector<S>> vectors;

    std::size_t size() const { return vectors.size(); }
};

/// Weyl-Heisenberg qutrit orbit of a d=3 fiducial, Z = diag(1, w, w^2),
/// X the cyclic shift.
SicSystem<EisensteinRational> wh_qutrit_orbit(const std::vector<EisensteinRational>& fiducial);

/// Three-qubit Pauli orbit of a d=8 fiducial.
SicSystem<GaussianRational> pauli3_orbit(const std::vector<GaussianRational>& fiducial);

/// The canonical systems: Hesse from (0, 1, -1), Hoggar from (-1+2i, 1, ..., 1).
SicSystem<EisensteinRational> hesse_sic();
SicSystem<GaussianRational> hoggar_sic();

/// Exact cleared-denominator SIC test: every self inner product equals
/// norm_sq and (d+1) |<j|k>|^2 = norm_sq^2 for all j != k.
template <class S>
bool verify_sic(const SicSystem<S>& s);

/// Inner products and unitary-invariant triple products of an orbit.
/// base0(p, q) = <0|p><p|q><q|0>; triple(p, q, r) = <p|q><q|r><r|p>.
template <class S>
class TripleProductTable {
public:
    explicit TripleProductTable(const SicSystem<S>& s);

    int n() const { return n_; }
    const S& ip(int p, int q) const { return ip_[static_cast<std::size_t>(p * n_ + q)]; }
    const S& base0(int p, int q) const { return t0_[static_cast<std::size_t>(p * n_ + q)]; }
    S triple(int p, int q, int r) const;

    /// Small dense ids of the base-0 triple values and of their conjugates,
    /// for byte-compare symmetry scans.
    const std::vector<std::uint8_t>& base0_ids() const { return tid_; }
    const std::vector<std::uint8_t>& base0_conj_ids() const { return cid_; }

private:
    int n_;
    std::vector<S> ip_;
    std::vector<S> t0_;
    std::vector<std::uint8_t> tid_;
    std::vector<std::uint8_t> cid_;
};

/// Full symmetry group of the Hesse labels: exhaustive scan of all 9!
/// permutations for invariance of every triple product, plus the subgroup
/// fixing label 0 and the count of conjugation-twisted (antiunitary)
/// permutations.
struct HesseSymmetries {
    FiniteGroupModel full;         // order 216 on 9 points
    FiniteGroupModel stabilizer0;  // order 24
    std::size_t antiunitary_count = 0;
};
HesseSymmetries hesse_symmetries(const TripleProductTable<EisensteinRational>& t);

/// Hoggar projector-0 stabilizer: scan of the full Sp(6,2) stream for label
/// maps preserving base-0 triple products exactly (unitary side) or up to
/// conjugation (antiunitary side).
struct HoggarStabilizer {
    std::vector<Sp62> unitary;      // 6048 matrices
    std::vector<Sp62> antiunitary;  // 6048 matrices
    FiniteGroupModel unitary_group; // the unitary side as permutations of the 64 labels
};
HoggarStabilizer hoggar_stabilizer(const TripleProductTable<GaussianRational>& t,
                                   const std::vector<Sp62>& sp_stream, int threads = 1);

/// Group generated by the 64 label translations together with the unitary
/// stabilizer; order 64 * 6048 = 387,072, doubly transitive.
FiniteGroupModel hoggar_full_symmetry(const HoggarStabilizer& stab);

/// The d=2 case in Bloch coordinates: a regular tetrahedron with +-1 vertex
/// coordinates (pairwise cosines -1/3).
struct BlochTetrahedron {
    std::array<std::array<int, 3>, 4> vertices;
};
BlochTetrahedron qubit_model();

/// Vertex permutations realized by exact rotations (orthogonal, det +1) of
/// the Bloch sphere, the vertex-0 stabilizer, and the stabilizer when
/// reflections (det -1) are admitted too.
struct QubitSymmetries {
    FiniteGroupModel rotations;                  // order 12 on 4 points
    FiniteGroupModel stabilizer0;                // order 3
    FiniteGroupModel stabilizer0_with_reflections;  // order 6
};
QubitSymmetries qubit_symmetries();

enum class TwinStatus { self_conjugate, twinned };

/// Conjugate every vector entrywise and compare the projective vector sets.
template <class S>
TwinStatus twin_check(const SicSystem<S>& s);

/// Bloch-level conjugation surrogate for the qubit model: negate the y
/// coordinate and compare vertex sets.
TwinStatus qubit_twin_check();

}  // namespace sicverify
