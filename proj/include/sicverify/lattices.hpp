#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sicverify/algebras.hpp"
#include "sicverify/exact.hpp"

namespace sicverify {

/// Vectors with rational coordinates and a shared symmetric bilinear form.
/// Inner products of algebra elements are taken algebraically as Re(x * conj(y)),
/// which for the Eisenstein plane means the hexagonal form rather than an
/// irrational coordinate embedding.
struct VectorFamily {
    std::vector<std::vector<Rational>> vectors;
    std::vector<std::vector<Rational>> form;

    std::size_t ambient_dim() const { return form.size(); }
};

Rational family_ip(const VectorFamily& f, std::size_t i, std::size_t j);
std::vector<std::vector<Rational>> gram(const VectorFamily& f);

VectorFamily eisenstein_family(const std::vector<EisensteinInt>& zs);
VectorFamily quaternion_family(const std::vector<Quaternion>& qs);
VectorFamily octonion_family(const std::vector<Octonion>& os);
/// Same vectors with the form multiplied by `factor`.
VectorFamily scale_form(VectorFamily f, const Rational& factor);

enum class RootLabel { A2, D4, E8, unknown };
const char* root_label_name(RootLabel label);

struct RootSystemID {
    RootLabel label = RootLabel::unknown;
    std::size_t root_count = 0;
    std::size_t rank = 0;
    std::map<std::string, std::size_t> inner_product_multiset;  // off-diagonal values
    bool reflection_closed = false;
    bool mixed_norms = false;
    std::optional<bool> even_unimodular;  // evaluated for the 240-root case
};

/// Fingerprint classification: root count + rank + simply-laced inner
/// products + reflection closure, with even unimodularity (after scaling the
/// common squared norm to 2) required on top for E8.
RootSystemID identify_root_system(const VectorFamily& f);

/// Basis of the integer span of the family, with its Gram data.
struct LatticeBasisInfo {
    std::vector<std::vector<Rational>> basis;
    std::vector<std::vector<Rational>> gram;
    Rational gram_det;
    bool all_diagonal_even = false;
};
LatticeBasisInfo lattice_basis(const VectorFamily& f);

/// True iff the integer span has Gram determinant exactly 1 and an even
/// diagonal, for the family as given.
bool is_even_unimodular(const VectorFamily& f);

}  // namespace sicverify
