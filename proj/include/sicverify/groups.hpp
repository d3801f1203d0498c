#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sicverify {

/// Canonical serialized group element: permutations as point-image byte
/// arrays, matrices as row-major coefficient bytes, table entries as
/// little-endian indices. Byte-wise equality is element equality.
using Elem = std::vector<std::uint8_t>;

struct ElemHash {
    std::size_t operator()(const Elem& e) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::uint8_t b : e) {
            h ^= b;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Composition law over canonical serialized elements.
class Carrier {
public:
    virtual ~Carrier() = default;
    virtual Elem identity() const = 0;
    virtual Elem compose(const Elem& a, const Elem& b) const = 0;
    virtual Elem inverse(const Elem& a) const = 0;
    virtual std::size_t default_closure_limit() const { return 20'000'000; }
    virtual std::string describe(const Elem& e) const;
};

/// Permutations of n points, stored as the image array p[0..n-1].
class PermCarrier final : public Carrier {
public:
    explicit PermCarrier(int n) : n_(n) {}
    int degree() const { return n_; }
    Elem identity() const override;
    Elem compose(const Elem& a, const Elem& b) const override;  // (a*b)(x) = a(b(x))
    Elem inverse(const Elem& a) const override;
    std::string describe(const Elem& e) const override;  // cycle notation
    static Elem from_images(const std::vector<int>& images);

private:
    int n_;
};

/// Opaque indices 0..n-1 with composition read off a full n*n table.
class TableCarrier final : public Carrier {
public:
    /// table[i*n + j] = index of element i composed with element j.
    TableCarrier(std::size_t n, std::vector<std::uint16_t> table);
    std::size_t size() const { return n_; }
    static Elem encode(std::uint16_t i);
    static std::uint16_t decode(const Elem& e);
    Elem identity() const override;
    Elem compose(const Elem& a, const Elem& b) const override;
    Elem inverse(const Elem& a) const override;
    std::size_t default_closure_limit() const override { return 100'000; }

private:
    std::size_t n_;
    std::vector<std::uint16_t> table_;
    std::uint16_t identity_;
    std::vector<std::uint16_t> inverse_;
};

class FiniteGroupModel;

/// Cosets of a normal subgroup, represented by the lexicographically least
/// serialized member of each coset.
class CosetCarrier final : public Carrier {
public:
    CosetCarrier(std::shared_ptr<const Carrier> parent, std::vector<Elem> normal_subgroup);
    Elem canonical(const Elem& x) const;
    Elem identity() const override;
    Elem compose(const Elem& a, const Elem& b) const override;
    Elem inverse(const Elem& a) const override;
    const std::vector<Elem>& normal_subgroup() const { return normal_; }

private:
    std::shared_ptr<const Carrier> parent_;
    std::vector<Elem> normal_;
};

struct SizeLimitError : std::runtime_error {
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// A fully materialized finite group: element set closed under the carrier's
/// composition and inverse, containing the identity. Immutable once built.
class FiniteGroupModel {
public:
    FiniteGroupModel(std::shared_ptr<const Carrier> law, std::vector<Elem> elements,
                     std::vector<std::uint32_t> generator_ids);

    std::size_t order() const { return elems_.size(); }
    const Elem& element(std::uint32_t id) const { return elems_[id]; }
    const std::vector<Elem>& elements() const { return elems_; }
    const std::vector<std::uint32_t>& generator_ids() const { return gens_; }
    std::uint32_t identity_id() const { return identity_; }
    const Carrier& law() const { return *law_; }
    std::shared_ptr<const Carrier> law_ptr() const { return law_; }

    std::optional<std::uint32_t> index_of(const Elem& e) const;
    bool contains(const Elem& e) const { return index_of(e).has_value(); }
    std::uint32_t compose(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inverse(std::uint32_t a) const;
    std::uint32_t conjugate(std::uint32_t g, std::uint32_t x) const;  // g^-1 x g
    unsigned element_order(std::uint32_t a) const;

private:
    std::shared_ptr<const Carrier> law_;
    std::vector<Elem> elems_;
    std::unordered_map<Elem, std::uint32_t, ElemHash> index_;
    std::vector<std::uint32_t> gens_;
    std::uint32_t identity_;
};

/// Materialize the group generated by `generators` by breadth-first closure.
/// Deterministic element order for a fixed generator order. Throws
/// SizeLimitError past `limit` (0 = the carrier default).
FiniteGroupModel closure(std::shared_ptr<const Carrier> law, const std::vector<Elem>& generators,
                         std::size_t limit = 0);

/// Wrap an already-known element set as a model; picks a small generating
/// set greedily and verifies it regenerates the whole set.
FiniteGroupModel model_from_elements(std::shared_ptr<const Carrier> law, std::vector<Elem> elements);

/// Conjugacy classes as id lists, each sorted, ordered by least member.
std::vector<std::vector<std::uint32_t>> conjugacy_classes(const FiniteGroupModel& g);

FiniteGroupModel derived_subgroup(const FiniteGroupModel& g);
FiniteGroupModel center(const FiniteGroupModel& g);
/// Smallest normal subgroup of g containing the seed elements.
FiniteGroupModel normal_closure(const FiniteGroupModel& g, const std::vector<std::uint32_t>& seed);
/// Quotient g/n; verifies normality of n in g and throws std::invalid_argument
/// if it fails.
FiniteGroupModel quotient(const FiniteGroupModel& g, const FiniteGroupModel& n);
bool is_simple(const FiniteGroupModel& g);

enum class Transitivity { intransitive, transitive, doubly_transitive };
/// Requires a PermCarrier model.
Transitivity transitivity(const FiniteGroupModel& g);

/// Cheap isomorphism invariants; equal fingerprints are necessary but not
/// sufficient for isomorphism.
struct GroupFingerprint {
    std::size_t order = 0;
    std::map<unsigned, std::size_t> element_order_histogram;
    std::vector<std::size_t> conjugacy_class_sizes;  // sorted
    std::size_t abelianization_order = 0;

    bool operator==(const GroupFingerprint&) const = default;
};
GroupFingerprint fingerprint(const FiniteGroupModel& g);

/// Result of the generator-mapping isomorphism search. A witness maps a
/// generating set of G to elements of H and has been verified to extend to
/// a bijective homomorphism over the full generated correspondence.
struct IsomorphismResult {
    enum class Status { not_isomorphic, witness, inconclusive };
    Status status = Status::inconclusive;
    std::vector<std::pair<Elem, Elem>> generator_map;

    bool found() const { return status == Status::witness; }
};
IsomorphismResult isomorphic(const FiniteGroupModel& g, const FiniteGroupModel& h,
                             std::uint64_t budget = 500'000'000ULL);

}  // namespace sicverify
