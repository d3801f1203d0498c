#include "sicverify/groups.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace sicverify {

std::string Carrier::describe(const Elem& e) const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << " ";
        os << static_cast<int>(e[i]);
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// PermCarrier

Elem PermCarrier::identity() const {
    Elem e(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return e;
}

Elem PermCarrier::compose(const Elem& a, const Elem& b) const {
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

Elem PermCarrier::inverse(const Elem& a) const {
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint8_t>(i);
    return r;
}

Elem PermCarrier::from_images(const std::vector<int>& images) {
    Elem e(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) e[i] = static_cast<std::uint8_t>(images[i]);
    return e;
}

std::string PermCarrier::describe(const Elem& e) const {
    std::ostringstream os;
    std::vector<bool> seen(e.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (seen[i] || e[i] == i) continue;
        os << "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << " ";
            os << j;
            first = false;
            j = e[j];
        }
        os << ")";
        any = true;
    }
    return any ? os.str() : "()";
}

// ---------------------------------------------------------------------------
// TableCarrier

TableCarrier::TableCarrier(std::size_t n, std::vector<std::uint16_t> table)
    : n_(n), table_(std::move(table)) {
    if (table_.size() != n_ * n_) throw std::invalid_argument("TableCarrier: bad table size");
    identity_ = n_;
    for (std::uint16_t e = 0; e < n_; ++e) {
        bool ok = true;
        for (std::uint16_t j = 0; j < n_ && ok; ++j)
            ok = table_[e * n_ + j] == j && table_[j * n_ + e] == j;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ == n_) throw std::invalid_argument("TableCarrier: no identity");
    inverse_.assign(n_, 0);
    for (std::uint16_t i = 0; i < n_; ++i) {
        bool found = false;
        for (std::uint16_t j = 0; j < n_; ++j) {
            if (table_[i * n_ + j] == identity_) {
                inverse_[i] = j;
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("TableCarrier: missing inverse");
    }
}

Elem TableCarrier::encode(std::uint16_t i) {
    return Elem{static_cast<std::uint8_t>(i & 0xff), static_cast<std::uint8_t>(i >> 8)};
}

std::uint16_t TableCarrier::decode(const Elem& e) {
    return static_cast<std::uint16_t>(e[0] | (static_cast<std::uint16_t>(e[1]) << 8));
}

Elem TableCarrier::identity() const { return encode(identity_); }

Elem TableCarrier::compose(const Elem& a, const Elem& b) const {
    return encode(table_[decode(a) * n_ + decode(b)]);
}

Elem TableCarrier::inverse(const Elem& a) const { return encode(inverse_[decode(a)]); }

// ---------------------------------------------------------------------------
// CosetCarrier

CosetCarrier::CosetCarrier(std::shared_ptr<const Carrier> parent, std::vector<Elem> normal_subgroup)
    : parent_(std::move(parent)), normal_(std::move(normal_subgroup)) {
    if (normal_.empty()) throw std::invalid_argument("CosetCarrier: empty subgroup");
    std::sort(normal_.begin(), normal_.end());
}

Elem CosetCarrier::canonical(const Elem& x) const {
    Elem best;
    for (const Elem& n : normal_) {
        Elem cand = parent_->compose(x, n);
        if (best.empty() || cand < best) best = std::move(cand);
    }
    return best;
}

Elem CosetCarrier::identity() const { return canonical(parent_->identity()); }

Elem CosetCarrier::compose(const Elem& a, const Elem& b) const {
    return canonical(parent_->compose(a, b));
}

Elem CosetCarrier::inverse(const Elem& a) const { return canonical(parent_->inverse(a)); }

// ---------------------------------------------------------------------------
// FiniteGroupModel

FiniteGroupModel::FiniteGroupModel(std::shared_ptr<const Carrier> law, std::vector<Elem> elements,
                                   std::vector<std::uint32_t> generator_ids)
    : law_(std::move(law)), elems_(std::move(elements)), gens_(std::move(generator_ids)) {
    index_.reserve(elems_.size() * 2);
    for (std::uint32_t i = 0; i < elems_.size(); ++i) {
        auto [it, fresh] = index_.emplace(elems_[i], i);
        if (!fresh) throw std::invalid_argument("FiniteGroupModel: duplicate element");
    }
    auto id = index_.find(law_->identity());
    if (id == index_.end()) throw std::invalid_argument("FiniteGroupModel: identity not in element set");
    identity_ = id->second;
}

std::optional<std::uint32_t> FiniteGroupModel::index_of(const Elem& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t FiniteGroupModel::compose(std::uint32_t a, std::uint32_t b) const {
    auto it = index_.find(law_->compose(elems_[a], elems_[b]));
    if (it == index_.end()) throw std::logic_error("FiniteGroupModel: composition left the element set");
    return it->second;
}

std::uint32_t FiniteGroupModel::inverse(std::uint32_t a) const {
    auto it = index_.find(law_->inverse(elems_[a]));
    if (it == index_.end()) throw std::logic_error("FiniteGroupModel: inverse left the element set");
    return it->second;
}

std::uint32_t FiniteGroupModel::conjugate(std::uint32_t g, std::uint32_t x) const {
    return compose(compose(inverse(g), x), g);
}

unsigned FiniteGroupModel::element_order(std::uint32_t a) const {
    unsigned n = 1;
    std::uint32_t p = a;
    while (p != identity_) {
        p = compose(p, a);
        ++n;
    }
    return n;
}

// ---------------------------------------------------------------------------
// closure and model construction

FiniteGroupModel closure(std::shared_ptr<const Carrier> law, const std::vector<Elem>& generators,
                         std::size_t limit) {
    if (limit == 0) limit = law->default_closure_limit();
    std::vector<Elem> elems;
    std::unordered_map<Elem, std::uint32_t, ElemHash> index;
    auto add = [&](Elem e) -> std::pair<std::uint32_t, bool> {
        auto it = index.find(e);
        if (it != index.end()) return {it->second, false};
        const auto id = static_cast<std::uint32_t>(elems.size());
        index.emplace(e, id);
        elems.push_back(std::move(e));
        return {id, true};
    };
    add(law->identity());
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const Elem& g : generators) {
            auto [id, fresh] = add(law->compose(elems[head], g));
            (void)id;
            if (fresh && elems.size() > limit)
                throw SizeLimitError("closure: exceeded element limit " + std::to_string(limit));
        }
    }
    std::vector<std::uint32_t> gen_ids;
    for (const Elem& g : generators) {
        auto it = index.find(g);
        if (it != index.end()) gen_ids.push_back(it->second);
    }
    return FiniteGroupModel(std::move(law), std::move(elems), std::move(gen_ids));
}

namespace {

// Subgroup of `g` generated by `gen_ids`, as sorted ids. If early_full_order
// is nonzero and the subgroup provably equals the whole group (index 1 by
// Lagrange once size exceeds half), returns all ids immediately.
std::vector<std::uint32_t> subgroup_ids(const FiniteGroupModel& g,
                                        const std::vector<std::uint32_t>& gen_ids,
                                        std::size_t early_full_order = 0) {
    std::vector<bool> in(g.order(), false);
    std::vector<std::uint32_t> members;
    auto add = [&](std::uint32_t id) {
        if (!in[id]) {
            in[id] = true;
            members.push_back(id);
        }
    };
    add(g.identity_id());
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (std::uint32_t gen : gen_ids) {
            add(g.compose(members[head], gen));
            if (early_full_order && members.size() * 2 > early_full_order) {
                members.resize(early_full_order);
                for (std::uint32_t i = 0; i < early_full_order; ++i) members[i] = i;
                return members;
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

FiniteGroupModel submodel(const FiniteGroupModel& g, const std::vector<std::uint32_t>& member_ids,
                          const std::vector<std::uint32_t>& gen_ids) {
    std::vector<Elem> elems;
    elems.reserve(member_ids.size());
    std::unordered_map<std::uint32_t, std::uint32_t> remap;
    for (std::uint32_t id : member_ids) {
        remap.emplace(id, static_cast<std::uint32_t>(elems.size()));
        elems.push_back(g.element(id));
    }
    std::vector<std::uint32_t> gens;
    for (std::uint32_t id : gen_ids) gens.push_back(remap.at(id));
    return FiniteGroupModel(g.law_ptr(), std::move(elems), std::move(gens));
}

// Greedy generating ids (in g's id space) for the subgroup with the given
// sorted member ids.
std::vector<std::uint32_t> greedy_ids_for(const FiniteGroupModel& g,
                                          const std::vector<std::uint32_t>& member_ids) {
    std::vector<std::uint32_t> gens;
    std::vector<bool> in(g.order(), false);
    in[g.identity_id()] = true;
    std::size_t covered = 1;
    for (std::uint32_t id : member_ids) {
        if (in[id]) continue;
        gens.push_back(id);
        std::fill(in.begin(), in.end(), false);
        std::vector<std::uint32_t> sub = subgroup_ids(g, gens);
        for (std::uint32_t s : sub) in[s] = true;
        covered = sub.size();
        if (covered == member_ids.size()) break;
    }
    return gens;
}

// Greedy generating set over an indexed element list.
std::vector<std::uint32_t> greedy_generators(const FiniteGroupModel& g) {
    std::vector<std::uint32_t> gens;
    std::vector<std::uint32_t> covered = subgroup_ids(g, gens);
    std::vector<bool> in(g.order(), false);
    for (std::uint32_t id : covered) in[id] = true;
    for (std::uint32_t id = 0; id < g.order(); ++id) {
        if (in[id]) continue;
        gens.push_back(id);
        covered = subgroup_ids(g, gens);
        if (covered.size() == g.order()) break;
        std::fill(in.begin(), in.end(), false);
        for (std::uint32_t c : covered) in[c] = true;
    }
    if (subgroup_ids(g, gens).size() != g.order())
        throw std::invalid_argument("model_from_elements: element set is not closed");
    return gens;
}

}  // namespace

FiniteGroupModel model_from_elements(std::shared_ptr<const Carrier> law, std::vector<Elem> elements) {
    FiniteGroupModel probe(law, std::move(elements), {});
    std::vector<std::uint32_t> gens = greedy_generators(probe);
    return FiniteGroupModel(std::move(law), probe.elements(), std::move(gens));
}

// ---------------------------------------------------------------------------
// structure computations

std::vector<std::vector<std::uint32_t>> conjugacy_classes(const FiniteGroupModel& g) {
    std::vector<std::vector<std::uint32_t>> classes;
    std::vector<bool> seen(g.order(), false);
    for (std::uint32_t start = 0; start < g.order(); ++start) {
        if (seen[start]) continue;
        std::vector<std::uint32_t> orbit{start};
        seen[start] = true;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            for (std::uint32_t gen : g.generator_ids()) {
                std::uint32_t c = g.conjugate(gen, orbit[head]);
                if (!seen[c]) {
                    seen[c] = true;
                    orbit.push_back(c);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    return classes;
}

FiniteGroupModel normal_closure(const FiniteGroupModel& g, const std::vector<std::uint32_t>& seed) {
    std::vector<std::uint32_t> working;
    for (std::uint32_t s : seed)
        if (s != g.identity_id()) working.push_back(s);
    std::sort(working.begin(), working.end());
    working.erase(std::unique(working.begin(), working.end()), working.end());

    std::vector<std::uint32_t> members = subgroup_ids(g, working, g.order());
    while (members.size() < g.order()) {
        std::vector<std::uint32_t> fresh;
        std::vector<bool> in(g.order(), false);
        for (std::uint32_t id : members) in[id] = true;
        for (std::uint32_t id : members) {
            for (std::uint32_t gen : g.generator_ids()) {
                std::uint32_t c = g.conjugate(gen, id);
                if (!in[c]) {
                    in[c] = true;
                    fresh.push_back(c);
                }
            }
        }
        if (fresh.empty()) break;
        working.insert(working.end(), fresh.begin(), fresh.end());
        members = subgroup_ids(g, working, g.order());
    }
    return submodel(g, members, greedy_ids_for(g, members));
}

FiniteGroupModel derived_subgroup(const FiniteGroupModel& g) {
    std::vector<std::uint32_t> commutators;
    for (std::uint32_t a : g.generator_ids()) {
        for (std::uint32_t b : g.generator_ids()) {
            std::uint32_t c =
                g.compose(g.compose(g.inverse(a), g.inverse(b)), g.compose(a, b));
            commutators.push_back(c);
        }
    }
    return normal_closure(g, commutators);
}

FiniteGroupModel center(const FiniteGroupModel& g) {
    std::vector<std::uint32_t> ids;
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        bool central = true;
        for (std::uint32_t gen : g.generator_ids()) {
            if (g.compose(x, gen) != g.compose(gen, x)) {
                central = false;
                break;
            }
        }
        if (central) ids.push_back(x);
    }
    return submodel(g, ids, greedy_ids_for(g, ids));
}

FiniteGroupModel quotient(const FiniteGroupModel& g, const FiniteGroupModel& n) {
    std::vector<Elem> normal_elems = n.elements();
    for (const Elem& e : normal_elems) {
        if (!g.contains(e)) throw std::invalid_argument("quotient: subgroup not inside group");
    }
    for (std::uint32_t gen : g.generator_ids()) {
        for (const Elem& e : normal_elems) {
            std::uint32_t id = *g.index_of(e);
            std::uint32_t c = g.conjugate(gen, id);
            if (!n.contains(g.element(c))) throw std::invalid_argument("quotient: subgroup is not normal");
        }
    }
    auto coset_law = std::make_shared<CosetCarrier>(g.law_ptr(), std::move(normal_elems));
    std::vector<Elem> cosets;
    std::unordered_map<Elem, std::uint32_t, ElemHash> seen;
    for (std::uint32_t id = 0; id < g.order(); ++id) {
        Elem c = coset_law->canonical(g.element(id));
        if (seen.emplace(c, static_cast<std::uint32_t>(cosets.size())).second) cosets.push_back(std::move(c));
    }
    return model_from_elements(coset_law, std::move(cosets));
}

bool is_simple(const FiniteGroupModel& g) {
    if (g.order() <= 1) throw std::invalid_argument("is_simple: trivial group");
    for (const auto& cls : conjugacy_classes(g)) {
        if (cls.size() == 1 && cls[0] == g.identity_id()) continue;
        if (normal_closure(g, {cls[0]}).order() != g.order()) return false;
    }
    return true;
}

Transitivity transitivity(const FiniteGroupModel& g) {
    const auto* pc = dynamic_cast<const PermCarrier*>(&g.law());
    if (pc == nullptr) throw std::invalid_argument("transitivity: needs a permutation carrier");
    const int n = pc->degree();
    if (n <= 1) return Transitivity::transitive;

    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> orbit{0};
    seen[0] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (std::uint32_t gen : g.generator_ids()) {
            int img = g.element(gen)[static_cast<std::size_t>(orbit[head])];
            if (!seen[static_cast<std::size_t>(img)]) {
                seen[static_cast<std::size_t>(img)] = true;
                orbit.push_back(img);
            }
        }
    }
    if (orbit.size() != static_cast<std::size_t>(n)) return Transitivity::intransitive;
    if (n == 2) return g.order() >= 2 ? Transitivity::doubly_transitive : Transitivity::transitive;

    std::vector<bool> pair_seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
    std::vector<std::pair<int, int>> pairs{{0, 1}};
    pair_seen[1] = true;
    for (std::size_t head = 0; head < pairs.size(); ++head) {
        for (std::uint32_t gen : g.generator_ids()) {
            const Elem& p = g.element(gen);
            int a = p[static_cast<std::size_t>(pairs[head].first)];
            int b = p[static_cast<std::size_t>(pairs[head].second)];
            std::size_t key = static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(b);
            if (!pair_seen[key]) {
                pair_seen[key] = true;
                pairs.emplace_back(a, b);
            }
        }
    }
    return pairs.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1)
               ? Transitivity::doubly_transitive
               : Transitivity::transitive;
}

GroupFingerprint fingerprint(const FiniteGroupModel& g) {
    GroupFingerprint fp;
    fp.order = g.order();
    for (std::uint32_t id = 0; id < g.order(); ++id) fp.element_order_histogram[g.element_order(id)]++;
    for (const auto& cls : conjugacy_classes(g)) fp.conjugacy_class_sizes.push_back(cls.size());
    std::sort(fp.conjugacy_class_sizes.begin(), fp.conjugacy_class_sizes.end());
    fp.abelianization_order = g.order() / derived_subgroup(g).order();
    return fp;
}

// ---------------------------------------------------------------------------
// isomorphism search

namespace {

struct BudgetCounter {
    std::uint64_t left;
    bool spend(std::uint64_t n) {
        if (left < n) {
            left = 0;
            return false;
        }
        left -= n;
        return true;
    }
};

// BFS-extend the partial map g1->h1, g2->h2 to all of G with immediate
// conflict detection; returns true iff it extends to a bijective homomorphism.
bool extend_map(const FiniteGroupModel& g, const FiniteGroupModel& h,
                const std::vector<std::uint32_t>& ggens, const std::vector<std::uint32_t>& hgens,
                BudgetCounter& budget) {
    constexpr std::uint32_t unset = 0xffffffffu;
    std::vector<std::uint32_t> phi(g.order(), unset);
    std::vector<bool> used(h.order(), false);
    std::vector<std::uint32_t> queue{g.identity_id()};
    phi[g.identity_id()] = h.identity_id();
    used[h.identity_id()] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t x = queue[head];
        for (std::size_t k = 0; k < ggens.size(); ++k) {
            if (!budget.spend(2)) return false;
            const std::uint32_t y = g.compose(x, ggens[k]);
            const std::uint32_t img = h.compose(phi[x], hgens[k]);
            if (phi[y] == unset) {
                if (used[img]) return false;  // not injective
                phi[y] = img;
                used[img] = true;
                queue.push_back(y);
            } else if (phi[y] != img) {
                return false;  // not well-defined
            }
        }
    }
    return queue.size() == g.order() && g.order() == h.order();
}

}  // namespace

IsomorphismResult isomorphic(const FiniteGroupModel& g, const FiniteGroupModel& h,
                             std::uint64_t budget_ops) {
    IsomorphismResult res;
    if (g.order() != h.order()) {
        res.status = IsomorphismResult::Status::not_isomorphic;
        return res;
    }
    if (g.order() == 1) {
        res.status = IsomorphismResult::Status::witness;
        return res;
    }
    const GroupFingerprint fg = fingerprint(g);
    const GroupFingerprint fh = fingerprint(h);
    if (!(fg == fh)) {
        res.status = IsomorphismResult::Status::not_isomorphic;
        return res;
    }

    BudgetCounter budget{budget_ops};

    std::vector<unsigned> gorder(g.order()), horder(h.order());
    for (std::uint32_t i = 0; i < g.order(); ++i) gorder[i] = g.element_order(i);
    for (std::uint32_t i = 0; i < h.order(); ++i) horder[i] = h.element_order(i);

    // class size per element, an isomorphism invariant used as a filter
    std::vector<std::size_t> gclass(g.order()), hclass(h.order());
    for (const auto& cls : conjugacy_classes(g))
        for (std::uint32_t id : cls) gclass[id] = cls.size();
    for (const auto& cls : conjugacy_classes(h))
        for (std::uint32_t id : cls) hclass[id] = cls.size();

    auto rarity = [&](std::uint32_t id) { return fg.element_order_histogram.at(gorder[id]); };

    // candidate first generators of G, rarest element orders first
    std::vector<std::uint32_t> by_rarity;
    for (std::uint32_t i = 0; i < g.order(); ++i)
        if (i != g.identity_id()) by_rarity.push_back(i);
    std::stable_sort(by_rarity.begin(), by_rarity.end(), [&](std::uint32_t a, std::uint32_t b) {
        return rarity(a) < rarity(b);
    });

    // find a generating pair of G with small rarity product
    std::vector<std::uint32_t> g1g2;
    const std::size_t scan = std::min<std::size_t>(by_rarity.size(), 96);
    std::uint64_t best_score = ~0ULL;
    for (std::size_t i = 0; i < scan && g1g2.empty(); ++i) {
        for (std::size_t j = 0; j < by_rarity.size(); ++j) {
            if (i == j) continue;
            const std::uint32_t a = by_rarity[i], b = by_rarity[j];
            const std::uint64_t score =
                static_cast<std::uint64_t>(rarity(a)) * static_cast<std::uint64_t>(rarity(b));
            if (score >= best_score) continue;
            if (!budget.spend(g.order())) break;
            if (subgroup_ids(g, {a, b}, g.order()).size() == g.order()) {
                g1g2 = {a, b};
                best_score = score;
                break;
            }
        }
    }
    if (g1g2.empty()) {
        // fall back to the greedy generating set
        g1g2 = g.generator_ids();
        if (g1g2.empty() || subgroup_ids(g, g1g2, g.order()).size() != g.order()) {
            res.status = IsomorphismResult::Status::inconclusive;
            return res;
        }
    }

    if (g1g2.size() == 2) {
        const std::uint32_t g1 = g1g2[0], g2 = g1g2[1];
        const std::uint32_t g12 = g.compose(g1, g2);
        const std::uint32_t g122 = g.compose(g12, g2);
        const unsigned o1 = gorder[g1], o2 = gorder[g2];
        const unsigned o12 = gorder[g12], o122 = gorder[g122];
        const unsigned o12sq = gorder[g.compose(g12, g12)];

        for (std::uint32_t h1 = 0; h1 < h.order(); ++h1) {
            if (horder[h1] != o1 || hclass[h1] != gclass[g1]) continue;
            for (std::uint32_t h2 = 0; h2 < h.order(); ++h2) {
                if (horder[h2] != o2 || hclass[h2] != gclass[g2]) continue;
                if (!budget.spend(4)) {
                    res.status = IsomorphismResult::Status::inconclusive;
                    return res;
                }
                const std::uint32_t h12 = h.compose(h1, h2);
                if (horder[h12] != o12 || hclass[h12] != gclass[g12]) continue;
                if (horder[h.compose(h12, h2)] != o122) continue;
                if (horder[h.compose(h12, h12)] != o12sq) continue;
                if (extend_map(g, h, {g1, g2}, {h1, h2}, budget)) {
                    res.status = IsomorphismResult::Status::witness;
                    res.generator_map = {{g.element(g1), h.element(h1)}, {g.element(g2), h.element(h2)}};
                    return res;
                }
                if (budget.left == 0) {
                    res.status = IsomorphismResult::Status::inconclusive;
                    return res;
                }
            }
        }
        res.status = IsomorphismResult::Status::not_isomorphic;
        return res;
    }

    // general (rare) path: map an arbitrary generating tuple by brute candidate
    // tuples filtered on element order and class size
    const std::vector<std::uint32_t>& ggens = g1g2;
    std::vector<std::uint32_t> pick(ggens.size(), 0);
    while (true) {
        bool ok = true;
        for (std::size_t k = 0; k < ggens.size() && ok; ++k)
            ok = horder[pick[k]] == gorder[ggens[k]] && hclass[pick[k]] == gclass[ggens[k]];
        if (ok) {
            if (!budget.spend(1)) {
                res.status = IsomorphismResult::Status::inconclusive;
                return res;
            }
            if (extend_map(g, h, ggens, pick, budget)) {
                res.status = IsomorphismResult::Status::witness;
                for (std::size_t k = 0; k < ggens.size(); ++k)
                    res.generator_map.emplace_back(g.element(ggens[k]), h.element(pick[k]));
                return res;
            }
            if (budget.left == 0) {
                res.status = IsomorphismResult::Status::inconclusive;
                return res;
            }
        }
        std::size_t k = 0;
        while (k < pick.size()) {
            if (++pick[k] < h.order()) break;
            pick[k] = 0;
            ++k;
        }
        if (k == pick.size()) break;
    }
    res.status = IsomorphismResult::Status::not_isomorphic;
    return res;
}

}  // namespace sicverify
