#include "doctest.h"

#include <algorithm>
#include <random>

#include "sicverify/groups.hpp"

using namespace sicverify;

namespace {

FiniteGroupModel symmetric3() {
    auto law = std::make_shared<PermCarrier>(3);
    return closure(law, {PermCarrier::from_images({1, 0, 2}), PermCarrier::from_images({1, 2, 0})});
}

FiniteGroupModel cyclic_table(std::uint16_t n) {
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    for (std::uint16_t i = 0; i < n; ++i)
        for (std::uint16_t j = 0; j < n; ++j)
            table[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>((i + j) % n);
    auto law = std::make_shared<TableCarrier>(n, std::move(table));
    std::vector<Elem> elems;
    for (std::uint16_t i = 0; i < n; ++i) elems.push_back(TableCarrier::encode(i));
    return model_from_elements(std::move(law), std::move(elems));
}

// exhaustive sampled-closure audit per the module contract
void audit_closed(const FiniteGroupModel& g, std::size_t samples = 10'000) {
    std::mt19937 rng(99u);
    const std::size_t n = g.order();
    if (n * n <= samples) {
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                CHECK(g.contains(g.law().compose(g.element(a), g.element(b))));
    } else {
        for (std::size_t s = 0; s < samples; ++s) {
            const auto a = static_cast<std::uint32_t>(rng() % n);
            const auto b = static_cast<std::uint32_t>(rng() % n);
            CHECK(g.contains(g.law().compose(g.element(a), g.element(b))));
        }
    }
}

}  // namespace

TEST_CASE("closure of a 3-cycle on 4 points has order 3") {
    auto law = std::make_shared<PermCarrier>(4);
    const FiniteGroupModel g = closure(law, {PermCarrier::from_images({1, 2, 0, 3})});
    CHECK(g.order() == 3);
    audit_closed(g);
}

TEST_CASE("perm carrier basics") {
    PermCarrier pc(5);
    const Elem a = PermCarrier::from_images({1, 0, 3, 2, 4});
    CHECK(pc.compose(a, pc.inverse(a)) == pc.identity());
    CHECK(pc.describe(a) == "(0 1)(2 3)");
    CHECK(pc.describe(pc.identity()) == "()");
}

TEST_CASE("closure respects the size limit") {
    auto law = std::make_shared<PermCarrier>(6);
    CHECK_THROWS_AS(closure(law, {PermCarrier::from_images({1, 2, 3, 4, 5, 0})}, 3), SizeLimitError);
}

TEST_CASE("conjugacy classes") {
    const FiniteGroupModel z6 = cyclic_table(6);
    CHECK(conjugacy_classes(z6).size() == 6);  // abelian: all singletons

    const FiniteGroupModel s3 = symmetric3();
    const auto classes = conjugacy_classes(s3);
    std::vector<std::size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
    // classes partition the group
    std::size_t total = 0;
    for (const auto& c : classes) total += c.size();
    CHECK(total == s3.order());
    for (std::size_t sz : sizes) CHECK(s3.order() % sz == 0);
}

TEST_CASE("derived subgroup and center") {
    const FiniteGroupModel z6 = cyclic_table(6);
    CHECK(derived_subgroup(z6).order() == 1);
    CHECK(center(z6).order() == 6);

    const FiniteGroupModel s3 = symmetric3();
    CHECK(derived_subgroup(s3).order() == 3);
    CHECK(center(s3).order() == 1);
}

TEST_CASE("normal closure and quotient") {
    const FiniteGroupModel s3 = symmetric3();
    // a transposition normally generates all of S3
    std::uint32_t transposition = 0;
    for (std::uint32_t id = 0; id < s3.order(); ++id)
        if (s3.element_order(id) == 2) {
            transposition = id;
            break;
        }
    CHECK(normal_closure(s3, {transposition}).order() == 6);

    const FiniteGroupModel a3 = derived_subgroup(s3);
    const FiniteGroupModel q = quotient(s3, a3);
    CHECK(q.order() == 2);

    // the subgroup generated by a transposition is not normal
    const FiniteGroupModel sub2 =
        model_from_elements(s3.law_ptr(), {s3.element(s3.identity_id()), s3.element(transposition)});
    CHECK_THROWS_AS(quotient(s3, sub2), std::invalid_argument);

    // Lagrange on every computed subgroup
    CHECK(s3.order() % derived_subgroup(s3).order() == 0);
    CHECK(s3.order() % center(s3).order() == 0);
}

TEST_CASE("simplicity") {
    CHECK(is_simple(cyclic_table(3)));
    CHECK(!is_simple(cyclic_table(6)));
    CHECK(!is_simple(symmetric3()));
    CHECK_THROWS_AS(is_simple(cyclic_table(1)), std::invalid_argument);
}

TEST_CASE("transitivity classification") {
    // A4 on 4 points is doubly transitive: pair orbit 12 = 4*3
    auto law4 = std::make_shared<PermCarrier>(4);
    const FiniteGroupModel a4 =
        closure(law4, {PermCarrier::from_images({1, 2, 0, 3}), PermCarrier::from_images({0, 2, 3, 1})});
    CHECK(a4.order() == 12);
    CHECK(transitivity(a4) == Transitivity::doubly_transitive);

    // a regular action of order n > 2 is transitive but never doubly transitive
    auto law6 = std::make_shared<PermCarrier>(6);
    const FiniteGroupModel z6reg = closure(law6, {PermCarrier::from_images({1, 2, 3, 4, 5, 0})});
    CHECK(transitivity(z6reg) == Transitivity::transitive);

    // a fixed point makes it intransitive
    const FiniteGroupModel fix = closure(law4, {PermCarrier::from_images({1, 2, 0, 3})});
    CHECK(transitivity(fix) == Transitivity::intransitive);
}

TEST_CASE("fingerprints separate Z6 from S3") {
    const GroupFingerprint a = fingerprint(cyclic_table(6));
    const GroupFingerprint b = fingerprint(symmetric3());
    CHECK(a.order == b.order);
    CHECK(!(a == b));
    CHECK(a.abelianization_order == 6);
    CHECK(b.abelianization_order == 2);
}

TEST_CASE("isomorphism search") {
    // Z6 vs S3: same order, different fingerprints
    const IsomorphismResult no = isomorphic(cyclic_table(6), symmetric3());
    CHECK(no.status == IsomorphismResult::Status::not_isomorphic);

    // S3 as permutations vs S3 as a table group
    std::vector<std::uint16_t> s3table;
    {
        const FiniteGroupModel s3 = symmetric3();
        const auto n = static_cast<std::uint16_t>(s3.order());
        s3table.resize(static_cast<std::size_t>(n) * n);
        for (std::uint16_t i = 0; i < n; ++i)
            for (std::uint16_t j = 0; j < n; ++j)
                s3table[static_cast<std::size_t>(i) * n + j] =
                    static_cast<std::uint16_t>(s3.compose(i, j));
    }
    auto table_law = std::make_shared<TableCarrier>(6, std::move(s3table));
    std::vector<Elem> elems;
    for (std::uint16_t i = 0; i < 6; ++i) elems.push_back(TableCarrier::encode(i));
    const FiniteGroupModel s3_table = model_from_elements(table_law, std::move(elems));
    const FiniteGroupModel s3_perm = symmetric3();

    const IsomorphismResult yes = isomorphic(s3_perm, s3_table);
    REQUIRE(yes.status == IsomorphismResult::Status::witness);
    REQUIRE(yes.generator_map.size() == 2);

    // exhaustive homomorphism verification of the witness on the full group
    const std::uint32_t g1 = *s3_perm.index_of(yes.generator_map[0].first);
    const std::uint32_t g2 = *s3_perm.index_of(yes.generator_map[1].first);
    const std::uint32_t h1 = *s3_table.index_of(yes.generator_map[0].second);
    const std::uint32_t h2 = *s3_table.index_of(yes.generator_map[1].second);
    // rebuild phi by BFS and test phi(ab) = phi(a)phi(b) over all pairs
    std::vector<std::uint32_t> phi(6, 0xffffffffu);
    phi[s3_perm.identity_id()] = s3_table.identity_id();
    std::vector<std::uint32_t> queue{s3_perm.identity_id()};
    const std::uint32_t gg[2] = {g1, g2}, hh[2] = {h1, h2};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int k = 0; k < 2; ++k) {
            const std::uint32_t y = s3_perm.compose(queue[head], gg[k]);
            const std::uint32_t img = s3_table.compose(phi[queue[head]], hh[k]);
            if (phi[y] == 0xffffffffu) {
                phi[y] = img;
                queue.push_back(y);
            } else {
                CHECK(phi[y] == img);
            }
        }
    }
    for (std::uint32_t a = 0; a < 6; ++a)
        for (std::uint32_t b = 0; b < 6; ++b)
            CHECK(phi[s3_perm.compose(a, b)] == s3_table.compose(phi[a], phi[b]));

    // budget exhaustion reports inconclusive, distinct from not isomorphic
    const IsomorphismResult starved = isomorphic(s3_perm, s3_table, 2);
    CHECK(starved.status == IsomorphismResult::Status::inconclusive);
}

TEST_CASE("quotient composition law is the induced one") {
    const FiniteGroupModel z6 = cyclic_table(6);
    std::vector<Elem> sub;
    for (std::uint32_t id = 0; id < 6; ++id)
        if (z6.element_order(id) == 1 || z6.element_order(id) == 2) sub.push_back(z6.element(id));
    const FiniteGroupModel n = model_from_elements(z6.law_ptr(), std::move(sub));
    CHECK(n.order() == 2);
    const FiniteGroupModel q = quotient(z6, n);
    CHECK(q.order() == 3);
    bool cyclic = false;
    for (std::uint32_t id = 0; id < q.order(); ++id) cyclic = cyclic || q.element_order(id) == 3;
    CHECK(cyclic);
    audit_closed(q);
}
