#include "sicverify/claims.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace sicverify {

const char* claim_status_name(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::verified: return "verified";
        case ClaimStatus::identified_by_invariants: return "identified-by-invariants";
        case ClaimStatus::failed: return "failed";
        case ClaimStatus::inconclusive: return "inconclusive";
        case ClaimStatus::finding: return "finding";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// context

const SicSystem<EisensteinRational>& ClaimContext::hesse() {
    if (!hesse_) hesse_ = hesse_sic();
    return *hesse_;
}

const TripleProductTable<EisensteinRational>& ClaimContext::hesse_table() {
    if (!hesse_table_) hesse_table_.emplace(hesse());
    return *hesse_table_;
}

const HesseSymmetries& ClaimContext::hesse_syms() {
    if (!hesse_syms_) hesse_syms_ = hesse_symmetries(hesse_table());
    return *hesse_syms_;
}

const SicSystem<GaussianRational>& ClaimContext::hoggar() {
    if (!hoggar_) hoggar_ = hoggar_sic();
    return *hoggar_;
}

const TripleProductTable<GaussianRational>& ClaimContext::hoggar_table() {
    if (!hoggar_table_) hoggar_table_.emplace(hoggar());
    return *hoggar_table_;
}

const std::vector<Sp62>& ClaimContext::sp62_stream() {
    if (!sp62_) sp62_ = sp62_elements();
    return *sp62_;
}

namespace {

constexpr std::uint32_t kCacheMagic = 0x53503632u;  // "SP62"

bool load_scan_cache(const std::filesystem::path& path, std::vector<Sp62>& unitary,
                     std::vector<Sp62>& antiunitary) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::uint32_t magic = 0, vlen = 0;
    in.read(reinterpret_cast<char*>(&magic), sizeof magic);
    in.read(reinterpret_cast<char*>(&vlen), sizeof vlen);
    if (!in || magic != kCacheMagic || vlen > 64) return false;
    std::string version(vlen, '\0');
    in.read(version.data(), vlen);
    if (!in || version != kArtifactVersion) return false;
    std::uint64_t nu = 0, na = 0;
    in.read(reinterpret_cast<char*>(&nu), sizeof nu);
    in.read(reinterpret_cast<char*>(&na), sizeof na);
    if (!in || nu > 2'000'000 || na > 2'000'000) return false;
    unitary.resize(nu);
    antiunitary.resize(na);
    in.read(reinterpret_cast<char*>(unitary.data()), static_cast<std::streamsize>(nu * sizeof(Sp62)));
    in.read(reinterpret_cast<char*>(antiunitary.data()), static_cast<std::streamsize>(na * sizeof(Sp62)));
    return static_cast<bool>(in);
}

void store_scan_cache(const std::filesystem::path& path, const std::vector<Sp62>& unitary,
                      const std::vector<Sp62>& antiunitary) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return;
    const std::uint32_t magic = kCacheMagic;
    const std::string version = kArtifactVersion;
    const auto vlen = static_cast<std::uint32_t>(version.size());
    out.write(reinterpret_cast<const char*>(&magic), sizeof magic);
    out.write(reinterpret_cast<const char*>(&vlen), sizeof vlen);
    out.write(version.data(), vlen);
    const std::uint64_t nu = unitary.size(), na = antiunitary.size();
    out.write(reinterpret_cast<const char*>(&nu), sizeof nu);
    out.write(reinterpret_cast<const char*>(&na), sizeof na);
    out.write(reinterpret_cast<const char*>(unitary.data()), static_cast<std::streamsize>(nu * sizeof(Sp62)));
    out.write(reinterpret_cast<const char*>(antiunitary.data()), static_cast<std::streamsize>(na * sizeof(Sp62)));
}

}  // namespace

const HoggarStabilizer& ClaimContext::hoggar_stab() {
    if (!hoggar_stab_) {
        std::vector<Sp62> unitary, antiunitary;
        bool cached = false;
        std::filesystem::path cache_file;
        if (cache_dir) {
            cache_file = *cache_dir / "sp62_scan.v1.bin";
            cached = load_scan_cache(cache_file, unitary, antiunitary);
        }
        if (cached) {
            std::vector<Elem> perms;
            perms.reserve(unitary.size());
            for (Sp62 m : unitary) {
                Elem img(64);
                for (unsigned x = 0; x < 64; ++x) img[x] = static_cast<std::uint8_t>(sp62_apply(m, x));
                perms.push_back(std::move(img));
            }
            hoggar_stab_ = HoggarStabilizer{
                std::move(unitary), std::move(antiunitary),
                model_from_elements(std::make_shared<PermCarrier>(64), std::move(perms))};
        } else {
            hoggar_stab_ = hoggar_stabilizer(hoggar_table(), sp62_stream(), threads);
            if (cache_dir) {
                std::error_code ec;
                std::filesystem::create_directories(*cache_dir, ec);
                store_scan_cache(cache_file, hoggar_stab_->unitary, hoggar_stab_->antiunitary);
            }
        }
    }
    return *hoggar_stab_;
}

const FiniteGroupModel& ClaimContext::hoggar_full() {
    if (!hoggar_full_) hoggar_full_ = hoggar_full_symmetry(hoggar_stab());
    return *hoggar_full_;
}

const QubitSymmetries& ClaimContext::qubit() {
    if (!qubit_) qubit_ = qubit_symmetries();
    return *qubit_;
}

const EisensteinUnitGroup& ClaimContext::eisenstein() {
    if (!eisenstein_) eisenstein_ = eisenstein_units();
    return *eisenstein_;
}

const HurwitzUnitGroup& ClaimContext::hurwitz() {
    if (!hurwitz_) hurwitz_ = hurwitz_units();
    return *hurwitz_;
}

const CayleyRing& ClaimContext::ring() {
    if (!ring_) ring_.emplace();
    return *ring_;
}

const UnitLoop& ClaimContext::loop() {
    if (!loop_) loop_.emplace(ring());
    return *loop_;
}

const CayleyAutomorphisms& ClaimContext::automorphisms() {
    if (!automorphisms_) automorphisms_ = cayley_automorphisms(ring(), loop());
    return *automorphisms_;
}

const FiniteGroupModel& ClaimContext::sl23() {
    if (!sl23_) sl23_ = build_sl23();
    return *sl23_;
}

const FiniteGroupModel& ClaimContext::psu33() {
    if (!psu33_) psu33_ = build_psu33();
    return *psu33_;
}

// ---------------------------------------------------------------------------
// helpers

std::size_t pair_orbit_size(const FiniteGroupModel& g) {
    const auto* pc = dynamic_cast<const PermCarrier*>(&g.law());
    if (pc == nullptr) throw std::invalid_argument("pair_orbit_size: needs a permutation carrier");
    const int n = pc->degree();
    if (n < 2) return 0;
    std::vector<bool> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
    std::vector<std::pair<int, int>> orbit{{0, 1}};
    seen[1] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (std::uint32_t gen : g.generator_ids()) {
            const Elem& p = g.element(gen);
            const int a = p[static_cast<std::size_t>(orbit[head].first)];
            const int b = p[static_cast<std::size_t>(orbit[head].second)];
            const std::size_t key =
                static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
            if (!seen[key]) {
                seen[key] = true;
                orbit.emplace_back(a, b);
            }
        }
    }
    return orbit.size();
}

namespace {

bool is_cyclic(const FiniteGroupModel& g) {
    for (std::uint32_t id = 0; id < g.order(); ++id)
        if (g.element_order(id) == g.order()) return true;
    return g.order() == 1;
}

std::string transitivity_name(Transitivity t) {
    switch (t) {
        case Transitivity::intransitive: return "intransitive";
        case Transitivity::transitive: return "transitive";
        case Transitivity::doubly_transitive: return "doubly_transitive";
    }
    return "?";
}

nlohmann::ordered_json witness_map(const FiniteGroupModel& g, const FiniteGroupModel& h,
                                   const IsomorphismResult& iso) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [ge, he] : iso.generator_map) {
        nlohmann::ordered_json pair;
        pair["from"] = g.law().describe(ge);
        pair["to"] = h.law().describe(he);
        arr.push_back(pair);
    }
    return arr;
}

// status helper: all expectations hold -> verified, else failed
void set_status(ClaimReport& rep, bool ok) {
    rep.status = ok ? ClaimStatus::verified : ClaimStatus::failed;
}

std::vector<Claim> build_registry() {
    std::vector<Claim> reg;

    reg.push_back(Claim{
        "C1", "hesse-is-sic",
        "the d=3 Weyl-Heisenberg orbit of the fiducial (0, 1, -1) is a SIC: "
        "(d+1)|<j|k>|^2 = norm_sq^2 for all j != k",
        false,
        [](ClaimContext& ctx, ClaimReport& rep) {
            const auto& s = ctx.hesse();
            const bool sic = verify_sic(s);
            const bool norm_ok = s.norm_sq == Rational(2);
            rep.witnesses["norm_sq"] = s.norm_sq.str();
            rep.witnesses["cross_overlap_sq"] = "1";
            rep.witnesses["ordered_pairs"] = 81;
            rep.witnesses["headline"] = "4*1 = 2^2 on all 81 ordered pairs";
            set_status(rep, sic && norm_ok);
        }});

    reg.push_back(Claim{
        "C2", "hoggar-is-sic",
        "the three-qubit Pauli orbit of the fiducial (-1+2i, 1, ..., 1) is a SIC: "
        "9|<j|k>|^2 = 144 for all j != k",
        false,
        [](ClaimContext& ctx, ClaimReport& rep) {
            const auto& s = ctx.hoggar();
            const bool sic = verify_sic(s);
            const bool norm_ok = s.norm_sq == Rational(12);
            rep.witnesses["norm_sq"] = s.norm_sq.str();
            rep.witnesses["cross_overlap_sq"] = "16";
            rep.witnesses["unordered_cross_pairs"] = 2016;
            rep.witnesses["headline"] = "9*16 = 12^2 on all 2016 cross pairs";
            set_status(rep, sic && norm_ok);
        }});

    reg.push_back(Claim{
        "C3", "qubit-stabilizer-Z3",
        "rotations of the Bloch sphere fixing one vertex of the tetrahedral SIC "
        "form a cyclic group of order 3",
        false,
        [](ClaimContext& ctx, ClaimReport& rep) {
            const auto& q = ctx.qubit();
            const bool rot12 = q.rotations.order() == 12;
            const bool dt = transitivity(q.rotations) == Transitivity::doubly_transitive;
            const bool stab3 = q.stabilizer0.order() == 3 && is_cyclic(q.stabilizer0);
            rep.witnesses["rotation_group_order"] = q.rotations.order();
            rep.witnesses["stabilizer_order"] = q.stabilizer0.order();
            rep.witnesses["stabilizer_cyclic"] = is_cyclic(q.stabilizer0);
            rep.witnesses["stabilizer_with_reflections_order"] = q.stabilizer0_with_reflections.order();
            rep.witnesses["headline"] = "stabilizer order 3, cyclic; rotation group order 12";
            set_status(rep, rot12 && dt && stab3);
        }});

    reg.push_back(Claim{
        "C4", "eisenstein-units-Z6-mod-pm1-Z3",
        "the Eisenstein integers have exactly the six units {±1, ±w, ±w^2}, a cyclic "
        "group whose quotient by {±1} is the qubit vertex stabilizer Z3",
        false,
        [](ClaimContext& ctx, ClaimReport& rep) {
            const auto& e = ctx.eisenstein();
            const bool six = e.units.size() == 6 && e.group.order() == 6;
            const bool cyc6 = is_cyclic(e.group);
            // the subgroup {+1, -1}
            std::vector<Elem> pm;
            for (std::size_t i = 0; i < e.units.size(); ++i)
                if (e.units[i].b == 0 && (e.units[i].a == 1 || e.units[i].a == -1))
                    pm.push_back(TableCarrier::encode(static_cast<std::uint16_t>(i)));
            FiniteGroupModel pm1 = model_from_elements(e.group.law_ptr(), std::move(pm));
            FiniteGroupModel q = quotient(e.group, pm1);
            const bool q3 = q.order() == 3 && is_cyclic(q);
            const IsomorphismResult iso = isomorphic(q, ctx.qubit().stabilizer0, ctx.iso_budget);
            rep.witnesses["unit_count"] = e.units.size();
            rep.witnesses["group_cyclic_order_6"] = cyc6;
            rep.witnesses["quotient_order"] = q.order();
            rep.witnesses["iso_to_qubit_stabilizer"] = iso.found();
            rep.witnesses["headline"] = "6 units; Z6/{±1} = Z3 with isomorphism witness";
            set_status(rep, six && cyc6 && q3 && iso.found());
        }});

    reg.push_back(Claim{
        "C5", "hurwitz-units-SL23",
        "the Hurwitz integers have exactly 24 units (the 24-cell vertices), forming "
        "the binary tetrahedral group, isomorphic to SL(2,3)",
        false,
        [](ClaimContext& ctx, ClaimReport& rep) {
            const auto& h = ctx.hurwitz();
            const bool count = h.units.size() == 24 && h.group.order() == 24;
            const IsomorphismResult iso = isomorphic(h.group, ctx.sl23(), ctx.iso_budget);
            rep.witnesses["unit_count"] = h.units.size();
            rep.witnesses["iso_to_sl23_witness"] = iso.found();
            if (iso.found()) rep.witnesses["generator_images"] = witness_map(h.group, ctx.sl23(), iso);
            rep.witnesses["headline"] = "24 units; certified isomorphism to SL(2,3)";
            set_status(rep, count && iso.found());
        }});

    reg.push_back(Claim{
        "C6", "hesse-stabilizer-SL23",
        "the full triple-product symmetry group of the Hesse SIC labels has order 216; "
        "the stabilizer of a projector has order 24 and is the Hurwitz unit group SL(2,3)",
        false,
        [](ClaimContext& ctx, ClaimReport& rep) {
            const auto& hs = ctx.hesse_syms();
            const bool full216 = hs.full.order() == 216;
            const bool stab24 = hs.stabilizer0.order() == 24;
            const IsomorphismResult iso_sl = isomorphic(hs.stabilizer0, ctx.sl23(), ctx.iso_budget);
            const IsomorphismResult iso_hw = isomorphic(hs.stabilizer0, ctx.hurwitz().group, ctx.iso_budget);
            rep.witnesses["full_group_order"] = hs.full.order();
            rep.witnesses["stabilizer_order"] = hs.stabilizer0.order();
            rep.witnesses["iso_to_sl23_witness"] = iso_sl.found();
            rep.witnesses["iso_to_hurwitz_units_witness"] = iso_hw.found();
            if (iso_sl.found())
                rep.witnesses["generator_images"] = witness_map(hs.stabilizer0, ctx.sl23(), iso_sl);
            rep.witnesses["antiunitary_extension_count"] = hs.antiunitary_count;
            rep.witnesses["headline"] = "full group 216, stabilizer 24 = SL(2,3) (certified)";
            set_status(rep, full216 && stab24 && iso_sl.found() && iso_hw.found());
        }});

    reg.push_back(Claim{
        "C7", "cayley-units-240",
        "the Cayley integral octonions close multiplicatively and contain exactly 240 "
        "unit-norm elements forming a Moufang loop that is not a group",
        false,
        [](ClaimContext& ctx, ClaimReport& rep) {
            const auto& ring = ctx.ring();
            const auto& loop = ctx.loop();
            const bool count = loop.size() == 240;
            const bool moufang = loop.moufang_left_exhaustive() && loop.moufang_sampled();
            const auto assoc = loop.first_associativity_failure();
            rep.witnesses["unit_count"] = loop.size();
            rep.witnesses["halving_swap_index"] = ring.swap_index();
            rep.witnesses["moufang_left_exhaustive"] = moufang;
            rep.witnesses["associativity_failure_triple"] =
                assoc ? nlohmann::ordered_json{(*assoc)[0], (*assoc)[1], (*assoc)[2]}
                      : nlohmann::ordered_json();
            rep.witnesses["headline"] = "240 units; Moufang holds, associativity fails";
            set_status(rep, count && moufang && assoc.has_value());
        }});

    reg.push_back(Claim{
        "C8", "aut-order-12096",
        "the automorphism group of the Cayley integers has order 12096",
        false,
        [](ClaimContext& ctx, ClaimReport& rep) {
            const auto& a = ctx.automorphisms();
            rep.witnesses["automorphism_count"] = a.group.order();
            rep.witnesses["headline"] = "12096 automorphisms by backtracking enumeration";
            set_status(rep, a.group.order() == 12096);
        }});

    reg.push_back(Claim{
        "C9", "aut-structure-PSU33-semidirect-Z2",
        "the automorphism group splits as PSU(3,3) semidirect Z2: its derived subgroup "
        "is simple of order 6048 and isomorphic to PSU(3,3), with an involution outside",
        false,
        [](ClaimContext& ctx, ClaimReport& rep) {
            const auto& a = ctx.automorphisms();
            FiniteGroupModel derived = derived_subgroup(a.group);
            const bool d6048 = derived.order() == 6048;
            const bool simple = d6048 && is_simple(derived);
            const IsomorphismResult iso = isomorphic(derived, ctx.psu33(), ctx.iso_budget);
            bool involution_outside = false;
            for (std::uint32_t id = 0; id < a.group.order() && !involution_outside; ++id)
                involution_outside =
                    a.group.element_order(id) == 2 && !derived.contains(a.group.element(id));
            rep.witnesses["derived_subgroup_order"] = derived.order();
            rep.witnesses["derived_simple"] = simple;
            rep.witnesses["iso_to_psu33_witness"] = iso.found();
            rep.witnesses["involution_outside_derived"] = involution_outside;
            rep.witnesses["headline"] = "derived = PSU(3,3) (order 6048, simple); split Z2 on top";
            set_status(rep, d6048 && simple && iso.found() && involution_outside);
        }});

    reg.push_back(Claim{
        "C10", "hoggar-stabilizer-PSU33",
        "the Hoggar projector-0 stabilizer, found by scanning all 1,451,520 symplectic "
        "label maps for triple-product invariance, has order 6048 and is PSU(3,3)",
        false,
        [](ClaimContext& ctx, ClaimReport& rep) {
            const auto& stab = ctx.hoggar_stab();
            const bool count = stab.unitary.size() == 6048;
            const bool simple = count && is_simple(stab.unitary_group);
            const IsomorphismResult iso = isomorphic(stab.unitary_group, ctx.psu33(), ctx.iso_budget);
            rep.witnesses["sp62_candidates"] = 1451520;
            rep.witnesses["unitary_stabilizer_order"] = stab.unitary.size();
            rep.witnesses["antiunitary_coset_size"] = stab.antiunitary.size();
            rep.witnesses["unitary_plus_antiunitary"] = stab.unitary.size() + stab.antiunitary.size();
            rep.witnesses["simple"] = simple;
            if (iso.found()) {
                rep.witnesses["iso_to_psu33_witness"] = true;
                rep.witnesses["generator_images"] = witness_map(stab.unitary_group, ctx.psu33(), iso);
                rep.witnesses["headline"] = "stabilizer order 6048, simple, = PSU(3,3) (certified)";
                set_status(rep, count && simple);
            } else if (iso.status == IsomorphismResult::Status::inconclusive) {
                // identification by invariants: order + simplicity + class sizes
                const GroupFingerprint a = fingerprint(stab.unitary_group);
                const GroupFingerprint b = fingerprint(ctx.psu33());
                const bool invariants = count && simple && a.conjugacy_class_sizes == b.conjugacy_class_sizes;
                rep.witnesses["iso_to_psu33_witness"] = false;
                rep.witnesses["class_size_multiset_match"] = invariants;
                rep.witnesses["headline"] = "stabilizer identified by invariants (search budget hit)";
                rep.status = invariants ? ClaimStatus::identified_by_invariants : ClaimStatus::failed;
            } else {
                rep.witnesses["iso_to_psu33_witness"] = false;
                rep.witnesses["headline"] = "stabilizer is not PSU(3,3)";
                rep.status = ClaimStatus::failed;
            }
        }});

    reg.push_back(Claim{
        "C11", "double-transitivity",
        "the symmetry groups of the qubit tetrahedron, the Hesse SIC and the Hoggar SIC "
        "all act doubly transitively on their projectors",
        false,
        [](ClaimContext& ctx, ClaimReport& rep) {
            const auto& q = ctx.qubit().rotations;
            const auto& hesse_full = ctx.hesse_syms().full;
            const FiniteGroupModel& hoggar_full = ctx.hoggar_full();
            const bool q_dt = transitivity(q) == Transitivity::doubly_transitive;
            const bool hesse_dt = transitivity(hesse_full) == Transitivity::doubly_transitive;
            const bool hoggar_dt = transitivity(hoggar_full) == Transitivity::doubly_transitive;
            const std::size_t hesse_pairs = pair_orbit_size(hesse_full);
            const std::size_t hoggar_pairs = pair_orbit_size(hoggar_full);
            rep.witnesses["qubit"] = transitivity_name(transitivity(q));
            rep.witnesses["hesse"] = transitivity_name(transitivity(hesse_full));
            rep.witnesses["hesse_pair_orbit"] = hesse_pairs;
            rep.witnesses["hoggar"] = transitivity_name(transitivity(hoggar_full));
            rep.witnesses["hoggar_full_order"] = hoggar_full.order();
            rep.witnesses["hoggar_pair_orbit"] = hoggar_pairs;
            rep.witnesses["headline"] = "pair orbits 4*3, 9*8, 64*63 all full";
            set_status(rep, q_dt && hesse_dt && hoggar_dt && hesse_pairs == 72 &&
                                hoggar_pairs == 4032 && hoggar_full.order() == 387072);
        }});

    reg.push_back(Claim{
        "C12", "lattice-ADE",
        "the unit systems generate the A2, D4 and E8 root lattices: 6/24/240 roots with "
        "reflection closure, and the rescaled 240-root lattice is even unimodular",
        false,
        [](ClaimContext& ctx, ClaimReport& rep) {
            const RootSystemID a2 = identify_root_system(eisenstein_family(ctx.eisenstein().units));
            const RootSystemID d4 = identify_root_system(quaternion_family(ctx.hurwitz().units));
            const RootSystemID e8 = identify_root_system(octonion_family(ctx.loop().units()));
            rep.witnesses["eisenstein_units"] = root_label_name(a2.label);
            rep.witnesses["hurwitz_units"] = root_label_name(d4.label);
            rep.witnesses["cayley_units"] = root_label_name(e8.label);
            rep.witnesses["reflection_closed"] =
                a2.reflection_closed && d4.reflection_closed && e8.reflection_closed;
            const VectorFamily e8_scaled = scale_form(octonion_family(ctx.loop().units()), Rational(2));
            const LatticeBasisInfo info = lattice_basis(e8_scaled);
            rep.witnesses["e8_gram_determinant"] = info.gram_det.str();
            rep.witnesses["headline"] = "A2 / D4 / E8 with E8 determinant 1";
            set_status(rep, a2.label == RootLabel::A2 && d4.label == RootLabel::D4 &&
                                e8.label == RootLabel::E8 && info.gram_det == Rational(1));
        }});

    reg.push_back(Claim{
        "C13", "twin-conjugation",
        "entrywise complex conjugation maps the Hesse SIC to itself but the Hoggar SIC "
        "to a twin",
        false,
        [](ClaimContext& ctx, ClaimReport& rep) {
            const TwinStatus hesse = twin_check(ctx.hesse());
            const TwinStatus hoggar = twin_check(ctx.hoggar());
            const TwinStatus qubit = qubit_twin_check();
            rep.witnesses["hesse"] = hesse == TwinStatus::self_conjugate ? "self_conjugate" : "twinned";
            rep.witnesses["hoggar"] = hoggar == TwinStatus::self_conjugate ? "self_conjugate" : "twinned";
            rep.witnesses["qubit_bloch_surrogate"] =
                qubit == TwinStatus::self_conjugate ? "self_conjugate" : "twinned";
            rep.witnesses["headline"] = "Hesse self-conjugate, Hoggar twinned";
            set_status(rep, hesse == TwinStatus::self_conjugate && hoggar == TwinStatus::twinned);
        }});

    reg.push_back(Claim{
        "C14", "extended-hoggar-stabilizer-vs-G2Z",
        "finding: the unitary+antiunitary Hoggar stabilizer (order 12096) is compared "
        "against the Cayley automorphism group G2(Z) by certified isomorphism search",
        true,
        [](ClaimContext& ctx, ClaimReport& rep) {
            const auto& stab = ctx.hoggar_stab();
            std::vector<Elem> perms;
            perms.reserve(stab.unitary.size() + stab.antiunitary.size());
            for (const auto* side : {&stab.unitary, &stab.antiunitary}) {
                for (Sp62 m : *side) {
                    Elem img(64);
                    for (unsigned x = 0; x < 64; ++x)
                        img[x] = static_cast<std::uint8_t>(sp62_apply(m, x));
                    perms.push_back(std::move(img));
                }
            }
            FiniteGroupModel extended =
                model_from_elements(std::make_shared<PermCarrier>(64), std::move(perms));
            const auto& aut = ctx.automorphisms().group;
            rep.witnesses["extended_stabilizer_order"] = extended.order();
            rep.witnesses["automorphism_group_order"] = aut.order();
            const IsomorphismResult iso = isomorphic(extended, aut, ctx.iso_budget);
            const char* outcome = iso.found() ? "isomorphic (witness found)"
                                 : iso.status == IsomorphismResult::Status::not_isomorphic
                                     ? "not isomorphic"
                                     : "inconclusive";
            rep.witnesses["isomorphism"] = outcome;
            if (iso.found()) rep.witnesses["generator_images"] = witness_map(extended, aut, iso);
            rep.witnesses["headline"] = std::string("extended stabilizer vs G2(Z): ") + outcome;
            rep.status = ClaimStatus::finding;
        }});

    return reg;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
    static const std::vector<Claim> reg = build_registry();
    return reg;
}

RunResult run_claims(const std::vector<std::string>& ids, ClaimContext& ctx) {
    const auto& reg = claim_registry();
    std::vector<const Claim*> selected;
    if (ids.empty()) {
        for (const auto& c : reg) selected.push_back(&c);
    } else {
        for (const auto& id : ids) {
            const Claim* found = nullptr;
            for (const auto& c : reg)
                if (c.id == id) {
                    found = &c;
                    break;
                }
            if (found == nullptr) throw std::invalid_argument("unknown claim id: " + id);
            selected.push_back(found);
        }
        // report order follows the registry regardless of request order
        std::sort(selected.begin(), selected.end(), [&](const Claim* a, const Claim* b) {
            return a - reg.data() < b - reg.data();
        });
        selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
    }

    RunResult out;
    bool all_ok = true;
    for (const Claim* c : selected) {
        ClaimReport rep;
        rep.id = c->id;
        rep.description = c->description;
        rep.anchor = c->anchor;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c->run(ctx, rep);
        } catch (const SizeLimitError& e) {
            rep.status = ClaimStatus::inconclusive;
            rep.limit_hit = true;
            rep.witnesses["error"] = e.what();
            out.any_limit_hit = true;
        }
        const auto t1 = std::chrono::steady_clock::now();
        rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        if (!c->finding && rep.status != ClaimStatus::verified &&
            rep.status != ClaimStatus::identified_by_invariants)
            all_ok = false;
        out.reports.push_back(std::move(rep));
    }
    out.all_verified = all_ok;
    return out;
}

std::string render_text(const RunResult& r, bool timings) {
    std::ostringstream os;
    for (const auto& rep : r.reports) {
        os << rep.id;
        for (std::size_t i = rep.id.size(); i < 4; ++i) os << ' ';
        os << ' ' << rep.description;
        for (std::size_t i = rep.description.size(); i < 40; ++i) os << ' ';
        os << ' ' << claim_status_name(rep.status);
        std::string headline;
        if (rep.witnesses.contains("headline")) headline = rep.witnesses["headline"].get<std::string>();
        if (!headline.empty()) os << "  [" << headline << "]";
        if (timings) os << "  (" << rep.runtime_ms << " ms)";
        os << '\n';
    }
    os << (r.all_verified ? "all claims verified" : "NOT ALL CLAIMS VERIFIED") << '\n';
    return os.str();
}

nlohmann::ordered_json render_json(const RunResult& r, bool timings) {
    nlohmann::ordered_json root;
    root["artifact_version"] = kArtifactVersion;
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const auto& rep : r.reports) {
        nlohmann::ordered_json j;
        j["claim"] = rep.id;
        j["description"] = rep.description;
        j["paper_anchor"] = rep.anchor;
        j["status"] = claim_status_name(rep.status);
        j["witnesses"] = rep.witnesses;
        j["runtime_ms"] = timings ? rep.runtime_ms : 0;
        reports.push_back(std::move(j));
    }
    root["reports"] = std::move(reports);
    root["all_verified"] = r.all_verified;
    return root;
}

}  // namespace sicverify
