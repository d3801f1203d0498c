// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria re-run the real constructions with wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "sicverify/claims.hpp"

using namespace sicverify;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok, double seconds, double budget_seconds) {
    const bool in_budget = seconds < budget_seconds;
    std::printf("[%s] criterion %2d: %s (%.2fs, budget %.0fs)\n",
                ok && in_budget ? "PASS" : "FAIL", number, what.c_str(), seconds, budget_seconds);
    if (!ok || !in_budget) ++failures;
    std::fflush(stdout);
}

double elapsed(const Clock::time_point& t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    // --- 1: Hesse SIC verification -----------------------------------------
    auto t0 = Clock::now();
    const auto hesse = hesse_sic();
    const bool c1 = verify_sic(hesse) && hesse.norm_sq == Rational(2);
    report(1, "Hesse SIC: (d+1)|<j|k>|^2 = 4 exactly on all 81 ordered pairs", c1, elapsed(t0), 1);

    // --- 2: Hoggar SIC verification ----------------------------------------
    t0 = Clock::now();
    const auto hoggar = hoggar_sic();
    const bool c2 = verify_sic(hoggar) && hoggar.norm_sq == Rational(12);
    report(2, "Hoggar SIC: 9|<j|k>|^2 = 144 exactly on all 2016 cross pairs", c2, elapsed(t0), 5);

    // --- 3: qubit stabilizer ------------------------------------------------
    t0 = Clock::now();
    const QubitSymmetries qubit = qubit_symmetries();
    bool stab_cyclic = false;
    for (std::uint32_t id = 0; id < qubit.stabilizer0.order(); ++id)
        stab_cyclic = stab_cyclic || qubit.stabilizer0.element_order(id) == 3;
    const bool c3 = qubit.rotations.order() == 12 &&
                    transitivity(qubit.rotations) == Transitivity::doubly_transitive &&
                    qubit.stabilizer0.order() == 3 && stab_cyclic;
    report(3, "qubit: rotation group 12, doubly transitive; vertex stabilizer Z3", c3, elapsed(t0), 1);

    // --- 4: Eisenstein units ------------------------------------------------
    t0 = Clock::now();
    const EisensteinUnitGroup eis = eisenstein_units();
    bool eis_cyclic6 = false;
    for (std::uint32_t id = 0; id < eis.group.order(); ++id)
        eis_cyclic6 = eis_cyclic6 || eis.group.element_order(id) == 6;
    std::vector<Elem> pm;
    for (std::size_t i = 0; i < eis.units.size(); ++i)
        if (eis.units[i].b == 0 && (eis.units[i].a == 1 || eis.units[i].a == -1))
            pm.push_back(TableCarrier::encode(static_cast<std::uint16_t>(i)));
    const FiniteGroupModel pm1 = model_from_elements(eis.group.law_ptr(), std::move(pm));
    const FiniteGroupModel eis_q = quotient(eis.group, pm1);
    const IsomorphismResult eis_iso = isomorphic(eis_q, qubit.stabilizer0);
    const bool c4 = eis.units.size() == 6 && eis_cyclic6 && eis_q.order() == 3 && eis_iso.found();
    report(4, "Eisenstein: 6 units, Z6; quotient by {±1} = Z3 = qubit stabilizer (witness)", c4,
           elapsed(t0), 1);

    // --- 5: Hurwitz units ---------------------------------------------------
    t0 = Clock::now();
    const HurwitzUnitGroup hur = hurwitz_units();
    const FiniteGroupModel sl23 = build_sl23();
    const IsomorphismResult hur_iso = isomorphic(hur.group, sl23);
    const bool c5 = hur.units.size() == 24 && hur_iso.found();
    report(5, "Hurwitz: 24 units with certified isomorphism witness to SL(2,3)", c5, elapsed(t0), 5);

    // --- 6: Hesse stabilizer ------------------------------------------------
    t0 = Clock::now();
    const TripleProductTable<EisensteinRational> hesse_table(hesse);
    const HesseSymmetries hsym = hesse_symmetries(hesse_table);
    const IsomorphismResult hesse_sl = isomorphic(hsym.stabilizer0, sl23);
    const IsomorphismResult hesse_hw = isomorphic(hsym.stabilizer0, hur.group);
    const bool c6 = hsym.full.order() == 216 &&
                    transitivity(hsym.full) == Transitivity::doubly_transitive &&
                    pair_orbit_size(hsym.full) == 72 && hsym.stabilizer0.order() == 24 &&
                    hesse_sl.found() && hesse_hw.found();
    report(6, "Hesse: exhaustive S9 scan gives order 216, pair orbit 72, stabilizer 24 = SL(2,3)",
           c6, elapsed(t0), 60);

    // --- 7: Hoggar stabilizer -----------------------------------------------
    t0 = Clock::now();
    const TripleProductTable<GaussianRational> hoggar_table(hoggar);
    const std::vector<Sp62> stream = sp62_elements();
    const HoggarStabilizer stab = hoggar_stabilizer(hoggar_table, stream, 1);
    const FiniteGroupModel psu = build_psu33();
    const bool scan_ok = stream.size() == 1451520u && stab.unitary.size() == 6048 &&
                         stab.antiunitary.size() == 6048;
    const bool simple_ok = is_simple(stab.unitary_group);
    const IsomorphismResult stab_iso = isomorphic(stab.unitary_group, psu);
    bool ident_ok = stab_iso.found();
    std::string label = "isomorphism-certified";
    if (!ident_ok && stab_iso.status == IsomorphismResult::Status::inconclusive) {
        // search ran out of budget: identification by invariants, labeled as such
        ident_ok = fingerprint(stab.unitary_group).conjugacy_class_sizes ==
                   fingerprint(psu).conjugacy_class_sizes;
        label = "identified-by-invariants";
    }
    const bool c7 = scan_ok && simple_ok && ident_ok &&
                    stab.unitary.size() + stab.antiunitary.size() == 12096;
    report(7,
           "Hoggar: full 1,451,520-candidate scan gives 6048 (simple, PSU(3,3) " + label +
               "), antiunitary total 12096",
           c7, elapsed(t0), 900);

    // parallel consumption is deterministic: same scan with 2 workers
    {
        const HoggarStabilizer stab2 = hoggar_stabilizer(hoggar_table, stream, 2);
        if (stab2.unitary != stab.unitary || stab2.antiunitary != stab.antiunitary) {
            std::puts("[FAIL] criterion  7b: threaded scan differs from single-threaded scan");
            ++failures;
        }
    }

    // --- 8: Hoggar full symmetry group --------------------------------------
    t0 = Clock::now();
    const FiniteGroupModel full = hoggar_full_symmetry(stab);
    const bool c8 = full.order() == 387072 && pair_orbit_size(full) == 4032 &&
                    transitivity(full) == Transitivity::doubly_transitive;
    report(8, "Hoggar full symmetry: order 387,072 with pair orbit 4032 (doubly transitive)", c8,
           elapsed(t0), 120);

    // --- 9: Cayley integers -------------------------------------------------
    t0 = Clock::now();
    const CayleyRing ring;
    bool basis_closed = true;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            basis_closed = basis_closed && ring.contains(ring.basis()[static_cast<std::size_t>(i)] *
                                                         ring.basis()[static_cast<std::size_t>(j)]);
    const UnitLoop loop(ring);
    const bool moufang = loop.moufang_left_exhaustive();
    const auto assoc = loop.first_associativity_failure();
    const bool c9 = basis_closed && loop.size() == 240 && moufang && assoc.has_value();
    report(9, "Cayley: closure gate on 64 basis pairs, 240 units, exhaustive Moufang, assoc failure",
           c9, elapsed(t0), 300);

    // --- 10: automorphism group ---------------------------------------------
    t0 = Clock::now();
    const CayleyAutomorphisms aut = cayley_automorphisms(ring, loop);
    const FiniteGroupModel derived = derived_subgroup(aut.group);
    const bool derived_ok = derived.order() == 6048 && is_simple(derived);
    const IsomorphismResult aut_iso = isomorphic(derived, psu);
    bool involution_outside = false;
    for (std::uint32_t id = 0; id < aut.group.order() && !involution_outside; ++id)
        involution_outside = aut.group.element_order(id) == 2 && !derived.contains(aut.group.element(id));
    const bool c10 = aut.group.order() == 12096 && derived_ok && aut_iso.found() && involution_outside;
    report(10, "automorphisms: 12,096; derived = PSU(3,3) (witness); involution outside certifies the split",
           c10, elapsed(t0), 600);

    // --- 11: lattice identifications ----------------------------------------
    t0 = Clock::now();
    const RootSystemID a2 = identify_root_system(eisenstein_family(eis.units));
    const RootSystemID d4 = identify_root_system(quaternion_family(hur.units));
    const RootSystemID e8 = identify_root_system(octonion_family(loop.units()));
    const LatticeBasisInfo e8_info = lattice_basis(scale_form(octonion_family(loop.units()), Rational(2)));
    const bool c11 = a2.label == RootLabel::A2 && d4.label == RootLabel::D4 &&
                     e8.label == RootLabel::E8 && a2.reflection_closed && d4.reflection_closed &&
                     e8.reflection_closed && e8_info.gram_det == Rational(1);
    report(11, "lattices: A2 / D4 / E8 with reflection closure and E8 determinant exactly 1", c11,
           elapsed(t0), 60);

    // --- 12: twin check ------------------------------------------------------
    t0 = Clock::now();
    const bool c12 =
        twin_check(hesse) == TwinStatus::self_conjugate && twin_check(hoggar) == TwinStatus::twinned;
    report(12, "twins: Hesse self-conjugate, Hoggar twinned", c12, elapsed(t0), 10);

    // --- 13: end-to-end CLI --------------------------------------------------
    t0 = Clock::now();
    bool c13 = true;
    const std::filesystem::path tmp =
        std::filesystem::temp_directory_path() / "sicverify_acceptance";
    std::filesystem::create_directories(tmp);
    const std::string cli = SICVERIFY_CLI_PATH;
    const std::string out1 = (tmp / "run1.json").string();
    const std::string out2 = (tmp / "run2.json").string();
    const std::string out3 = (tmp / "run3.json").string();
    c13 = c13 && std::system((cli + " verify --format json > " + out1).c_str()) == 0;
    c13 = c13 && std::system((cli + " verify --format json > " + out2).c_str()) == 0;
    c13 = c13 && std::system((cli + " verify --format json --threads 2 > " + out3).c_str()) == 0;
    const std::string j1 = slurp(out1);
    c13 = c13 && !j1.empty() && j1 == slurp(out2) && j1 == slurp(out3);
    if (c13) {
        // schema validation
        nlohmann::json doc = nlohmann::json::parse(j1, nullptr, false);
        c13 = !doc.is_discarded() && doc["artifact_version"].is_string() &&
              doc["all_verified"].is_boolean() && doc["all_verified"].get<bool>() &&
              doc["reports"].is_array() && doc["reports"].size() >= 14;
        if (c13) {
            for (const auto& rep : doc["reports"]) {
                c13 = c13 && rep["claim"].is_string() && rep["description"].is_string() &&
                      rep["paper_anchor"].is_string() && rep["status"].is_string() &&
                      rep["witnesses"].is_object() && rep["runtime_ms"].is_number_integer();
            }
        }
    }
    report(13, "CLI verify --format json: exit 0, schema-valid, byte-identical across runs and threads",
           c13, elapsed(t0), 300);

    if (failures == 0) {
        std::puts("acceptance: all criteria passed");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
