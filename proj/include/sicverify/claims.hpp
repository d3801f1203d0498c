#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sicverify/algebras.hpp"
#include "sicverify/groups.hpp"
#include "sicverify/lattices.hpp"
#include "sicverify/matgroups.hpp"
#include "sicverify/sic.hpp"

namespace sicverify {

inline constexpr const char* kArtifactVersion = "1.0.0";

enum class ClaimStatus { verified, identified_by_invariants, failed, inconclusive, finding };
const char* claim_status_name(ClaimStatus s);

struct ClaimReport {
    std::string id;
    std::string description;
    std::string anchor;
    ClaimStatus status = ClaimStatus::failed;
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
    std::int64_t runtime_ms = 0;
    bool limit_hit = false;
};

/// Shared prerequisites, computed once per process and reused across claims.
class ClaimContext {
public:
    int threads = 1;
    std::optional<std::filesystem::path> cache_dir;
    std::uint64_t iso_budget = 2'000'000'000ULL;

    const SicSystem<EisensteinRational>& hesse();
    const TripleProductTable<EisensteinRational>& hesse_table();
    const HesseSymmetries& hesse_syms();
    const SicSystem<GaussianRational>& hoggar();
    const TripleProductTable<GaussianRational>& hoggar_table();
    const std::vector<Sp62>& sp62_stream();
    const HoggarStabilizer& hoggar_stab();
    const FiniteGroupModel& hoggar_full();
    const QubitSymmetries& qubit();
    const EisensteinUnitGroup& eisenstein();
    const HurwitzUnitGroup& hurwitz();
    const CayleyRing& ring();
    const UnitLoop& loop();
    const CayleyAutomorphisms& automorphisms();
    const FiniteGroupModel& sl23();
    const FiniteGroupModel& psu33();

private:
    std::optional<SicSystem<EisensteinRational>> hesse_;
    std::optional<TripleProductTable<EisensteinRational>> hesse_table_;
    std::optional<HesseSymmetries> hesse_syms_;
    std::optional<SicSystem<GaussianRational>> hoggar_;
    std::optional<TripleProductTable<GaussianRational>> hoggar_table_;
    std::optional<std::vector<Sp62>> sp62_;
    std::optional<HoggarStabilizer> hoggar_stab_;
    std::optional<FiniteGroupModel> hoggar_full_;
    std::optional<QubitSymmetries> qubit_;
    std::optional<EisensteinUnitGroup> eisenstein_;
    std::optional<HurwitzUnitGroup> hurwitz_;
    std::optional<CayleyRing> ring_;
    std::optional<UnitLoop> loop_;
    std::optional<CayleyAutomorphisms> automorphisms_;
    std::optional<FiniteGroupModel> sl23_;
    std::optional<FiniteGroupModel> psu33_;
};

struct Claim {
    std::string id;
    std::string description;
    std::string anchor;
    bool finding = false;
    std::function<void(ClaimContext&, ClaimReport&)> run;
};

/// The fixed claim registry, C1..C14, in report order.
const std::vector<Claim>& claim_registry();

struct RunResult {
    std::vector<ClaimReport> reports;
    bool all_verified = false;  // non-finding claims all verified or identified
    bool any_limit_hit = false;
};

/// Execute the selected claims (empty = all). Throws std::invalid_argument
/// on an unknown id.
RunResult run_claims(const std::vector<std::string>& ids, ClaimContext& ctx);

/// Renderers are byte-deterministic; runtimes are zeroed unless `timings`.
std::string render_text(const RunResult& r, bool timings = false);
nlohmann::ordered_json render_json(const RunResult& r, bool timings = false);

/// Orbit size of the ordered pair (0, 1) under a permutation group.
std::size_t pair_orbit_size(const FiniteGroupModel& g);

}  // namespace sicverify
