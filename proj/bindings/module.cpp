#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sicverify/claims.hpp"

namespace py = pybind11;
using namespace sicverify;

namespace {

std::string run_claims_json(const std::vector<std::string>& ids, int threads,
                            const std::string& cache_dir, bool timings) {
    ClaimContext ctx;
    ctx.threads = threads;
    if (!cache_dir.empty()) ctx.cache_dir = std::filesystem::path(cache_dir);
    const RunResult result = run_claims(ids, ctx);
    return render_json(result, timings).dump(2);
}

std::vector<std::pair<std::string, std::string>> claim_list() {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& c : claim_registry()) out.emplace_back(c.id, c.description);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact verification of the sporadic SIC / division-algebra correspondences";

    m.attr("__version__") = kArtifactVersion;

    m.def("run_claims_json", &run_claims_json, py::arg("ids") = std::vector<std::string>{},
          py::arg("threads") = 1, py::arg("cache_dir") = std::string(), py::arg("timings") = false,
          "run the selected claims (empty = all) and return the JSON report as a string");

    m.def("claim_list", &claim_list, "claim ids with their short descriptions");

    m.def(
        "hesse_is_sic", [] { return verify_sic(hesse_sic()); },
        "exact SIC check for the d=3 Weyl-Heisenberg orbit of (0, 1, -1)");
    m.def(
        "hoggar_is_sic", [] { return verify_sic(hoggar_sic()); },
        "exact SIC check for the three-qubit Pauli orbit of (-1+2i, 1, ..., 1)");

    m.def("eisenstein_unit_count", [] { return eisenstein_units().units.size(); });
    m.def("hurwitz_unit_count", [] { return hurwitz_units().units.size(); });
    m.def("cayley_unit_count", [] {
        const CayleyRing ring;
        return static_cast<std::size_t>(UnitLoop(ring).size());
    });

    m.def("qubit_stabilizer_order", [] { return qubit_symmetries().stabilizer0.order(); });

    m.def(
        "hesse_symmetry_orders",
        [] {
            const auto s = hesse_sic();
            const TripleProductTable<EisensteinRational> t(s);
            const HesseSymmetries sym = hesse_symmetries(t);
            return std::make_pair(sym.full.order(), sym.stabilizer0.order());
        },
        "orders of the full Hesse symmetry group and of a projector stabilizer");

    m.def(
        "hoggar_stabilizer_orders",
        [](int threads) {
            const auto s = hoggar_sic();
            const TripleProductTable<GaussianRational> t(s);
            const HoggarStabilizer stab = hoggar_stabilizer(t, sp62_elements(), threads);
            return std::make_pair(stab.unitary.size(), stab.antiunitary.size());
        },
        py::arg("threads") = 1, "unitary and antiunitary counts from the full symplectic scan");

    m.def("cayley_automorphism_order", [] {
        const CayleyRing ring;
        const UnitLoop loop(ring);
        return cayley_automorphisms(ring, loop).group.order();
    });

    m.def("root_system_labels", [] {
        std::map<std::string, std::string> out;
        out["eisenstein_units"] =
            root_label_name(identify_root_system(eisenstein_family(eisenstein_units().units)).label);
        out["hurwitz_units"] =
            root_label_name(identify_root_system(quaternion_family(hurwitz_units().units)).label);
        const CayleyRing ring;
        const UnitLoop loop(ring);
        out["cayley_units"] = root_label_name(identify_root_system(octonion_family(loop.units())).label);
        return out;
    });

    m.def("sp62_order", [] { return sp62_elements().size(); });
}
