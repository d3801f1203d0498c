#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sicverify/claims.hpp"

namespace {

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int run_verify(const std::string& claims_csv, const std::string& format, int threads,
               const std::string& cache_dir, bool timings) {
    sicverify::ClaimContext ctx;
    ctx.threads = threads;
    if (!cache_dir.empty()) ctx.cache_dir = std::filesystem::path(cache_dir);

    sicverify::RunResult result;
    try {
        result = sicverify::run_claims(split_ids(claims_csv), ctx);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sicverify::SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }

    if (format == "json") {
        std::cout << sicverify::render_json(result, timings).dump(2) << "\n";
    } else {
        std::cout << sicverify::render_text(result, timings);
    }
    if (result.any_limit_hit) return 3;
    return result.all_verified ? 0 : 1;
}

int run_list() {
    for (const auto& c : sicverify::claim_registry()) {
        std::cout << c.id;
        for (std::size_t i = c.id.size(); i < 4; ++i) std::cout << ' ';
        std::cout << ' ' << c.description << (c.finding ? "  [finding]" : "") << "\n      " << c.anchor
                  << "\n";
    }
    return 0;
}

int run_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return 2;
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        std::cerr << "error: invalid report JSON: " << e.what() << "\n";
        return 2;
    }
    if (!doc.contains("reports") || !doc["reports"].is_array()) {
        std::cerr << "error: not a report file\n";
        return 2;
    }
    std::cout << "artifact " << doc.value("artifact_version", std::string("?")) << "\n";
    for (const auto& rep : doc["reports"]) {
        const std::string id = rep.value("claim", std::string("?"));
        const std::string desc = rep.value("description", std::string());
        const std::string status = rep.value("status", std::string("?"));
        std::cout << id;
        for (std::size_t i = id.size(); i < 4; ++i) std::cout << ' ';
        std::cout << ' ' << desc;
        for (std::size_t i = desc.size(); i < 40; ++i) std::cout << ' ';
        std::cout << ' ' << status;
        if (rep.contains("witnesses") && rep["witnesses"].contains("headline"))
            std::cout << "  [" << rep["witnesses"]["headline"].get<std::string>() << "]";
        std::cout << "\n";
    }
    const bool ok = doc.value("all_verified", false);
    std::cout << (ok ? "all claims verified" : "NOT ALL CLAIMS VERIFIED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the sporadic SIC / division-algebra correspondences"};
    app.require_subcommand(1);

    std::string claims_csv, cache_dir, report_path;
    std::string format = "text";
    int threads = 1;
    bool timings = false;

    CLI::App* verify = app.add_subcommand("verify", "run claims and report their status");
    verify->add_option("--claims", claims_csv, "comma-separated claim ids (default: all)");
    verify->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--threads", threads, "worker threads for the symplectic scan")
        ->check(CLI::PositiveNumber);
    verify->add_option("--cache-dir", cache_dir, "directory for versioned binary snapshots");
    verify->add_flag("--timings", timings, "include wall-clock runtimes (breaks byte determinism)");

    CLI::App* list = app.add_subcommand("list", "print the claim registry");

    CLI::App* report = app.add_subcommand("report", "re-render a saved JSON report as text");
    report->add_option("file", report_path, "report file from verify --format json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(claims_csv, format, threads, cache_dir, timings);
        if (list->parsed()) return run_list();
        if (report->parsed()) return run_report(report_path);
    } catch (const sicverify::SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
