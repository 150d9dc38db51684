#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "framedual/bench.hpp"
#include "framedual/errors.hpp"

namespace {

int do_bench(const framedual::BenchConfig& cfg) {
    const auto records = framedual::run_random_bench(cfg);
    for (const auto& rec : records) std::cout << framedual::fastest_method_line(rec) << '\n';
    for (const auto& line : framedual::median_summary(records)) std::cout << line << '\n';
    if (!cfg.out_path.empty()) {
        framedual::emit_csv(records, cfg.out_path);
        std::cout << "wrote " << records.size() << " record(s) to " << cfg.out_path << '\n';
    } else {
        framedual::emit_csv(records, std::cout);
    }
    return 0;
}

int do_demo(const std::string& name, std::optional<int> dim, const std::string& out_path) {
    const auto report = framedual::run_fixed_demo(name, dim);
    std::cout << "demo " << report.name << '\n';
    for (const auto& line : report.lines) std::cout << line << '\n';
    if (!out_path.empty()) {
        framedual::emit_csv(report.records, out_path);
        std::cout << "wrote " << report.records.size() << " record(s) to " << out_path << '\n';
    }
    std::cout << (report.ok ? "demo checks passed" : "demo checks FAILED") << '\n';
    return report.ok ? 0 : 1;
}

int do_verify(int trials, std::uint64_t seed, double tol) {
    const auto report = framedual::run_verify(trials, seed, tol);
    for (const auto& line : report.lines) std::cout << line << '\n';
    std::cout << (report.ok ? "verification passed" : "verification FAILED") << '\n';
    return report.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual-frame constructions for erasure recovery: benchmark and verification harness"};
    app.require_subcommand(1);

    framedual::BenchConfig cfg;
    cfg.out_path = "bench.csv";
    std::string frame_file;
    auto* bench = app.add_subcommand("bench", "time the reduced-dual constructions on random frames");
    bench->add_option("--dim", cfg.dim, "ambient dimension r")->required();
    bench->add_option("--count", cfg.count, "number of frame vectors N")->required();
    bench->add_option("--erasures", cfg.erasures, "erasure count k; the set {1..k} is erased")->required();
    bench->add_option("--seed", cfg.seed, "random seed");
    bench->add_option("--trials", cfg.trials, "independent trials");
    bench->add_option("--tol", cfg.tol, "invertibility/spanning tolerance");
    bench->add_option("--out", cfg.out_path, "CSV output path");
    bench->add_option("--frame-file", frame_file, "FRM1 frame file to use instead of random frames");

    std::string demo_name;
    std::string demo_out;
    std::optional<int> demo_dim;
    int demo_dim_raw = -1;
    auto* demo = app.add_subcommand("demo", "run a built-in fixed instance (example31, example34, test9)");
    demo->add_option("name", demo_name, "demo identifier")->required();
    demo->add_option("--dim", demo_dim_raw, "override the demo's ambient dimension");
    demo->add_option("--out", demo_out, "CSV output path for the demo's records");

    int verify_trials = 100;
    std::uint64_t verify_seed = 1;
    double verify_tol = framedual::kDefaultTol;
    auto* verify = app.add_subcommand("verify", "self-check the statement lattice and constructions");
    verify->add_option("--trials", verify_trials, "randomized instances per sweep");
    verify->add_option("--seed", verify_seed, "random seed");
    verify->add_option("--tol", verify_tol, "invertibility/spanning tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bench->parsed()) {
            if (!frame_file.empty()) cfg.frame_file = frame_file;
            return do_bench(cfg);
        }
        if (demo->parsed()) {
            if (demo_dim_raw > 0) demo_dim = demo_dim_raw;
            return do_demo(demo_name, demo_dim, demo_out);
        }
        if (verify->parsed()) return do_verify(verify_trials, verify_seed, verify_tol);
    } catch (const framedual::Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 0;
}
