// Copyright 2026 The Polyconvex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyconvex/polyconvex.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_parse = 2;
constexpr int exit_disagreement = 3;
constexpr int exit_generation = 4;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("POLYCONVEX_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring unparsable POLYCONVEX_SEED\n";
        }
    }
    return 1;
}

int run_classify(const std::string& path, bool with_oracle, bool as_json) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return exit_error;
    }
    polyconvex::polygon p;
    try {
        p = polyconvex::parse_polygon(in);
    } catch (const polyconvex::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    }
    polyconvex::classify_result r = polyconvex::classify_polygon(p, with_oracle);
    std::cout << (as_json ? polyconvex::to_json_text(r) + "\n" : polyconvex::to_text(r));
    if (with_oracle) {
        std::vector<std::string> bad = polyconvex::verdict_disagreements(r);
        if (!bad.empty()) {
            std::cout << "DISAGREEMENT\n";
            for (const std::string& b : bad) std::cout << "  " << b << "\n";
            return exit_disagreement;
        }
    }
    return exit_ok;
}

std::optional<polyconvex::gen_kind> kind_from_name(const std::string& name) {
    using polyconvex::gen_kind;
    if (name == "strictly_convex") return gen_kind::strictly_convex;
    if (name == "convex_degenerate") return gen_kind::convex_degenerate;
    if (name == "random") return gen_kind::random_uniform;
    if (name == "collinear") return gen_kind::collinear;
    if (name == "mutated") return gen_kind::mutated;
    return std::nullopt;
}

int run_gen(const std::string& kind_name, std::size_t n, std::uint64_t seed, std::int64_t bound,
            const std::string& out_path) {
    auto kind = kind_from_name(kind_name);
    if (!kind) {
        std::cerr << "error: unknown kind '" << kind_name << "'\n";
        return exit_error;
    }
    polyconvex::gen_spec spec{*kind, n, seed, bound};
    polyconvex::polygon p;
    try {
        p = polyconvex::generate(spec);
    } catch (const polyconvex::generation_error& e) {
        std::cerr << "generation failed: " << e.what() << "\n";
        return exit_generation;
    }
    std::ostringstream header;
    header << "kind=" << kind_name << " n=" << n << " seed=" << seed << " bound=" << bound;
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return exit_error;
    }
    out << polyconvex::serialize_polygon(p, header.str());
    std::cout << header.str() << " vertices=" << p.size() << " -> " << out_path << "\n";
    return exit_ok;
}

int run_bench_cmd(const std::vector<std::size_t>& sizes, int repeats, std::uint64_t seed) {
    std::vector<polyconvex::bench_row> rows = polyconvex::run_bench(sizes, repeats, seed);
    std::printf("%12s %14s %14s %14s %8s\n", "n", "angle_ms", "sign_ms", "hull_ms", "agree");
    for (const auto& r : rows) {
        std::printf("%12zu %14.3f %14.3f %14.3f %8s\n", r.n, r.angle_ms, r.sign_ms, r.hull_ms,
                    r.verdicts_agree ? "yes" : "NO");
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].n == 2 * rows[i - 1].n) {
            std::printf("ratio %zu/%zu: angle %.2f  sign %.2f  hull %.2f\n", rows[i].n,
                        rows[i - 1].n, rows[i].angle_ms / rows[i - 1].angle_ms,
                        rows[i].sign_ms / rows[i - 1].sign_ms,
                        rows[i].hull_ms / rows[i - 1].hull_ms);
        }
    }
    for (const auto& r : rows) {
        if (!r.verdicts_agree) {
            std::cerr << "DISAGREEMENT at n=" << r.n << "\n";
            return exit_disagreement;
        }
    }
    return exit_ok;
}

int run_fuzz_cmd(std::uint64_t iters, std::uint64_t seed, std::size_t max_n, std::int64_t bound) {
    polyconvex::fuzz_options opts;
    opts.iterations = iters;
    opts.seed = seed;
    opts.max_n = max_n;
    opts.bound = bound;
    polyconvex::fuzz_report report = polyconvex::run_fuzz(opts);
    if (report.ok()) {
        std::cout << "fuzz: " << report.iterations << " iterations, no disagreement\n";
        return exit_ok;
    }
    std::cout << "fuzz: disagreement after " << report.iterations << " iterations\n";
    std::cout << "check: " << report.failure->check << "\n";
    std::cout << "counterexample:\n"
              << polyconvex::serialize_polygon(report.failure->counterexample,
                                               "minimal counterexample");
    return exit_disagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact polygon convexity tests, oracles, and benchmarks"};
    app.require_subcommand(1);

    std::string classify_path;
    bool with_oracle = false;
    bool as_json = false;
    CLI::App* classify = app.add_subcommand("classify", "Classify a polygon file");
    classify->add_option("file", classify_path, "polygon file")->required();
    classify->add_flag("--oracle", with_oracle, "add oracle verdicts and cross-check");
    classify->add_flag("--json", as_json, "JSON output");

    std::string gen_kind_name = "random";
    std::size_t gen_n = 8;
    std::uint64_t gen_seed = default_seed();
    std::int64_t gen_bound = 64;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "Generate a polygon file");
    gen->add_option("--kind", gen_kind_name,
                    "strictly_convex|convex_degenerate|random|collinear|mutated");
    gen->add_option("-n", gen_n, "vertex count");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--bound", gen_bound, "coordinate bound");
    gen->add_option("-o", gen_out, "output file")->required();

    std::vector<std::size_t> bench_sizes;
    int bench_repeats = 5;
    std::uint64_t bench_seed = default_seed();
    CLI::App* bench = app.add_subcommand("bench", "Time the tests on strictly convex inputs");
    bench->add_option("--sizes", bench_sizes, "comma-separated sizes")
        ->required()
        ->delimiter(',');
    bench->add_option("--repeats", bench_repeats, "timed repeats per method");
    bench->add_option("--seed", bench_seed, "RNG seed");

    std::uint64_t fuzz_iters = 500;
    std::uint64_t fuzz_seed = default_seed();
    std::size_t fuzz_max_n = 16;
    std::int64_t fuzz_bound = 4;
    CLI::App* fuzz = app.add_subcommand("fuzz", "Differential fuzz of all deciders");
    fuzz->add_option("--iters", fuzz_iters, "iterations");
    fuzz->add_option("--seed", fuzz_seed, "RNG seed");
    fuzz->add_option("--max-n", fuzz_max_n, "max vertex count");
    fuzz->add_option("--bound", fuzz_bound, "coordinate bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return run_classify(classify_path, with_oracle, as_json);
        if (gen->parsed()) return run_gen(gen_kind_name, gen_n, gen_seed, gen_bound, gen_out);
        if (bench->parsed()) return run_bench_cmd(bench_sizes, bench_repeats, bench_seed);
        if (fuzz->parsed()) return run_fuzz_cmd(fuzz_iters, fuzz_seed, fuzz_max_n, fuzz_bound);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
