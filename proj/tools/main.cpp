#include <CLI11.hpp>

#include <cutplan/generator.hpp>
#include <cutplan/svg.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <new>

using namespace cutplan;

namespace {

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text << "\n";
}

struct RunFlags {
    std::string instance;
    std::string output = "-";
    std::string svg_path;
    std::string roadmap_path;
    std::uint64_t seed = 1;
    double timeout_s = 60.0;
    std::string sampler = "halton";
    std::string cut_mode = "multi";
    std::string seed_state = "barycenter";
    std::string clearance;  // empty: keep the instance value
    double phi_max = -1.0;  // < 0: keep the instance value
    bool anytime = false;
};

PlannerConfig to_config(const RunFlags& f) {
    PlannerConfig cfg;
    cfg.seed = f.seed;
    cfg.timeout_s = f.timeout_s;
    cfg.sampler = f.sampler == "uniform" ? SamplerMode::uniform : SamplerMode::halton;
    cfg.cut_mode = f.cut_mode == "single" ? CutMode::single : CutMode::multi;
    cfg.seed_state = f.seed_state == "bk" ? SeedStateMode::per_edge : SeedStateMode::barycenter;
    cfg.anytime = f.anytime;
    return cfg;
}

int run_command(const RunFlags& f) {
    Instance inst = load_instance(f.instance);
    if (f.phi_max >= 0.0) inst.constraints.phi_max = f.phi_max;
    if (!f.clearance.empty()) {
        Rational delta = rational_from_string(f.clearance);
        if (delta < 0) throw std::invalid_argument("clearance must be non-negative");
        inst.ws.clearance.assign(inst.ws.obstacles.size(), delta);
    }
    PlannerResult res = plan(inst.ws, inst.q0, inst.goal, inst.constraints, to_config(f));
    write_text(f.output, result_to_json(inst, res, f.seed));
    if (!f.svg_path.empty() && inst.ws.dim() == 2) {
        write_svg(f.svg_path, inst, res.roadmap ? &*res.roadmap : nullptr,
                  res.best ? &*res.best : nullptr);
    }
    if (!f.roadmap_path.empty() && res.roadmap) {
        write_text(f.roadmap_path, roadmap_to_json(*res.roadmap));
    }
    if (res.best || res.termination == Termination::trivial) return 0;
    return 2;  // timed out or starved without a plan
}

int bench_command(std::size_t count, std::uint64_t seed0, double timeout_s,
                  const std::string& out_path) {
    std::ostringstream csv;
    csv << "seed,status,cost,arc_length,iterations,geometric_cuts,kinematic_cuts,"
           "time_to_first_ms\n";
    std::size_t solved = 0;
    std::vector<double> ttf;
    for (std::size_t i = 0; i < count; ++i) {
        GeneratorConfig gen;
        gen.seed = seed0 + i;
        Instance inst = generate_instance(gen);
        PlannerConfig cfg;
        cfg.seed = seed0 + i;
        cfg.timeout_s = timeout_s;
        PlannerResult res = plan(inst.ws, inst.q0, inst.goal, inst.constraints, cfg);
        bool ok = res.best.has_value();
        solved += ok;
        if (ok) ttf.push_back(res.time_to_first_ms);
        csv << gen.seed << ',' << (ok ? "success" : "timeout") << ','
            << (ok ? res.cost : 0.0) << ',' << (ok ? res.arc_length : 0.0) << ','
            << res.iterations << ',' << res.geometric_cuts << ',' << res.kinematic_cuts
            << ',' << (ok ? res.time_to_first_ms : 0.0) << '\n';
    }
    write_text(out_path, csv.str());
    std::sort(ttf.begin(), ttf.end());
    std::cerr << "solved " << solved << "/" << count;
    if (!ttf.empty()) std::cerr << ", median time-to-first " << ttf[ttf.size() / 2] << " ms";
    std::cerr << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::set_new_handler([] { std::_Exit(3); });

    CLI::App app{"lazy roadmap planner with exact collision certificates"};
    app.require_subcommand(1);

    RunFlags rf;
    auto* run = app.add_subcommand("run", "plan on an instance file");
    run->add_option("--instance", rf.instance, "instance json")->required();
    run->add_option("--output", rf.output, "result json path, - for stdout");
    run->add_option("--seed", rf.seed, "rng seed");
    run->add_option("--timeout", rf.timeout_s, "time budget in seconds");
    run->add_option("--sampler", rf.sampler)->check(CLI::IsMember({"uniform", "halton"}));
    run->add_option("--cut-mode", rf.cut_mode)->check(CLI::IsMember({"single", "multi"}));
    run->add_option("--seed-state", rf.seed_state)->check(CLI::IsMember({"barycenter", "bk"}));
    run->add_option("--phi-max", rf.phi_max, "steering-angle bound, radians");
    run->add_option("--clearance", rf.clearance, "override the instance clearance, rational");
    run->add_flag("--anytime", rf.anytime, "keep improving until the timeout");
    run->add_option("--svg", rf.svg_path, "render the instance and plan (2D)");
    run->add_option("--roadmap-dump", rf.roadmap_path, "dump the final roadmap json");

    GeneratorConfig gen;
    std::string gen_out = "-";
    std::string gen_resolution = "1/30", gen_clearance = "1/256";
    auto* g = app.add_subcommand("gen", "generate a random grid instance");
    g->add_option("--seed", gen.seed);
    g->add_option("--rows", gen.rows);
    g->add_option("--cols", gen.cols);
    g->add_option("--fill", gen.fill, "initial occupancy probability");
    g->add_option("--smoothing", gen.smoothing_rounds);
    g->add_option("--resolution", gen_resolution, "cell size, rational");
    g->add_option("--clearance", gen_clearance, "obstacle clearance, rational");
    g->add_option("--output", gen_out, "instance json path, - for stdout");

    std::size_t bench_count = 10;
    std::uint64_t bench_seed = 1;
    double bench_timeout = 60.0;
    std::string bench_out = "-";
    auto* b = app.add_subcommand("bench", "generate-and-solve batch, csv output");
    b->add_option("--count", bench_count);
    b->add_option("--seed", bench_seed, "base seed, incremented per instance");
    b->add_option("--timeout", bench_timeout, "per-instance budget in seconds");
    b->add_option("--output", bench_out, "csv path, - for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return run_command(rf);
        if (*g) {
            gen.resolution = rational_from_string(gen_resolution);
            gen.clearance = rational_from_string(gen_clearance);
            write_text(gen_out, instance_to_json(generate_instance(gen)));
            return 0;
        }
        return bench_command(bench_count, bench_seed, bench_timeout, bench_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
