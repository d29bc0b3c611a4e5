#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "fungal/compiler.hpp"
#include "fungal/predictors.hpp"
#include "fungal/suites.hpp"

using namespace fungal;

namespace {

// Validation failures of user input; mapped to exit status 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CellRef parse_cell(const std::string& s) {
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument("");
        size_t used = 0;
        const long r = std::stol(s.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("");
        const std::string rest = s.substr(comma + 1);
        const long c = std::stol(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
        return {r, c};
    } catch (const std::logic_error&) {
        throw InputError("cell must be given as row,col: '" + s + "'");
    }
}

Configuration load(const std::string& path, int background) {
    Configuration c = load_grid(path);
    if (background < 0) return c;
    return Configuration(c.rows(), c.cols(), State(background), c.cells());
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw InputError("cannot write " + p.string());
    out << text;
}

std::string frame_text(const Configuration& c, RenderFormat f) {
    return f == RenderFormat::ascii ? serialize(c) : render(c, f);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fungal automata: simulation, prediction and circuit compilation"};
    app.require_subcommand(1);

    std::string grid_path, rule_name = "f1", schedule_word = "HV", emit_dir, format_name = "ascii", out_path;
    std::string cell_text, method_name = "auto", circuit_path, assign_bits, suite;
    long steps = -1;
    bool to_fixpoint = false, background_one = false, quiet = false;
    int background = -1;
    std::uint64_t seed = 1;

    auto* sim = app.add_subcommand("simulate", "Run a configuration for a number of steps or to its fixpoint");
    sim->add_option("--grid", grid_path, "Grid file")->required()->check(CLI::ExistingFile);
    sim->add_option("--rule", rule_name, "f0..f7 or maj15")->required();
    sim->add_option("--schedule", schedule_word, "Word over {H,V}")->capture_default_str();
    auto* steps_opt = sim->add_option("--steps", steps, "Number of sub-steps")->check(CLI::NonNegativeNumber);
    auto* fix_opt = sim->add_flag("--to-fixpoint", to_fixpoint, "Run until a full period changes nothing");
    steps_opt->excludes(fix_opt);
    sim->add_option("--emit", emit_dir, "Write every frame into this directory");
    sim->add_option("--format", format_name, "Frame format: ascii or pgm")->capture_default_str();
    sim->add_option("--background", background, "Override the file's background state")->check(CLI::Range(0, 1));
    sim->add_option("--out", out_path, "Write the final grid here instead of stdout");

    auto* pred = app.add_subcommand("predict", "Decide whether a cell ever changes state");
    pred->add_option("--grid", grid_path, "Grid file")->required()->check(CLI::ExistingFile);
    pred->add_option("--rule", rule_name, "f0..f7 or maj15")->required();
    pred->add_option("--cell", cell_text, "Target as row,col")->required();
    pred->add_option("--method", method_name, "auto or oracle")->capture_default_str()
        ->check(CLI::IsMember({"auto", "oracle"}));
    pred->add_option("--schedule", schedule_word, "Word over {H,V}")->capture_default_str();
    pred->add_option("--background", background, "Override the file's background state")->check(CLI::Range(0, 1));

    auto* comp = app.add_subcommand("compile", "Embed a monotone circuit and an input assignment");
    comp->add_option("--circuit", circuit_path, "Circuit file")->required()->check(CLI::ExistingFile);
    comp->add_option("--assign", assign_bits, "Input bits, input 1 first")->required();
    comp->add_option("--out", out_path, "Output grid; the map goes next to it with suffix .map")->required();
    comp->add_flag("--background-one", background_one, "Use background 1 behind a frame of 0s");

    auto* ev = app.add_subcommand("eval", "Evaluate a circuit");
    ev->add_option("--circuit", circuit_path, "Circuit file")->required()->check(CLI::ExistingFile);
    ev->add_option("--assign", assign_bits, "Input bits, input 1 first")->required();

    auto* ver = app.add_subcommand("verify", "Run a named self-check suite");
    ver->add_option("--suite", suite, "gadgets, predictors, reduction or figures")->required()
        ->check(CLI::IsMember(suites::names()));
    ver->add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();
    ver->add_flag("--quiet", quiet, "Only print failing rows");

    auto* ren = app.add_subcommand("render", "Render a grid");
    ren->add_option("--grid", grid_path, "Grid file")->required()->check(CLI::ExistingFile);
    ren->add_option("--format", format_name, "ascii or pgm")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*sim) {
            if (steps < 0 && !to_fixpoint) throw CLI::RequiredError("--steps or --to-fixpoint");
            const Configuration c = load(grid_path, background);
            const RuleSpec rule = RuleSpec::named(rule_name);
            const Schedule s = Schedule::parse(schedule_word);
            const RenderFormat fmt = parse_render_format(format_name);
            Configuration final = c;
            std::vector<Configuration> frames;
            if (to_fixpoint) {
                const FixpointResult r = run_to_fixpoint(c, rule, s);
                final = r.config;
                std::cerr << "fixpoint after " << r.steps << " steps\n";
                if (!emit_dir.empty()) frames = run(c, rule, s, r.steps).frames;
            } else {
                Trajectory t = run(c, rule, s, steps);
                final = t.frames.back();
                if (!emit_dir.empty()) frames = std::move(t.frames);
            }
            if (!emit_dir.empty()) {
                std::filesystem::create_directories(emit_dir);
                const int width = std::max<int>(4, int(std::to_string(frames.size()).size()));
                for (size_t i = 0; i < frames.size(); ++i) {
                    std::ostringstream name;
                    name << "frame_" << std::setw(width) << std::setfill('0') << i
                         << (fmt == RenderFormat::pgm ? ".pgm" : ".txt");
                    write_file(std::filesystem::path(emit_dir) / name.str(), frame_text(frames[i], fmt));
                }
            }
            if (out_path.empty()) std::cout << frame_text(final, fmt);
            else save_grid(final, out_path);
        } else if (*pred) {
            const Configuration c = load(grid_path, background);
            const PredictionInstance inst{c, RuleSpec::named(rule_name), Schedule::parse(schedule_word),
                                          parse_cell(cell_text)};
            if (!c.contains(inst.target)) throw InputError("cell " + cell_text + " lies outside the grid");
            std::cout << (predict(inst, method_name == "oracle" ? Method::oracle : Method::auto_) ? "YES" : "NO")
                      << '\n';
        } else if (*comp) {
            const Circuit circuit = load_circuit(circuit_path);
            const std::vector<bool> x = parse_assignment(assign_bits, circuit.n);
            const Embedding e = compile(circuit, x, CompileOptions{background_one});
            save_grid(e.config, out_path);
            write_file(out_path + ".map", write_map(e));
            std::cout << "target " << e.target.row << ' ' << e.target.col << '\n';
        } else if (*ev) {
            const Circuit circuit = load_circuit(circuit_path);
            std::cout << (evaluate(circuit, parse_assignment(assign_bits, circuit.n)) ? 1 : 0) << '\n';
        } else if (*ver) {
            const auto rows = suites::run(suite, seed);
            size_t failed = 0, width = 4;
            for (const auto& r : rows) width = std::max(width, r.name.size());
            for (const auto& r : rows) {
                failed += !r.passed;
                if (quiet && r.passed) continue;
                std::cout << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(int(width)) << r.name << "  "
                          << r.detail << '\n';
            }
            if (!quiet || failed)
                std::cout << rows.size() - failed << "/" << rows.size() << " passed in suite " << suite << '\n';
            return failed ? 4 : 0;
        } else if (*ren) {
            std::cout << render(load_grid(grid_path), parse_render_format(format_name));
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const InconclusiveError& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
