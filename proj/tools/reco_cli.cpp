// reco: evaluate, optimize and simulate recommendation systems from a scenario file.
//
//   reco evaluate --scenario s1.json
//   reco sweep --scenario sym.json --param R --steps 99 --csv
//   reco region-map --figure panelC --from 1.01 --to 10 --steps 200 --csv
//   reco simulate --scenario s1.json --samples 1000000 --seed 42

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "reco/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Recommendation systems under preference heterogeneity"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_path;
    bool csv = false;
    reco::CommandOptions opts;
    double from = 0.0, to = 0.0;
    int b = 0, d = 0, lattice = 0;
    double r1 = 0.0, r2 = 0.0;

    const std::map<std::string, std::string> about{
        {"evaluate", "Value, effects and acceptance region of a scenario"},
        {"sweep", "Value over a range of one parameter"},
        {"optimize", "Best single threshold and its verdict"},
        {"region-map", "Boundary curves of the design regions"},
        {"simulate", "Monte Carlo estimates next to the analytic values"},
        {"decompose", "Split the buy posterior shift into three steps"},
        {"multi", "Posterior after several recommendations, or the infinite-learning limit"},
    };
    for (const auto& name : reco::kCommands) {
        auto* sub = app.add_subcommand(name, about.at(name));
        sub->add_option("--scenario", scenario_path, "Scenario JSON file");
        sub->add_option("--out", out_path, "Write output here instead of stdout");
        sub->add_flag("--csv", csv, "Emit CSV with a header row");
        if (name == "sweep") {
            sub->add_option("--param", opts.param, "R, Q, sigma, beta or a");
        }
        if (name == "sweep" || name == "region-map") {
            sub->add_option("--from", from);
            sub->add_option("--to", to);
            sub->add_option("--steps", opts.steps)->check(CLI::PositiveNumber);
        }
        if (name == "region-map") {
            sub->add_option("--figure", opts.figure, "interior, panelA, panelB or panelC");
            sub->add_option("--lattice", lattice, "Also classify a grid with this many y steps")
                ->check(CLI::PositiveNumber);
        }
        if (name == "simulate") {
            sub->add_option("--samples", opts.samples, "Number of simulated products (default 1000000)");
            sub->add_option("--seed", opts.seed, "Base seed (default 42)");
        }
        if (name == "simulate" || name == "multi" || name == "evaluate") {
            sub->add_option("--b", b, "Buy recommendations observed")->check(CLI::NonNegativeNumber);
            sub->add_option("--d", d, "Don't-buy recommendations observed")->check(CLI::NonNegativeNumber);
            sub->add_flag("--infinite", opts.infinite, "Use the infinite-learning limit");
        }
        if (name == "simulate" || name == "evaluate") {
            sub->add_option("--R1", r1);
            sub->add_option("--R2", r2);
        }
    }

    CLI11_PARSE(app, argc, argv);
    const CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    const auto given = [&](const char* flag) {
        try {
            return sub->count(flag) > 0;
        } catch (const CLI::OptionNotFound&) {
            return false;
        }
    };
    if (given("--from")) opts.from = from;
    if (given("--to")) opts.to = to;
    if (given("--lattice")) opts.lattice = lattice;
    if (given("--b")) opts.b = b;
    if (given("--d")) opts.d = d;
    if (given("--R1")) opts.r1 = r1;
    if (given("--R2")) opts.r2 = r2;

    try {
        std::optional<reco::Scenario> scenario;
        if (!scenario_path.empty()) scenario = reco::load_scenario(scenario_path);
        const auto records = reco::run_command(command, scenario, opts);
        const std::string text = csv ? reco::to_csv(records) : reco::to_json_array(records);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return 1;
            }
            out << text;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
