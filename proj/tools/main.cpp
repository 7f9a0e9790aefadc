#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

// Exit codes: 0 success (a protocol abort is still a success), 2 usage or
// configuration error, 1 internal failure.
constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_usage = 2;

int emit(const std::string& text, const std::string& out_path) {
    std::string payload = text;
    if (payload.empty() || payload.back() != '\n') payload += '\n';
    if (out_path.empty()) {
        std::cout << payload;
        return exit_ok;
    }
    std::ofstream out(out_path, std::ios::binary);  // binary: keep LF endings everywhere
    if (!out) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return exit_usage;
    }
    out << payload;
    return exit_ok;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Key rates, thresholds and protocol simulation for six-state and BB84 key distribution"};
    app.require_subcommand(1);

    // rates
    double p_min = 0.0, p_max = 0.2;
    int steps = 41;
    std::vector<int> cat_ms = {2, 3, 4, 5};
    std::string rates_out;
    CLI::App* rates = app.add_subcommand("rates", "Tabulate key rates over an error-probability grid (CSV)");
    rates->add_option("--p-min", p_min, "Grid start (default 0)");
    rates->add_option("--p-max", p_max, "Grid end (default 0.2, the maximum)");
    rates->add_option("--steps", steps, "Number of grid points (default 41)");
    rates->add_option("--cat-m", cat_ms, "Block lengths for the block-hashing columns (default 2 3 4 5)");
    rates->add_option("--out", rates_out, "Output file (default stdout)");

    // thresholds
    double tol = 1e-6;
    std::string thresholds_out;
    CLI::App* thresholds = app.add_subcommand("thresholds", "Solve for the zero-rate error thresholds (JSON)");
    thresholds->add_option("--tol", tol, "Bisection tolerance (default 1e-6)");
    thresholds->add_option("--out", thresholds_out, "Output file (default stdout)");

    // simulate
    std::string config_path, simulate_out;
    CLI::App* simulate = app.add_subcommand("simulate", "Run the prepare-and-measure protocol from a JSON config");
    simulate->add_option("--config", config_path, "JSON configuration file")->required();
    simulate->add_option("--out", simulate_out, "Output file (default stdout)");

    // twirl-demo
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
    std::uint64_t n_pairs = 100000, seed = 1;
    std::string twirl_out;
    CLI::App* twirl = app.add_subcommand("twirl-demo", "Compare sampled random relabeling against the exact symmetrized distribution");
    twirl->add_option("--a", a, "Probability of no error")->required();
    twirl->add_option("--b", b, "Probability of a bit flip")->required();
    twirl->add_option("--c", c, "Probability of a phase flip")->required();
    twirl->add_option("--d", d, "Probability of both")->required();
    twirl->add_option("--n", n_pairs, "Number of sampled pairs (default 100000)");
    twirl->add_option("--seed", seed, "Seed (default 1)");
    twirl->add_option("--out", twirl_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*rates) return emit(sixstate::cli::rates_csv(p_min, p_max, steps, cat_ms), rates_out);
        if (*thresholds) return emit(sixstate::cli::thresholds_json(tol), thresholds_out);
        if (*simulate) return emit(sixstate::cli::simulate_json(read_file(config_path)), simulate_out);
        if (*twirl) return emit(sixstate::cli::twirl_demo_json(a, b, c, d, n_pairs, seed), twirl_out);
        std::cerr << "error: no subcommand selected\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}
