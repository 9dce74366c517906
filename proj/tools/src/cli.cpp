#include "qn/app/cli.hpp"

#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qn/app/config.hpp"
#include "qn/app/dip.hpp"
#include "qn/app/sweep.hpp"
#include "qn/app/units.hpp"
#include "qn/errors.hpp"

namespace qn::app {

namespace {

struct Flags {
    std::string config_path;
    std::string preset;
    std::optional<double> rbs;
    std::string lo;
    std::optional<double> phi;
    std::string out;
    std::string format;
    std::optional<double> fmin;
    std::optional<double> fmax;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot read config " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunConfig load(const Flags& f) {
    Overrides o;
    if (!f.preset.empty()) o.preset = f.preset;
    if (f.rbs) o.r_bs = static_cast<Real>(*f.rbs);
    if (f.phi) o.phi = static_cast<Real>(*f.phi);
    if (!f.lo.empty()) {
        const auto lo = parse_lo_option(f.lo);
        if (!lo) throw ConfigError(0, "--lo: expected direct, bsar or comoving");
        o.lo_option = *lo;
    }
    if (!f.out.empty()) o.output_path = f.out;
    if (!f.format.empty()) {
        const auto fmt = parse_format(f.format);
        if (!fmt) throw ConfigError(0, "--format: expected csv or json");
        o.format = *fmt;
    }
    std::string text;
    if (!f.config_path.empty()) {
        text = read_file(f.config_path);
    } else if (!o.preset) {
        o.preset = "glasgow-ssm";
    }
    return parse_config(text, o);
}

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const UnitError& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const NoRootError& e) {
        err << "numerical error: " << e.what() << '\n';
        return exit_numeric;
    } catch (const NormalizationError& e) {
        err << "numerical error: " << e.what() << '\n';
        return exit_numeric;
    } catch (const DegenerateLoError& e) {
        err << "numerical error: " << e.what() << '\n';
        return exit_numeric;
    } catch (const DomainError& e) {
        err << "invalid argument: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum-noise budget for asymmetric Sagnac speed meters", "qn"};
    app.require_subcommand(1);
    Flags f;

    auto common = [&f](CLI::App* sub) {
        sub->add_option("--config", f.config_path, "Config file")->check(CLI::ExistingFile);
        sub->add_option("--preset", f.preset, "Plant preset (glasgow-ssm)");
        sub->add_option("--rbs", f.rbs, "Main beamsplitter power reflectivity");
        sub->add_option("--phi", f.phi, "Homodyne angle in rad");
    };

    CLI::App* sweep = app.add_subcommand("sweep", "Frequency sweep of QNLS, laser TF and RIN requirement");
    common(sweep);
    sweep->add_option("--lo", f.lo, "LO option for every scenario (direct, bsar, comoving)");
    sweep->add_option("--out", f.out, "Output directory");
    sweep->add_option("--format", f.format, "csv or json");

    CLI::App* dip = app.add_subcommand("dip", "Frequency of the laser-noise cancellation dip");
    common(dip);
    dip->add_option("--lo", f.lo, "LO option (comoving or bsar)");
    dip->add_option("--fmin", f.fmin, "Lower band edge in Hz (default: grid f_min)");
    dip->add_option("--fmax", f.fmax, "Upper band edge in Hz (default: grid f_max)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_config;
    }

    if (sweep->parsed()) {
        return guarded(err, [&] {
            const RunConfig cfg = load(f);
            const auto tables = run_sweep(cfg);
            for (const auto& path : write_tables(tables, cfg.output_path, cfg.format)) {
                out << path.string() << '\n';
            }
            return static_cast<int>(exit_ok);
        });
    }

    return guarded(err, [&] {
        const RunConfig cfg = load(f);
        const Scenario& s = cfg.scenarios.front();
        const PlantParams p = scenario_plant(cfg, s);
        const Real f_min = f.fmin ? static_cast<Real>(*f.fmin) : cfg.grid.f_min;
        const Real f_max = f.fmax ? static_cast<Real>(*f.fmax) : cfg.grid.f_max;
        const Real f_dip = find_dip(s.lo_option, p, s.phi, f_min, f_max);
        out << "f_dip_Hz = " << format_value(f_dip) << '\n';
        return static_cast<int>(exit_ok);
    });
}

}  // namespace qn::app
