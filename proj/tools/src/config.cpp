#include "qn/app/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "qn/app/units.hpp"
#include "qn/errors.hpp"

namespace qn::app {

namespace {

struct Entry {
    std::string key;
    std::string value;
    std::size_t line = 0;
};

struct Section {
    std::string name;
    std::size_t line = 0;
    std::vector<Entry> entries;

    const Entry* find(std::string_view key) const {
        for (const Entry& e : entries) {
            if (e.key == key) return &e;
        }
        return nullptr;
    }
};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<Section> tokenize(std::string_view text) {
    std::vector<Section> sections;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(line_no, "unterminated section header");
            sections.push_back({trim(std::string_view(line).substr(1, line.size() - 2)), line_no, {}});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(line_no, "expected 'key = value'");
        if (sections.empty()) throw ConfigError(line_no, "entry outside of a section");
        Entry entry{trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 1)), line_no};
        if (entry.key.empty()) throw ConfigError(line_no, "empty key");
        if (entry.value.empty()) throw ConfigError(line_no, "empty value for '" + entry.key + "'");
        if (sections.back().find(entry.key) != nullptr) {
            throw ConfigError(line_no, "duplicate key '" + entry.key + "'");
        }
        sections.back().entries.push_back(std::move(entry));
    }
    return sections;
}

Real quantity(const Entry& e, Dimension dim) {
    try {
        return parse_quantity(e.value, dim);
    } catch (const UnitError& err) {
        throw ConfigError(e.line, e.key + ": " + err.what());
    }
}

LoOption lo_value(const Entry& e) {
    const auto lo = parse_lo_option(e.value);
    if (!lo) throw ConfigError(e.line, e.key + ": expected direct, bsar or comoving, got '" + e.value + "'");
    return *lo;
}

std::size_t count_value(const Entry& e) {
    std::size_t n = 0;
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    const auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr != last) throw ConfigError(e.line, e.key + ": expected a non-negative integer");
    return n;
}

void reject_unknown(const Section& s, const std::set<std::string, std::less<>>& known) {
    for (const Entry& e : s.entries) {
        if (!known.contains(e.key)) {
            throw ConfigError(e.line, "unknown key '" + e.key + "' in [" + s.name + "]");
        }
    }
}

struct PresetMasses {
    Real itm = 0;
    Real etm = 0;
};

std::optional<PresetMasses> preset_masses(std::string_view name) {
    if (name == "glasgow-ssm") return PresetMasses{presets::glasgow_itm_mass, presets::glasgow_etm_mass};
    return std::nullopt;
}

PlantParams parse_plant(const Section* s, const Overrides& overrides) {
    static const std::set<std::string, std::less<>> known{
        "preset", "arm_length", "itm_transmission", "arm_power", "bs_power", "itm_mass", "etm_mass",
        "reduced_mass", "wavelength", "r_bs", "ar_reflectivity", "lo_power_direct", "lo_power_comoving",
        "lo_power_bsar", "lo_option", "homodyne_angle"};
    const Section empty;
    const Section& sec = s != nullptr ? *s : empty;
    reject_unknown(sec, known);

    std::optional<std::string> preset_name = overrides.preset;
    std::size_t preset_line = 0;
    if (!preset_name) {
        if (const Entry* e = sec.find("preset")) {
            preset_name = e->value;
            preset_line = e->line;
        }
    }

    PlantParams p;
    std::optional<PresetMasses> masses;
    if (preset_name) {
        const auto base = presets::by_name(*preset_name);
        if (!base) throw ConfigError(preset_line, "preset: unknown preset '" + *preset_name + "'");
        p = *base;
        masses = preset_masses(*preset_name);
    } else {
        for (const char* required : {"arm_length", "itm_transmission", "arm_power", "bs_power", "wavelength"}) {
            if (sec.find(required) == nullptr) {
                throw ConfigError(sec.line, std::string("[plant] ") + required + " is required without a preset");
            }
        }
    }

    auto set = [&](std::string_view key, Dimension dim, Real& field) {
        if (const Entry* e = sec.find(key)) field = quantity(*e, dim);
    };
    set("arm_length", Dimension::Length, p.arm_length);
    set("itm_transmission", Dimension::Ratio, p.itm_transmission);
    set("arm_power", Dimension::Power, p.arm_power);
    set("bs_power", Dimension::Power, p.bs_power);
    set("wavelength", Dimension::Length, p.wavelength);
    set("r_bs", Dimension::Ratio, p.r_bs);
    set("ar_reflectivity", Dimension::Ratio, p.ar_reflectivity);
    set("lo_power_direct", Dimension::Power, p.lo_power.direct);
    set("lo_power_comoving", Dimension::Power, p.lo_power.comoving);
    set("lo_power_bsar", Dimension::Power, p.lo_power.bsar);
    set("homodyne_angle", Dimension::Angle, p.homodyne_angle);
    if (const Entry* e = sec.find("lo_option")) p.lo_option = lo_value(*e);

    const Entry* itm = sec.find("itm_mass");
    const Entry* etm = sec.find("etm_mass");
    if (const Entry* e = sec.find("reduced_mass")) {
        p.reduced_mass = quantity(*e, Dimension::Mass);
    } else if (itm != nullptr || etm != nullptr) {
        if (!masses && (itm == nullptr || etm == nullptr)) {
            throw ConfigError((itm != nullptr ? itm : etm)->line,
                              "itm_mass and etm_mass must be given together without a preset");
        }
        const Real m_itm = itm != nullptr ? quantity(*itm, Dimension::Mass) : masses->itm;
        const Real m_etm = etm != nullptr ? quantity(*etm, Dimension::Mass) : masses->etm;
        if (!(m_itm > 0)) throw ConfigError(itm->line, "itm_mass must be > 0");
        if (!(m_etm > 0)) throw ConfigError(etm->line, "etm_mass must be > 0");
        p.reduced_mass = reduced_mass(m_itm, m_etm);
    } else if (!preset_name) {
        throw ConfigError(sec.line, "[plant] reduced_mass or itm_mass/etm_mass is required without a preset");
    }

    if (overrides.r_bs) p.r_bs = *overrides.r_bs;
    if (overrides.lo_option) p.lo_option = *overrides.lo_option;
    if (overrides.phi) p.homodyne_angle = *overrides.phi;

    try {
        p.validate();
    } catch (const DomainError& err) {
        throw ConfigError(0, std::string("[plant] ") + err.what());
    }
    return p;
}

Grid parse_grid(const Section& s) {
    reject_unknown(s, {"f_min", "f_max", "points", "spacing"});
    Grid g;
    if (const Entry* e = s.find("f_min")) g.f_min = quantity(*e, Dimension::Frequency);
    if (const Entry* e = s.find("f_max")) g.f_max = quantity(*e, Dimension::Frequency);
    if (const Entry* e = s.find("points")) g.points = count_value(*e);
    if (const Entry* e = s.find("spacing")) {
        if (e->value == "log") g.spacing = Spacing::Log;
        else if (e->value == "linear") g.spacing = Spacing::Linear;
        else throw ConfigError(e->line, "spacing: expected log or linear");
    }
    return g;
}

struct ScenarioDraft {
    Scenario scenario;
    bool named = false;
    std::size_t line = 0;
};

ScenarioDraft parse_scenario(const Section& s, const PlantParams& plant) {
    reject_unknown(s, {"name", "lo", "phi", "r_bs"});
    ScenarioDraft d;
    d.line = s.line;
    d.scenario.lo_option = plant.lo_option;
    d.scenario.phi = plant.homodyne_angle;
    if (const Entry* e = s.find("name")) {
        const bool ok = std::all_of(e->value.begin(), e->value.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
        });
        if (!ok) throw ConfigError(e->line, "name: only letters, digits, '_', '-' and '.' are allowed");
        d.scenario.name = e->value;
        d.named = true;
    }
    if (const Entry* e = s.find("lo")) d.scenario.lo_option = lo_value(*e);
    if (const Entry* e = s.find("phi")) d.scenario.phi = quantity(*e, Dimension::Angle);
    if (const Entry* e = s.find("r_bs")) d.scenario.r_bs = quantity(*e, Dimension::Ratio);
    return d;
}

void parse_output(const Section& s, RunConfig& cfg) {
    reject_unknown(s, {"quantities", "path", "format"});
    if (const Entry* e = s.find("quantities")) {
        cfg.outputs.clear();
        std::stringstream list(e->value);
        std::string item;
        while (std::getline(list, item, ',')) {
            const auto kind = parse_output_kind(trim(item));
            if (!kind) throw ConfigError(e->line, "quantities: unknown quantity '" + trim(item) + "'");
            if (std::find(cfg.outputs.begin(), cfg.outputs.end(), *kind) == cfg.outputs.end()) {
                cfg.outputs.push_back(*kind);
            }
        }
    }
    if (const Entry* e = s.find("path")) cfg.output_path = e->value;
    if (const Entry* e = s.find("format")) {
        const auto f = parse_format(e->value);
        if (!f) throw ConfigError(e->line, "format: expected csv or json");
        cfg.format = *f;
    }
}

}  // namespace

ConfigError::ConfigError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

std::string_view to_string(Spacing spacing) { return spacing == Spacing::Log ? "log" : "linear"; }

std::string_view to_string(OutputKind kind) {
    switch (kind) {
        case OutputKind::Qnls: return "qnls";
        case OutputKind::Tf: return "tf";
        case OutputKind::Rin: return "rin";
        case OutputKind::Budget: return "budget";
        case OutputKind::Michelson: return "michelson";
    }
    return "unknown";
}

std::string_view to_string(Format format) { return format == Format::Csv ? "csv" : "json"; }

std::optional<OutputKind> parse_output_kind(std::string_view text) {
    for (OutputKind k : {OutputKind::Qnls, OutputKind::Tf, OutputKind::Rin, OutputKind::Budget, OutputKind::Michelson}) {
        if (to_string(k) == text) return k;
    }
    return std::nullopt;
}

std::optional<Format> parse_format(std::string_view text) {
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    return std::nullopt;
}

std::vector<Real> Grid::frequencies() const {
    std::vector<Real> f(points);
    const Real last = static_cast<Real>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const Real t = static_cast<Real>(i) / last;
        f[i] = spacing == Spacing::Log ? f_min * std::pow(f_max / f_min, t) : f_min + (f_max - f_min) * t;
    }
    f.front() = f_min;
    f.back() = f_max;
    return f;
}

void Grid::validate() const {
    if (!(f_min > 0) || !std::isfinite(f_min)) throw ConfigError(0, "[grid] f_min must be > 0 Hz");
    if (!(f_max > f_min) || !std::isfinite(f_max)) throw ConfigError(0, "[grid] f_max must be > f_min");
    if (points < 2) throw ConfigError(0, "[grid] points must be >= 2");
}

void RunConfig::validate() const {
    grid.validate();
    if (scenarios.empty()) throw ConfigError(0, "at least one scenario is required");
    if (outputs.empty()) throw ConfigError(0, "[output] quantities must not be empty");
    std::set<std::string> names;
    for (const Scenario& s : scenarios) {
        if (!names.insert(s.name).second) throw ConfigError(0, "duplicate scenario name '" + s.name + "'");
        PlantParams p = plant;
        if (s.r_bs) p.r_bs = *s.r_bs;
        p.lo_option = s.lo_option;
        p.homodyne_angle = s.phi;
        try {
            p.validate();
            if (!(p.lo_power.of(s.lo_option) > 0)) {
                throw DomainError("lo_power_" + std::string(to_string(s.lo_option)) + " must be > 0");
            }
            pickoff(p, s.lo_option);
        } catch (const DomainError& err) {
            throw ConfigError(0, "scenario '" + s.name + "': " + err.what());
        }
    }
}

RunConfig parse_config(std::string_view text, const Overrides& overrides) {
    const std::vector<Section> sections = tokenize(text);

    const Section* plant = nullptr;
    const Section* grid = nullptr;
    const Section* output = nullptr;
    std::vector<const Section*> scenarios;
    for (const Section& s : sections) {
        auto single = [&s](const Section*& slot) {
            if (slot != nullptr) throw ConfigError(s.line, "duplicate section [" + s.name + "]");
            slot = &s;
        };
        if (s.name == "plant") single(plant);
        else if (s.name == "grid") single(grid);
        else if (s.name == "output") single(output);
        else if (s.name == "scenario") scenarios.push_back(&s);
        else throw ConfigError(s.line, "unknown section [" + s.name + "]");
    }

    RunConfig cfg;
    cfg.plant = parse_plant(plant, overrides);
    if (grid != nullptr) cfg.grid = parse_grid(*grid);
    if (output != nullptr) parse_output(*output, cfg);

    std::vector<ScenarioDraft> drafts;
    for (const Section* s : scenarios) drafts.push_back(parse_scenario(*s, cfg.plant));
    if (drafts.empty()) {
        ScenarioDraft d;
        d.scenario.lo_option = cfg.plant.lo_option;
        d.scenario.phi = cfg.plant.homodyne_angle;
        drafts.push_back(d);
    }
    for (ScenarioDraft& d : drafts) {
        if (overrides.lo_option) d.scenario.lo_option = *overrides.lo_option;
        if (overrides.phi) d.scenario.phi = *overrides.phi;
        if (overrides.r_bs) d.scenario.r_bs = *overrides.r_bs;
    }
    std::map<LoOption, int> per_option;
    for (const ScenarioDraft& d : drafts) ++per_option[d.scenario.lo_option];
    for (std::size_t i = 0; i < drafts.size(); ++i) {
        ScenarioDraft& d = drafts[i];
        if (d.named) continue;
        d.scenario.name = std::string(to_string(d.scenario.lo_option));
        if (per_option[d.scenario.lo_option] > 1) d.scenario.name += "_" + std::to_string(i + 1);
    }
    for (ScenarioDraft& d : drafts) cfg.scenarios.push_back(std::move(d.scenario));

    if (overrides.output_path) cfg.output_path = *overrides.output_path;
    if (overrides.format) cfg.format = *overrides.format;

    cfg.validate();
    return cfg;
}

}  // namespace qn::app
