#include "qn/app/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "json.hpp"

#include "qn/noise_budget.hpp"

namespace qn::app {

namespace {

struct PointValues {
    NoiseBudgetPoint budget;
    Real tf = 0;
    Real rin = 0;
    NoiseBudgetPoint michelson;
};

PointValues evaluate(const PlantParams& p, LoOption option, Real phi, Real f_hz, bool need_michelson) {
    const CouplingFactors cf = coupling_factors(p, hz_to_angular(f_hz));
    const ReadoutChain chain = readout_chain(option, phi, p, cf);
    PointValues v;
    v.budget = qnls_general(chain, SpectralDensityMatrix::vacuum(), SpectralDensityMatrix::vacuum());
    v.tf = laser_tf(chain);
    v.rin = rin_requirement(chain, v.budget);
    if (need_michelson) v.michelson = michelson_qnls(p, cf, phi);
    return v;
}

std::vector<Real> row_for(OutputKind kind, Real f, const PointValues& v) {
    const NoiseBudgetPoint& b = v.budget;
    switch (kind) {
        case OutputKind::Qnls: return {f, b.asd_total, b.s_dp, b.s_bp, b.s_po, b.s_total, b.x_sql};
        case OutputKind::Tf: return {f, v.tf};
        case OutputKind::Rin: return {f, v.rin};
        case OutputKind::Budget:
            return {f, b.asd_total, b.s_dp, b.s_bp, b.s_po, b.s_total, b.x_sql, v.tf, v.rin};
        case OutputKind::Michelson: return {f, v.michelson.asd_total, v.michelson.s_total, v.michelson.x_sql};
    }
    return {};
}

}  // namespace

std::string Table::stem() const { return scenario + "_" + std::string(to_string(kind)); }

std::vector<std::string> columns_for(OutputKind kind) {
    switch (kind) {
        case OutputKind::Qnls:
            return {"f_Hz", "asd_total_m_per_sqrtHz", "S_DP_m2_per_Hz", "S_BP_m2_per_Hz",
                    "S_PO_m2_per_Hz", "S_total_m2_per_Hz", "x_SQL_m_per_sqrtHz"};
        case OutputKind::Tf: return {"f_Hz", "tf_mag_m"};
        case OutputKind::Rin: return {"f_Hz", "rin_per_sqrtHz"};
        case OutputKind::Budget:
            return {"f_Hz", "asd_total_m_per_sqrtHz", "S_DP_m2_per_Hz", "S_BP_m2_per_Hz",
                    "S_PO_m2_per_Hz", "S_total_m2_per_Hz", "x_SQL_m_per_sqrtHz", "tf_mag_m",
                    "rin_per_sqrtHz"};
        case OutputKind::Michelson:
            return {"f_Hz", "asd_michelson_m_per_sqrtHz", "S_michelson_m2_per_Hz", "x_SQL_m_per_sqrtHz"};
    }
    return {};
}

PlantParams scenario_plant(const RunConfig& config, const Scenario& scenario) {
    PlantParams p = config.plant;
    if (scenario.r_bs) p.r_bs = *scenario.r_bs;
    p.lo_option = scenario.lo_option;
    p.homodyne_angle = scenario.phi;
    return p;
}

std::vector<Table> run_sweep(const RunConfig& config) {
    const std::vector<Real> freqs = config.grid.frequencies();
    bool need_michelson = false;
    for (OutputKind k : config.outputs) need_michelson |= k == OutputKind::Michelson;

    std::vector<Table> tables;
    for (const Scenario& s : config.scenarios) {
        const PlantParams p = scenario_plant(config, s);
        const std::size_t first = tables.size();
        for (OutputKind k : config.outputs) {
            Table t;
            t.scenario = s.name;
            t.kind = k;
            t.lo_option = s.lo_option;
            t.phi = s.phi;
            t.r_bs = p.r_bs;
            t.columns = columns_for(k);
            t.rows.reserve(freqs.size());
            tables.push_back(std::move(t));
        }
        for (Real f : freqs) {
            const PointValues v = evaluate(p, s.lo_option, s.phi, f, need_michelson);
            for (std::size_t i = 0; i < config.outputs.size(); ++i) {
                tables[first + i].rows.push_back(row_for(config.outputs[i], f, v));
            }
        }
    }
    return tables;
}

std::string format_value(Real value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8Le", value);
    return buf;
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i > 0) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ',';
            out += format_value(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    nlohmann::ordered_json j;
    j["scenario"] = table.scenario;
    j["output"] = std::string(to_string(table.kind));
    j["lo_option"] = std::string(to_string(table.lo_option));
    j["phi_rad"] = static_cast<double>(table.phi);
    j["r_bs"] = static_cast<double>(table.r_bs);
    j["columns"] = table.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (Real v : row) {
            if (std::isfinite(v)) r.push_back(static_cast<double>(v));
            else r.push_back(nullptr);
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(1) + "\n";
}

std::vector<std::filesystem::path> write_tables(const std::vector<Table>& tables,
                                                const std::filesystem::path& dir, Format format) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

    std::vector<std::filesystem::path> written;
    for (const Table& t : tables) {
        const auto path = dir / (t.stem() + (format == Format::Csv ? ".csv" : ".json"));
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
        out << (format == Format::Csv ? to_csv(t) : to_json(t));
        out.close();
        if (!out) throw std::runtime_error("write failed: " + path.string());
        written.push_back(path);
    }
    return written;
}

}  // namespace qn::app
