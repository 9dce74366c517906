#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qn/app/config.hpp"

namespace qn::app {

/// One scenario x output table. Row i holds the values at grid point i in
/// column order; column names carry their unit suffix.
struct Table {
    std::string scenario;
    OutputKind kind = OutputKind::Qnls;
    LoOption lo_option = LoOption::CoMoving;
    Real phi = 0;
    Real r_bs = 0;
    std::vector<std::string> columns;
    std::vector<std::vector<Real>> rows;

    /// "<scenario>_<output>", used as the output file stem.
    std::string stem() const;
};

std::vector<std::string> columns_for(OutputKind kind);

/// Plant of one scenario: the config plant with the scenario's LO option,
/// homodyne angle and optional R_BS applied.
PlantParams scenario_plant(const RunConfig& config, const Scenario& scenario);

/// Evaluates every scenario on the grid. Tables come out in scenario order,
/// then in the order of config.outputs.
std::vector<Table> run_sweep(const RunConfig& config);

/// "%.8Le" formatting (9 significant digits); non-finite values print as
/// "inf", "-inf" or "nan".
std::string format_value(Real value);

std::string to_csv(const Table& table);
/// Non-finite values become null.
std::string to_json(const Table& table);

/// Writes one file per table into `dir`, creating it if needed. Returns the
/// written paths. Throws std::runtime_error naming the path on I/O failure.
std::vector<std::filesystem::path> write_tables(const std::vector<Table>& tables,
                                                const std::filesystem::path& dir, Format format);

}  // namespace qn::app
