#pragma once

#include <string>
#include <vector>

#include "cpe/energy.hpp"

namespace cpe {

/// Formats with "%.17g" so every double survives a text round trip.
std::string format_double(double x);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells);
  std::string to_string() const;
};

/// Columns t, E, min_sigma, min_p, mass, max_w_wall, max_phi_average,
/// int_v_h4, int_dzsigma_h2; one row per record.
CsvTable energy_table(const std::vector<EnergyReport>& records);

/// Writes (truncating) and flushes. Throws IoFault on failure.
void write_csv(const std::string& path, const CsvTable& table);

}  // namespace cpe
