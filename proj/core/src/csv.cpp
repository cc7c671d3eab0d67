#include "cpe/csv.hpp"

#include <cstdio>
#include <fstream>

#include "cpe/errors.hpp"

namespace cpe {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header.size()) throw UsageFault("csv: row width differs from header");
  rows.push_back(std::move(cells));
}

std::string CsvTable::to_string() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

CsvTable energy_table(const std::vector<EnergyReport>& records) {
  CsvTable t;
  t.header = {"t",    "E",          "min_sigma",       "min_p",    "mass",
              "max_w_wall", "max_phi_average", "int_v_h4", "int_dzsigma_h2"};
  for (const auto& r : records)
    t.add_row({format_double(r.t), format_double(r.E), format_double(r.min_sigma),
               format_double(r.min_p), format_double(r.mass), format_double(r.max_w_wall),
               format_double(r.max_phi_average), format_double(r.int_v_h4),
               format_double(r.int_dzsigma_h2)});
  return t;
}

void write_csv(const std::string& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoFault("cannot open '" + path + "' for writing");
  out << table.to_string();
  out.flush();
  if (!out) throw IoFault("write to '" + path + "' failed");
}

}  // namespace cpe
