#pragma once

#include <string>
#include <vector>

#include "entsim/states.hpp"
#include "entsim/tomography.hpp"

#include <json.hpp>

namespace entsim {

// {"dims":[...], "re":[[...]], "im":[[...]]}
nlohmann::json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

void save_density(const std::string& path, const DensityMatrix& rho);
DensityMatrix load_density(const std::string& path);

// value formatted with 9 significant digits, the precision used in all
// CSV output
std::string csv_number(double v);

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows);

void write_tomo_records(const std::string& path, const std::vector<TomoRecord>& records);
std::vector<TomoRecord> read_tomo_records(const std::string& path);

}  // namespace entsim
