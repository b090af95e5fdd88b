#include "entsim/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace entsim {

nlohmann::json density_to_json(const DensityMatrix& rho) {
    const int d = rho.dim();
    std::vector<std::vector<double>> re(d, std::vector<double>(d));
    std::vector<std::vector<double>> im(d, std::vector<double>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            re[i][j] = rho.mat(i, j).real();
            im[i][j] = rho.mat(i, j).imag();
        }
    return {{"dims", rho.dims}, {"re", re}, {"im", im}};
}

DensityMatrix density_from_json(const nlohmann::json& j) {
    DensityMatrix rho;
    rho.dims = j.at("dims").get<std::vector<int>>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    const int d = rho.dim();
    if (static_cast<int>(re.size()) != d || static_cast<int>(im.size()) != d)
        throw std::invalid_argument("density_from_json: matrix size != product of dims");
    rho.mat = ComplexMatrix(d, d);
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(re[i].size()) != d || static_cast<int>(im[i].size()) != d)
            throw std::invalid_argument("density_from_json: ragged matrix");
        for (int j2 = 0; j2 < d; ++j2)
            rho.mat(i, j2) = cplx(re[i][j2].get<double>(), im[i][j2].get<double>());
    }
    return rho;
}

void save_density(const std::string& path, const DensityMatrix& rho) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << density_to_json(rho).dump(2) << "\n";
}

DensityMatrix load_density(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    nlohmann::json j;
    f >> j;
    return density_from_json(j);
}

std::string csv_number(double v) {
    std::ostringstream os;
    os.precision(9);
    os << v;
    return os.str();
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << header << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            f << (i ? "," : "") << csv_number(row[i]);
        f << "\n";
    }
}

void write_tomo_records(const std::string& path, const std::vector<TomoRecord>& records) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << "arm1_qwp,arm1_hwp,arm2_qwp,arm2_hwp,counts,duration_s\n";
    for (const auto& r : records)
        f << csv_number(r.arm1_qwp) << "," << csv_number(r.arm1_hwp) << ","
          << csv_number(r.arm2_qwp) << "," << csv_number(r.arm2_hwp) << ","
          << csv_number(r.counts) << "," << csv_number(r.duration_s) << "\n";
}

std::vector<TomoRecord> read_tomo_records(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(f, line)) throw std::runtime_error("empty records file: " + path);
    std::vector<TomoRecord> out;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::istringstream is(line);
        TomoRecord r;
        char comma;
        if (!(is >> r.arm1_qwp >> comma >> r.arm1_hwp >> comma >> r.arm2_qwp >> comma >>
              r.arm2_hwp >> comma >> r.counts >> comma >> r.duration_s))
            throw std::runtime_error("malformed record line: " + line);
        out.push_back(r);
    }
    return out;
}

}  // namespace entsim
