#include "qst/io.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "qst/errors.hpp"

namespace qst {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

double parse_num(const std::string& field, const std::string& path, int row, int col) {
    try {
        size_t used = 0;
        double v = std::stod(field, &used);
        while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used]))) ++used;
        if (used != field.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        std::ostringstream msg;
        msg << path << ": row " << row << ", column " << col << ": cannot parse '" << field
            << "' as a number";
        throw ParseError(msg.str());
    }
}

std::vector<std::vector<std::string>> read_rows(const std::string& path, size_t n_cols,
                                                const std::string& header) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::vector<std::vector<std::string>> rows;
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (!saw_header) {
            saw_header = true;
            if (trimmed.rfind(header.substr(0, header.find(',')), 0) == 0) continue;
            // no header line; fall through and parse as data
        }
        auto fields = split_csv(line);
        if (fields.size() != n_cols) {
            std::ostringstream msg;
            msg << path << ": row " << lineno << ": expected " << n_cols << " columns, found "
                << fields.size();
            throw ParseError(msg.str());
        }
        fields.push_back(std::to_string(lineno));  // carry the line number along
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

TomographyInput read_tomography_csv(const std::string& path) {
    const std::string header = "nu,label,h_a,q_a,h_b,q_b,n_a,n_b,n_c,t_s,tau_s";
    auto rows = read_rows(path, 11, header);
    if (rows.size() != 16) {
        throw ParseError(path + ": expected 16 tomography rows, found " +
                         std::to_string(rows.size()));
    }
    TomographyInput input;
    for (auto& f : rows) {
        int lineno = std::stoi(f.back());
        CountRecord r;
        r.nu = static_cast<int>(parse_num(f[0], path, lineno, 1));
        r.label = f[1];
        r.setting.h_a = parse_num(f[2], path, lineno, 3);
        r.setting.q_a = parse_num(f[3], path, lineno, 4);
        r.setting.h_b = parse_num(f[4], path, lineno, 5);
        r.setting.q_b = parse_num(f[5], path, lineno, 6);
        r.n_a = parse_num(f[6], path, lineno, 7);
        r.n_b = parse_num(f[7], path, lineno, 8);
        r.n_c = parse_num(f[8], path, lineno, 9);
        r.t_s = parse_num(f[9], path, lineno, 10);
        r.tau_s = parse_num(f[10], path, lineno, 11);
        input.records.push_back(std::move(r));
    }
    return input;
}

void write_tomography_csv(const std::string& path, const TomographyInput& input) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    out << "nu,label,h_a,q_a,h_b,q_b,n_a,n_b,n_c,t_s,tau_s\n";
    out << std::setprecision(17);
    for (const auto& r : input.records) {
        out << r.nu << ',' << r.label << ',' << r.setting.h_a << ',' << r.setting.q_a << ','
            << r.setting.h_b << ',' << r.setting.q_b << ',' << r.n_a << ',' << r.n_b << ','
            << r.n_c << ',' << r.t_s << ',' << r.tau_s << '\n';
    }
}

std::vector<BellRecord> read_bell_csv(const std::string& path) {
    const std::string header = "theta_a,theta_b,n_a,n_b,n_c,dn_c,t_s,tau_s";
    auto rows = read_rows(path, 8, header);
    std::vector<BellRecord> records;
    for (auto& f : rows) {
        int lineno = std::stoi(f.back());
        BellRecord r;
        r.theta_a = parse_num(f[0], path, lineno, 1);
        r.theta_b = parse_num(f[1], path, lineno, 2);
        r.n_a = parse_num(f[2], path, lineno, 3);
        r.n_b = parse_num(f[3], path, lineno, 4);
        r.n_c = parse_num(f[4], path, lineno, 5);
        r.dn_c = parse_num(f[5], path, lineno, 6);
        r.t_s = parse_num(f[6], path, lineno, 7);
        r.tau_s = parse_num(f[7], path, lineno, 8);
        records.push_back(r);
    }
    return records;
}

void write_bell_csv(const std::string& path, const std::vector<BellRecord>& records) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    out << "theta_a,theta_b,n_a,n_b,n_c,dn_c,t_s,tau_s\n";
    out << std::setprecision(17);
    for (const auto& r : records) {
        out << r.theta_a << ',' << r.theta_b << ',' << r.n_a << ',' << r.n_b << ',' << r.n_c
            << ',' << r.dn_c << ',' << r.t_s << ',' << r.tau_s << '\n';
    }
}

std::vector<PowerPoint> read_power_csv(const std::string& path) {
    const std::string header = "power_mw,cc_rate_cps";
    auto rows = read_rows(path, 2, header);
    std::vector<PowerPoint> points;
    for (auto& f : rows) {
        int lineno = std::stoi(f.back());
        points.push_back({parse_num(f[0], path, lineno, 1), parse_num(f[1], path, lineno, 2)});
    }
    return points;
}

Mat4 read_rho_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::vector<std::array<double, 4>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        std::istringstream ss(trimmed);
        std::array<double, 4> vals{};
        for (int c = 0; c < 4; ++c) {
            if (!(ss >> vals[c])) {
                std::ostringstream msg;
                msg << path << ": row " << lineno << ": expected 4 numeric columns";
                throw ParseError(msg.str());
            }
        }
        rows.push_back(vals);
    }
    if (rows.size() != 8) {
        throw ParseError(path + ": expected 8 rows (4x4 real block then 4x4 imaginary block)");
    }
    Mat4 rho;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rho(i, j) = cplx(rows[i][j], rows[i + 4][j]);
    return rho;
}

void write_rho_text(const std::string& path, const Mat4& rho) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    out << "# density matrix: 4x4 real block, then 4x4 imaginary block (row-major)\n";
    out << std::setprecision(17);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) out << rho(i, j).real() << (j == 3 ? '\n' : ' ');
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) out << rho(i, j).imag() << (j == 3 ? '\n' : ' ');
    }
}

}  // namespace qst
