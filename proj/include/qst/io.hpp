#pragma once

// File formats: the tomography and Bell CSV schemas, the power-scan CSV,
// and the plain-text density-matrix serialization (4x4 real block then
// 4x4 imaginary block, row-major).

#include <string>
#include <vector>

#include "qst/bell.hpp"
#include "qst/calibration.hpp"
#include "qst/tomography.hpp"
#include "qst/types.hpp"

namespace qst {

// header: nu,label,h_a,q_a,h_b,q_b,n_a,n_b,n_c,t_s,tau_s
TomographyInput read_tomography_csv(const std::string& path);
void write_tomography_csv(const std::string& path, const TomographyInput& input);

// header: theta_a,theta_b,n_a,n_b,n_c,dn_c,t_s,tau_s
std::vector<BellRecord> read_bell_csv(const std::string& path);
void write_bell_csv(const std::string& path, const std::vector<BellRecord>& records);

// header: power_mw,cc_rate_cps
std::vector<PowerPoint> read_power_csv(const std::string& path);

Mat4 read_rho_text(const std::string& path);
void write_rho_text(const std::string& path, const Mat4& rho);

}  // namespace qst
