#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gyrolab/einstein.hpp"

namespace gyrolab {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string format_double(double x); // shortest round-trip decimal

/// Point CSV, one row per point: "re,im" for the disk, "x,y,z" for the
/// velocity ball, "index" for finite tables and the integer carrier.
std::string points_csv(const std::vector<std::complex<double>>& pts);
std::string points_csv(const std::vector<Vec3>& pts);
std::string points_csv(const std::vector<int>& pts);
std::string points_csv(const std::vector<long long>& pts);

std::vector<std::complex<double>> parse_disk_csv(const std::string& text);
std::vector<Vec3> parse_ball_csv(const std::string& text);
std::vector<long long> parse_index_csv(const std::string& text);

} // namespace gyrolab
