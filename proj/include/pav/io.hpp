#pragma once

#include <string>
#include <vector>

#include "pav/dyson.hpp"
#include "pav/lattice_path.hpp"
#include "pav/scaled_family.hpp"

namespace pav {

// CSV with a provenance comment line, a header row, then t followed by d
// values; floats at 17 significant digits.
std::string path_csv(const LatticePath& path, const std::string& provenance);
std::string family_values_csv(const ScaledPathFamily& fam, const std::string& provenance);
std::string family_breakpoints_csv(const ScaledPathFamily& fam, const std::string& provenance);
std::string eigen_path_csv(const EigenPath& path, const std::string& provenance);

// full matrices as {"d", "times", "re", "im"} with row-major d*d blocks
std::string bridge_matrices_json(const HermitianBridgePath& z, const std::string& provenance);

// Self-contained polyline plot: time on [0,1], centered vertical axis.
std::string family_svg(const std::vector<const ScaledPathFamily*>& families,
                       const std::string& provenance, int width = 900, int height = 500);

void write_file(const std::string& path, const std::string& content);

std::string format_double(double v); // 17 significant digits

} // namespace pav
