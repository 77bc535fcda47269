#pragma once

#include <string>
#include <vector>

#include "foulab/fou_model.hpp"
#include "foulab/grid.hpp"

namespace foulab {

/// Column file with header "t,value"; numbers carry 17 significant digits so
/// doubles round-trip exactly.
void write_path_csv(const std::string& file, const std::vector<double>& values,
                    const GridSpec& grid);

struct LoadedPath {
    GridSpec grid;
    std::vector<double> values;
};

/// Parse a "t,value" CSV and validate the grid spacing
/// (max |dt - h| < 1e-9 h). Throws io_error / invalid_argument.
LoadedPath read_path_csv(const std::string& file);

/// Generating-parameter sidecar {theta, sigma, hurst, h, n, seed}.
void write_fou_sidecar(const std::string& file, const FouPath& path);

std::string read_text_file(const std::string& file);
void write_text_file(const std::string& file, const std::string& text);

/// Shortest decimal rendering that round-trips the double exactly.
std::string format_shortest(double v);

/// Fixed 17-significant-digit rendering used by the path CSVs.
std::string format_sig17(double v);

}  // namespace foulab
