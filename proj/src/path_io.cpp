#include "foulab/path_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "foulab/errors.hpp"

namespace foulab {

std::string format_shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_sig17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_path_csv(const std::string& file, const std::vector<double>& values,
                    const GridSpec& grid) {
    grid.validate();
    if (values.size() != static_cast<std::size_t>(grid.n) + 1)
        throw std::invalid_argument("write_path_csv: values length must be n+1");
    std::ostringstream out;
    out << "t,value\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        out << format_sig17(static_cast<double>(i) * grid.h) << ',' << format_sig17(values[i])
            << '\n';
    write_text_file(file, out.str());
}

LoadedPath read_path_csv(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw io_error("cannot open " + file);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument(file + ": empty file");
    if (line.rfind("t,value", 0) != 0)
        throw std::invalid_argument(file + ": expected header 't,value'");

    std::vector<double> ts, vs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument(file + ": malformed row '" + line + "'");
        try {
            ts.push_back(std::stod(line.substr(0, comma)));
            vs.push_back(std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument(file + ": non-numeric row '" + line + "'");
        }
    }
    if (ts.size() < 2) throw std::invalid_argument(file + ": need at least two rows");

    const double h = ts[1] - ts[0];
    if (!(h > 0.0)) throw std::invalid_argument(file + ": time column must be increasing");
    for (std::size_t i = 1; i < ts.size(); ++i) {
        const double dt = ts[i] - ts[i - 1];
        if (std::fabs(dt - h) > 1e-9 * h)
            throw std::invalid_argument(file + ": irregular grid spacing at row " +
                                        std::to_string(i + 1));
    }

    LoadedPath p;
    p.grid = GridSpec(static_cast<std::int64_t>(ts.size()) - 1, h);
    p.values = std::move(vs);
    return p;
}

void write_fou_sidecar(const std::string& file, const FouPath& path) {
    nlohmann::json j{{"theta", path.theta},
                     {"sigma", path.sigma.kind == VolatilitySpec::Kind::kConstant
                                   ? nlohmann::json(path.sigma.constant)
                                   : nlohmann::json("deterministic-function")},
                     {"hurst", path.hurst},
                     {"h", path.grid.h},
                     {"n", path.grid.n},
                     {"seed", path.seed}};
    write_text_file(file, j.dump(2) + "\n");
}

std::string read_text_file(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw io_error("cannot open " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw io_error("cannot open " + file + " for writing");
    out << text;
    if (!out) throw io_error("failed writing " + file);
}

}  // namespace foulab
