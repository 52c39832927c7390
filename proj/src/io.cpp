#include "pav/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pav {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string path_csv(const LatticePath& path, const std::string& provenance) {
    std::ostringstream os;
    os << "# " << provenance << "\n";
    os << "t";
    for (int l = 1; l <= path.d(); ++l) os << ",x" << l;
    os << "\n";
    for (int m = 0; m <= path.n(); ++m) {
        os << m;
        for (int l = 1; l <= path.d(); ++l) os << "," << path.coord(m, l);
        os << "\n";
    }
    return os.str();
}

std::string family_values_csv(const ScaledPathFamily& fam, const std::string& provenance) {
    std::ostringstream os;
    os << "# " << provenance << "\n";
    os << "t";
    for (int l = 1; l <= fam.d; ++l) os << ",f" << l;
    os << "\n";
    for (double t : fam.merged_grid()) {
        os << format_double(t);
        for (int l = 1; l <= fam.d; ++l) os << "," << format_double(fam.value(l, t));
        os << "\n";
    }
    return os.str();
}

std::string family_breakpoints_csv(const ScaledPathFamily& fam, const std::string& provenance) {
    std::ostringstream os;
    os << "# " << provenance << "\n";
    os << "layer,t,y\n";
    for (int l = 1; l <= fam.d; ++l)
        for (const auto& b : fam.layers[static_cast<std::size_t>(l - 1)])
            os << l << "," << format_double(b.t) << "," << format_double(b.y) << "\n";
    return os.str();
}

std::string eigen_path_csv(const EigenPath& path, const std::string& provenance) {
    std::ostringstream os;
    os << "# " << provenance << "\n";
    os << "t";
    for (int i = 1; i <= path.d; ++i) os << ",lambda" << i;
    os << "\n";
    for (std::size_t k = 0; k < path.times.size(); ++k) {
        os << format_double(path.times[k]);
        for (int i = 0; i < path.d; ++i) os << "," << format_double(path.values[k][static_cast<std::size_t>(i)]);
        os << "\n";
    }
    return os.str();
}

std::string bridge_matrices_json(const HermitianBridgePath& z, const std::string& provenance) {
    std::ostringstream os;
    os << "{\"provenance\":\"" << provenance << "\",\"d\":" << z.d << ",\"times\":[";
    for (std::size_t k = 0; k < z.times.size(); ++k) {
        if (k) os << ",";
        os << format_double(z.times[k]);
    }
    os << "],\"re\":[";
    for (std::size_t k = 0; k < z.matrices.size(); ++k) {
        if (k) os << ",";
        os << "[";
        for (std::size_t e = 0; e < z.matrices[k].size(); ++e) {
            if (e) os << ",";
            os << format_double(z.matrices[k][e].real());
        }
        os << "]";
    }
    os << "],\"im\":[";
    for (std::size_t k = 0; k < z.matrices.size(); ++k) {
        if (k) os << ",";
        os << "[";
        for (std::size_t e = 0; e < z.matrices[k].size(); ++e) {
            if (e) os << ",";
            os << format_double(z.matrices[k][e].imag());
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

std::string family_svg(const std::vector<const ScaledPathFamily*>& families,
                       const std::string& provenance, int width, int height) {
    double ymax = 0.1;
    for (const auto* fam : families)
        for (const auto& layer : fam->layers)
            for (const auto& b : layer) ymax = std::max(ymax, std::abs(b.y));
    ymax *= 1.05;

    const char* palette[] = {"#2a9d3f", "#d62728", "#1f77b4", "#9467bd",
                             "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    auto px = [&](double t) { return t * (width - 20) + 10; };
    auto py = [&](double y) { return height / 2.0 - y * (height / 2.0 - 10) / ymax; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\">\n<!-- " << provenance << " -->\n";
    os << "<line x1=\"" << px(0.0) << "\" y1=\"" << py(0.0) << "\" x2=\"" << px(1.0) << "\" y2=\""
       << py(0.0) << "\" stroke=\"#bbbbbb\"/>\n";
    for (const auto* fam : families) {
        for (int l = 1; l <= fam->d; ++l) {
            os << "<polyline fill=\"none\" stroke=\"" << palette[(l - 1) % 8]
               << "\" stroke-width=\"1\" points=\"";
            for (const auto& b : fam->layers[static_cast<std::size_t>(l - 1)])
                os << px(b.t) << "," << py(b.y) << " ";
            os << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace pav
