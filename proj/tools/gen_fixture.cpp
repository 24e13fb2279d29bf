// Writes the deterministic synthetic dataset used by tests and the golden run.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "fincomp/indicator.hpp"

namespace {

constexpr std::uint64_t kSeed = 20240817;

double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Range {
    double lo;
    double hi;
};

Range units_range(const std::string& units) {
    if (units == "percent") return {2.0, 85.0};
    if (units == "ratio") return {0.2, 6.0};
    if (units == "crore") return {-200.0, 8000.0};
    if (units == "days") return {5.0, 220.0};
    return {50.0, 3000.0};
}

} // namespace

int main(int argc, char** argv) {
    const std::string out_path = argc > 1 ? argv[1] : "synthetic50.csv";
    const auto registry = fincomp::IndicatorRegistry::builtin_default();
    const std::size_t companies = 50;

    std::mt19937_64 rng(kSeed);
    struct ColumnModel {
        double center;
        double spread;
    };
    std::vector<ColumnModel> models;
    models.reserve(registry.size());
    for (const auto& spec : registry.specs()) {
        const Range r = units_range(spec.units);
        const double width = r.hi - r.lo;
        const double center = r.lo + unit_draw(rng) * width;
        const double spread = width * (0.1 + 0.25 * unit_draw(rng));
        models.push_back({center, spread});
    }

    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 1;
    }
    out << "# synthetic fixture, seed " << kSeed << ", " << companies << " companies x "
        << registry.size() << " indicators\n";
    out << "ticker";
    for (const auto& spec : registry.specs()) out << ',' << spec.id;
    out << '\n';

    char buf[64];
    for (std::size_t i = 0; i < companies; ++i) {
        std::snprintf(buf, sizeof buf, "C%03zu", i + 1);
        out << buf;
        for (const auto& model : models) {
            const double v = model.center + (2.0 * unit_draw(rng) - 1.0) * model.spread;
            std::snprintf(buf, sizeof buf, "%.6g", v);
            out << ',' << buf;
        }
        out << '\n';
    }
    out.close();
    std::cout << "wrote " << out_path << "\n";
    return 0;
}
