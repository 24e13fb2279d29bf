#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "fincomp/pipeline.hpp"
#include "fincomp/version.hpp"

namespace py = pybind11;

namespace {

fincomp::RunConfig make_config(const std::string& data, const std::string& registry,
                               const std::string& inverse_mode, const std::string& entropy,
                               const std::string& weight_rule, const std::string& bandwidth,
                               std::size_t grid, const std::string& missing,
                               const std::string& out) {
    fincomp::RunConfig config;
    config.data_path = data;
    config.registry_path = registry;
    config.inverse_mode = fincomp::inverse_mode_from_string(inverse_mode);
    config.entropy_method = fincomp::entropy_method_from_string(entropy);
    config.weight_rule = fincomp::weight_rule_from_string(weight_rule);
    config.bandwidth = fincomp::BandwidthPolicy::from_string(bandwidth);
    config.grid_size = grid;
    config.missing_policy = fincomp::missing_policy_from_string(missing);
    config.output_dir = out;
    return config;
}

py::dict describe_dict(const fincomp::DescriptiveStats& d) {
    py::dict out;
    out["mean"] = d.mean;
    out["median"] = d.median;
    out["std_dev"] = d.std_dev;
    out["kurtosis"] = d.kurtosis ? py::cast(*d.kurtosis) : py::none();
    out["skewness"] = d.skewness ? py::cast(*d.skewness) : py::none();
    out["smallest"] = d.smallest;
    out["largest"] = d.largest;
    out["obs"] = d.obs;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "entropy-weighted financial competitiveness scoring";
    m.attr("__version__") = fincomp::kVersion;

    static py::handle error_type =
        py::exception<fincomp::Error>(m, "FincompError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const fincomp::Error& e) {
            py::set_error(error_type, e.what());
        }
    });

    py::class_<fincomp::CdfEstimate>(m, "CdfEstimate")
        .def_readonly("grid", &fincomp::CdfEstimate::grid)
        .def_readonly("values", &fincomp::CdfEstimate::values)
        .def_readonly("bandwidth", &fincomp::CdfEstimate::bandwidth)
        .def_readonly("sample_size", &fincomp::CdfEstimate::sample_size);

    m.def("normalize_positive",
          [](const std::vector<double>& column) { return fincomp::normalize_positive(column); },
          py::arg("column"));

    m.def("normalize_inverse",
          [](const std::vector<double>& column, const std::string& mode) {
              return fincomp::normalize_inverse(column,
                                                fincomp::inverse_mode_from_string(mode));
          },
          py::arg("column"), py::arg("mode") = "corrected");

    m.def("estimate_cdf",
          [](const std::vector<double>& column, const std::string& bandwidth,
             std::size_t grid_size) {
              return fincomp::estimate_cdf(
                  column, fincomp::BandwidthPolicy::from_string(bandwidth), grid_size);
          },
          py::arg("column"), py::arg("bandwidth") = "rot", py::arg("grid_size") = 1025);

    m.def("continuous_entropy",
          [](const fincomp::CdfEstimate& cdf) { return fincomp::continuous_entropy(cdf); },
          py::arg("cdf"));

    m.def("discrete_entropy",
          [](const std::vector<double>& p, double k) { return fincomp::discrete_entropy(p, k); },
          py::arg("p"), py::arg("k"));

    m.def("column_entropy",
          [](const std::vector<double>& column, const std::string& method,
             const std::string& bandwidth, std::size_t grid_size) {
              const fincomp::ColumnEntropyParams params{
                  fincomp::BandwidthPolicy::from_string(bandwidth), grid_size};
              return fincomp::column_entropy(
                         column, fincomp::entropy_method_from_string(method), params)
                  .h;
          },
          py::arg("column"), py::arg("method") = "continuous", py::arg("bandwidth") = "rot",
          py::arg("grid_size") = 1025);

    m.def("entropy_weights",
          [](const std::vector<double>& entropies, const std::string& rule,
             const std::string& method) {
              std::vector<fincomp::EntropyValue> values;
              values.reserve(entropies.size());
              for (std::size_t i = 0; i < entropies.size(); ++i) {
                  values.push_back({"x" + std::to_string(i + 1), entropies[i],
                                    fincomp::entropy_method_from_string(method)});
              }
              const auto weights =
                  fincomp::compute_weights(values, fincomp::weight_rule_from_string(rule));
              std::vector<double> out;
              out.reserve(weights.entries.size());
              for (const auto& entry : weights.entries) out.push_back(entry.weight);
              return out;
          },
          py::arg("entropies"), py::arg("rule") = "paper", py::arg("method") = "continuous");

    m.def("describe",
          [](const std::vector<double>& values) { return describe_dict(fincomp::describe(values)); },
          py::arg("values"));

    m.def("pearson",
          [](const std::vector<double>& x, const std::vector<double>& y) {
              return fincomp::pearson(x, y);
          },
          py::arg("x"), py::arg("y"));

    m.def("pearson_matrix",
          [](const std::vector<std::vector<double>>& columns,
             const std::vector<std::string>& ids) {
              const auto matrix = fincomp::pearson_matrix(columns, ids);
              std::vector<std::vector<double>> values(matrix.size());
              for (std::size_t i = 0; i < matrix.size(); ++i) {
                  values[i].resize(matrix.size());
                  for (std::size_t j = 0; j < matrix.size(); ++j) values[i][j] = matrix.at(i, j);
              }
              py::dict out;
              out["ids"] = matrix.ids();
              out["values"] = values;
              return out;
          },
          py::arg("columns"), py::arg("ids"));

    m.def("default_registry_json", [] {
        return fincomp::IndicatorRegistry::builtin_default().to_json().dump(2);
    });

    m.def("analyze_json",
          [](const std::string& data, const std::string& registry,
             const std::string& inverse_mode, const std::string& entropy,
             const std::string& weight_rule, const std::string& bandwidth, std::size_t grid,
             const std::string& missing, const std::string& out, bool write, unsigned threads) {
              const auto config = make_config(data, registry, inverse_mode, entropy, weight_rule,
                                              bandwidth, grid, missing, out);
              const fincomp::RunReport report = write ? fincomp::run_pipeline(config, threads)
                                                      : fincomp::compute_report(config, threads);
              nlohmann::ordered_json j;
              j["scores"] = fincomp::scores_to_json(report.score_board);
              j["weights"] = fincomp::weights_to_json(report.weights);
              j["stats"] = fincomp::stats_to_json(report.score_stats);
              j["diagnostics"] = fincomp::diagnostics_to_json(report);
              return j.dump();
          },
          py::arg("data"), py::arg("registry") = "", py::arg("inverse_mode") = "corrected",
          py::arg("entropy") = "continuous", py::arg("weight_rule") = "paper",
          py::arg("bandwidth") = "rot", py::arg("grid") = 1025, py::arg("missing") = "reject",
          py::arg("out") = "out", py::arg("write") = false, py::arg("threads") = 1);
}
