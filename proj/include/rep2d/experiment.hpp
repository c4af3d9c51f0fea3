#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rep2d {

/// One measurement of one family instance. Exact values carry num/den;
/// value is the decimal rendering.
struct ExperimentRow {
  std::string family;
  std::size_t param = 0;
  std::uint64_t cells = 0;
  std::string measure;
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value = 0.0;
  std::string notes;
};

inline constexpr std::string_view kExperimentCsvHeader =
    "family,param,N,measure,value_num,value_den,value,notes";

/// Names accepted by run_experiment, in a fixed order.
const std::vector<std::string>& experiment_names();

/// Default parameter list of an experiment and the largest parameter it
/// accepts.
std::vector<std::size_t> default_params(std::string_view name);
std::size_t param_cap(std::string_view name);

/// Rows in parameter order. Throws Error(invalid_argument) for an unknown
/// name or a parameter outside the experiment's range.
std::vector<ExperimentRow> run_experiment(std::string_view name,
                                          const std::vector<std::size_t>& params);

/// CSV with the header line; fields are quoted when needed.
std::string to_csv(const std::vector<ExperimentRow>& rows);
std::string csv_escape(std::string_view field);

/// "3,4,8" or "5..32" or a mix ("3,5..7"). Throws Error(parse_error).
std::vector<std::size_t> parse_param_list(std::string_view text);

}  // namespace rep2d
