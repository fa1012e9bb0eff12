#ifndef ASADMM_IO_HPP_
#define ASADMM_IO_HPP_

#include <filesystem>
#include <functional>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "asadmm/config.hpp"
#include "asadmm/metrics.hpp"
#include "asadmm/models.hpp"

namespace asadmm {

/// Malformed input file. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LibsvmOptions {
  /// Map labels {0, 1} to {-1, +1}. Other labels must already be +-1.
  bool normalize_01_labels = true;
  /// Columns in the result; 0 means the largest index seen.
  std::size_t num_features = 0;
};

struct LibsvmStats {
  std::size_t samples = 0;
  /// Samples whose 0/1 label was rewritten to -1/+1.
  std::size_t relabeled = 0;
};

/// Reads "label idx:val idx:val ..." lines (1-based indices, strictly
/// increasing within a line). Blank lines and '#' comments are skipped.
Dataset parse_libsvm(std::istream& in, const LibsvmOptions& opts = {},
                     const std::string& source = "<stream>",
                     LibsvmStats* stats = nullptr);
Dataset parse_libsvm(const std::filesystem::path& path,
                     const LibsvmOptions& opts = {},
                     LibsvmStats* stats = nullptr);

/// Writes labels as +1/-1 and values with round-trip precision.
void write_libsvm(std::ostream& out, const Dataset& ds);
void write_libsvm(const std::filesystem::path& path, const Dataset& ds);

inline constexpr const char* kMetricsHeader =
    "k,obj_err,equ_err,opt_err,grad_components,wall_seconds,ergodic_flag";

/// Header plus one row per record; reals use 17 significant digits.
void write_metrics_csv(std::ostream& out,
                       const std::vector<MetricsRecord>& trace);
void write_metrics_csv(const std::filesystem::path& path,
                       const std::vector<MetricsRecord>& trace);
std::vector<MetricsRecord> read_metrics_csv(
    std::istream& in, const std::string& source = "<stream>");
std::vector<MetricsRecord> read_metrics_csv(const std::filesystem::path& path);

/// One configuration key: its name, help text, a setter from text and the
/// current value as text (nullopt for an unset optional).
struct ConfigField {
  std::string key;
  std::string help;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::optional<std::string>(const RunConfig&)> get;
};

/// All keys accepted by load_config and the command line, in file order.
const std::vector<ConfigField>& config_fields();

/// Applies `key = value`; throws ConfigError naming the key when the key is
/// unknown or the value does not parse. Lists are comma separated.
void set_config_value(RunConfig& cfg, const std::string& key,
                      const std::string& value);

/// YAML mapping of config keys. Unknown keys are rejected, missing keys keep
/// their defaults and the result is validated. An empty document yields the
/// default profile.
RunConfig parse_config(const std::string& yaml_text,
                       const std::string& source = "<string>");
RunConfig load_config(const std::filesystem::path& path);

/// YAML text that parse_config maps back to an equal configuration.
std::string serialize_config(const RunConfig& cfg);

}  // namespace asadmm

#endif  // ASADMM_IO_HPP_
