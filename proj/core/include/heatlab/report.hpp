#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heatlab {

inline constexpr std::string_view kArtifactVersion = "0.3.0";
inline constexpr int kReportSchemaVersion = 1;

// Shortest decimal text that parses back to the same double. Non-finite
// values come out as "inf", "-inf", "nan".
std::string format_double(double v);

// Fixed-precision decimal text, used for plot coordinates.
std::string format_fixed(double v, int precision);

// Ordered key=value configuration. Serialization writes one "key=value"
// line per entry; parsing accepts that plus blank lines and '#' comments,
// so parse(serialize(c)) reproduces c exactly.
class Config {
public:
  void set(std::string key, std::string value);
  void set(const std::string& key, double v);
  bool has(const std::string& key) const;
  // nullptr when the key is absent
  const std::string* find(const std::string& key) const;
  std::string get_or(const std::string& key, std::string fallback) const;
  // throws InvalidQuery when present but not a number
  double number_or(const std::string& key, double fallback) const;
  // comma-separated numbers; missing key gives the fallback
  std::vector<double> numbers_or(const std::string& key,
                                 std::vector<double> fallback) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

  std::string serialize() const;
  static Config parse(const std::string& text);
  static Config load(const std::filesystem::path& file);

private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::uint64_t fnv1a64(std::string_view bytes);

// 16 hex digits of the hash of the serialized config.
std::string config_hash(const Config& cfg);

// JSON string literal with the required escapes, including the quotes.
std::string json_quote(std::string_view s);

// Collects the files of one experiment run and finishes with a manifest
// (experiment id, timestamp, config hash, artifact version, file list).
// The id is the command name plus a config-hash prefix, so a fixed config
// always lands in the same place; the timestamp is the only field of the
// run that depends on the clock.
class RunDirectory {
public:
  RunDirectory(std::filesystem::path dir, std::string command, Config config);
  const std::filesystem::path& path() const { return dir_; }
  const Config& config() const { return config_; }
  const std::string& id() const { return id_; }
  std::filesystem::path write_text(const std::string& filename,
                                   const std::string& body);
  const std::vector<std::string>& files() const { return files_; }
  // Writes manifest.json (which does not list itself).
  std::filesystem::path finalize() const;

private:
  std::filesystem::path dir_;
  std::string command_;
  Config config_;
  std::string id_;
  std::vector<std::string> files_;
};

// CSV with '\n' line endings; numeric cells use format_double.
class CsvBuilder {
public:
  explicit CsvBuilder(std::vector<std::string> columns);
  void row(const std::vector<std::string>& cells);
  void row(const std::vector<double>& cells);
  const std::string& str() const { return body_; }

private:
  std::size_t width_;
  std::string body_;
};

// Line chart rendered to standalone SVG with labeled axes. Output bytes
// depend only on the inputs. Axes are linear; callers plot logs by
// transforming values and labeling accordingly.
class LinePlot {
public:
  LinePlot(std::string title, std::string x_label, std::string y_label);
  void add_series(std::string name, std::vector<double> xs,
                  std::vector<double> ys, bool dashed = false);
  std::string render() const;

private:
  struct Series {
    std::string name;
    std::vector<double> xs, ys;
    bool dashed;
  };
  std::string title_, x_label_, y_label_;
  std::vector<Series> series_;
};

// Output directory resolution: explicit value, else HEATLAB_OUT, else
// "heatlab-out" under the current directory.
std::filesystem::path resolve_out_dir(const std::string& explicit_dir);

}  // namespace heatlab
