#include "heatlab/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "heatlab/errors.hpp"

namespace heatlab {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int precision) {
  if (!std::isfinite(v)) return format_double(v);
  char buf[64];
  auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed,
                    precision);
  return std::string(buf, res.ptr);
}

namespace {

std::string trim(std::string_view s) {
  const auto from = s.find_first_not_of(" \t\r");
  if (from == std::string_view::npos) return {};
  const auto to = s.find_last_not_of(" \t\r");
  return std::string(s.substr(from, to - from + 1));
}

double parse_number(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const char* end = t.data() + t.size();
  auto res = std::from_chars(t.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw InvalidQuery("config key '" + key + "' is not a number: " + text);
  }
  return v;
}

}  // namespace

void Config::set(std::string key, std::string value) {
  for (auto& e : entries_) {
    if (e.first == key) {
      e.second = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
}

void Config::set(const std::string& key, double v) {
  set(key, format_double(v));
}

bool Config::has(const std::string& key) const {
  return find(key) != nullptr;
}

const std::string* Config::find(const std::string& key) const {
  for (const auto& e : entries_) {
    if (e.first == key) return &e.second;
  }
  return nullptr;
}

std::string Config::get_or(const std::string& key,
                           std::string fallback) const {
  const std::string* v = find(key);
  return v ? *v : std::move(fallback);
}

double Config::number_or(const std::string& key, double fallback) const {
  const std::string* v = find(key);
  return v ? parse_number(key, *v) : fallback;
}

std::vector<double> Config::numbers_or(const std::string& key,
                                       std::vector<double> fallback) const {
  const std::string* v = find(key);
  if (!v) return fallback;
  std::vector<double> out;
  std::string_view rest = *v;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view piece = rest.substr(0, comma);
    out.push_back(parse_number(key, std::string(piece)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (out.empty()) {
    throw InvalidQuery("config key '" + key + "' has an empty list");
  }
  return out;
}

std::string Config::serialize() const {
  std::string out;
  for (const auto& e : entries_) {
    out += e.first;
    out += '=';
    out += e.second;
    out += '\n';
  }
  return out;
}

Config Config::parse(const std::string& text) {
  Config cfg;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view line(
        text.data() + pos,
        (nl == std::string::npos ? text.size() : nl) - pos);
    pos = (nl == std::string::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << "config line " << line_no << " has no '=': " << stripped;
      throw InvalidQuery(msg.str());
    }
    const std::string key = trim(stripped.substr(0, eq));
    if (key.empty()) {
      std::ostringstream msg;
      msg << "config line " << line_no << " has an empty key";
      throw InvalidQuery(msg.str());
    }
    cfg.set(key, trim(stripped.substr(eq + 1)));
  }
  return cfg;
}

Config Config::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw InvalidQuery("cannot read config file: " + file.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string config_hash(const Config& cfg) {
  const std::uint64_t h = fnv1a64(cfg.serialize());
  char buf[17];
  for (int i = 0; i < 16; ++i) {
    buf[15 - i] = "0123456789abcdef"[(h >> (4 * i)) & 0xF];
  }
  buf[16] = '\0';
  return std::string(buf, 16);
}

std::string json_quote(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

RunDirectory::RunDirectory(std::filesystem::path dir, std::string command,
                           Config config)
    : dir_(std::move(dir)),
      command_(std::move(command)),
      config_(std::move(config)) {
  id_ = command_ + "-" + config_hash(config_).substr(0, 8);
  dir_ /= id_;
  std::filesystem::create_directories(dir_);
}

std::filesystem::path RunDirectory::write_text(const std::string& filename,
                                               const std::string& body) {
  const std::filesystem::path target = dir_ / filename;
  std::ofstream out(target, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw NumericFailure("cannot write output file: " + target.string());
  }
  out << body;
  out.close();
  if (std::find(files_.begin(), files_.end(), filename) == files_.end()) {
    files_.push_back(filename);
  }
  return target;
}

std::filesystem::path RunDirectory::finalize() const {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);

  std::string body;
  body += "{\n";
  body += "  \"schema_version\": ";
  body += std::to_string(kReportSchemaVersion);
  body += ",\n  \"id\": " + json_quote(id_);
  body += ",\n  \"timestamp\": " + json_quote(stamp);
  body += ",\n  \"config_hash\": " + json_quote(config_hash(config_));
  body += ",\n  \"version\": " + json_quote(kArtifactVersion);
  body += ",\n  \"files\": [";
  for (std::size_t i = 0; i < files_.size(); ++i) {
    body += i ? ",\n    " : "\n    ";
    body += json_quote(files_[i]);
  }
  body += files_.empty() ? "]\n" : "\n  ]\n";
  body += "}\n";

  const std::filesystem::path target = dir_ / "manifest.json";
  std::ofstream out(target, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw NumericFailure("cannot write manifest: " + target.string());
  }
  out << body;
  return target;
}

CsvBuilder::CsvBuilder(std::vector<std::string> columns)
    : width_(columns.size()) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) body_ += ',';
    body_ += columns[i];
  }
  body_ += '\n';
}

void CsvBuilder::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) {
    throw InvalidQuery("csv row width disagrees with the header");
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) body_ += ',';
    body_ += cells[i];
  }
  body_ += '\n';
}

void CsvBuilder::row(const std::vector<double>& cells) {
  std::vector<std::string> text(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    text[i] = format_double(cells[i]);
  }
  row(text);
}

LinePlot::LinePlot(std::string title, std::string x_label,
                   std::string y_label)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)) {}

void LinePlot::add_series(std::string name, std::vector<double> xs,
                          std::vector<double> ys, bool dashed) {
  if (xs.size() != ys.size()) {
    throw InvalidQuery("plot series lengths disagree");
  }
  series_.push_back({std::move(name), std::move(xs), std::move(ys), dashed});
}

std::string LinePlot::render() const {
  const double W = 640, H = 420;
  const double ml = 72, mr = 24, mt = 44, mb = 56;
  double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
  bool seen = false;
  for (const Series& s : series_) {
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
      if (!seen) {
        x_lo = x_hi = s.xs[i];
        y_lo = y_hi = s.ys[i];
        seen = true;
      } else {
        x_lo = std::min(x_lo, s.xs[i]);
        x_hi = std::max(x_hi, s.xs[i]);
        y_lo = std::min(y_lo, s.ys[i]);
        y_hi = std::max(y_hi, s.ys[i]);
      }
    }
  }
  if (x_hi <= x_lo) x_hi = x_lo + 1;
  if (y_hi <= y_lo) y_hi = y_lo + 1;
  const double y_pad = 0.05 * (y_hi - y_lo);
  y_lo -= y_pad;
  y_hi += y_pad;

  auto px = [&](double x) {
    return ml + (x - x_lo) / (x_hi - x_lo) * (W - ml - mr);
  };
  auto py = [&](double y) {
    return H - mb - (y - y_lo) / (y_hi - y_lo) * (H - mt - mb);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"420\" viewBox=\"0 0 640 420\">\n";
  svg += "<rect width=\"640\" height=\"420\" fill=\"white\"/>\n";
  svg += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">" +
         title_ + "</text>\n";

  // frame and ticks
  svg += "<rect x=\"" + format_fixed(ml, 1) + "\" y=\"" +
         format_fixed(mt, 1) + "\" width=\"" + format_fixed(W - ml - mr, 1) +
         "\" height=\"" + format_fixed(H - mt - mb, 1) +
         "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  const int ticks = 5;
  for (int i = 0; i < ticks; ++i) {
    const double fx = x_lo + (x_hi - x_lo) * i / (ticks - 1);
    const double fy = y_lo + (y_hi - y_lo) * i / (ticks - 1);
    const std::string xpix = format_fixed(px(fx), 1);
    const std::string ypix = format_fixed(py(fy), 1);
    svg += "<line x1=\"" + xpix + "\" y1=\"" + format_fixed(H - mb, 1) +
           "\" x2=\"" + xpix + "\" y2=\"" + format_fixed(H - mb + 5, 1) +
           "\" stroke=\"#444444\"/>\n";
    svg += "<text x=\"" + xpix + "\" y=\"" + format_fixed(H - mb + 19, 1) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">" +
           format_fixed(fx, 3) + "</text>\n";
    svg += "<line x1=\"" + format_fixed(ml - 5, 1) + "\" y1=\"" + ypix +
           "\" x2=\"" + format_fixed(ml, 1) + "\" y2=\"" + ypix +
           "\" stroke=\"#444444\"/>\n";
    svg += "<text x=\"" + format_fixed(ml - 8, 1) + "\" y=\"" +
           format_fixed(py(fy) + 4, 1) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">" +
           format_fixed(fy, 3) + "</text>\n";
  }
  svg += "<text x=\"" + format_fixed(ml + (W - ml - mr) / 2, 1) + "\" y=\"" +
         format_fixed(H - 12, 1) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">" +
         x_label_ + "</text>\n";
  svg += "<text x=\"18\" y=\"" + format_fixed(mt + (H - mt - mb) / 2, 1) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 18 " +
         format_fixed(mt + (H - mt - mb) / 2, 1) + ")\">" + y_label_ +
         "</text>\n";

  const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  for (std::size_t si = 0; si < series_.size(); ++si) {
    const Series& s = series_[si];
    const char* color = colors[si % 4];
    std::string pts;
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
      if (!pts.empty()) pts += ' ';
      pts += format_fixed(px(s.xs[i]), 2) + "," + format_fixed(py(s.ys[i]), 2);
    }
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.6\"";
    if (s.dashed) svg += " stroke-dasharray=\"7 4\"";
    svg += " points=\"" + pts + "\"/>\n";
    // legend swatch
    const double ly = mt + 16 + 18 * static_cast<double>(si);
    svg += "<line x1=\"" + format_fixed(W - mr - 150, 1) + "\" y1=\"" +
           format_fixed(ly, 1) + "\" x2=\"" + format_fixed(W - mr - 120, 1) +
           "\" y2=\"" + format_fixed(ly, 1) + "\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.6\"";
    if (s.dashed) svg += " stroke-dasharray=\"7 4\"";
    svg += "/>\n";
    svg += "<text x=\"" + format_fixed(W - mr - 114, 1) + "\" y=\"" +
           format_fixed(ly + 4, 1) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + s.name +
           "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::filesystem::path resolve_out_dir(const std::string& explicit_dir) {
  if (!explicit_dir.empty()) return explicit_dir;
  if (const char* env = std::getenv("HEATLAB_OUT"); env && *env) {
    return env;
  }
  return "heatlab-out";
}

}  // namespace heatlab
