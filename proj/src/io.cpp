#include "osht/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "osht/errors.hpp"
#include "osht/sampling.hpp"

namespace osht {
namespace {

std::string format_int(long long value) { return std::to_string(value); }

[[noreturn]] void fail(const std::string& path, int line,
                       const std::string& message) {
  throw FileFormatError(path + ":" + std::to_string(line) + ": " + message);
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw FileFormatError(path + ": " + message);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) fail(path, "read failed");
  return buffer.str();
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

long long parse_int(const std::string& field, const std::string& path,
                    int line) {
  if (field.empty()) fail(path, line, "empty integer field");
  char* end = nullptr;
  const long long value = std::strtoll(field.c_str(), &end, 10);
  if (end != field.c_str() + field.size()) {
    fail(path, line, "malformed integer \"" + field + "\"");
  }
  return value;
}

Real parse_float(const std::string& field, const std::string& path, int line) {
  if (field.empty()) fail(path, line, "empty numeric field");
  char* end = nullptr;
  const Real value = std::strtod(field.c_str(), &end);
  if (end != field.c_str() + field.size()) {
    fail(path, line, "malformed number \"" + field + "\"");
  }
  return value;
}

// Splits into lines; accepts a trailing newline on the last line.
std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string::size_type start = 0;
  while (start < text.size()) {
    auto eol = text.find('\n', start);
    if (eol == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    std::string line = text.substr(start, eol - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = eol + 1;
  }
  return lines;
}

}  // namespace

std::string format_real(Real value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.16e", value);
  return buffer;
}

std::string render_scheme(const SamplingScheme& scheme) {
  std::string out;
  out += "{\n";
  out += "  \"bandlimit\": " + format_int(scheme.bandlimit) + ",\n";
  out += "  \"method\": \"" + std::string(placement_name(scheme.method)) +
         "\",\n";
  out += "  \"theta\": [\n";
  for (int k = 0; k < scheme.bandlimit; ++k) {
    out += "    " + format_real(scheme.theta[k]);
    out += (k + 1 < scheme.bandlimit) ? ",\n" : "\n";
  }
  out += "  ]\n";
  out += "}\n";
  return out;
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out.good()) throw Error("write failed: " + path);
}

void write_scheme(const std::string& path, const SamplingScheme& scheme) {
  write_text(path, render_scheme(scheme));
}

SamplingScheme read_scheme(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    fail(path, std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) fail(path, "expected a JSON object");
  if (!doc.contains("bandlimit") || !doc["bandlimit"].is_number_integer()) {
    fail(path, "missing or non-integer \"bandlimit\"");
  }
  if (!doc.contains("method") || !doc["method"].is_string()) {
    fail(path, "missing or non-string \"method\"");
  }
  if (!doc.contains("theta") || !doc["theta"].is_array()) {
    fail(path, "missing or non-array \"theta\"");
  }

  SamplingScheme scheme;
  scheme.bandlimit = doc["bandlimit"].get<int>();
  if (scheme.bandlimit < 1) fail(path, "\"bandlimit\" must be >= 1");
  try {
    scheme.method = placement_from_name(doc["method"].get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
  const auto& theta = doc["theta"];
  if (static_cast<int>(theta.size()) != scheme.bandlimit) {
    fail(path, "\"theta\" holds " + format_int(theta.size()) +
                   " angles, expected " + format_int(scheme.bandlimit));
  }
  scheme.theta.resize(scheme.bandlimit);
  for (int k = 0; k < scheme.bandlimit; ++k) {
    if (!theta[k].is_number()) fail(path, "\"theta\" entries must be numbers");
    scheme.theta[k] = theta[k].get<Real>();
  }
  try {
    validate_scheme(scheme);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return scheme;
}

std::string render_coeffs(const HarmonicCoeffs& coeffs) {
  std::string out = "l,m,re,im\n";
  for (int l = 0; l < coeffs.bandlimit; ++l) {
    for (int m = -l; m <= l; ++m) {
      const Complex value = coeffs.values[coeff_index(l, m)];
      out += format_int(l) + "," + format_int(m) + "," +
             format_real(value.real()) + "," + format_real(value.imag()) +
             "\n";
    }
  }
  return out;
}

void write_coeffs(const std::string& path, const HarmonicCoeffs& coeffs) {
  write_text(path, render_coeffs(coeffs));
}

HarmonicCoeffs read_coeffs(const std::string& path) {
  const std::vector<std::string> lines = split_lines(read_file(path));
  if (lines.empty() || lines[0] != "l,m,re,im") {
    fail(path, 1, "expected header \"l,m,re,im\"");
  }

  std::vector<Complex> values;
  int l = 0, m = 0;  // next expected coefficient
  for (int row = 1; row < static_cast<int>(lines.size()); ++row) {
    const int line = row + 1;
    const std::vector<std::string> fields = split_fields(lines[row]);
    if (fields.size() != 4) {
      fail(path, line, "expected 4 fields, got " + format_int(fields.size()));
    }
    const long long fl = parse_int(fields[0], path, line);
    const long long fm = parse_int(fields[1], path, line);
    if (fl != l || fm != m) {
      fail(path, line, "expected coefficient (l=" + format_int(l) +
                           ", m=" + format_int(m) + "), got (l=" +
                           format_int(fl) + ", m=" + format_int(fm) + ")");
    }
    const Real re = parse_float(fields[2], path, line);
    const Real im = parse_float(fields[3], path, line);
    if (!std::isfinite(re) || !std::isfinite(im)) {
      fail(path, line, "coefficient entries must be finite");
    }
    values.emplace_back(re, im);
    if (m == l) {
      ++l;
      m = -l;
    } else {
      ++m;
    }
  }
  if (values.empty()) fail(path, "no coefficient rows");
  if (m != -l) {
    fail(path, "file ends mid-degree: expected coefficients through (l=" +
                   format_int(l) + ", m=" + format_int(l) + ")");
  }

  HarmonicCoeffs coeffs;
  coeffs.bandlimit = l;
  coeffs.values.resize(static_cast<Eigen::Index>(values.size()));
  for (Eigen::Index i = 0; i < coeffs.values.size(); ++i) {
    coeffs.values[i] = values[i];
  }
  return coeffs;
}

std::string render_signal(const SpatialSignal& signal) {
  std::string out = "ring,j,re,im\n";
  for (int k = 0; k < signal.bandlimit; ++k) {
    for (int j = 0; j < ring_size(k); ++j) {
      const Complex value = signal.samples[ring_offset(k) + j];
      out += format_int(k) + "," + format_int(j) + "," +
             format_real(value.real()) + "," + format_real(value.imag()) +
             "\n";
    }
  }
  return out;
}

void write_signal(const std::string& path, const SpatialSignal& signal) {
  write_text(path, render_signal(signal));
}

SpatialSignal read_signal(const std::string& path) {
  const std::vector<std::string> lines = split_lines(read_file(path));
  if (lines.empty() || lines[0] != "ring,j,re,im") {
    fail(path, 1, "expected header \"ring,j,re,im\"");
  }

  std::vector<Complex> samples;
  int ring = 0, j = 0;  // next expected sample
  for (int row = 1; row < static_cast<int>(lines.size()); ++row) {
    const int line = row + 1;
    const std::vector<std::string> fields = split_fields(lines[row]);
    if (fields.size() != 4) {
      fail(path, line, "expected 4 fields, got " + format_int(fields.size()));
    }
    const long long fring = parse_int(fields[0], path, line);
    const long long fj = parse_int(fields[1], path, line);
    if (fring != ring || fj != j) {
      fail(path, line, "expected sample (ring=" + format_int(ring) +
                           ", j=" + format_int(j) + "), got (ring=" +
                           format_int(fring) + ", j=" + format_int(fj) + ")");
    }
    const Real re = parse_float(fields[2], path, line);
    const Real im = parse_float(fields[3], path, line);
    if (!std::isfinite(re) || !std::isfinite(im)) {
      fail(path, line, "sample entries must be finite");
    }
    samples.emplace_back(re, im);
    if (j == ring_size(ring) - 1) {
      ++ring;
      j = 0;
    } else {
      ++j;
    }
  }
  if (samples.empty()) fail(path, "no sample rows");
  if (j != 0) {
    fail(path, "file ends mid-ring: ring " + format_int(ring) + " needs " +
                   format_int(ring_size(ring)) + " samples");
  }

  SpatialSignal signal;
  signal.bandlimit = ring;
  signal.samples.resize(static_cast<Eigen::Index>(samples.size()));
  for (Eigen::Index i = 0; i < signal.samples.size(); ++i) {
    signal.samples[i] = samples[i];
  }
  return signal;
}

std::string render_cond_csv(const ConditioningData& data) {
  std::string out = "L,method,m,kappa\n";
  for (const ConditioningData::Row& row : data.rows) {
    out += format_int(row.bandlimit) + "," + placement_name(row.method) +
           "," + format_int(row.order) + "," + format_real(row.kappa) + "\n";
  }
  return out;
}

std::string render_cond_max_csv(const ConditioningData& data) {
  std::string out = "L,method,kappa_max\n";
  for (const ConditioningData::MaxRow& row : data.max_rows) {
    out += format_int(row.bandlimit) + "," + placement_name(row.method) +
           "," + format_real(row.kappa_max) + "\n";
  }
  return out;
}

std::string render_accuracy_csv(const std::vector<BenchRecord>& records) {
  std::string out = "L,method,trial,E_max,passes,E_max_final\n";
  for (const BenchRecord& record : records) {
    const Real e_final =
        record.e_max_k.empty() ? record.e_max : record.e_max_k.back();
    out += format_int(record.bandlimit) + "," +
           placement_name(record.method) + "," + format_int(record.trial) +
           "," + format_real(record.e_max) + "," + format_int(record.passes) +
           "," + format_real(e_final) + "\n";
  }
  return out;
}

std::string render_multipass_csv(const std::vector<BenchRecord>& records) {
  std::string out = "L,method,trial,pass,E_max_k,residual_max\n";
  for (const BenchRecord& record : records) {
    for (std::size_t p = 0; p < record.e_max_k.size(); ++p) {
      out += format_int(record.bandlimit) + "," +
             placement_name(record.method) + "," + format_int(record.trial) +
             "," + format_int(static_cast<long long>(p) + 1) + "," +
             format_real(record.e_max_k[p]) + "," +
             format_real(record.residual_history[p]) + "\n";
    }
  }
  return out;
}

}  // namespace osht
