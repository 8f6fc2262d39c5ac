#include "orliczsm/io.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <set>

#include <fmt/format.h>
#include <json.hpp>

namespace orliczsm {

namespace {

using nlohmann::json;

std::string quote(const std::string& s) { return json(s).dump(); }

double number_field(const json& obj, const char* key, std::size_t line) {
  const auto& v = obj.at(key);
  if (!v.is_number()) throw InputError(fmt::format("line {}: \"{}\" must be a number", line, key));
  return v.get<double>();
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) return "0.0";
  std::string s = fmt::format("{:.17g}", x);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

CoeffSeq read_coefficients(std::istream& in) {
  std::vector<Coefficient> entries;
  std::set<int> seen;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError(fmt::format("line {}: invalid JSON ({})", line, e.what()));
    }
    if (!obj.is_object()) throw InputError(fmt::format("line {}: expected a JSON object", line));
    for (const auto& item : obj.items()) {
      if (item.key() != "k" && item.key() != "re" && item.key() != "im") {
        throw InputError(fmt::format("line {}: unknown key \"{}\"", line, item.key()));
      }
    }
    if (!obj.contains("k") || !obj.contains("re")) {
      throw InputError(fmt::format("line {}: \"k\" and \"re\" are required", line));
    }
    const auto& kv = obj.at("k");
    if (!kv.is_number_integer()) throw InputError(fmt::format("line {}: \"k\" must be an integer", line));
    const auto k64 = kv.get<std::int64_t>();
    if (k64 < std::numeric_limits<int>::min() || k64 > std::numeric_limits<int>::max()) {
      throw InputError(fmt::format("line {}: frequency out of range", line));
    }
    const int k = static_cast<int>(k64);
    const double re = number_field(obj, "re", line);
    const double im = obj.contains("im") ? number_field(obj, "im", line) : 0.0;
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw InputError(fmt::format("line {}: non-finite coefficient", line));
    }
    if (!seen.insert(k).second) throw InputError(fmt::format("line {}: duplicate frequency {}", line, k));
    entries.push_back({k, {re, im}});
  }
  return CoeffSeq::from_entries(std::move(entries));
}

void write_coefficients(std::ostream& out, const CoeffSeq& f) {
  for (const auto& e : f.entries()) {
    out << "{\"k\":" << e.k << ",\"re\":" << format_double(e.value.real())
        << ",\"im\":" << format_double(e.value.imag()) << "}\n";
  }
}

OrliczFunction parse_orlicz(const std::string& text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(fmt::format("orlicz spec: invalid JSON ({})", e.what()));
  }
  if (!obj.is_object()) throw InputError("orlicz spec: expected a JSON object");
  if (!obj.contains("family") || !obj.at("family").is_string()) {
    throw InputError("orlicz spec: \"family\" string is required");
  }
  const auto family = obj.at("family").get<std::string>();
  const bool takes_p = family == "power" || family == "power_log";
  if (!takes_p && family != "exp_minus_one") {
    throw InputError(fmt::format("orlicz spec: unknown family \"{}\"", family));
  }
  for (const auto& item : obj.items()) {
    if (item.key() == "family") continue;
    if (item.key() == "p" && takes_p) continue;
    throw InputError(fmt::format("orlicz spec: unknown key \"{}\" for family {}", item.key(), family));
  }
  if (!takes_p) return OrliczFunction::exp_minus_one();
  if (!obj.contains("p") || !obj.at("p").is_number()) {
    throw InputError(fmt::format("orlicz spec: family {} needs numeric \"p\"", family));
  }
  const double p = obj.at("p").get<double>();
  try {
    return family == "power" ? OrliczFunction::power(p) : OrliczFunction::power_log(p);
  } catch (const std::invalid_argument& e) {
    throw InputError(fmt::format("orlicz spec: {}", e.what()));
  }
}

std::string orlicz_to_json(const OrliczFunction& phi) {
  switch (phi.family()) {
    case OrliczFamily::power:
      return fmt::format("{{\"family\":\"power\",\"p\":{}}}", format_double(phi.exponent()));
    case OrliczFamily::exp_minus_one:
      return "{\"family\":\"exp_minus_one\"}";
    case OrliczFamily::power_log:
      return fmt::format("{{\"family\":\"power_log\",\"p\":{}}}", format_double(phi.exponent()));
  }
  return "{}";
}

void write_report_json(std::ostream& out, const Report& r) {
  out << "{\n  \"name\": " << quote(r.name) << ",\n  \"params\": {";
  for (std::size_t i = 0; i < r.params.size(); ++i) {
    out << (i ? ", " : "") << quote(r.params[i].first) << ": " << quote(r.params[i].second);
  }
  out << "},\n  \"tolerance\": " << format_double(r.tolerance) << ",\n  \"samples\": [";
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    const auto& s = r.samples[i];
    out << (i ? ",\n    " : "\n    ") << "{\"input\": " << quote(s.input) << ", \"lhs\": " << format_double(s.lhs)
        << ", \"rhs\": " << format_double(s.rhs) << ", \"ratio\": " << format_double(s.ratio) << "}";
  }
  out << (r.samples.empty() ? "]" : "\n  ]");
  out << ",\n  \"empirical_constant\": " << format_double(r.empirical_constant)
      << ",\n  \"passed\": " << (r.passed ? "true" : "false") << ",\n  \"summary\": {";
  for (std::size_t i = 0; i < r.summary.size(); ++i) {
    out << (i ? ", " : "") << quote(r.summary[i].first) << ": " << format_double(r.summary[i].second);
  }
  out << "},\n  \"notes\": [";
  for (std::size_t i = 0; i < r.notes.size(); ++i) out << (i ? ", " : "") << quote(r.notes[i]);
  out << "]\n}\n";
}

void write_report_csv(std::ostream& out, const Report& r) {
  auto cell = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  out << "# name," << cell(r.name) << "\n";
  for (const auto& [k, v] : r.params) out << "# " << cell(k) << "," << cell(v) << "\n";
  out << "# tolerance," << format_double(r.tolerance) << "\n";
  out << "# empirical_constant," << format_double(r.empirical_constant) << "\n";
  out << "# passed," << (r.passed ? "true" : "false") << "\n";
  for (const auto& [k, v] : r.summary) out << "# " << cell(k) << "," << format_double(v) << "\n";
  out << "input,lhs,rhs,ratio\n";
  for (const auto& s : r.samples) {
    out << cell(s.input) << "," << format_double(s.lhs) << "," << format_double(s.rhs) << ","
        << format_double(s.ratio) << "\n";
  }
}

}  // namespace orliczsm
