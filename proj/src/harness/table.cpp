#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include "smoothbound/errors.hpp"
#include "smoothbound/harness.hpp"

namespace smoothbound {
namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_cell(const nlohmann::ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return csv_escape(v.get<std::string>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return v.dump();
  if (v.is_number()) return format_number(v.get<double>());
  return csv_escape(v.dump());
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  // Integral values print without an exponent.
  const auto fmt = std::abs(x) < 1e15 && x == std::floor(x) ? std::chars_format::fixed
                                                            : std::chars_format::general;
  auto [end, ec] = x == std::floor(x) && std::abs(x) < 1e15
                       ? std::to_chars(buf.data(), buf.data() + buf.size(), x, fmt)
                       : std::to_chars(buf.data(), buf.data() + buf.size(), x);
  (void)ec;
  return std::string(buf.data(), end);
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add(nlohmann::ordered_json row) {
  nlohmann::ordered_json ordered = nlohmann::ordered_json::object();
  for (const auto& [k, v] : row.items()) {
    if (std::find(columns_.begin(), columns_.end(), k) == columns_.end()) {
      throw InvalidArgument("unknown report column " + k);
    }
  }
  for (const auto& c : columns_) ordered[c] = row.contains(c) ? row[c] : nullptr;
  rows_.push_back(std::move(ordered));
}

void Table::write(std::ostream& out, OutputFormat format) const {
  if (format == OutputFormat::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
      nlohmann::ordered_json clean = row;
      // JSON has no inf/nan; emit them as strings.
      for (auto& [k, v] : clean.items()) {
        if (v.is_number_float() && !std::isfinite(v.get<double>())) v = format_number(v.get<double>());
      }
      arr.push_back(std::move(clean));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
  out << '\n';
  for (const auto& row : rows_) {
    std::size_t i = 0;
    for (const auto& c : columns_) out << (i++ ? "," : "") << csv_cell(row.at(c));
    out << '\n';
  }
}

}  // namespace smoothbound
