#pragma once

// Minimal ordered JSON value and CSV helpers for command output. Numbers are
// written with 17 significant digits in both formats.

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bessel::report {

/// printf("%.17g"); "inf", "-inf", "nan" for non-finite values.
std::string number(double v);

class Json {
 public:
  using Array = std::vector<Json>;
  using Object = std::vector<std::pair<std::string, Json>>;

  Json() = default;
  Json(std::nullptr_t) {}
  Json(bool b) : v_(b) {}
  Json(int i) : v_(static_cast<std::int64_t>(i)) {}
  Json(std::int64_t i) : v_(i) {}
  Json(std::size_t i) : v_(static_cast<std::int64_t>(i)) {}
  Json(double d) : v_(d) {}
  Json(const char* s) : v_(std::string(s)) {}
  Json(std::string s) : v_(std::move(s)) {}
  Json(std::string_view s) : v_(std::string(s)) {}
  Json(Array a) : v_(std::move(a)) {}
  Json(Object o) : v_(std::move(o)) {}

  static Json array() { return Json(Array{}); }
  static Json object() { return Json(Object{}); }

  /// Appends to an array.
  Json& push(Json value);
  /// Appends a key to an object; keys keep insertion order.
  Json& set(std::string key, Json value);

  /// Pretty printed with two-space indentation and a trailing newline at top level.
  void write(std::ostream& out) const;

 private:
  void write(std::ostream& out, int indent) const;

  std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Array, Object> v_{nullptr};
};

/// Writes one CSV record; fields containing ',', '"' or newlines are quoted.
void csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace bessel::report
