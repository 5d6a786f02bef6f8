#include "bessel_interlace/report.hpp"

#include <cmath>
#include <cstdio>

namespace bessel::report {

namespace {

void write_string(std::ostream& out, const std::string& s) {
  out << '"';
  for (const char c : s) {
    switch (c) {
      case '"': out << "\\\""; break;
      case '\\': out << "\\\\"; break;
      case '\n': out << "\\n"; break;
      case '\r': out << "\\r"; break;
      case '\t': out << "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out << buf;
        } else {
          out << c;
        }
    }
  }
  out << '"';
}

void newline(std::ostream& out, int indent) {
  out << '\n';
  for (int i = 0; i < indent; ++i) out << "  ";
}

}  // namespace

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json& Json::push(Json value) {
  std::get<Array>(v_).push_back(std::move(value));
  return *this;
}

Json& Json::set(std::string key, Json value) {
  std::get<Object>(v_).emplace_back(std::move(key), std::move(value));
  return *this;
}

void Json::write(std::ostream& out) const {
  write(out, 0);
  out << '\n';
}

void Json::write(std::ostream& out, int indent) const {
  if (std::holds_alternative<std::nullptr_t>(v_)) {
    out << "null";
  } else if (const bool* b = std::get_if<bool>(&v_)) {
    out << (*b ? "true" : "false");
  } else if (const auto* i = std::get_if<std::int64_t>(&v_)) {
    out << *i;
  } else if (const double* d = std::get_if<double>(&v_)) {
    // JSON has no representation for non-finite numbers.
    if (std::isfinite(*d)) {
      out << number(*d);
    } else {
      out << "null";
    }
  } else if (const auto* s = std::get_if<std::string>(&v_)) {
    write_string(out, *s);
  } else if (const auto* a = std::get_if<Array>(&v_)) {
    if (a->empty()) {
      out << "[]";
      return;
    }
    out << '[';
    for (std::size_t k = 0; k < a->size(); ++k) {
      if (k) out << ',';
      newline(out, indent + 1);
      (*a)[k].write(out, indent + 1);
    }
    newline(out, indent);
    out << ']';
  } else if (const auto* o = std::get_if<Object>(&v_)) {
    if (o->empty()) {
      out << "{}";
      return;
    }
    out << '{';
    for (std::size_t k = 0; k < o->size(); ++k) {
      if (k) out << ',';
      newline(out, indent + 1);
      write_string(out, (*o)[k].first);
      out << ": ";
      (*o)[k].second.write(out, indent + 1);
    }
    newline(out, indent);
    out << '}';
  }
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) out << ',';
    const std::string& f = fields[k];
    if (f.find_first_of(",\"\n\r") == std::string::npos) {
      out << f;
      continue;
    }
    out << '"';
    for (const char c : f) {
      if (c == '"') out << '"';
      out << c;
    }
    out << '"';
  }
  out << '\n';
}

}  // namespace bessel::report
