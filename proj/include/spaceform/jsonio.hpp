#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spaceform {

// Minimal JSON writer with deterministic output: insertion-ordered object
// keys and doubles printed with 17 significant digits.
class Json {
 public:
  Json() = default;
  Json(bool b) : kind_(Kind::Bool), bool_(b) {}
  Json(double d) : kind_(Kind::Double), num_(d) {}
  Json(int i) : kind_(Kind::Int), int_(i) {}
  Json(long long i) : kind_(Kind::Int), int_(i) {}
  Json(unsigned long long i) : kind_(Kind::Int), int_(static_cast<long long>(i)) {}
  Json(const char* s) : kind_(Kind::String), str_(s) {}
  Json(std::string s) : kind_(Kind::String), str_(std::move(s)) {}

  static Json object() {
    Json j;
    j.kind_ = Kind::Object;
    return j;
  }
  static Json array() {
    Json j;
    j.kind_ = Kind::Array;
    return j;
  }

  Json& operator[](const std::string& key) {
    if (kind_ == Kind::Null) kind_ = Kind::Object;
    if (kind_ != Kind::Object) throw std::logic_error("Json: not an object");
    for (auto& [k, v] : members_)
      if (k == key) return v;
    members_.emplace_back(key, Json());
    return members_.back().second;
  }

  void push_back(Json v) {
    if (kind_ == Kind::Null) kind_ = Kind::Array;
    if (kind_ != Kind::Array) throw std::logic_error("Json: not an array");
    items_.push_back(std::move(v));
  }

  std::string dump(int indent = 2) const {
    std::string out;
    write(out, indent, 0);
    return out;
  }

 private:
  enum class Kind { Null, Bool, Int, Double, String, Array, Object };

  static void escape(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
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
  }

  void write(std::string& out, int indent, int depth) const {
    const std::string pad(static_cast<size_t>(indent) * (depth + 1), ' ');
    const std::string close_pad(static_cast<size_t>(indent) * depth, ' ');
    switch (kind_) {
      case Kind::Null: out += "null"; break;
      case Kind::Bool: out += bool_ ? "true" : "false"; break;
      case Kind::Int: out += std::to_string(int_); break;
      case Kind::Double: {
        if (num_ != num_ || num_ > 1e308 || num_ < -1e308)
          throw std::domain_error("Json: non-finite number");
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", num_);
        out += buf;
        break;
      }
      case Kind::String: escape(out, str_); break;
      case Kind::Array: {
        if (items_.empty()) {
          out += "[]";
          break;
        }
        out += "[\n";
        for (size_t i = 0; i < items_.size(); ++i) {
          out += pad;
          items_[i].write(out, indent, depth + 1);
          if (i + 1 < items_.size()) out += ',';
          out += '\n';
        }
        out += close_pad + "]";
        break;
      }
      case Kind::Object: {
        if (members_.empty()) {
          out += "{}";
          break;
        }
        out += "{\n";
        for (size_t i = 0; i < members_.size(); ++i) {
          out += pad;
          escape(out, members_[i].first);
          out += ": ";
          members_[i].second.write(out, indent, depth + 1);
          if (i + 1 < members_.size()) out += ',';
          out += '\n';
        }
        out += close_pad + "}";
        break;
      }
    }
  }

  Kind kind_ = Kind::Null;
  bool bool_ = false;
  long long int_ = 0;
  double num_ = 0;
  std::string str_;
  std::vector<Json> items_;
  std::vector<std::pair<std::string, Json>> members_;
};

}  // namespace spaceform
