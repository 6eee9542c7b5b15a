#ifndef ONTEVAL_IRI_HPP
#define ONTEVAL_IRI_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace onteval {

/// Thrown when constructing a domain object that violates a model invariant.
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

/// An absolute IRI. Identifies classes, properties and individuals.
class Iri {
 public:
  Iri() = default;

  /// Validates that `value` is non-empty and carries a scheme.
  explicit Iri(std::string value) : value_(std::move(value)) {
    if (!is_absolute(value_))
      throw ModelError("not an absolute IRI: '" + value_ + "'");
  }

  const std::string& value() const { return value_; }
  bool empty() const { return value_.empty(); }

  /// Fragment or last path segment; used as a display fallback.
  std::string_view local_name() const {
    std::string_view v = value_;
    auto hash = v.rfind('#');
    if (hash != std::string_view::npos && hash + 1 < v.size())
      return v.substr(hash + 1);
    auto slash = v.rfind('/');
    if (slash != std::string_view::npos && slash + 1 < v.size())
      return v.substr(slash + 1);
    auto colon = v.rfind(':');
    if (colon != std::string_view::npos && colon + 1 < v.size())
      return v.substr(colon + 1);
    return v;
  }

  /// True iff `value` has the shape `scheme ':' ...` with a legal scheme.
  static bool is_absolute(std::string_view value) {
    if (value.empty()) return false;
    char c = value[0];
    if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'))) return false;
    for (size_t i = 1; i < value.size(); ++i) {
      char d = value[i];
      if (d == ':') return i + 1 <= value.size();
      bool scheme_char = (d >= 'a' && d <= 'z') || (d >= 'A' && d <= 'Z') ||
                         (d >= '0' && d <= '9') || d == '+' || d == '-' ||
                         d == '.';
      if (!scheme_char) return false;
    }
    return false;
  }

  auto operator<=>(const Iri&) const = default;

 private:
  std::string value_;
};

}  // namespace onteval

#endif
