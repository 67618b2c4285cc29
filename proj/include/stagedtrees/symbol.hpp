#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace stagedtrees {

/// Returns true if `name` is a letter followed by letters, digits or underscores.
bool is_identifier(std::string_view name) noexcept;

/// A named indeterminate (edge label). Names are interned in a process-wide
/// symbol table, so copies are a pointer and equality is pointer equality.
/// Ordering is byte-wise lexicographic on the name.
class Indeterminate {
 public:
  /// Interns `name`. Throws SyntaxError if it is not an identifier.
  explicit Indeterminate(std::string_view name);

  const std::string& name() const noexcept { return *name_; }

  /// Interning order; stable for the lifetime of the process.
  std::uint32_t id() const noexcept;

  friend bool operator==(const Indeterminate& a, const Indeterminate& b) noexcept {
    return a.name_ == b.name_;
  }

  friend std::strong_ordering operator<=>(const Indeterminate& a,
                                          const Indeterminate& b) noexcept {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    const int c = a.name_->compare(*b.name_);
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  const std::string* name_;
};

/// Returns true if `name` has already been interned.
bool is_interned(std::string_view name);

}  // namespace stagedtrees

template <>
struct std::hash<stagedtrees::Indeterminate> {
  std::size_t operator()(const stagedtrees::Indeterminate& x) const noexcept {
    return std::hash<const void*>{}(&x.name());
  }
};
