#include "stagedtrees/symbol.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>

#include "stagedtrees/errors.hpp"

namespace stagedtrees {
namespace {

// Names live in a deque so that pointers handed out stay valid while the
// table grows.
class SymbolTable {
 public:
  static SymbolTable& global() {
    static SymbolTable table;
    return table;
  }

  const std::string* intern(std::string_view name) {
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(name); it != index_.end()) return it->second.first;
    const std::string& stored = names_.emplace_back(name);
    const auto id = static_cast<std::uint32_t>(names_.size() - 1);
    index_.emplace(std::string_view(stored), std::pair{&stored, id});
    return &stored;
  }

  std::uint32_t id_of(const std::string* name) {
    std::lock_guard lock(mutex_);
    return index_.at(std::string_view(*name)).second;
  }

  bool contains(std::string_view name) {
    std::lock_guard lock(mutex_);
    return index_.count(name) != 0;
  }

 private:
  std::mutex mutex_;
  std::deque<std::string> names_;
  std::unordered_map<std::string_view, std::pair<const std::string*, std::uint32_t>> index_;
};

}  // namespace

bool is_identifier(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_') return false;
  }
  return true;
}

Indeterminate::Indeterminate(std::string_view name) {
  if (!is_identifier(name)) {
    throw SyntaxError(0, "invalid indeterminate name '" + std::string(name) + "'");
  }
  name_ = SymbolTable::global().intern(name);
}

std::uint32_t Indeterminate::id() const noexcept { return SymbolTable::global().id_of(name_); }

bool is_interned(std::string_view name) { return SymbolTable::global().contains(name); }

}  // namespace stagedtrees
