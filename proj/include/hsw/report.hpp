#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace hsw {

/// One checked statement. `lhs`/`rhs` hold both sides in the polynomial grammar.
struct CheckItem {
  std::string id;
  bool passed = false;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

struct Report {
  std::string theorem;
  std::vector<CheckItem> items;

  bool passed() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
  }
  std::optional<CheckItem> first_failure() const {
    auto it = std::find_if(items.begin(), items.end(), [](const CheckItem& c) { return !c.passed; });
    if (it == items.end()) return std::nullopt;
    return *it;
  }
};

}  // namespace hsw
