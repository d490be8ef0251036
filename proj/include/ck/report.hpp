#pragma once

#include <string>
#include <vector>

namespace ck {

enum class CheckStatus { Pass, Fail, Incomplete };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "incomplete";
  }
}

struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::Incomplete;
  std::string detail;
};

// A bundle of named sub-checks. Missing data is reported as Incomplete and
// never folded into a pass.
struct CheckReport {
  std::string subject;
  std::vector<CheckItem> items;

  void add(std::string name, bool ok, std::string detail = "") {
    items.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail,
                     std::move(detail)});
  }
  void add_incomplete(std::string name, std::string detail = "") {
    items.push_back({std::move(name), CheckStatus::Incomplete, std::move(detail)});
  }

  CheckStatus overall() const {
    bool incomplete = false;
    for (const CheckItem& it : items) {
      if (it.status == CheckStatus::Fail) return CheckStatus::Fail;
      if (it.status == CheckStatus::Incomplete) incomplete = true;
    }
    return incomplete ? CheckStatus::Incomplete : CheckStatus::Pass;
  }
  bool passed() const { return overall() == CheckStatus::Pass; }
  bool failed() const { return overall() == CheckStatus::Fail; }
};

}  // namespace ck
