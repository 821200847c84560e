#include "odometer/word_actions.hpp"

#include <stdexcept>
#include <string>

namespace odometer {

std::string_view to_string(Policy p) {
  switch (p) {
    case Policy::Cyclic:
      return "cyclic";
    case Policy::TopDown:
      return "topdown";
    case Policy::Subtree:
      return "subtree";
  }
  return "?";
}

Policy parse_policy(std::string_view name) {
  if (name == "cyclic") return Policy::Cyclic;
  if (name == "topdown" || name == "top-down") return Policy::TopDown;
  if (name == "subtree") return Policy::Subtree;
  throw std::invalid_argument("unknown policy '" + std::string(name) + "'");
}

FiniteWord step(const FiniteWord& w, Policy policy) {
  const Letter k = w.floor();
  const auto& a = w.letters();
  const auto run = static_cast<std::size_t>(a[0] - k);

  std::vector<Letter> out;
  if (a.size() > 1) {
    out.reserve(run + a.size() - 1);
    out.assign(run, k);
    out.push_back(a[1] + 1);
    out.insert(out.end(), a.begin() + 2, a.end());
    return FiniteWord(k, std::move(out));
  }
  switch (policy) {
    case Policy::Cyclic:
      out.assign(run + 1, k);
      break;
    case Policy::TopDown:
      out.assign(run + 2, k);
      break;
    case Policy::Subtree:
      out.assign(run, k);
      out.push_back(k + 1);
      break;
  }
  return FiniteWord(k, std::move(out));
}

Orbit::iterator& Orbit::iterator::operator++() {
  if (--remaining_ > 0) current_ = step(*current_, policy_);
  return *this;
}

std::vector<FiniteWord> Orbit::to_vector() const {
  std::vector<FiniteWord> out;
  out.reserve(count_);
  for (const auto& w : *this) out.push_back(w);
  return out;
}

}  // namespace odometer
