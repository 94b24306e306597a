#include "qside/core/layout.hpp"

#include "qside/core/errors.hpp"

#include <set>
#include <sstream>

namespace qside {

SystemLayout::SystemLayout(std::vector<Subsystem> subsystems) : subsystems_(std::move(subsystems)) {
  std::set<std::string_view> seen;
  for (const auto& s : subsystems_) {
    if (s.dim < 1) throw LayoutError("subsystem '" + s.label + "' has dimension < 1");
    if (!seen.insert(s.label).second) throw LayoutError("duplicate label '" + s.label + "'");
  }
}

SystemLayout::SystemLayout(std::initializer_list<Subsystem> subsystems)
    : SystemLayout(std::vector<Subsystem>(subsystems)) {}

int SystemLayout::total_dim() const noexcept {
  int d = 1;
  for (const auto& s : subsystems_) d *= s.dim;
  return d;
}

std::vector<int> SystemLayout::dims() const {
  std::vector<int> out;
  out.reserve(subsystems_.size());
  for (const auto& s : subsystems_) out.push_back(s.dim);
  return out;
}

std::vector<std::string> SystemLayout::labels() const {
  std::vector<std::string> out;
  out.reserve(subsystems_.size());
  for (const auto& s : subsystems_) out.push_back(s.label);
  return out;
}

std::optional<std::size_t> SystemLayout::find(std::string_view label) const noexcept {
  for (std::size_t i = 0; i < subsystems_.size(); ++i)
    if (subsystems_[i].label == label) return i;
  return std::nullopt;
}

std::size_t SystemLayout::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw LayoutError("unknown label '" + std::string(label) + "' in layout " + to_string(*this));
}

std::vector<bool> SystemLayout::mask(const std::vector<std::string>& labels) const {
  std::vector<bool> m(subsystems_.size(), false);
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (m[i]) throw LayoutError("label '" + l + "' listed twice");
    m[i] = true;
  }
  return m;
}

SystemLayout SystemLayout::select(const std::vector<bool>& mask) const {
  std::vector<Subsystem> out;
  for (std::size_t i = 0; i < subsystems_.size(); ++i)
    if (mask.at(i)) out.push_back(subsystems_[i]);
  return SystemLayout(std::move(out));
}

SystemLayout SystemLayout::concat(const SystemLayout& other) const {
  std::vector<Subsystem> out = subsystems_;
  out.insert(out.end(), other.subsystems_.begin(), other.subsystems_.end());
  return SystemLayout(std::move(out));
}

SystemLayout SystemLayout::relabeled(const std::vector<std::string>& labels) const {
  if (labels.size() != subsystems_.size())
    throw LayoutError("relabel: expected " + std::to_string(subsystems_.size()) + " labels");
  std::vector<Subsystem> out = subsystems_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i].label = labels[i];
  return SystemLayout(std::move(out));
}

std::string to_string(const SystemLayout& layout) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (i) os << ", ";
    os << layout[i].label << ':' << layout[i].dim;
  }
  os << ']';
  return os.str();
}

}  // namespace qside
