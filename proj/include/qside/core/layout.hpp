#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qside {

struct Subsystem {
  std::string label;
  int dim = 1;

  bool operator==(const Subsystem&) const = default;
};

/// Ordered list of labeled tensor factors. Labels are unique and every
/// dimension is at least one.
class SystemLayout {
 public:
  SystemLayout() = default;
  explicit SystemLayout(std::vector<Subsystem> subsystems);
  SystemLayout(std::initializer_list<Subsystem> subsystems);

  const std::vector<Subsystem>& subsystems() const noexcept { return subsystems_; }
  std::size_t size() const noexcept { return subsystems_.size(); }
  bool empty() const noexcept { return subsystems_.empty(); }
  const Subsystem& operator[](std::size_t i) const { return subsystems_[i]; }

  int total_dim() const noexcept;
  std::vector<int> dims() const;
  std::vector<std::string> labels() const;

  std::optional<std::size_t> find(std::string_view label) const noexcept;
  bool contains(std::string_view label) const noexcept { return find(label).has_value(); }
  /// Throws LayoutError for an unknown label.
  std::size_t index_of(std::string_view label) const;
  int dim(std::string_view label) const { return subsystems_[index_of(label)].dim; }

  /// Mask over subsystems, true where the label is listed. Throws LayoutError
  /// on unknown or repeated labels.
  std::vector<bool> mask(const std::vector<std::string>& labels) const;

  /// Subsystems flagged in `mask`, original order kept.
  SystemLayout select(const std::vector<bool>& mask) const;

  /// This layout followed by `other`; colliding labels raise LayoutError.
  SystemLayout concat(const SystemLayout& other) const;

  SystemLayout relabeled(const std::vector<std::string>& labels) const;

  bool operator==(const SystemLayout&) const = default;

 private:
  std::vector<Subsystem> subsystems_;
};

std::string to_string(const SystemLayout& layout);

}  // namespace qside
