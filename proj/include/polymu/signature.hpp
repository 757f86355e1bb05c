#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polymu {

using ActionId = std::size_t;
using ColorId = std::size_t;

/// Ordered action and color names of a graph. Lookups are by position.
class Signature {
 public:
  Signature() = default;
  /// Validates non-emptiness, uniqueness and the naming rules; throws InputError.
  Signature(std::vector<std::string> actions, std::vector<std::string> colors);

  const std::vector<std::string>& actions() const noexcept { return actions_; }
  const std::vector<std::string>& colors() const noexcept { return colors_; }
  std::size_t num_actions() const noexcept { return actions_.size(); }
  std::size_t num_colors() const noexcept { return colors_.size(); }

  std::optional<ActionId> find_action(std::string_view name) const;
  std::optional<ColorId> find_color(std::string_view name) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::string> actions_;
  std::vector<std::string> colors_;
};

/// F^d: actions x@i for every base action x and i < d, followed by rst@i;
/// colors c@i. Throws InputError for d == 0.
Signature lift_signature(const Signature& base, std::size_t d);

/// Index tables for a signature of the form lift_signature(base, d).
struct LiftedSignature {
  Signature base;
  std::size_t d = 0;
  std::vector<std::vector<ActionId>> action;  // [base action][component]
  std::vector<ActionId> reset;                // [component]
  std::vector<std::vector<ColorId>> color;    // [base color][component]

  /// Reads the "@i" naming convention back. Throws InputError when `lifted`
  /// is not exactly a lifted signature (up to ordering).
  static LiftedSignature detect(const Signature& lifted);
};

/// "name@i".
std::string indexed_name(std::string_view name, std::size_t i);

/// Splits "name@i" at the last '@'. Returns nullopt if there is no numeric suffix.
std::optional<std::pair<std::string, std::size_t>> split_indexed_name(std::string_view s);

}  // namespace polymu
