#include "polymu/signature.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "polymu/error.hpp"

namespace polymu {
namespace {

bool is_base_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

// [a-z0-9_]+ optionally followed by any number of "@<digits>" suffixes.
bool valid_name(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size() && is_base_char(s[pos])) ++pos;
  if (pos == 0) return false;
  while (pos < s.size()) {
    if (s[pos] != '@') return false;
    std::size_t start = ++pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) return false;
  }
  return true;
}

bool reserved(std::string_view s) {
  return s == "tt" || s == "ff" || s == "mu" || s == "nu";
}

void check_names(const std::vector<std::string>& names, const char* field) {
  if (names.empty()) throw InputError("must be non-empty", field);
  std::set<std::string_view> seen;
  for (std::size_t k = 0; k < names.size(); ++k) {
    const std::string& n = names[k];
    std::string where = std::string(field) + "[" + std::to_string(k) + "]";
    if (!valid_name(n)) throw InputError("invalid name '" + n + "'", where);
    if (reserved(n)) throw InputError("reserved name '" + n + "'", where);
    if (!seen.insert(n).second) throw InputError("duplicate name '" + n + "'", where);
  }
}

std::optional<std::size_t> find_in(const std::vector<std::string>& v, std::string_view name) {
  auto it = std::find(v.begin(), v.end(), name);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

}  // namespace

Signature::Signature(std::vector<std::string> actions, std::vector<std::string> colors)
    : actions_(std::move(actions)), colors_(std::move(colors)) {
  check_names(actions_, "actions");
  check_names(colors_, "colors");
}

std::optional<ActionId> Signature::find_action(std::string_view name) const {
  return find_in(actions_, name);
}

std::optional<ColorId> Signature::find_color(std::string_view name) const {
  return find_in(colors_, name);
}

std::string indexed_name(std::string_view name, std::size_t i) {
  std::string out(name);
  out += '@';
  out += std::to_string(i);
  return out;
}

std::optional<std::pair<std::string, std::size_t>> split_indexed_name(std::string_view s) {
  auto at = s.rfind('@');
  if (at == std::string_view::npos || at == 0 || at + 1 == s.size()) return std::nullopt;
  std::size_t value = 0;
  auto digits = s.substr(at + 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return std::pair{std::string(s.substr(0, at)), value};
}

Signature lift_signature(const Signature& base, std::size_t d) {
  if (d == 0) throw InputError("dimension must be positive", "d");
  if (base.find_action("rst")) throw InputError("base action 'rst' clashes with reset actions", "actions");
  std::vector<std::string> actions;
  std::vector<std::string> colors;
  for (const auto& a : base.actions())
    for (std::size_t i = 0; i < d; ++i) actions.push_back(indexed_name(a, i));
  for (std::size_t i = 0; i < d; ++i) actions.push_back(indexed_name("rst", i));
  for (const auto& c : base.colors())
    for (std::size_t i = 0; i < d; ++i) colors.push_back(indexed_name(c, i));
  return Signature(std::move(actions), std::move(colors));
}

LiftedSignature LiftedSignature::detect(const Signature& lifted) {
  std::vector<std::string> base_actions;
  std::vector<std::string> base_colors;
  std::size_t d = 0;
  auto collect = [&](const std::vector<std::string>& names, std::vector<std::string>& out,
                     const char* field, bool allow_rst) {
    for (const auto& n : names) {
      auto split = split_indexed_name(n);
      if (!split) throw InputError("'" + n + "' lacks an @i suffix", field);
      d = std::max(d, split->second + 1);
      if (allow_rst && split->first == "rst") continue;
      if (std::find(out.begin(), out.end(), split->first) == out.end()) out.push_back(split->first);
    }
  };
  collect(lifted.actions(), base_actions, "actions", true);
  collect(lifted.colors(), base_colors, "colors", false);
  if (base_actions.empty()) throw InputError("no base actions", "actions");

  LiftedSignature out;
  out.base = Signature(base_actions, base_colors);
  out.d = d;
  Signature expected = lift_signature(out.base, d);
  auto as_set = [](const std::vector<std::string>& v) { return std::set<std::string>(v.begin(), v.end()); };
  if (as_set(expected.actions()) != as_set(lifted.actions()))
    throw InputError("action set is not F^" + std::to_string(d) + " of its base", "actions");
  if (as_set(expected.colors()) != as_set(lifted.colors()))
    throw InputError("color set is not F^" + std::to_string(d) + " of its base", "colors");

  out.action.assign(base_actions.size(), std::vector<ActionId>(d));
  out.color.assign(base_colors.size(), std::vector<ColorId>(d));
  out.reset.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t a = 0; a < base_actions.size(); ++a)
      out.action[a][i] = *lifted.find_action(indexed_name(base_actions[a], i));
    for (std::size_t c = 0; c < base_colors.size(); ++c)
      out.color[c][i] = *lifted.find_color(indexed_name(base_colors[c], i));
    out.reset[i] = *lifted.find_action(indexed_name("rst", i));
  }
  return out;
}

}  // namespace polymu
