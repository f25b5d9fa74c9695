#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace teamwb {

// The seven structural constraints a team proposition can satisfy.
enum class ClosurePropertyKind : std::uint8_t {
  EmptyTeam,
  Downward,
  Upward,
  UnionClosed,
  IntersectionClosed,
  Convex,
  Flat,
};

inline constexpr std::array<ClosurePropertyKind, 7> kAllClosureProperties = {
    ClosurePropertyKind::EmptyTeam,          ClosurePropertyKind::Downward,
    ClosurePropertyKind::Upward,             ClosurePropertyKind::UnionClosed,
    ClosurePropertyKind::IntersectionClosed, ClosurePropertyKind::Convex,
    ClosurePropertyKind::Flat,
};

// Stable report names.
std::string_view property_name(ClosurePropertyKind kind);
std::optional<ClosurePropertyKind> property_from_name(std::string_view name);

// Small value set of properties, used for preservation documentation and
// conjunctive preservation checks (e.g. upward + intersection).
class PropertySet {
 public:
  constexpr PropertySet() = default;
  constexpr PropertySet(std::initializer_list<ClosurePropertyKind> kinds) {
    for (auto k : kinds) bits_ |= bit(k);
  }

  constexpr bool contains(ClosurePropertyKind k) const { return (bits_ & bit(k)) != 0; }
  constexpr void insert(ClosurePropertyKind k) { bits_ |= bit(k); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool operator==(const PropertySet&) const = default;

  template <typename F>
  void for_each(F&& f) const {
    for (auto k : kAllClosureProperties)
      if (contains(k)) f(k);
  }

 private:
  static constexpr std::uint8_t bit(ClosurePropertyKind k) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(k));
  }
  std::uint8_t bits_ = 0;
};

}  // namespace teamwb
