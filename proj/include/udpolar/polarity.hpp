#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace udpolar {

// Monotonicity mark carried by every word and constituent.
//   Up   - monotone: the item may be replaced by a more general one.
//   Down - antitone: the item may be replaced by a more specific one.
//   Flat - no monotonicity information.
enum class Polarity : std::uint8_t { Up, Down, Flat };

// A mark slot; empty until polarization assigns it.
using Mark = std::optional<Polarity>;

inline constexpr Polarity kAllPolarities[] = {Polarity::Up, Polarity::Down,
                                              Polarity::Flat};

// Up <-> Down; Flat is directionless and stays Flat.
constexpr Polarity flip(Polarity p) noexcept {
  switch (p) {
    case Polarity::Up: return Polarity::Down;
    case Polarity::Down: return Polarity::Up;
    case Polarity::Flat: return Polarity::Flat;
  }
  return p;
}

// Polarity of an item marked `inner` relative to a context marked `outer`.
constexpr Polarity compose(Polarity outer, Polarity inner) noexcept {
  if (outer == Polarity::Flat || inner == Polarity::Flat) return Polarity::Flat;
  return outer == inner ? Polarity::Up : Polarity::Down;
}

inline std::string_view to_arrow(Polarity p) noexcept {
  switch (p) {
    case Polarity::Up: return "↑";
    case Polarity::Down: return "↓";
    case Polarity::Flat: return "=";
  }
  return "?";
}

inline char to_ascii(Polarity p) noexcept {
  switch (p) {
    case Polarity::Up: return '^';
    case Polarity::Down: return 'v';
    case Polarity::Flat: return '=';
  }
  return '?';
}

inline std::string_view to_name(Polarity p) noexcept {
  switch (p) {
    case Polarity::Up: return "up";
    case Polarity::Down: return "down";
    case Polarity::Flat: return "flat";
  }
  return "?";
}

// Accepts every rendering the library emits: arrows, ASCII suffixes and names.
inline std::optional<Polarity> parse_polarity(std::string_view s) noexcept {
  if (s == "↑" || s == "^" || s == "up" || s == "UP" || s == "+")
    return Polarity::Up;
  if (s == "↓" || s == "v" || s == "down" || s == "DOWN" || s == "-")
    return Polarity::Down;
  if (s == "=" || s == "flat" || s == "FLAT") return Polarity::Flat;
  return std::nullopt;
}

}  // namespace udpolar
