#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace ccol {

// The three colours, ordered R < G < B, with cyclic successor R -> G -> B -> R.
enum class Colour : std::uint8_t { R = 0, G = 1, B = 2 };

inline constexpr std::array<Colour, 3> kColours{Colour::R, Colour::G, Colour::B};

constexpr Colour successor(Colour c) noexcept {
  return static_cast<Colour>((static_cast<unsigned>(c) + 1u) % 3u);
}

// The colour distinct from two distinct colours.
constexpr Colour third_colour(Colour a, Colour b) noexcept {
  return static_cast<Colour>(3u - static_cast<unsigned>(a) - static_cast<unsigned>(b));
}

constexpr char colour_char(Colour c) noexcept {
  return c == Colour::R ? 'R' : c == Colour::G ? 'G' : 'B';
}

constexpr std::optional<Colour> colour_from_char(char ch) noexcept {
  switch (ch) {
    case 'R': return Colour::R;
    case 'G': return Colour::G;
    case 'B': return Colour::B;
    default: return std::nullopt;
  }
}

// Subset of {R,G,B} as a three-bit mask.
class ColourSet {
 public:
  constexpr ColourSet() = default;

  static constexpr ColourSet none() noexcept { return ColourSet(0); }
  static constexpr ColourSet full() noexcept { return ColourSet(0b111); }
  static constexpr ColourSet of(Colour c) noexcept {
    return ColourSet(static_cast<std::uint8_t>(1u << static_cast<unsigned>(c)));
  }
  static constexpr ColourSet of(Colour a, Colour b) noexcept {
    return of(a).with(b);
  }
  static constexpr ColourSet from_mask(std::uint8_t mask) noexcept {
    return ColourSet(static_cast<std::uint8_t>(mask & 0b111));
  }

  constexpr bool contains(Colour c) const noexcept {
    return (bits_ >> static_cast<unsigned>(c)) & 1u;
  }
  constexpr int size() const noexcept {
    return int(bits_ & 1u) + int((bits_ >> 1) & 1u) + int((bits_ >> 2) & 1u);
  }
  constexpr bool empty() const noexcept { return bits_ == 0; }

  constexpr ColourSet with(Colour c) const noexcept {
    return ColourSet(static_cast<std::uint8_t>(bits_ | (1u << static_cast<unsigned>(c))));
  }
  constexpr ColourSet without(Colour c) const noexcept {
    return ColourSet(static_cast<std::uint8_t>(bits_ & ~(1u << static_cast<unsigned>(c))));
  }

  // Smallest member under R < G < B; only meaningful for nonempty sets.
  constexpr Colour lowest() const noexcept {
    return (bits_ & 1u) ? Colour::R : (bits_ & 2u) ? Colour::G : Colour::B;
  }

  constexpr std::uint8_t mask() const noexcept { return bits_; }
  constexpr bool operator==(const ColourSet&) const noexcept = default;

 private:
  constexpr explicit ColourSet(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

}  // namespace ccol
