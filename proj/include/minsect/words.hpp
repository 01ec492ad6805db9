#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace minsect {

// A generator (lowercase) or its inverse (uppercase). `letter` is the
// zero-based index of the generator in its surface word's alphabet.
struct Symbol {
  int letter = 0;
  bool inverted = false;

  constexpr Symbol inverse() const noexcept { return {letter, !inverted}; }

  friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

// Cyclic gluing pattern of a 4n-gon: 2n labeled sides alternating with free
// boundary sides. Each of s_1..s_n, S_1..S_n appears exactly once.
class SurfaceWord {
 public:
  // Number of generators n.
  int rank() const noexcept { return static_cast<int>(letters_.size()); }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  // Position (0..2n-1) of `s` in the word, i.e. which labeled side it names.
  std::size_t side_of(Symbol s) const;

  char to_char(Symbol s) const;
  std::optional<Symbol> from_char(char c) const;
  std::string str() const;

 private:
  friend SurfaceWord parse_surface_word(std::string_view text);

  std::vector<Symbol> symbols_;
  std::vector<char> letters_;  // lowercase spelling per generator
  std::vector<std::size_t> side_[2];
};

// A cyclically reduced word naming a free homotopy class. The starting letter
// is kept as given; no canonical rotation is applied.
class CyclicWord {
 public:
  CyclicWord() = default;
  CyclicWord(std::vector<Symbol> letters, std::string text)
      : letters_(std::move(letters)), text_(std::move(text)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  const std::vector<Symbol>& letters() const noexcept { return letters_; }
  const Symbol& operator[](std::size_t i) const { return letters_[i]; }
  const std::string& str() const noexcept { return text_; }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<Symbol> letters_;
  std::string text_;
};

struct SurfaceInvariants {
  int euler_characteristic = 0;
  int boundary_components = 0;
  int genus = 0;
};

SurfaceWord parse_surface_word(std::string_view text);

// Strict: rejects words that are not cyclically reduced.
CyclicWord parse_cyclic_word(std::string_view text, const SurfaceWord& surface);

// Cancels adjacent inverse pairs (including across the seam) until none
// remain. Returns nullopt when the word cancels completely.
std::optional<CyclicWord> cyclic_reduce(std::string_view text,
                                        const SurfaceWord& surface);

SurfaceInvariants surface_invariants(const SurfaceWord& surface);

}  // namespace minsect
