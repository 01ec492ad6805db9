#include "minsect/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "minsect/error.hpp"

namespace minsect {
namespace {

bool is_ascii_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

std::vector<Symbol> letters_of(std::string_view text, const SurfaceWord& surface) {
  if (text.empty()) throw Error(ErrorCode::EmptyInput, "curve word is empty");
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) {
    auto s = surface.from_char(c);
    if (!s) {
      throw Error(ErrorCode::UnknownLetter,
                  std::string("letter '") + c + "' is not in surface word " + surface.str());
    }
    out.push_back(*s);
  }
  return out;
}

std::string spell(const std::vector<Symbol>& letters, const SurfaceWord& surface) {
  std::string s;
  s.reserve(letters.size());
  for (auto sym : letters) s.push_back(surface.to_char(sym));
  return s;
}

// Minimal union-find over polygon corners.
struct Corners {
  std::vector<int> parent;
  explicit Corners(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::size_t SurfaceWord::side_of(Symbol s) const {
  return side_[s.inverted ? 1 : 0].at(static_cast<std::size_t>(s.letter));
}

char SurfaceWord::to_char(Symbol s) const {
  char c = letters_.at(static_cast<std::size_t>(s.letter));
  return s.inverted ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
}

std::optional<Symbol> SurfaceWord::from_char(char c) const {
  if (!is_ascii_letter(c)) return std::nullopt;
  auto it = std::find(letters_.begin(), letters_.end(), lower(c));
  if (it == letters_.end()) return std::nullopt;
  return Symbol{static_cast<int>(it - letters_.begin()), c != lower(c)};
}

std::string SurfaceWord::str() const { return spell(symbols_, *this); }

SurfaceWord parse_surface_word(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::EmptyInput, "surface word is empty");
  for (char c : text) {
    if (!is_ascii_letter(c)) {
      throw Error(ErrorCode::NonLetterCharacter,
                  std::string("surface word contains non-letter '") + c + "'");
    }
  }
  SurfaceWord w;
  std::string seen;
  for (char c : text) {
    if (seen.find(c) != std::string::npos) {
      throw Error(ErrorCode::DuplicateSymbol,
                  std::string("symbol '") + c + "' appears twice in surface word");
    }
    seen.push_back(c);
    char l = lower(c);
    auto it = std::find(w.letters_.begin(), w.letters_.end(), l);
    if (it == w.letters_.end()) {
      w.letters_.push_back(l);
      it = w.letters_.end() - 1;
    }
    w.symbols_.push_back({static_cast<int>(it - w.letters_.begin()), c != l});
  }
  for (char l : w.letters_) {
    char u = static_cast<char>(std::toupper(static_cast<unsigned char>(l)));
    if (seen.find(l) == std::string::npos || seen.find(u) == std::string::npos) {
      throw Error(ErrorCode::MissingInverse,
                  std::string("symbol pair ") + l + "/" + u + " is incomplete");
    }
  }
  for (auto& s : w.side_) s.assign(w.letters_.size(), 0);
  for (std::size_t i = 0; i < w.symbols_.size(); ++i) {
    const Symbol s = w.symbols_[i];
    w.side_[s.inverted ? 1 : 0][static_cast<std::size_t>(s.letter)] = i;
  }
  return w;
}

CyclicWord parse_cyclic_word(std::string_view text, const SurfaceWord& surface) {
  auto letters = letters_of(text, surface);
  const std::size_t n = letters.size();
  if (n > 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (letters[(i + 1) % n] == letters[i].inverse()) {
        throw Error(ErrorCode::NotReduced,
                    "word " + std::string(text) + " is not cyclically reduced");
      }
    }
  }
  return CyclicWord(std::move(letters), std::string(text));
}

std::optional<CyclicWord> cyclic_reduce(std::string_view text, const SurfaceWord& surface) {
  auto letters = letters_of(text, surface);
  std::vector<Symbol> stack;
  for (auto s : letters) {
    if (!stack.empty() && stack.back() == s.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  // Freely reduced; now peel matching ends.
  std::size_t lo = 0, hi = stack.size();
  while (hi - lo >= 2 && stack[hi - 1] == stack[lo].inverse()) {
    ++lo;
    --hi;
  }
  if (lo == hi) return std::nullopt;
  std::vector<Symbol> reduced(stack.begin() + static_cast<std::ptrdiff_t>(lo),
                              stack.begin() + static_cast<std::ptrdiff_t>(hi));
  auto spelled = spell(reduced, surface);
  return CyclicWord(std::move(reduced), std::move(spelled));
}

SurfaceInvariants surface_invariants(const SurfaceWord& surface) {
  // Corners of the 4n-gon: labeled side t runs from corner 2t to 2t+1, the
  // free side after it from 2t+1 to 2t+2.
  const auto& sym = surface.symbols();
  const int sides = static_cast<int>(sym.size());  // 2n labeled sides
  const int corners = 2 * sides;
  Corners vertex(corners);
  for (int t = 0; t < sides; ++t) {
    if (sym[t].inverted) continue;
    const int u = static_cast<int>(surface.side_of(sym[t].inverse()));
    // s runs 2t -> 2t+1, S runs 2u -> 2u+1 against s: glue head to tail.
    vertex.unite(2 * t, 2 * u + 1);
    vertex.unite(2 * t + 1, 2 * u);
  }
  int v = 0;
  for (int c = 0; c < corners; ++c) v += vertex.find(c) == c;

  // Free sides link vertex classes; each class meets exactly two free sides,
  // so the boundary is a disjoint union of cycles.
  Corners boundary(corners);
  for (int t = 0; t < sides; ++t) {
    boundary.unite(vertex.find(2 * t + 1), vertex.find((2 * t + 2) % corners));
  }
  int b = 0;
  for (int c = 0; c < corners; ++c) {
    if (vertex.find(c) == c && boundary.find(c) == c) ++b;
  }

  const int n = surface.rank();
  const int chi = v - 3 * n + 1;
  return {chi, b, (2 - chi - b) / 2};
}

}  // namespace minsect
