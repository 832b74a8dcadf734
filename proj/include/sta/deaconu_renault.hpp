#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sta/bisection.hpp"

namespace sta {

/// One-sided shift of finite type: points are infinite admissible words, the
/// map T is the left shift.
class Sft {
 public:
  /// Throws DomainError if some letter has no admissible successor (T must be
  /// a surjective local homeomorphism onto a nonempty space).
  Sft(std::vector<std::string> alphabet, std::vector<std::vector<bool>> allow);

  static Sft parse(const std::string& text);
  std::string print() const;

  int letter_count() const { return static_cast<int>(alphabet_.size()); }
  const std::string& letter(int a) const { return alphabet_[a]; }
  int letter_index(const std::string& name) const;  // throws UnknownSymbol
  bool allowed(int a, int b) const { return allow_[a][b]; }

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::vector<bool>> allow_;
};

using Word = std::vector<int>;

/// Finite union of admissible word cylinders, stored refined to a common
/// word length, sorted, deduplicated.
class WordSet {
 public:
  WordSet() = default;
  WordSet(const Sft* sft, std::vector<Word> words);

  const Sft* sft() const { return sft_; }
  const std::vector<Word>& words() const { return words_; }
  int word_length() const { return words_.empty() ? 0 : static_cast<int>(words_[0].size()); }
  bool empty() const { return words_.empty(); }

  /// Same set, words extended to exactly `length` (>= current).
  WordSet refined(int length) const;
  WordSet intersect(const WordSet& other) const;

  /// Set equality of the denoted cylinder unions.
  friend bool operator==(const WordSet& a, const WordSet& b);

  std::string str() const;  // e.g. [ab]u[ba]

 private:
  const Sft* sft_ = nullptr;
  std::vector<Word> words_;
};

/// Z(U, V, k, l) = {(x, k-l, y) : x in U, y in V, T^k x = T^l y}.
struct DrBasic {
  WordSet u, v;
  int k = 0, l = 0;

  int cocycle() const { return k - l; }
  std::string str() const;
};

/// Checks that T^k restricted to U and T^l restricted to V are injective and
/// have the same image; throws NotInjective or ImageMismatch.
DrBasic dr_validate(const WordSet& u, const WordSet& v, int k, int l);

/// T^k(U) as a cylinder union; requires T^k injective on U.
WordSet dr_image(const WordSet& u, int k);

/// Symbolic composition; the empty union means no composable pairs.
std::vector<DrBasic> dr_mul(const DrBasic& a, const DrBasic& b);

/// Translation to the graph-groupoid model when the Sft is the edge shift of
/// g (letters are edge names, x y allowed iff s(x) = r(y)); throws
/// NotEdgeShift otherwise.
CylSet dr_to_graph(const DrBasic& d, const Graph& g);

}  // namespace sta
