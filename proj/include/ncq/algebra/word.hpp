#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ncq {

// 1-based generator index.
using Letter = std::uint16_t;

// Generator display names; index k-1 names generator k.  Missing names
// fall back to "x<k>".
using NameTable = std::vector<std::string>;

std::string generator_name(const NameTable& names, Letter k);

// Noncommutative monomial: a string of generator indices.  The empty word
// is the unit.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t k) const { return letters_[k]; }
  std::span<const Letter> letters() const { return letters_; }

  Letter max_letter() const;
  bool is_normal_ordered() const;
  Word sorted() const;

  Word subword(std::size_t pos, std::size_t len) const;
  void push_back(Letter l) { letters_.push_back(l); }

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  // Graded-lexicographic: longer words first, then lexicographic by index.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  std::size_t hash() const;

  // `x1*x3^2*x2` style; the empty word renders as "1".
  std::string to_string(const NameTable& names = {}) const;

 private:
  std::vector<Letter> letters_;
};

Word word_concat(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

}  // namespace ncq
