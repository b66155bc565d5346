#include "ncq/algebra/word.hpp"

#include <algorithm>

namespace ncq {

std::string generator_name(const NameTable& names, Letter k) {
  if (k >= 1 && k <= names.size()) return names[k - 1];
  return "x" + std::to_string(k);
}

Letter Word::max_letter() const {
  Letter m = 0;
  for (Letter l : letters_) m = std::max(m, l);
  return m;
}

bool Word::is_normal_ordered() const {
  return std::is_sorted(letters_.begin(), letters_.end());
}

Word Word::sorted() const {
  Word w = *this;
  std::sort(w.letters_.begin(), w.letters_.end());
  return w;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word operator*(const Word& a, const Word& b) {
  Word out;
  out.letters_.reserve(a.size() + b.size());
  out.letters_.insert(out.letters_.end(), a.letters_.begin(), a.letters_.end());
  out.letters_.insert(out.letters_.end(), b.letters_.begin(), b.letters_.end());
  return out;
}

Word word_concat(const Word& a, const Word& b) { return a * b; }

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return b.size() <=> a.size();
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

std::size_t Word::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Letter l : letters_) {
    h ^= l;
    h *= 0x100000001b3ULL;
  }
  return h ^ letters_.size();
}

std::string Word::to_string(const NameTable& names) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < letters_.size();) {
    std::size_t run = 1;
    while (k + run < letters_.size() && letters_[k + run] == letters_[k]) ++run;
    if (!out.empty()) out += '*';
    out += generator_name(names, letters_[k]);
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

}  // namespace ncq
