#pragma once

#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wordlat/counting.hpp"

namespace wordlat {

// An (m,n)-word is a length-n sequence over the alphabet {0, 1, ..., m+1}
// subject to two conditions:
//   MN1: the first letter is not m+1;
//   MN2: a letter s with 1 <= s <= m requires every earlier letter to be >= s.
// The letter m+1 plays a special role throughout and is called the top letter.

class WordError : public std::runtime_error {
 public:
  enum class Kind { AlphabetViolation, MN1Violation, MN2Violation, ShapeMismatch };

  WordError(Kind kind, const std::string& what, int position = 0)
      : std::runtime_error(what), kind_(kind), position_(position) {}

  Kind kind() const { return kind_; }
  // 1-based position of the offending letter, 0 when not applicable.
  int position() const { return position_; }

 private:
  Kind kind_;
  int position_;
};

class MNWord {
 public:
  MNWord() = default;

  // Checks the alphabet bound and both word conditions; throws WordError.
  // m must satisfy 0 <= m <= 2^31 - 2 so every letter fits an int.
  static MNWord validate(int m, std::vector<int> letters);

  // Accepts both serialized forms: one digit per letter, or comma-separated
  // numbers. The digit form is only meaningful when m + 1 <= 9.
  static MNWord parse(int m, std::string_view text);

  static MNWord from_json(const nlohmann::json& j);

  int m() const { return m_; }
  int n() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }

  // Digit string when m + 1 <= 9, comma-separated otherwise.
  std::string str() const;
  nlohmann::json to_json() const;

  friend bool operator==(const MNWord&, const MNWord&) = default;
  friend std::strong_ordering operator<=>(const MNWord&, const MNWord&) = default;

 private:
  MNWord(int m, std::vector<int> letters) : m_(m), letters_(std::move(letters)) {}

  int m_ = 0;
  std::vector<int> letters_;
};

struct WordStats {
  int min_letter = 0;            // m + 1 for the empty word
  std::vector<int> support;      // distinct letters in [1, m], ascending
  int top_count = 0;             // occurrences of m + 1
  int in_degree = 0;             // |support| + top_count = number of lower covers
};

// Componentwise comparison. Throws WordError(ShapeMismatch) unless both words
// share m and n.
bool leq(const MNWord& u, const MNWord& v);

// Componentwise maximum, always a valid word.
MNWord join(const MNWord& u, const MNWord& v);

// Componentwise minimum followed by the prefix-minimum normalization: entries
// equal to m + 1 are kept, every other entry is clamped to the minimum of all
// earlier raw entries (with m + 1 participating at face value).
MNWord meet(const MNWord& u, const MNWord& v);

// All lower covers of v, in lexicographic order. One cover per top position
// (the letter m + 1 drops to the earlier prefix minimum capped at m) plus one
// per support letter s (dropping to s - 1 at its last occurrence).
std::vector<MNWord> lower_covers(const MNWord& v);

// Lexicographic enumeration of W(m,n).
std::vector<MNWord> enumerate_words(int m, int n);
void for_each_word(int m, int n, const std::function<void(const MNWord&)>& fn);

// |W(m,n)| = sum_{k=1}^{n} C(m+k,k) C(n-1,k-1), with the empty word giving 1
// at n = 0.
bigint count_words(int m, int n);

// Number of words avoiding the top letter entirely: C(m+n, n).
bigint count_topless(int m, int n);

WordStats word_stats(const MNWord& v);

MNWord bottom_word(int m, int n);  // all zeros
MNWord top_word(int m, int n);     // m followed by n-1 copies of m+1

}  // namespace wordlat
