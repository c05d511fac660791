#include "wordlat/word.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>

namespace wordlat {

namespace {

void check_m(int m) {
  if (m < 0 || m == std::numeric_limits<int>::max())
    throw WordError(WordError::Kind::AlphabetViolation,
                    "m out of range: " + std::to_string(m));
}

std::string position_msg(const char* what, int value, int pos) {
  std::ostringstream os;
  os << what << " (letter " << value << " at position " << pos << ")";
  return os.str();
}

}  // namespace

MNWord MNWord::validate(int m, std::vector<int> letters) {
  check_m(m);
  const int top = m + 1;
  const int n = static_cast<int>(letters.size());
  for (int i = 0; i < n; ++i) {
    if (letters[i] < 0 || letters[i] > top)
      throw WordError(WordError::Kind::AlphabetViolation,
                      position_msg("letter outside [0, m+1]", letters[i], i + 1), i + 1);
  }
  if (n > 0 && letters[0] == top)
    throw WordError(WordError::Kind::MN1Violation,
                    position_msg("first letter equals m+1", letters[0], 1), 1);
  int prefix_min = std::numeric_limits<int>::max();
  for (int i = 0; i < n; ++i) {
    if (i > 0 && letters[i] >= 1 && letters[i] <= m && prefix_min < letters[i])
      throw WordError(WordError::Kind::MN2Violation,
                      position_msg("letter exceeds an earlier letter", letters[i], i + 1),
                      i + 1);
    prefix_min = std::min(prefix_min, letters[i]);
  }
  return MNWord(m, std::move(letters));
}

MNWord MNWord::parse(int m, std::string_view text) {
  check_m(m);
  std::vector<int> letters;
  if (text.empty()) return validate(m, std::move(letters));
  if (m + 1 > 9 || text.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t next = text.find(',', pos);
      std::string_view piece =
          text.substr(pos, next == std::string_view::npos ? next : next - pos);
      int value = 0;
      auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
      if (ec != std::errc() || ptr != piece.data() + piece.size())
        throw WordError(WordError::Kind::AlphabetViolation,
                        "unparsable letter '" + std::string(piece) + "'");
      letters.push_back(value);
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw WordError(WordError::Kind::AlphabetViolation,
                        std::string("unparsable letter '") + c + "'");
      letters.push_back(c - '0');
    }
  }
  return validate(m, std::move(letters));
}

MNWord MNWord::from_json(const nlohmann::json& j) {
  return validate(j.at("m").get<int>(), j.at("letters").get<std::vector<int>>());
}

std::string MNWord::str() const {
  std::string out;
  const bool digits = m_ + 1 <= 9;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (digits) {
      out += static_cast<char>('0' + letters_[i]);
    } else {
      if (i) out += ',';
      out += std::to_string(letters_[i]);
    }
  }
  return out;
}

nlohmann::json MNWord::to_json() const {
  return nlohmann::json{{"m", m_}, {"letters", letters_}};
}

namespace {

void check_shapes(const MNWord& u, const MNWord& v) {
  if (u.m() != v.m() || u.n() != v.n())
    throw WordError(WordError::Kind::ShapeMismatch,
                    "words live in different W(m,n): (" + std::to_string(u.m()) + "," +
                        std::to_string(u.n()) + ") vs (" + std::to_string(v.m()) + "," +
                        std::to_string(v.n()) + ")");
}

}  // namespace

bool leq(const MNWord& u, const MNWord& v) {
  check_shapes(u, v);
  for (int i = 0; i < u.n(); ++i)
    if (u.letters()[i] > v.letters()[i]) return false;
  return true;
}

MNWord join(const MNWord& u, const MNWord& v) {
  check_shapes(u, v);
  std::vector<int> out(u.n());
  for (int i = 0; i < u.n(); ++i) out[i] = std::max(u.letters()[i], v.letters()[i]);
  return MNWord::validate(u.m(), std::move(out));
}

MNWord meet(const MNWord& u, const MNWord& v) {
  check_shapes(u, v);
  const int top = u.m() + 1;
  std::vector<int> out(u.n());
  int prefix_min = std::numeric_limits<int>::max();
  for (int i = 0; i < u.n(); ++i) {
    const int c = std::min(u.letters()[i], v.letters()[i]);
    out[i] = c == top ? top : std::min(c, prefix_min);
    prefix_min = std::min(prefix_min, c);
  }
  return MNWord::validate(u.m(), std::move(out));
}

std::vector<MNWord> lower_covers(const MNWord& v) {
  const int m = v.m();
  const int top = m + 1;
  const auto& w = v.letters();
  const int n = v.n();
  std::vector<MNWord> out;

  for (int i = 0; i < n; ++i) {
    if (w[i] != top) continue;
    int repl = m;
    for (int j = 0; j < i; ++j) repl = std::min(repl, w[j]);
    std::vector<int> c(w);
    c[i] = repl;
    out.push_back(MNWord::validate(m, std::move(c)));
  }

  std::set<int> support(w.begin(), w.end());
  for (int s : support) {
    if (s < 1 || s > m) continue;
    int last = -1;
    for (int i = 0; i < n; ++i)
      if (w[i] == s) last = i;
    std::vector<int> c(w);
    c[last] = s - 1;
    out.push_back(MNWord::validate(m, std::move(c)));
  }

  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void enumerate_rec(int m, int n, std::vector<int>& prefix, int prefix_min,
                   const std::function<void(const MNWord&)>& fn) {
  if (static_cast<int>(prefix.size()) == n) {
    fn(MNWord::validate(m, prefix));
    return;
  }
  const bool first = prefix.empty();
  const int limit = std::min(m, first ? m : prefix_min);
  for (int s = 0; s <= limit; ++s) {
    prefix.push_back(s);
    enumerate_rec(m, n, prefix, std::min(prefix_min, s), fn);
    prefix.pop_back();
  }
  if (!first) {
    prefix.push_back(m + 1);
    enumerate_rec(m, n, prefix, std::min(prefix_min, m + 1), fn);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_word(int m, int n, const std::function<void(const MNWord&)>& fn) {
  if (m < 0 || n < 0) throw std::invalid_argument("m and n must be nonnegative");
  std::vector<int> prefix;
  prefix.reserve(n);
  enumerate_rec(m, n, prefix, std::numeric_limits<int>::max(), fn);
}

std::vector<MNWord> enumerate_words(int m, int n) {
  std::vector<MNWord> out;
  for_each_word(m, n, [&](const MNWord& w) { out.push_back(w); });
  return out;
}

bigint count_words(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("m and n must be nonnegative");
  if (n == 0) return 1;
  bigint total = 0;
  for (int k = 1; k <= n; ++k) total += binomial(m + k, k) * binomial(n - 1, k - 1);
  return total;
}

bigint count_topless(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("m and n must be nonnegative");
  return binomial(m + n, n);
}

WordStats word_stats(const MNWord& v) {
  WordStats st;
  const int top = v.m() + 1;
  st.min_letter = top;
  std::set<int> support;
  for (int x : v.letters()) {
    st.min_letter = std::min(st.min_letter, x);
    if (x == top)
      ++st.top_count;
    else if (x >= 1)
      support.insert(x);
  }
  st.support.assign(support.begin(), support.end());
  st.in_degree = static_cast<int>(st.support.size()) + st.top_count;
  return st;
}

MNWord bottom_word(int m, int n) {
  return MNWord::validate(m, std::vector<int>(n, 0));
}

MNWord top_word(int m, int n) {
  if (n == 0) return MNWord::validate(m, {});
  std::vector<int> w(n, m + 1);
  w[0] = m;
  return MNWord::validate(m, std::move(w));
}

}  // namespace wordlat
