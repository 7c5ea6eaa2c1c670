#include "comtet/words.hpp"

#include <sstream>

namespace comtet {

AdmissibleWord::AdmissibleWord(std::vector<int> s_, std::vector<int> c_)
    : s(std::move(s_)), c(std::move(c_)) {
  if (s.empty() || s.size() != c.size())
    throw invalid_input("admissible word: S and c must be nonempty and equal length");
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] <= 0 || (i > 0 && s[i] <= s[i - 1]))
      throw invalid_input("admissible word: S must be strictly increasing positive");
    if (c[i] < 0) throw invalid_input("admissible word: negative slot count");
  }
  const int kk = k();
  int prefix = 0;
  for (int i = 0; i < kk; ++i) {
    prefix += c[i];
    if (prefix > s[i] - (i + 1))
      throw invalid_input("admissible word: condition (*) violated");
  }
  if (prefix != s.back() - kk)
    throw invalid_input("admissible word: c must be a composition of s_k - k");
}

std::string AdmissibleWord::str() const {
  std::ostringstream os;
  for (int i = 0; i < k(); ++i) {
    if (i) os << ' ';
    os << s[i];
    for (int j = 0; j < c[i]; ++j) os << " .";
  }
  return os.str();
}

AdmissibleWord AdmissibleWord::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<int> s, c;
  std::string tok;
  while (is >> tok) {
    if (tok == ".") {
      if (s.empty()) throw invalid_input("admissible word cannot start with a slot");
      ++c.back();
    } else {
      try {
        s.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw invalid_input("bad admissible word token: " + tok);
      }
      c.push_back(0);
    }
  }
  if (s.empty()) throw invalid_input("empty admissible word");
  return AdmissibleWord(std::move(s), std::move(c));
}

int ics(const AdmissibleWord& w) {
  int a = 1;
  while (a < w.k() && w.c[a - 1] == 0) ++a;
  return a;
}

int equ(const AdmissibleWord& w) {
  int count = 0, prefix = 0;
  for (int i = 0; i < w.k(); ++i) {
    prefix += w.c[i];
    if (prefix == w.s[i] - (i + 1)) ++count;
  }
  return count;
}

std::vector<int> sp(const AdmissibleWord& w) {
  std::vector<int> out;
  int pos = 1;
  for (int i = 0; i < w.k(); ++i) {
    out.push_back(pos);
    pos += 1 + w.c[i];
  }
  return out;
}

std::vector<int> critical_indices(const AdmissibleWord& w) {
  std::vector<int> out;
  int prefix = 0;
  for (int i = 1; i < w.k(); ++i) {
    prefix += w.c[i - 1];
    const int bound = w.s[i - 1] - i;
    if (prefix < bound && bound <= prefix + w.c[i]) out.push_back(i);
  }
  return out;
}

namespace {

void extend_words(int n, std::vector<int>& s, std::vector<int>& c, int sum_c,
                  std::vector<AdmissibleWord>& out) {
  const int i = static_cast<int>(s.size());
  if (s.back() == n && sum_c == n - i) out.emplace_back(s, c);
  // Grow the slot run of the current letter; (*) bounds it by s_i - i.
  if (sum_c + 1 <= s.back() - i) {
    ++c.back();
    extend_words(n, s, c, sum_c + 1, out);
    --c.back();
  }
  // Or start the next letter (appending a larger letter keeps (*) intact).
  for (int next = s.back() + 1; next <= n; ++next) {
    s.push_back(next);
    c.push_back(0);
    extend_words(n, s, c, sum_c, out);
    s.pop_back();
    c.pop_back();
  }
}

}  // namespace

std::vector<AdmissibleWord> enumerate_admissible_words(int n) {
  std::vector<AdmissibleWord> out;
  if (n <= 0) return out;
  for (int first = 1; first <= n; ++first) {
    std::vector<int> s{first}, c{0};
    extend_words(n, s, c, 0, out);
  }
  return out;
}

}  // namespace comtet
