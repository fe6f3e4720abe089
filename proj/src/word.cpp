#include "plg/word.hpp"

#include <algorithm>

#include "plg/errors.hpp"

namespace plg {

char to_char(Letter l) {
  switch (l) {
    case Letter::A: return 'a';
    case Letter::AInv: return 'A';
    case Letter::B: return 'b';
    default: return 'B';
  }
}

Word Word::reduce(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (!out.empty() && out.back() == plg::inverse(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> ls;
  ls.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'a': ls.push_back(Letter::A); break;
      case 'A': ls.push_back(Letter::AInv); break;
      case 'b': ls.push_back(Letter::B); break;
      case 'B': ls.push_back(Letter::BInv); break;
      default: throw ParseError(std::string("bad letter '") + c + "' in word");
    }
  }
  return reduce(ls);
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = plg::inverse(l);
  return Word(std::move(out));
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(to_char(l));
  return s;
}

Word operator*(const Word& u, const Word& v) {
  std::vector<Letter> all = u.letters_;
  all.insert(all.end(), v.letters_.begin(), v.letters_.end());
  return Word::reduce(all);
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u.letters_ < v.letters_;
}

Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

Word power(const Word& w, int n) {
  Word base = n < 0 ? w.inverse() : w;
  Word out;
  for (int i = 0; i < (n < 0 ? -n : n); ++i) out = out * base;
  return out;
}

ReducedWordEnumerator::ReducedWordEnumerator(std::size_t max_len) : max_len_(max_len) {}

bool ReducedWordEnumerator::advance() {
  // increment cur_ as a mixed-radix counter, skipping cancelling neighbours
  std::size_t n = cur_.size();
  std::size_t i = n;
  while (i > 0) {
    --i;
    std::uint8_t v = cur_[i];
    bool placed = false;
    while (v < 3) {
      ++v;
      if (i == 0 || v != (cur_[i - 1] ^ 1u)) {
        placed = true;
        break;
      }
    }
    if (!placed) continue;
    cur_[i] = v;
    for (std::size_t j = i + 1; j < n; ++j) {
      std::uint8_t w = 0;
      if (w == (cur_[j - 1] ^ 1u)) ++w;
      cur_[j] = w;
    }
    return true;
  }
  return false;
}

bool ReducedWordEnumerator::next(Word& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else if (len_ == 0 || !advance()) {
    ++len_;
    if (len_ > max_len_) {
      done_ = true;
      return false;
    }
    cur_.assign(len_, 0);  // A A ... A is reduced and minimal
  }
  std::vector<Letter> ls(cur_.size());
  for (std::size_t i = 0; i < cur_.size(); ++i) ls[i] = static_cast<Letter>(cur_[i]);
  out = Word::reduce(ls);
  return true;
}

std::vector<Word> enumerate_reduced(std::size_t max_len) {
  std::vector<Word> out;
  ReducedWordEnumerator e(max_len);
  Word w;
  while (e.next(w)) out.push_back(w);
  return out;
}

std::uint64_t reduced_word_count(std::size_t n) {
  if (n == 0) return 1;
  std::uint64_t c = 4;
  for (std::size_t i = 1; i < n; ++i) c *= 3;
  return c;
}

}  // namespace plg
