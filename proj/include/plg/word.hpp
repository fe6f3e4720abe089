#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace plg {

/// A generator of the rank-2 free group or its inverse. The numeric order
/// A < A^-1 < B < B^-1 is the enumeration order.
enum class Letter : std::uint8_t { A = 0, AInv = 1, B = 2, BInv = 3 };

constexpr Letter inverse(Letter l) {
  return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1u);
}
constexpr int generator(Letter l) { return static_cast<std::uint8_t>(l) >> 1; }
constexpr int sign(Letter l) { return (static_cast<std::uint8_t>(l) & 1u) ? -1 : 1; }
constexpr Letter make_letter(int gen, int sgn) {
  return static_cast<Letter>(gen * 2 + (sgn < 0 ? 1 : 0));
}

char to_char(Letter l);

/// A freely reduced word t_k ... t_1. letters()[0] is t_k (applied last),
/// letters().back() is t_1 (applied first). Text form uses a, A, b, B with
/// uppercase meaning inverse, leftmost character first.
class Word {
 public:
  Word() = default;

  /// Freely reduces the given letters.
  static Word reduce(const std::vector<Letter>& letters);
  /// Parses a string over {a,A,b,B}; the result is reduced. Throws ParseError.
  static Word parse(std::string_view text);
  static Word letter(Letter l) { return Word({l}); }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// t_i for 1 <= i <= size(), in the right-to-left numbering.
  Letter t(std::size_t i) const { return letters_[letters_.size() - i]; }

  Word inverse() const;
  std::string str() const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;
  /// Length first, then lexicographic in the letter order.
  friend bool shortlex_less(const Word& u, const Word& v);

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;
};

/// u v u^-1 v^-1, reduced.
Word commutator(const Word& u, const Word& v);
Word power(const Word& w, int n);

/// Streams every reduced word of length <= max_len exactly once in
/// length-then-lexicographic order.
class ReducedWordEnumerator {
 public:
  explicit ReducedWordEnumerator(std::size_t max_len);
  /// Returns false once exhausted.
  bool next(Word& out);

 private:
  bool advance();
  std::size_t max_len_;
  std::size_t len_ = 0;
  std::vector<std::uint8_t> cur_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Word> enumerate_reduced(std::size_t max_len);

/// Number of reduced words of length exactly n.
std::uint64_t reduced_word_count(std::size_t n);

/// The group-operations contract a client group supplies for word evaluation.
template <class Ops>
concept GroupOps = requires(const Ops& ops, const typename Ops::element_type& x) {
  { ops.identity() } -> std::convertible_to<typename Ops::element_type>;
  { ops.compose(x, x) } -> std::convertible_to<typename Ops::element_type>;
  { ops.invert(x) } -> std::convertible_to<typename Ops::element_type>;
  { ops.equals(x, x) } -> std::convertible_to<bool>;
};

/// t_k o ... o t_1 with A -> f, B -> g.
template <GroupOps Ops>
typename Ops::element_type evaluate_word(const Word& w,
                                         const typename Ops::element_type& f,
                                         const typename Ops::element_type& g,
                                         const Ops& ops) {
  using E = typename Ops::element_type;
  if (w.empty()) return ops.identity();
  bool need_finv = false, need_ginv = false;
  for (Letter l : w.letters()) {
    need_finv |= l == Letter::AInv;
    need_ginv |= l == Letter::BInv;
  }
  E finv = need_finv ? ops.invert(f) : E{};
  E ginv = need_ginv ? ops.invert(g) : E{};
  auto value = [&](Letter l) -> const E& {
    switch (l) {
      case Letter::A: return f;
      case Letter::AInv: return finv;
      case Letter::B: return g;
      default: return ginv;
    }
  };
  E acc = value(w.letters()[0]);
  for (std::size_t i = 1; i < w.size(); ++i) acc = ops.compose(acc, value(w.letters()[i]));
  return acc;
}

}  // namespace plg
