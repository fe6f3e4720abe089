#pragma once

// Generic Brin-Squier witness search for groups acting on a line segment by
// increasing maps. Shared by the PL(I) classifier and the circle classifier
// (which works in a chart where the fixed arc contains infinity).

#include <functional>
#include <map>
#include <set>
#include <optional>
#include <string>
#include <vector>

#include "plg/interval_set.hpp"
#include "plg/word.hpp"

namespace plg::detail {

template <class L>
concept LineGroup = GroupOps<L> && requires(const L& line, const typename L::element_type& x,
                                            const Rational& r) {
  { line.is_identity(x) } -> std::convertible_to<bool>;
  { line.support(x) } -> std::convertible_to<IntervalSet>;
  { line.apply(x, r) } -> std::convertible_to<Rational>;
};

/// Shortest (then lexicographically first) word h of length 1..depth with
/// h(a) > b. Layers are built by extending on the left, so h(a) is reused.
/// Words reaching a value already seen are dropped; within a layer the
/// lexicographically first word per value is kept, which preserves the result.
template <LineGroup L>
std::optional<Word> find_displacement_generic(const L& line, const typename L::element_type& f,
                                              const typename L::element_type& g,
                                              const Rational& a, const Rational& b, int depth) {
  using E = typename L::element_type;
  const E gens[4] = {f, line.invert(f), g, line.invert(g)};
  struct Node {
    std::vector<Letter> letters;  // letters[0] applied last
    Rational value;
  };
  std::set<Rational> seen{a};
  std::vector<Node> layer{{{}, a}};
  for (int len = 1; len <= depth && !layer.empty(); ++len) {
    std::map<Rational, Node> next;
    for (const auto& n : layer) {
      for (int li = 0; li < 4; ++li) {
        Letter l = static_cast<Letter>(li);
        if (!n.letters.empty() && n.letters.front() == inverse(l)) continue;
        Rational v = line.apply(gens[li], n.value);
        if (seen.count(v)) continue;
        std::vector<Letter> letters;
        letters.reserve(n.letters.size() + 1);
        letters.push_back(l);
        letters.insert(letters.end(), n.letters.begin(), n.letters.end());
        auto it = next.find(v);
        if (it == next.end()) {
          next.emplace(v, Node{std::move(letters), v});
        } else if (letters < it->second.letters) {
          it->second.letters = std::move(letters);
        }
      }
    }
    const Node* best = nullptr;
    for (const auto& [v, n] : next) {
      if (v > b && (best == nullptr || n.letters < best->letters)) best = &n;
    }
    if (best != nullptr) return Word::reduce(best->letters);
    layer.clear();
    for (auto& [v, n] : next) {
      seen.insert(v);
      layer.push_back(std::move(n));
    }
  }
  return std::nullopt;
}

struct ZkOutcome {
  enum class Status { Found, Abelian, Exhausted } status = Status::Exhausted;
  Word base;
  std::vector<Word> displacements;
  std::vector<Word> witnesses;
  std::vector<IntervalSet> supports;
  std::vector<std::string> log;
  std::string reason;
};

/// Exact re-verification of a witness family: nontrivial, pairwise commuting,
/// pairwise interior-disjoint supports.
template <LineGroup L>
bool verify_witnesses(const L& line, const typename L::element_type& f,
                      const typename L::element_type& g, const std::vector<Word>& words,
                      std::vector<IntervalSet>* supports_out, std::vector<std::string>& log) {
  using E = typename L::element_type;
  std::vector<E> vals;
  std::vector<IntervalSet> sups;
  bool ok = true;
  for (const auto& w : words) {
    vals.push_back(evaluate_word(w, f, g, line));
    sups.push_back(line.support(vals.back()));
    if (line.is_identity(vals.back())) {
      log.push_back("witness " + w.str() + " evaluates to the identity");
      ok = false;
    } else {
      log.push_back("witness " + w.str() + " nontrivial, support " + sups.back().str());
    }
  }
  for (std::size_t i = 0; i < vals.size(); ++i) {
    for (std::size_t j = i + 1; j < vals.size(); ++j) {
      E c = line.compose(line.compose(vals[i], vals[j]),
                         line.compose(line.invert(vals[i]), line.invert(vals[j])));
      bool commute = line.is_identity(c);
      bool disjoint = interiors_disjoint(sups[i], sups[j]);
      log.push_back("pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                    "): commutator " + (commute ? "is identity" : "NOT identity") +
                    ", supports " + (disjoint ? "interior-disjoint" : "OVERLAP"));
      ok = ok && commute && disjoint;
    }
  }
  if (supports_out != nullptr) *supports_out = std::move(sups);
  return ok;
}

/// Builds k conjugates h_i w h_i^-1 of a base word w whose supports march to
/// the right. `accept_base` decides whether a support may serve as base.
template <LineGroup L>
ZkOutcome zk_search(const L& line, const typename L::element_type& f,
                    const typename L::element_type& g, int k, int depth,
                    const std::function<bool(const IntervalSet&)>& accept_base,
                    int max_base_attempts = 32) {
  using E = typename L::element_type;
  ZkOutcome out;
  Word comm = Word::parse("abAB");
  if (line.is_identity(evaluate_word(comm, f, g, line))) {
    out.status = ZkOutcome::Status::Abelian;
    out.reason = "[f,g] is the identity; no nonabelian base word exists";
    out.log.push_back("commutator abAB evaluates to the identity");
    return out;
  }
  if (depth <= 0) {
    out.reason = "search budget is zero";
    return out;
  }
  const E gens[4] = {f, line.invert(f), g, line.invert(g)};
  // Breadth-first over reduced words; layer values are extended on the right,
  // value(w x) = value(w) o x, which keeps each layer in enumeration order.
  std::vector<std::pair<Word, E>> layer{{Word(), line.identity()}};
  int attempts = 0;
  for (int len = 1; len <= depth; ++len) {
    std::vector<std::pair<Word, E>> next;
    next.reserve(layer.size() * 3);
    for (const auto& [w, v] : layer) {
      for (int li = 0; li < 4; ++li) {
        Letter l = static_cast<Letter>(li);
        if (!w.empty() && w.letters().back() == inverse(l)) continue;
        next.emplace_back(w * Word::letter(l), line.compose(v, gens[li]));
      }
    }
    for (const auto& [w, v] : next) {
      if (line.is_identity(v)) continue;
      IntervalSet s = line.support(v);
      if (!accept_base(s)) continue;
      if (++attempts > max_base_attempts) {
        out.reason = "base-word attempts exhausted";
        return out;
      }
      // Each witness is the previous one pushed off its own support, so the
      // supports march right; hs holds the accumulated conjugators.
      IntervalSet prev = s;
      Word acc;
      std::vector<Word> ws{w}, hs;
      for (int i = 1; i < k; ++i) {
        auto h = find_displacement_generic(line, f, g, *prev.min(), *prev.max(), depth);
        if (!h) break;
        acc = *h * acc;
        Word wi = acc * w * acc.inverse();
        IntervalSet si = line.support(evaluate_word(wi, f, g, line));
        if (si.empty()) break;
        prev = si;
        hs.push_back(acc);
        ws.push_back(wi);
      }
      if (static_cast<int>(ws.size()) < k) continue;
      std::vector<std::string> log;
      log.push_back("base word " + w.str() + " with support " + s.str());
      for (const auto& h : hs) log.push_back("displacement " + h.str());
      std::vector<IntervalSet> sups;
      if (!verify_witnesses(line, f, g, ws, &sups, log)) continue;
      out.status = ZkOutcome::Status::Found;
      out.base = w;
      out.displacements = std::move(hs);
      out.witnesses = std::move(ws);
      out.supports = std::move(sups);
      out.log = std::move(log);
      return out;
    }
    layer = std::move(next);
  }
  out.reason = "no witness family within depth " + std::to_string(depth);
  return out;
}

}  // namespace plg::detail
