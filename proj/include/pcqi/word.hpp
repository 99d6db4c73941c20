#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "pcqi/graph.hpp"

namespace pcqi {

class WordError : public Error {
 public:
  using Error::Error;
};

// A generator or its inverse. Letters order by generator, then a before a^-1.
struct Letter {
  VertexId generator = 0;
  int exponent = 1;  // +1 or -1

  Letter inverse() const { return Letter{generator, -exponent}; }
  std::size_t key() const { return generator * 2 + (exponent < 0 ? 1 : 0); }

  bool operator==(const Letter&) const = default;
  std::strong_ordering operator<=>(const Letter& other) const { return key() <=> other.key(); }
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word concat(std::initializer_list<const Word*> parts);

// Canonical representative of a group element: fully reduced and the
// lexicographically least word among its commutation shuffles. Only PcGroup
// constructs non-trivial values.
class NormalForm {
 public:
  NormalForm() = default;

  const Word& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const NormalForm&) const = default;
  std::strong_ordering operator<=>(const NormalForm& other) const {
    return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(),
                                                  other.letters_.begin(), other.letters_.end());
  }

 private:
  friend class PcGroup;
  explicit NormalForm(Word letters) : letters_(std::move(letters)) {}
  Word letters_;
};

// The partially commutative group presented by a simplicial graph: one
// generator per vertex, adjacent generators commute.
class PcGroup {
 public:
  explicit PcGroup(SimplicialGraph graph);

  const SimplicialGraph& graph() const { return graph_; }
  std::size_t rank() const { return graph_.order(); }

  // Distinct adjacent generators. A generator is treated as not commuting with
  // itself for shuffling purposes, which is what the trace order needs.
  bool letters_commute(VertexId a, VertexId b) const {
    return a != b && graph_.adjacent(a, b);
  }

  // Whitespace-separated tokens `a`, `a^-1`, or `a^k` for any nonzero k.
  // The empty string and "1" denote the identity.
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;
  std::string format(const NormalForm& w) const { return format(w.letters()); }

  Word generator(VertexId v, int exponent = 1) const;

  // Free and commutation-assisted cancellation only; letter order is not
  // canonicalised.
  Word reduce(const Word& w) const;

  NormalForm normal_form(const Word& w) const;
  bool equal(const Word& u, const Word& w) const;
  bool is_trivial(const Word& w) const { return reduce(w).empty(); }

  bool commute(const Word& u, const Word& w) const;

  // True iff the normal form only uses generators from `allowed`.
  bool supported_in(const Word& w, const VertexSet& allowed) const;

  // Canonical representative of the coset <St(v)> g; v^g depends only on it.
  NormalForm coset_canonical(VertexId v, const Word& g) const;

  // v -> v^N letterwise.
  Word power_endomorphism(int power, const Word& w) const;

  // g^-1 v g
  Word conjugate(VertexId v, const Word& by) const;

 private:
  void check(const Word& w) const;
  Word canonical_order(Word reduced) const;

  SimplicialGraph graph_;
  std::vector<VertexSet> stars_;
};

}  // namespace pcqi
