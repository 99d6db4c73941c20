#include "pcqi/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace pcqi {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word concat(std::initializer_list<const Word*> parts) {
  Word out;
  for (const Word* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

PcGroup::PcGroup(SimplicialGraph graph) : graph_(std::move(graph)) {
  stars_.reserve(graph_.order());
  for (VertexId v = 0; v < graph_.order(); ++v) stars_.push_back(star(graph_, v));
}

void PcGroup::check(const Word& w) const {
  for (const Letter& l : w) {
    if (l.generator >= rank()) throw WordError("letter references unknown generator");
    if (l.exponent != 1 && l.exponent != -1) throw WordError("letter exponent must be +1 or -1");
  }
}

Word PcGroup::parse(std::string_view text) const {
  Word out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    std::string name = token;
    long power = 1;
    if (const auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      const std::string exp = token.substr(caret + 1);
      const auto* first = exp.data();
      const auto* last = exp.data() + exp.size();
      const auto [ptr, ec] = std::from_chars(first, last, power);
      if (ec != std::errc{} || ptr != last || power == 0)
        throw WordError("bad exponent in token '" + token + "'");
    }
    const auto v = graph_.find(name);
    if (!v) throw WordError("unknown generator '" + name + "'");
    const int sign = power > 0 ? 1 : -1;
    for (long i = 0; i < (power > 0 ? power : -power); ++i) out.push_back(Letter{*v, sign});
  }
  return out;
}

std::string PcGroup::format(const Word& w) const {
  check(w);
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += graph_.name(l.generator);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

Word PcGroup::generator(VertexId v, int exponent) const {
  if (v >= rank()) throw WordError("unknown generator index");
  if (exponent == 0) return {};
  const int sign = exponent > 0 ? 1 : -1;
  return Word(static_cast<std::size_t>(exponent > 0 ? exponent : -exponent), Letter{v, sign});
}

Word PcGroup::reduce(const Word& w) const {
  check(w);
  Word out;
  out.reserve(w.size());
  for (const Letter& x : w) {
    bool cancelled = false;
    // Look for x^-1 that can be shuffled to the end of the reduced prefix.
    for (std::size_t j = out.size(); j-- > 0;) {
      const Letter& y = out[j];
      if (y.generator == x.generator) {
        if (y.exponent == -x.exponent) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
          cancelled = true;
        }
        break;
      }
      if (!letters_commute(y.generator, x.generator)) break;
    }
    if (!cancelled) out.push_back(x);
  }
  return out;
}

// Greedy lex-least linearisation of a reduced trace: repeatedly emit the
// smallest letter with no pending dependent predecessor.
Word PcGroup::canonical_order(Word reduced) const {
  const std::size_t n = reduced.size();
  std::vector<std::size_t> pending(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!letters_commute(reduced[i].generator, reduced[j].generator)) ++pending[i];
  std::vector<char> done(n, 0);
  Word out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && pending[i] == 0 && (pick == n || reduced[i] < reduced[pick])) pick = i;
    done[pick] = 1;
    out.push_back(reduced[pick]);
    for (std::size_t i = pick + 1; i < n; ++i)
      if (!done[i] && !letters_commute(reduced[i].generator, reduced[pick].generator))
        --pending[i];
  }
  return out;
}

NormalForm PcGroup::normal_form(const Word& w) const {
  return NormalForm(canonical_order(reduce(w)));
}

bool PcGroup::equal(const Word& u, const Word& w) const {
  return reduce(concat(inverse(u), w)).empty();
}

bool PcGroup::commute(const Word& u, const Word& w) const {
  const Word ui = inverse(u);
  const Word wi = inverse(w);
  return reduce(concat({&ui, &wi, &u, &w})).empty();
}

bool PcGroup::supported_in(const Word& w, const VertexSet& allowed) const {
  for (const Letter& l : reduce(w))
    if (!std::binary_search(allowed.begin(), allowed.end(), l.generator)) return false;
  return true;
}

NormalForm PcGroup::coset_canonical(VertexId v, const Word& g) const {
  if (v >= rank()) throw WordError("unknown generator index");
  const VertexSet& st = stars_[v];
  Word r = reduce(g);
  // Strip any letter of St(v) that can be moved to the front.
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (std::size_t i = 0; i < r.size() && !stripped; ++i) {
      if (!std::binary_search(st.begin(), st.end(), r[i].generator)) continue;
      bool front = true;
      for (std::size_t j = 0; j < i && front; ++j)
        if (!letters_commute(r[i].generator, r[j].generator)) front = false;
      if (front) {
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
        stripped = true;
      }
    }
  }
  return NormalForm(canonical_order(std::move(r)));
}

Word PcGroup::power_endomorphism(int power, const Word& w) const {
  if (power < 1) throw WordError("power endomorphism needs N >= 1");
  check(w);
  Word out;
  out.reserve(w.size() * static_cast<std::size_t>(power));
  for (const Letter& l : w)
    for (int i = 0; i < power; ++i) out.push_back(l);
  return out;
}

Word PcGroup::conjugate(VertexId v, const Word& by) const {
  const Word gi = inverse(by);
  const Word x = generator(v);
  return concat({&gi, &x, &by});
}

}  // namespace pcqi
