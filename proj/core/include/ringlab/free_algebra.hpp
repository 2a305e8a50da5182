#pragma once

// Free algebras F_p<X> over a finite alphabet and their quotients by word
// ideals. Words are strings of letter indices; terms are kept sorted by
// (length, lexicographic) with zero coefficients pruned.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/linalg.hpp"

namespace ringlab {

using Word = std::string;  // letter indices as chars

struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

struct FreeAlgebraElem {
  std::map<Word, std::uint64_t, WordOrder> terms;
  bool is_zero() const { return terms.empty(); }
  std::size_t degree() const { return terms.empty() ? 0 : terms.rbegin()->first.size(); }
  friend bool operator==(const FreeAlgebraElem&, const FreeAlgebraElem&) = default;
};

class FreeAlgebra {
 public:
  /// `letters` are the names of the indeterminates, e.g. {"x","y"}.
  FreeAlgebra(std::uint64_t p, std::vector<std::string> letters);

  std::uint64_t characteristic() const noexcept { return p_; }
  const std::vector<std::string>& letters() const noexcept { return letters_; }

  FreeAlgebraElem scalar(std::int64_t c) const;
  FreeAlgebraElem word(const Word& w, std::uint64_t c = 1) const;
  FreeAlgebraElem letter(std::size_t i) const { return word(Word(1, static_cast<char>(i))); }
  FreeAlgebraElem add(const FreeAlgebraElem& a, const FreeAlgebraElem& b) const;
  FreeAlgebraElem neg(const FreeAlgebraElem& a) const;
  FreeAlgebraElem sub(const FreeAlgebraElem& a, const FreeAlgebraElem& b) const { return add(a, neg(b)); }
  FreeAlgebraElem mul(const FreeAlgebraElem& a, const FreeAlgebraElem& b) const;

  /// Polynomial syntax: sums, differences, products by juxtaposition or '*',
  /// powers '^n', parentheses, integer coefficients. Letters are matched
  /// longest first.
  FreeAlgebraElem parse(std::string_view text) const;
  std::string render(const FreeAlgebraElem& a) const;
  std::string render_word(const Word& w) const;
  /// Word for a concatenation of letter names.
  Word parse_word(std::string_view text) const;

 private:
  std::uint64_t p_;
  std::vector<std::string> letters_;
};

/// Two-sided ideal of a free algebra with decidable membership.
class WordIdeal {
 public:
  enum class Kind { factor, square_of_factor, linear_span };

  /// Words containing `w` as a factor.
  static WordIdeal factor(Word w);
  /// Words containing two non-overlapping occurrences of `w`; this is the
  /// monomial ideal <w>^2.
  static WordIdeal square_of_factor(Word w);
  /// Span of u*g*v over all words u, v, inside the algebra truncated at
  /// `absorb_degree`: every word of that length or longer already lies in
  /// the ideal. Verifies closure under one-letter multiplication.
  static WordIdeal linear_span(const FreeAlgebra& A, const std::vector<FreeAlgebraElem>& gens, unsigned absorb_degree);

  Kind kind() const noexcept { return kind_; }
  const Word& pattern() const noexcept { return pattern_; }
  bool contains_word(const Word& w) const;
  /// Dimension of the truncated algebra (linear ideals only).
  std::size_t truncated_dim() const noexcept { return words_.size(); }
  const linalg::Submodule& span() const { return *span_; }
  std::optional<unsigned> absorb_degree() const noexcept { return absorb_; }

  /// Normal form of `a` modulo the ideal.
  FreeAlgebraElem reduce(const FreeAlgebra& A, const FreeAlgebraElem& a) const;
  linalg::ModRow coordinates(const FreeAlgebraElem& a) const;

 private:
  WordIdeal(Kind k) : kind_(k) {}
  Kind kind_;
  Word pattern_;
  std::optional<unsigned> absorb_;
  std::vector<Word> words_;  // truncated basis in WordOrder
  std::map<Word, std::size_t, WordOrder> word_index_;
  std::shared_ptr<const linalg::Submodule> span_;
};

/// F_p<X>/I evaluated on normal forms. Products whose normal form still has
/// a word longer than the cap raise DegreeCapExceeded.
class FreeAlgebraQuotient {
 public:
  FreeAlgebraQuotient(FreeAlgebra algebra, WordIdeal ideal, unsigned cap, std::string recipe);

  const FreeAlgebra& algebra() const noexcept { return algebra_; }
  const WordIdeal& ideal() const noexcept { return ideal_; }
  unsigned cap() const noexcept { return cap_; }
  const std::string& recipe() const noexcept { return recipe_; }

  FreeAlgebraElem reduce(const FreeAlgebraElem& a) const;
  FreeAlgebraElem add(const FreeAlgebraElem& a, const FreeAlgebraElem& b) const;
  FreeAlgebraElem mul(const FreeAlgebraElem& a, const FreeAlgebraElem& b) const;
  FreeAlgebraElem pow(const FreeAlgebraElem& a, unsigned k) const;
  bool is_zero(const FreeAlgebraElem& a) const { return reduce(a).is_zero(); }
  bool in_ideal(const FreeAlgebraElem& a) const { return is_zero(a); }
  /// Least k <= cap with a^k = 0 in the quotient, if any.
  std::optional<unsigned> nilpotency_index(const FreeAlgebraElem& a) const;
  FreeAlgebraElem parse(std::string_view text) const { return algebra_.parse(text); }
  std::string render(const FreeAlgebraElem& a) const { return algebra_.render(reduce(a)); }

 private:
  FreeAlgebra algebra_;
  WordIdeal ideal_;
  unsigned cap_;
  std::string recipe_;
};

using FreeQuotientPtr = std::shared_ptr<const FreeAlgebraQuotient>;

/// Parses an alphabet: comma-separated names, or one letter per character.
std::vector<std::string> parse_alphabet(std::string_view text);

/// kind: "factor:<word>", "square:<word>" or "z2a" (the 400-dimensional
/// truncation over letters a0,a1,a2,b0,b1,b2,c).
FreeQuotientPtr free_algebra_quotient(std::uint64_t p, const std::string& alphabet, const std::string& kind, unsigned cap);

/// The 400-dimensional quotient of F_2 + F_2<a0,a1,a2,b0,b1,b2,c>.
FreeQuotientPtr z2a_quotient();

/// Monomial witness for failure of LNZS in a monomial quotient: words a, r, b
/// with b nilpotent, ab = 0 and arb != 0, all of length <= max_len (b, a) and
/// r a single letter. Searches in (|b|, b, |a|, a, r) order.
struct MonomialLnzsWitness {
  Word a, r, b;
  unsigned b_index;
};
std::optional<MonomialLnzsWitness> monomial_lnzs_search(const FreeAlgebraQuotient& Q, unsigned max_len);

}  // namespace ringlab
