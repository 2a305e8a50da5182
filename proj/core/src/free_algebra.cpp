#include "ringlab/free_algebra.hpp"

#include <algorithm>
#include <cctype>

#include "ringlab/error.hpp"
#include "ringlab/modarith.hpp"

namespace ringlab {

// ---- FreeAlgebra --------------------------------------------------------

FreeAlgebra::FreeAlgebra(std::uint64_t p, std::vector<std::string> letters) : p_(p), letters_(std::move(letters)) {
  if (!is_prime(p)) throw PreconditionError("free algebra: characteristic must be prime");
  if (letters_.empty() || letters_.size() > 64) throw PreconditionError("free algebra: need 1 to 64 letters");
  for (const auto& l : letters_)
    if (l.empty()) throw PreconditionError("free algebra: empty letter name");
}

FreeAlgebraElem FreeAlgebra::scalar(std::int64_t c) const { return word(Word{}, static_cast<std::uint64_t>(((c % static_cast<std::int64_t>(p_)) + static_cast<std::int64_t>(p_)) % static_cast<std::int64_t>(p_))); }

FreeAlgebraElem FreeAlgebra::word(const Word& w, std::uint64_t c) const {
  FreeAlgebraElem e;
  if (c % p_) e.terms.emplace(w, c % p_);
  return e;
}

FreeAlgebraElem FreeAlgebra::add(const FreeAlgebraElem& a, const FreeAlgebraElem& b) const {
  FreeAlgebraElem r = a;
  for (const auto& [w, c] : b.terms) {
    auto [it, fresh] = r.terms.emplace(w, c);
    if (!fresh) {
      it->second = (it->second + c) % p_;
      if (it->second == 0) r.terms.erase(it);
    }
  }
  return r;
}

FreeAlgebraElem FreeAlgebra::neg(const FreeAlgebraElem& a) const {
  FreeAlgebraElem r;
  for (const auto& [w, c] : a.terms) r.terms.emplace(w, (p_ - c) % p_);
  return r;
}

FreeAlgebraElem FreeAlgebra::mul(const FreeAlgebraElem& a, const FreeAlgebraElem& b) const {
  FreeAlgebraElem r;
  for (const auto& [u, c] : a.terms)
    for (const auto& [v, d] : b.terms) {
      const std::uint64_t k = c * d % p_;
      auto [it, fresh] = r.terms.emplace(u + v, k);
      if (!fresh) {
        it->second = (it->second + k) % p_;
        if (it->second == 0) r.terms.erase(it);
      }
    }
  return r;
}

std::string FreeAlgebra::render_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (char c : w) s += letters_[static_cast<unsigned char>(c)];
  return s;
}

std::string FreeAlgebra::render(const FreeAlgebraElem& a) const {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : a.terms) {
    if (!s.empty()) s += "+";
    if (w.empty()) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c) + "*";
    s += render_word(w);
  }
  return s;
}

namespace {

class PolyParser {
 public:
  PolyParser(const FreeAlgebra& A, std::string_view text) : A_(A), s_(text) {}

  FreeAlgebraElem run() {
    auto e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PreconditionError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  FreeAlgebraElem sum() {
    FreeAlgebraElem acc;
    bool negate = false;
    if (peek('-')) {
      ++pos_;
      negate = true;
    } else if (peek('+')) {
      ++pos_;
    }
    acc = term();
    if (negate) acc = A_.neg(acc);
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = A_.add(acc, term());
      } else if (peek('-')) {
        ++pos_;
        acc = A_.sub(acc, term());
      } else {
        return acc;
      }
    }
  }
  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || match_letter().has_value();
  }
  FreeAlgebraElem term() {
    FreeAlgebraElem acc = power();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = A_.mul(acc, power());
      } else if (starts_atom()) {
        acc = A_.mul(acc, power());
      } else {
        return acc;
      }
    }
  }
  FreeAlgebraElem power() {
    FreeAlgebraElem base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    const auto n = integer();
    FreeAlgebraElem r = A_.scalar(1);
    for (std::uint64_t i = 0; i < n; ++i) r = A_.mul(r, base);
    return r;
  }
  std::uint64_t integer() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (1ull << 40)) fail("integer too large");
      ++pos_;
    }
    return v;
  }
  std::optional<std::size_t> match_letter() const {
    std::optional<std::size_t> best;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < A_.letters().size(); ++i) {
      const auto& l = A_.letters()[i];
      if (l.size() > best_len && s_.substr(pos_, l.size()) == l) {
        best = i;
        best_len = l.size();
      }
    }
    return best;
  }
  FreeAlgebraElem atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] == '(') {
      ++pos_;
      auto e = sum();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) return A_.scalar(static_cast<std::int64_t>(integer() % A_.characteristic()));
    if (auto l = match_letter()) {
      pos_ += A_.letters()[*l].size();
      return A_.letter(*l);
    }
    fail("unknown symbol");
  }

  const FreeAlgebra& A_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

bool has_factor_from(const Word& w, const Word& f, std::size_t from, std::size_t* at) {
  const auto p = w.find(f, from);
  if (p == Word::npos) return false;
  if (at) *at = p;
  return true;
}

void words_up_to(std::size_t letters, unsigned max_len, std::vector<Word>& out) {
  out.push_back(Word{});
  std::size_t begin = 0;
  for (unsigned len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t l = 0; l < letters; ++l) out.push_back(out[i] + static_cast<char>(l));
    begin = end;
  }
}

}  // namespace

FreeAlgebraElem FreeAlgebra::parse(std::string_view text) const { return PolyParser(*this, text).run(); }

Word FreeAlgebra::parse_word(std::string_view text) const {
  const FreeAlgebraElem e = parse(text);
  if (e.terms.size() != 1 || e.terms.begin()->second != 1)
    throw PreconditionError("expected a single word, got " + std::string(text));
  return e.terms.begin()->first;
}

// ---- WordIdeal ----------------------------------------------------------

WordIdeal WordIdeal::factor(Word w) {
  if (w.empty()) throw PreconditionError("factor ideal needs a nonempty word");
  WordIdeal I(Kind::factor);
  I.pattern_ = std::move(w);
  return I;
}

WordIdeal WordIdeal::square_of_factor(Word w) {
  if (w.empty()) throw PreconditionError("factor ideal needs a nonempty word");
  WordIdeal I(Kind::square_of_factor);
  I.pattern_ = std::move(w);
  return I;
}

bool WordIdeal::contains_word(const Word& w) const {
  switch (kind_) {
    case Kind::factor:
      return has_factor_from(w, pattern_, 0, nullptr);
    case Kind::square_of_factor: {
      // Leftmost occurrence first is optimal for equal-length intervals.
      std::size_t at = 0;
      if (!has_factor_from(w, pattern_, 0, &at)) return false;
      return has_factor_from(w, pattern_, at + pattern_.size(), nullptr);
    }
    case Kind::linear_span:
      if (w.size() >= *absorb_) return true;
      {
        linalg::ModRow v(words_.size(), 0);
        v[word_index_.at(w)] = 1;
        return span_->contains(v);
      }
  }
  return false;
}

linalg::ModRow WordIdeal::coordinates(const FreeAlgebraElem& a) const {
  if (kind_ != Kind::linear_span) throw PreconditionError("coordinates are defined for linear ideals only");
  linalg::ModRow v(words_.size(), 0);
  for (const auto& [w, c] : a.terms)
    if (w.size() < *absorb_) v[word_index_.at(w)] = c;
  return v;
}

WordIdeal WordIdeal::linear_span(const FreeAlgebra& A, const std::vector<FreeAlgebraElem>& gens, unsigned absorb_degree) {
  if (absorb_degree < 1) throw PreconditionError("linear ideal: absorb degree must be positive");
  std::uint64_t total = 1, layer = 1;
  for (unsigned k = 1; k < absorb_degree; ++k) {
    layer *= A.letters().size();
    total += layer;
    if (total > 100000) throw ResourceLimit("linear ideal: truncated algebra too large");
  }
  WordIdeal I(Kind::linear_span);
  I.absorb_ = absorb_degree;
  words_up_to(A.letters().size(), absorb_degree - 1, I.words_);
  for (std::size_t i = 0; i < I.words_.size(); ++i) I.word_index_.emplace(I.words_[i], i);

  std::vector<linalg::ModRow> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const std::size_t low = g.terms.begin()->first.size();
    if (low >= absorb_degree) continue;
    const unsigned room = absorb_degree - 1 - static_cast<unsigned>(low);
    for (std::size_t ui = 0; ui < I.words_.size() && I.words_[ui].size() <= room; ++ui)
      for (std::size_t vi = 0; vi < I.words_.size() && I.words_[ui].size() + I.words_[vi].size() <= room; ++vi) {
        const auto e = A.mul(A.mul(A.word(I.words_[ui]), g), A.word(I.words_[vi]));
        rows.push_back(I.coordinates(e));
      }
  }
  I.span_ = std::make_shared<const linalg::Submodule>(A.characteristic(), I.words_.size(), std::move(rows));

  // Closure under multiplication by single letters on both sides.
  for (const auto& row : I.span_->basis()) {
    FreeAlgebraElem e;
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k]) e.terms.emplace(I.words_[k], row[k]);
    for (std::size_t l = 0; l < A.letters().size(); ++l) {
      if (!I.span_->contains(I.coordinates(A.mul(A.letter(l), e))) || !I.span_->contains(I.coordinates(A.mul(e, A.letter(l)))))
        throw NotAnIdeal("linear ideal is not closed under multiplication by " + A.letters()[l]);
    }
  }
  return I;
}

FreeAlgebraElem WordIdeal::reduce(const FreeAlgebra& A, const FreeAlgebraElem& a) const {
  if (kind_ != Kind::linear_span) {
    FreeAlgebraElem r;
    for (const auto& [w, c] : a.terms)
      if (!contains_word(w)) r.terms.emplace(w, c);
    return r;
  }
  const auto rem = span_->reduce(coordinates(a));
  FreeAlgebraElem r;
  for (std::size_t k = 0; k < rem.size(); ++k)
    if (rem[k] % A.characteristic()) r.terms.emplace(words_[k], rem[k]);
  return r;
}

// ---- quotient -----------------------------------------------------------

FreeAlgebraQuotient::FreeAlgebraQuotient(FreeAlgebra algebra, WordIdeal ideal, unsigned cap, std::string recipe)
    : algebra_(std::move(algebra)), ideal_(std::move(ideal)), cap_(cap), recipe_(std::move(recipe)) {
  if (cap_ < 1) throw PreconditionError("degree cap must be positive");
}

FreeAlgebraElem FreeAlgebraQuotient::reduce(const FreeAlgebraElem& a) const {
  FreeAlgebraElem r = ideal_.reduce(algebra_, a);
  if (r.degree() > cap_)
    throw DegreeCapExceeded("degree " + std::to_string(r.degree()) + " exceeds the cap " + std::to_string(cap_) + " of " +
                            recipe_);
  return r;
}

FreeAlgebraElem FreeAlgebraQuotient::add(const FreeAlgebraElem& a, const FreeAlgebraElem& b) const {
  return reduce(algebra_.add(a, b));
}

FreeAlgebraElem FreeAlgebraQuotient::mul(const FreeAlgebraElem& a, const FreeAlgebraElem& b) const {
  return reduce(algebra_.mul(a, b));
}

FreeAlgebraElem FreeAlgebraQuotient::pow(const FreeAlgebraElem& a, unsigned k) const {
  FreeAlgebraElem r = algebra_.scalar(1);
  for (unsigned i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::optional<unsigned> FreeAlgebraQuotient::nilpotency_index(const FreeAlgebraElem& a) const {
  try {
    FreeAlgebraElem p = reduce(a);
    for (unsigned k = 1; k <= cap_; ++k) {
      if (p.is_zero()) return k;
      p = mul(p, a);
    }
  } catch (const DegreeCapExceeded&) {
  }
  return std::nullopt;
}

std::vector<std::string> parse_alphabet(std::string_view text) {
  std::vector<std::string> out;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    for (;;) {
      const auto comma = text.find(',', start);
      std::string name(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      name.erase(std::remove_if(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); }), name.end());
      out.push_back(name);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) out.emplace_back(1, c);
  }
  std::vector<std::string> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("alphabet has repeated letters");
  return out;
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::vector<FreeAlgebraElem> z2a_generators(const FreeAlgebra& A) {
  std::vector<FreeAlgebraElem> g;
  auto P = [&](const char* s) { return A.parse(s); };
  for (const char* s : {"a0b0", "a0b1+a1b0", "a0b2+a1b1+a2b0", "a1b2+a2b1", "a2b2", "b0a0", "b0a1+b1a0",
                        "b0a2+b1a1+b2a0", "b1a2+b2a1", "b2a2"})
    g.push_back(P(s));
  // Families with a free middle factor r: single letters suffice, since the
  // ideal is linear in r and longer r lands in degree >= 4.
  const FreeAlgebraElem sa = P("a0+a1+a2"), sb = P("b0+b1+b2");
  for (std::size_t l = 0; l < A.letters().size(); ++l) {
    const auto r = A.letter(l);
    g.push_back(A.mul(A.mul(P("a0"), r), P("b0")));
    g.push_back(A.mul(A.mul(P("a2"), r), P("b2")));
    g.push_back(A.mul(A.mul(P("b0"), r), P("a0")));
    g.push_back(A.mul(A.mul(P("b2"), r), P("a2")));
    g.push_back(A.mul(A.mul(sa, r), sb));
    g.push_back(A.mul(A.mul(sb, r), sa));
  }
  return g;
}

}  // namespace

FreeQuotientPtr z2a_quotient() {
  FreeAlgebra A(2, {"a0", "a1", "a2", "b0", "b1", "b2", "c"});
  auto I = WordIdeal::linear_span(A, z2a_generators(A), 4);
  return std::make_shared<const FreeAlgebraQuotient>(std::move(A), std::move(I), 6,
                                                     "FreeQuot(2,\"a0,a1,a2,b0,b1,b2,c\",\"z2a\",6)");
}

FreeQuotientPtr free_algebra_quotient(std::uint64_t p, const std::string& alphabet, const std::string& kind, unsigned cap) {
  const std::string recipe =
      "FreeQuot(" + std::to_string(p) + "," + quoted(alphabet) + "," + quoted(kind) + "," + std::to_string(cap) + ")";
  if (kind == "z2a") {
    if (p != 2 || parse_alphabet(alphabet) != std::vector<std::string>{"a0", "a1", "a2", "b0", "b1", "b2", "c"})
      throw PreconditionError("z2a needs p = 2 and alphabet \"a0,a1,a2,b0,b1,b2,c\"");
    FreeAlgebra A(2, parse_alphabet(alphabet));
    auto I = WordIdeal::linear_span(A, z2a_generators(A), 4);
    return std::make_shared<const FreeAlgebraQuotient>(std::move(A), std::move(I), cap, recipe);
  }
  FreeAlgebra A(p, parse_alphabet(alphabet));
  const auto colon = kind.find(':');
  if (colon == std::string::npos) throw PreconditionError("ideal kind must be factor:<word>, square:<word> or z2a");
  const std::string head = kind.substr(0, colon);
  const Word w = A.parse_word(kind.substr(colon + 1));
  if (head == "factor") return std::make_shared<const FreeAlgebraQuotient>(A, WordIdeal::factor(w), cap, recipe);
  if (head == "square") return std::make_shared<const FreeAlgebraQuotient>(A, WordIdeal::square_of_factor(w), cap, recipe);
  throw PreconditionError("unknown ideal kind '" + head + "'");
}

std::optional<MonomialLnzsWitness> monomial_lnzs_search(const FreeAlgebraQuotient& Q, unsigned max_len) {
  const WordIdeal& I = Q.ideal();
  if (I.kind() == WordIdeal::Kind::linear_span) throw PreconditionError("monomial search needs a monomial ideal");
  const std::size_t k = Q.algebra().letters().size();
  std::vector<Word> words;
  words_up_to(k, max_len, words);
  const std::size_t plen = I.pattern().size();
  for (const Word& b : words) {
    if (b.empty() || I.contains_word(b)) continue;
    // Any occurrence of the pattern spans at most plen/|b| + 2 copies of b.
    const unsigned reach = static_cast<unsigned>(2 * (plen / b.size() + 2));
    unsigned index = 0;
    Word power = b;
    for (unsigned e = 1; e <= reach; ++e, power += b)
      if (I.contains_word(power)) {
        index = e;
        break;
      }
    if (index == 0) continue;
    for (const Word& a : words) {
      if (a.empty() || I.contains_word(a) || !I.contains_word(a + b)) continue;
      for (std::size_t l = 0; l < k; ++l) {
        const Word r(1, static_cast<char>(l));
        if (!I.contains_word(a + r + b)) return MonomialLnzsWitness{a, r, b, index};
      }
    }
  }
  return std::nullopt;
}

}  // namespace ringlab
