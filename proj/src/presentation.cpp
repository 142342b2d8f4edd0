#include "parembed/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "parembed/error.hpp"
#include "parembed/smith.hpp"

namespace parembed {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().generator == l.generator) {
      out.back().exponent = checked::add(out.back().exponent, l.exponent);
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupPresentation parse() {
    GroupPresentation p;
    skip_space();
    expect('<');
    parse_generators(p);
    expect('|');
    parse_relators(p);
    expect('>');
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "trailing characters after '>'");
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      if (pos_ >= text_.size()) throw SyntaxError(pos_, std::string("unexpected end of input, expected '") + c + "'");
      throw SyntaxError(pos_, std::string("expected '") + c + "', found '" + peek() + "'");
    }
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    if (!ident_start(peek())) throw SyntaxError(pos_, "expected identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void parse_generators(GroupPresentation& p) {
    skip_space();
    if (peek() == '|') return;
    for (;;) {
      const std::size_t at = (skip_space(), pos_);
      std::string name = identifier();
      if (index_.count(name)) throw Error(Errc::duplicate_generator, "duplicate generator '" + name + "' at byte " + std::to_string(at));
      index_.emplace(name, p.generators.size());
      p.generators.push_back(std::move(name));
      skip_space();
      if (peek() != ',') return;
      ++pos_;
    }
  }

  std::int64_t exponent() {
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw SyntaxError(start, "expected integer exponent after '^'");
    std::string token(text_.substr(start, pos_ - start));
    try {
      std::size_t used = 0;
      long long v = std::stoll(token, &used);
      return static_cast<std::int64_t>(v);
    } catch (const std::out_of_range&) {
      throw SyntaxError(start, "exponent out of range");
    }
  }

  Word word() {
    Word w;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == ',' || c == '>' || c == '\0') return free_reduce(w);
      if (c == '1' && (pos_ + 1 >= text_.size() || !ident_char(text_[pos_ + 1]))) {
        ++pos_;
        continue;
      }
      const std::size_t at = pos_;
      std::string name = identifier();
      auto it = index_.find(name);
      if (it == index_.end()) throw Error(Errc::unknown_generator, "unknown generator '" + name + "' at byte " + std::to_string(at));
      std::int64_t e = 1;
      if (peek() == '^') {
        ++pos_;
        e = exponent();
      }
      if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && peek() != ',' && peek() != '>')
        throw SyntaxError(pos_, "unexpected character in relator");
      w.push_back(Letter{it->second, e});
    }
  }

  void parse_relators(GroupPresentation& p) {
    skip_space();
    if (peek() == '>') return;
    for (;;) {
      p.relators.push_back(word());
      skip_space();
      if (peek() != ',') return;
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace

GroupPresentation parse_presentation(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GroupPresentation& p) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < p.generators.size(); ++i) os << (i ? ", " : "") << p.generators[i];
  os << (p.generators.empty() ? "| " : " | ");
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    if (j) os << ", ";
    const Word& w = p.relators[j];
    if (w.empty()) os << '1';
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) os << ' ';
      os << p.generators.at(w[k].generator);
      if (w[k].exponent != 1) os << '^' << w[k].exponent;
    }
  }
  os << '>';
  return os.str();
}

IntegerMatrix relation_matrix(const GroupPresentation& p) {
  IntegerMatrix m(p.relator_count(), p.generator_count());
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    for (const Letter& l : p.relators[j]) {
      if (l.generator >= p.generator_count()) throw Error(Errc::unknown_generator, "relator references a missing generator");
      m(j, l.generator) += l.exponent;
    }
  return m;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  // The invariant factors of the relation matrix are those of its transpose.
  const auto d = invariant_factors(relation_matrix(p));
  AbelianInvariants out;
  std::size_t nonzero = 0;
  for (const Integer& x : d) {
    if (x != 0) ++nonzero;
    if (x > 1) out.torsion_factors.push_back(x);
  }
  out.free_rank = p.generator_count() - nonzero;
  return out;
}

std::string to_string(const AbelianInvariants& a) {
  if (a.trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (a.free_rank > 0) {
    os << 'Z';
    if (a.free_rank > 1) os << '^' << a.free_rank;
    first = false;
  }
  for (const Integer& t : a.torsion_factors) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

GroupPresentation free_presentation(std::size_t count, std::string_view prefix) {
  GroupPresentation p;
  for (std::size_t i = 1; i <= count; ++i) p.generators.push_back(std::string(prefix) + std::to_string(i));
  return p;
}

bool certifiably_trivial(const GroupPresentation& p) {
  std::vector<bool> killed(p.generator_count(), false);
  for (const Word& w : p.relators)
    if (w.size() == 1 && (w[0].exponent == 1 || w[0].exponent == -1)) killed[w[0].generator] = true;
  return std::all_of(killed.begin(), killed.end(), [](bool b) { return b; });
}

}  // namespace parembed
