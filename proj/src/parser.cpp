#include "quadop/parser.hpp"

#include <cctype>
#include <sstream>

#include "quadop/errors.hpp"

namespace quadop {

namespace {

class RelationParser {
 public:
  RelationParser(std::string_view text, const GeneratorSpace& v)
      : text_(text), gens_(v), result_(free3_dim(v.dim())) {}

  VectorQ parse() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (at_end()) return result_;
      pos_ = save;
    }
    Rational sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    term(sign);
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (accept('+'))
        term(1);
      else if (accept('-'))
        term(-1);
      else
        fail("expected '+' or '-'");
    }
    return result_;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "parse error at offset " << pos_ << " in \"" << text_ << "\": " << what;
    throw ParseError(os.str());
  }

  std::string digits() {
    skip_ws();
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
    return out;
  }

  void term(const Rational& sign) {
    skip_ws();
    Rational coeff = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::string num = digits();
      std::string den = "1";
      if (accept('/')) {
        den = digits();
        if (den.empty()) fail("expected denominator");
      }
      if (mpz_class(den) == 0) fail("zero denominator");
      coeff = Rational(mpz_class(num), mpz_class(den));
      coeff.canonicalize();
      expect('*');
    }
    mono(sign * coeff);
  }

  int var() {
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == 'x' && text_[pos_ + 1] >= '1' &&
        text_[pos_ + 1] <= '3') {
      int label = text_[pos_ + 1] - '0';
      pos_ += 2;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("unknown variable");
      return label;
    }
    fail("expected variable x1, x2 or x3");
  }

  std::size_t gen() {
    expect('{');
    std::size_t close = text_.find('}', pos_);
    if (close == std::string_view::npos) fail("unterminated generator name");
    std::string_view raw = text_.substr(pos_, close - pos_);
    std::size_t b = 0, e = raw.size();
    while (b < e && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
    std::string name(raw.substr(b, e - b));
    pos_ = close + 1;
    auto idx = gens_.index_of(name);
    if (!idx) fail("unknown generator '" + name + "'");
    return *idx;
  }

  // (x_a {inner} x_b) {outer} x_c = σ·(outer ⊗→ inner) with σ = (a, b, c).
  void add_left_combed(const Rational& coeff, int a, int b, int c, std::size_t outer,
                       std::size_t inner) {
    PermS3 sigma{{a, b, c}};
    if (!sigma.is_valid()) fail("each of x1, x2, x3 must occur exactly once");
    auto [rep, tail] = coset_decompose(sigma);
    const int s = coset_index(rep);
    const std::size_t d = gens_.dim();
    if (tail == PermS3::identity()) {
      result_[free3_index(s, outer, inner, d)] += coeff;
      return;
    }
    for (std::size_t m = 0; m < d; ++m)
      if (sgn(gens_.swap()(m, inner)) != 0)
        result_[free3_index(s, outer, m, d)] += coeff * gens_.swap()(m, inner);
  }

  void mono(const Rational& coeff) {
    if (accept('(')) {
      int a = var();
      std::size_t inner = gen();
      int b = var();
      expect(')');
      std::size_t outer = gen();
      int c = var();
      add_left_combed(coeff, a, b, c, outer, inner);
      return;
    }
    // x_c {h} u = ((12)h)(u, x_c)
    int c = var();
    std::size_t outer = gen();
    expect('(');
    int a = var();
    std::size_t inner = gen();
    int b = var();
    expect(')');
    PermS3 check{{a, b, c}};
    if (!check.is_valid()) fail("each of x1, x2, x3 must occur exactly once");
    for (std::size_t m = 0; m < gens_.dim(); ++m)
      if (sgn(gens_.swap()(m, outer)) != 0)
        add_left_combed(coeff * gens_.swap()(m, outer), a, b, c, m, inner);
  }

  std::string_view text_;
  const GeneratorSpace& gens_;
  VectorQ result_;
  std::size_t pos_ = 0;
};

}  // namespace

VectorQ parse_relation(std::string_view text, const GeneratorSpace& v) {
  return RelationParser(text, v).parse();
}

std::string monomial_text(const Free3Index& idx, const GeneratorSpace& v,
                          const VariableNames& vars) {
  const PermS3& sigma = coset_reps()[idx.coset];
  std::string out = "(";
  out += vars[sigma(1) - 1] + " {" + v.name(idx.inner) + "} " + vars[sigma(2) - 1];
  out += ") {" + v.name(idx.outer) + "} " + vars[sigma(3) - 1];
  return out;
}

std::string pretty_print(std::span<const Rational> vec, const GeneratorSpace& v,
                         const VariableNames& vars) {
  const std::size_t d = v.dim();
  std::string out;
  for (std::size_t k = 0; k < vec.size(); ++k) {
    const Rational& c = vec[k];
    if (sgn(c) == 0) continue;
    const std::string mono = monomial_text(free3_decode(k, d), v, vars);
    Rational mag = abs(c);
    std::string coeff = mag == 1 ? "" : to_string(mag) + "*";
    if (out.empty())
      out = (sgn(c) < 0 ? "-" : "") + coeff + mono;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + coeff + mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace quadop
