#include <cctype>
#include <optional>

#include "cobord/cli.hpp"
#include "cobord/genera.hpp"

namespace cobord {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }
  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }
  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }
  long integer() {
    const bool negative = accept('-');
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.size() > 9) fail_at("number too large", start);
    return negative ? -std::stol(d) : std::stol(d);
  }
  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t position() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }

  [[noreturn]] void fail(const std::string& message) { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t pos) { throw ParseError(message, pos); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// rational := int ['/' int]
Rational parse_coefficient(Cursor& in) {
  std::string text = in.digits();
  if (in.accept('/')) {
    const std::size_t at = in.position();
    const std::string den = in.digits();
    if (den.find_first_not_of('0') == std::string::npos) in.fail_at("zero denominator", at);
    text += "/" + den;
  }
  return parse_rational(text);
}

FunctionalAtom parse_atom(Cursor& in) {
  const std::size_t start = in.position();
  in.skip_space();
  const std::size_t word_start = in.position();
  const std::string word = in.identifier();
  FunctionalAtom atom;
  if (word == "sign") {
    atom.kind = FunctionalAtom::Kind::Signature;
  } else if (word == "ahat") {
    atom.kind = FunctionalAtom::Kind::Ahat;
  } else if (word == "ahat_t") {
    atom.kind = FunctionalAtom::Kind::AhatTangent;
  } else if (word == "ell") {
    atom.kind = FunctionalAtom::Kind::Elliptic;
    in.expect('[');
    atom.elliptic_index = static_cast<int>(in.integer());
    if (atom.elliptic_index < 0) in.fail_at("ell index must be nonnegative", start);
    in.expect(']');
  } else if (word.size() > 1 && word[0] == 'p' && word.find_first_not_of("0123456789", 1) == std::string::npos) {
    if (word.size() > 4) in.fail_at("Pontryagin index too large", word_start);
    const int index = std::stoi(word.substr(1));
    if (index < 1) in.fail_at("Pontryagin index must be positive", word_start);
    int power = 1;
    if (in.accept('^')) {
      const std::size_t at = in.position();
      const long p = in.integer();
      if (p < 1 || p > 64) in.fail_at("exponent must be between 1 and 64", at);
      power = static_cast<int>(p);
    }
    atom.monomial = Partition(std::vector<int>(static_cast<std::size_t>(power), index));
  } else {
    in.fail_at(word.empty() ? "expected an atom (sign, ahat, ahat_t, ell[j], p<i>)" : "unknown atom '" + word + "'",
               word_start);
  }
  return atom;
}

FunctionalTerm parse_term(Cursor& in, int dimension) {
  FunctionalTerm term{1, {}};
  const std::size_t start = (in.skip_space(), in.position());
  bool have_coefficient = false;
  if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
    term.coefficient = parse_coefficient(in);
    have_coefficient = true;
    in.expect('*');
  }
  std::vector<FunctionalAtom> atoms{parse_atom(in)};
  while (in.accept('*')) atoms.push_back(parse_atom(in));
  (void)have_coefficient;

  const bool all_pontryagin = std::all_of(atoms.begin(), atoms.end(), [](const FunctionalAtom& a) {
    return a.kind == FunctionalAtom::Kind::Pontryagin;
  });
  if (!all_pontryagin) {
    if (atoms.size() > 1) in.fail_at("a named genus cannot be multiplied by another atom", start);
    term.atom = atoms.front();
    return term;
  }
  std::vector<int> parts;
  for (const auto& a : atoms) parts.insert(parts.end(), a.monomial.parts().begin(), a.monomial.parts().end());
  term.atom.kind = FunctionalAtom::Kind::Pontryagin;
  term.atom.monomial = Partition(std::move(parts));
  const int weight = term.atom.monomial.weight();
  if (4 * weight != dimension)
    in.fail_at(term.atom.monomial.key() + " has weight " + std::to_string(weight) + ", dim " +
                   std::to_string(dimension) + " needs " + std::to_string(dimension / 4),
               start);
  return term;
}

}  // namespace

int FunctionalExpr::max_elliptic_index() const {
  int top = 0;
  for (const auto& t : terms)
    if (t.atom.kind == FunctionalAtom::Kind::Elliptic) top = std::max(top, t.atom.elliptic_index);
  return top;
}

FunctionalExpr parse_functional(std::string_view text, int dimension) {
  if (dimension <= 0 || dimension % 4 != 0)
    throw ParseError("dimension " + std::to_string(dimension) + " is not a positive multiple of 4", 0);
  if (dimension > 4 * kMaxWeight)
    throw ParseError("dimension " + std::to_string(dimension) + " exceeds the supported maximum", 0);
  Cursor in(text);
  FunctionalExpr expr{dimension, {}};
  bool negate = in.accept('-');
  if (!negate) in.accept('+');
  while (true) {
    FunctionalTerm term = parse_term(in, dimension);
    if (negate) term.coefficient = -term.coefficient;
    expr.terms.push_back(std::move(term));
    if (in.at_end()) break;
    if (in.accept('+'))
      negate = false;
    else if (in.accept('-'))
      negate = true;
    else
      in.fail("expected '+', '-' or end of input");
  }
  return expr;
}

Functional resolve(const FunctionalExpr& expr, int q_order) {
  const int dim = expr.dimension;
  Functional total = Functional::zero(dim);
  std::optional<EllipticSpan> span;
  for (const auto& term : expr.terms) {
    Functional f;
    switch (term.atom.kind) {
      case FunctionalAtom::Kind::Pontryagin:
        f = Functional::pontryagin(term.atom.monomial);
        break;
      case FunctionalAtom::Kind::Signature:
        f = genus_as_functional([](const ManifoldModel& m) { return signature(m); }, dim);
        break;
      case FunctionalAtom::Kind::Ahat:
        f = genus_as_functional([](const ManifoldModel& m) { return ahat(m); }, dim);
        break;
      case FunctionalAtom::Kind::AhatTangent:
        f = genus_as_functional([](const ManifoldModel& m) { return twisted_ahat_tangent(m); }, dim);
        break;
      case FunctionalAtom::Kind::Elliptic:
        if (!span) span = elliptic_span(dim, std::max(q_order, expr.max_elliptic_index()));
        f = span->functionals.at(static_cast<std::size_t>(term.atom.elliptic_index));
        break;
    }
    total += f * term.coefficient;
  }
  return total;
}

namespace {

int small_positive(Cursor& in, const char* what) {
  const std::size_t at = in.position();
  const long n = in.integer();
  if (n < 1 || n > 64) in.fail_at(std::string(what) + " must be between 1 and 64", at);
  return static_cast<int>(n);
}

ParsedManifold parse_manifold_expr(Cursor& in) {
  in.skip_space();
  const std::size_t start = in.position();
  if (in.accept("prod")) {
    in.expect('(');
    ParsedManifold first = parse_manifold_expr(in);
    in.expect(',');
    ParsedManifold second = parse_manifold_expr(in);
    in.expect(')');
    first.warnings.insert(first.warnings.end(), second.warnings.begin(), second.warnings.end());
    return {product(first.model, second.model), std::move(first.warnings)};
  }
  if (in.accept("cp:")) return {build_cp(small_positive(in, "CP dimension")), {}};
  if (in.accept("hp:")) return {build_hp(small_positive(in, "HP dimension")), {}};
  if (in.accept("pb:")) {
    const std::size_t at = in.position();
    const long l = in.integer();
    if (l < 0 || l > 64) in.fail_at("base dimension must be between 0 and 64", at);
    in.expect(':');
    in.expect('[');
    LineBundleSum bundle{static_cast<int>(l), {}};
    do {
      bundle.degrees.push_back(in.integer());
    } while (in.accept(','));
    in.expect(']');
    if (bundle.degrees.size() > 64) in.fail_at("bundle rank too large", start);
    return {build_proj_bundle(bundle), {}};
  }

  auto family_parameter = [&]() {
    in.expect(":c=");
    return in.integer();
  };
  auto spin_warning = [](const ManifoldModel& m) {
    std::vector<std::string> w;
    if (!is_spin(m)) w.push_back(m.name() + " is not spin (odd c)");
    return w;
  };
  if (in.accept("X12xHP:")) {
    const int n = small_positive(in, "HP dimension");
    const long c = family_parameter();
    ManifoldModel m = product(build_x12(c), build_hp(n));
    return {m, spin_warning(m)};
  }
  if (in.accept("X12")) {
    ManifoldModel m = build_x12(family_parameter());
    return {m, spin_warning(m)};
  }
  if (in.accept("Y16")) return {build_y16(family_parameter()), {}};
  if (in.accept("Z20")) {
    ManifoldModel m = build_z20(family_parameter());
    return {m, spin_warning(m)};
  }
  in.fail("expected a manifold (cp:N, hp:N, pb:L:[d,...], prod(a,b), X12:c=V, Y16:c=V, Z20:c=V, X12xHP:N:c=V)");
}

}  // namespace

ParsedManifold parse_manifold(std::string_view text) {
  Cursor in(text);
  ParsedManifold parsed = parse_manifold_expr(in);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return parsed;
}

}  // namespace cobord
