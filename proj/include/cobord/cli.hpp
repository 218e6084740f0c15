#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cobord/cobordism.hpp"
#include "cobord/manifold.hpp"

namespace cobord {

/// Syntax or validation error in a descriptor or functional expression.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct FunctionalAtom {
  enum class Kind { Signature, Ahat, AhatTangent, Elliptic, Pontryagin };
  Kind kind = Kind::Pontryagin;
  int elliptic_index = 0;
  Partition monomial;
};

struct FunctionalTerm {
  Rational coefficient;
  FunctionalAtom atom;
};

/// Linear combination of named genera and Pontryagin monomials, as written.
struct FunctionalExpr {
  int dimension = 0;
  std::vector<FunctionalTerm> terms;

  /// Largest ell[j] index used (0 if none).
  int max_elliptic_index() const;
};

/// expr := ['-'] term (('+'|'-') term)*
/// term := [rational '*'] atom ('*' atom)*
/// atom := 'sign' | 'ahat' | 'ahat_t' | 'ell[' int ']' | 'p' int ['^' int]
FunctionalExpr parse_functional(std::string_view text, int dimension);

/// Resolves named genera through the rational basis. `q_order` bounds ell[j].
Functional resolve(const FunctionalExpr& expr, int q_order);

struct ParsedManifold {
  ManifoldModel model;
  std::vector<std::string> warnings;
};

/// cp:N | hp:N | pb:L:[d1,...,dr] | prod(e1,e2) | X12:c=V | Y16:c=V | Z20:c=V | X12xHP:N:c=V
ParsedManifold parse_manifold(std::string_view text);

/// Runs one CLI invocation (args exclude the program name). Returns the exit code:
/// 0 success, 2 parse or validation error, 3 internal consistency failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cobord
