#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace fint {

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised on malformed inputs (mixed logics, unregistered modalities, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class SimpleType;
using TypePtr = std::shared_ptr<const SimpleType>;

// Finite types over the bases N and B, closed under function spaces and
// finite-set formation. Values are immutable and freely shared.
class SimpleType {
public:
  enum class Kind { Nat, Bool, Arrow, FinSet };

  static TypePtr nat();
  static TypePtr boolean();
  static TypePtr arrow(TypePtr domain, TypePtr codomain);
  static TypePtr finset(TypePtr element);

  Kind kind() const { return kind_; }
  const TypePtr& domain() const { return left_; }     // Arrow only
  const TypePtr& codomain() const { return right_; }  // Arrow only
  const TypePtr& element() const { return left_; }    // FinSet only

private:
  SimpleType(Kind k, TypePtr l, TypePtr r)
      : kind_(k), left_(std::move(l)), right_(std::move(r)) {}

  Kind kind_;
  TypePtr left_;
  TypePtr right_;
};

bool type_equal(const TypePtr& a, const TypePtr& b);
bool type_lists_equal(const std::vector<TypePtr>& a, const std::vector<TypePtr>& b);

// level(N) = level(B) = 0
// level(rho -> sigma) = max(level(rho) + 1, level(sigma))
// level(set(rho)) = level(rho)
unsigned type_level(const TypePtr& t);

// pure(0) = N, pure(m + 1) = pure(m) -> N
TypePtr pure_type(unsigned m);

// "N", "B", "N->N", "(N->N)->N", "set(N)". Arrows associate to the right.
std::string to_string(const TypePtr& t);

}  // namespace fint
