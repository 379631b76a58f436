#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "akr/function.hpp"

namespace akr {

/// Named test function with every derivative populated.
///
/// For arity-1 entries only `sup_bounds.xx` is meaningful (sup |f''|).
struct CatalogEntry {
  std::string name;
  int arity = 1;
  std::variant<Function1D, Function2D> function;
  SecondPartialBounds sup_bounds;
  bool separable = false;

  /// Throws LookupError when the entry has the other arity.
  [[nodiscard]] const Function1D& function1d() const;
  [[nodiscard]] const Function2D& function2d() const;
};

/// Catalog names; "monomial(p,q)" stands for the family s^p t^q.
[[nodiscard]] const std::vector<std::string>& catalog_names();

/// Resolves one of: const1, e1, e2, e3, monomial(p,q), exp-sum,
/// sinpix-cospiy, runge-2d. Throws LookupError listing the valid names.
[[nodiscard]] CatalogEntry lookup(std::string_view name);

}  // namespace akr
