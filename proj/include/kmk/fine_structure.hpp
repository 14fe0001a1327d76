#pragma once

#include <map>
#include <stdexcept>

#include "kmk/ratfunc.hpp"
#include "kmk/rational.hpp"

namespace kmk {

// Genus-g correction in the normal form
//   f = c/(2-c)^g * Σ_k theta(k) t^k,   t = (c-1)/(2-c).
// Only nonzero theta values are stored.
struct FineStructureForm {
  int g = 1;
  std::map<int, BigRational> theta;

  friend bool operator==(const FineStructureForm&, const FineStructureForm&) = default;
};

class NotFineStructure : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Inverts the normal form by dividing out c/(2-c)^g and substituting
// c = (1+2t)/(1+t). Throws NotFineStructure if the quotient is not a
// polynomial in t, std::invalid_argument if g < 1.
FineStructureForm fine_structure_form(const RationalFnC& f, int g);

// Rebuilds the closed form from theta.
RationalFnC from_fine_structure(const FineStructureForm& form);

// True when every key lies in [g+1, 3g-1].
bool within_theorem_support(const FineStructureForm& form);

}  // namespace kmk
