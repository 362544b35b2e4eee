#include "symkron/conjugacy.hpp"

#include <map>

#include "symkron/errors.hpp"

namespace symkron {

ConjugacyClass class_data(const Partition& mu) {
  if (mu.n() == 0) throw DomainError("class_data: empty cycle type");
  std::map<int, int> multiplicity;
  for (int part : mu.parts()) ++multiplicity[part];
  BigInt centralizer = 1;
  for (const auto& [part, count] : multiplicity) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part),
                  static_cast<unsigned long>(count));
    centralizer *= power * factorial(count);
  }
  BigInt size = exact_div(factorial(mu.n()), centralizer,
                          "class size from centralizer order");
  return ConjugacyClass{mu, std::move(size), std::move(centralizer)};
}

}  // namespace symkron
