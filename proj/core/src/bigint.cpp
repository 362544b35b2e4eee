#include "symkron/bigint.hpp"

#include "symkron/errors.hpp"

namespace symkron {

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
  if (b == 0) throw ConsistencyError(std::string(what) + ": division by zero");
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) {
    throw ConsistencyError(std::string(what) + ": " + a.get_str() +
                           " is not divisible by " + b.get_str());
  }
  return q;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRat& v) {
  BigRat c = v;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

bool is_integral(const BigRat& v) {
  BigRat c = v;
  c.canonicalize();
  return c.get_den() == 1;
}

}  // namespace symkron
