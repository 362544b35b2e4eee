#pragma once

#include <gmpxx.h>

#include <string>

namespace symkron {

using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt factorial(int n);

/// Quotient a/b. Throws ConsistencyError when b does not divide a;
/// `what` names the identity being evaluated.
BigInt exact_div(const BigInt& a, const BigInt& b, const char* what);

std::string to_string(const BigInt& v);

/// Canonicalized "p/q" form; integers render without the "/q" suffix.
std::string to_string(const BigRat& v);

/// True when the canonicalized rational has denominator 1.
bool is_integral(const BigRat& v);

}  // namespace symkron
