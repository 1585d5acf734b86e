#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace srkb {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

BigInt ipow(const BigInt& base, unsigned exp);
BigInt ipow(long base, unsigned exp);
BigRat rpow(const BigRat& base, int exp);

BigInt binomial(unsigned n, unsigned k);

// Largest integer <= x.
BigInt floor(const BigRat& x);
BigInt ceil(const BigRat& x);

BigInt numer(const BigRat& x);
BigInt denom(const BigRat& x);

double to_double(const BigRat& x);
double to_double(const BigInt& x);
long long to_ll(const BigInt& x);

std::string to_string(const BigInt& x);
// "p/q" or "p" when integral.
std::string to_string(const BigRat& x);
BigRat parse_rational(const std::string& s);

// Exact integer mod with a non-negative result.
long long mod(const BigInt& x, long long m);

// q = p^k; returns {p, k}, or {0, 0} if q is not a prime power.
std::pair<int, int> prime_power(long long q);

}  // namespace srkb
