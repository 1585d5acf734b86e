#include "srkb/numeric.hpp"

#include <stdexcept>

namespace srkb {

BigInt ipow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

BigInt ipow(long base, unsigned exp) {
    return boost::multiprecision::pow(BigInt(base), exp);
}

BigRat rpow(const BigRat& base, int exp) {
    if (exp >= 0) {
        return BigRat(ipow(numer(base), unsigned(exp)), ipow(denom(base), unsigned(exp)));
    }
    if (base == 0) throw std::domain_error("rpow: zero to a negative power");
    return BigRat(ipow(denom(base), unsigned(-exp)), ipow(numer(base), unsigned(-exp)));
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

BigInt numer(const BigRat& x) { return boost::multiprecision::numerator(x); }
BigInt denom(const BigRat& x) { return boost::multiprecision::denominator(x); }

BigInt floor(const BigRat& x) {
    BigInt r;
    mpz_fdiv_q(r.backend().data(), mpq_numref(x.backend().data()), mpq_denref(x.backend().data()));
    return r;
}

BigInt ceil(const BigRat& x) {
    BigInt r;
    mpz_cdiv_q(r.backend().data(), mpq_numref(x.backend().data()), mpq_denref(x.backend().data()));
    return r;
}

double to_double(const BigRat& x) { return mpq_get_d(x.backend().data()); }
double to_double(const BigInt& x) { return mpz_get_d(x.backend().data()); }

long long to_ll(const BigInt& x) {
    if (!mpz_fits_slong_p(x.backend().data())) throw std::overflow_error("to_ll: value out of range");
    return mpz_get_si(x.backend().data());
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const BigRat& x) {
    if (denom(x) == 1) return numer(x).str();
    return numer(x).str() + "/" + denom(x).str();
}

BigRat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(s));
    BigInt d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    return BigRat(BigInt(s.substr(0, slash)), d);
}

long long mod(const BigInt& x, long long m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return to_ll(r);
}

std::pair<int, int> prime_power(long long q) {
    if (q < 2) return {0, 0};
    long long p = 0;
    for (long long f = 2; f * f <= q; ++f) {
        if (q % f == 0) {
            p = f;
            break;
        }
    }
    if (p == 0) return {int(q), 1};
    int k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1) return {0, 0};
    return {int(p), k};
}

}  // namespace srkb
