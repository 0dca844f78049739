#include "tauforge/rational.hpp"

namespace tauforge {

Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Integer double_factorial(long n) {
    if (n < -1) throw std::domain_error("double factorial below -1");
    Integer r = 1;
    for (long m = n; m > 1; m -= 2) r *= m;
    return r;
}

Integer odd_double_factorial(long k) {
    if (k < 0) throw std::domain_error("odd_double_factorial of negative index");
    return double_factorial(2 * k - 1);
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational string");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

}  // namespace tauforge
