#include "dyadic/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dyadic {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den)) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator: '" + text + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& x) {
    return x.get_str();
}

Rational pow2(long e) {
    mpz_class m = 1;
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
    return e >= 0 ? Rational(m) : Rational(1, m);
}

Rational rational_pow(const Rational& x, unsigned long e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), e);
    return Rational(num, den); // coprime inputs stay coprime under powers
}

bool is_dyadic(const Rational& x) {
    mpz_class d = x.get_den();
    // canonical form: denominator is a power of two iff d = 2^k
    return mpz_scan1(d.get_mpz_t(), 0) == mpz_sizeinbase(d.get_mpz_t(), 2) - 1;
}

} // namespace dyadic
