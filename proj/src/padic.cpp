#include "dyadic/padic.hpp"

#include <stdexcept>

namespace dyadic {

long Valuation::value() const {
    if (infinite_) throw std::domain_error("valuation of 0 has no finite value");
    return value_;
}

namespace {

void require_prime(unsigned long p) {
    mpz_class z(p);
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
        throw std::invalid_argument("p must be prime, got " + std::to_string(p));
    }
}

long integer_valuation(const mpz_class& n, unsigned long p) {
    // n != 0: number of factors p
    mpz_class reduced, pz(p);
    return static_cast<long>(
        mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

} // namespace

Valuation valuation(const Rational& x, unsigned long p) {
    require_prime(p);
    if (x == 0) return Valuation::infinity();
    return Valuation(integer_valuation(x.get_num(), p) -
                     integer_valuation(x.get_den(), p));
}

PAdicNorm padic_norm(const Rational& x, unsigned long p) {
    Valuation v = valuation(x, p);
    if (v.is_infinity()) return Rational(0);
    mpz_class pw;
    long g = v.value();
    mpz_ui_pow_ui(pw.get_mpz_t(), p, static_cast<unsigned long>(g < 0 ? -g : g));
    return g <= 0 ? Rational(pw) : Rational(1, pw);
}

PAdicNorm padic_distance(const Rational& x, const Rational& y, unsigned long p) {
    return padic_norm(x - y, p);
}

DigitExpansion digits(const Rational& x, unsigned long p, std::size_t count) {
    require_prime(p);
    if (count == 0) throw std::invalid_argument("digit count must be positive");
    if (x == 0) throw std::domain_error("digit expansion of 0 is undefined");

    Valuation v = valuation(x, p);
    const long gamma = v.value();

    // unit part u = x / p^gamma has numerator and denominator coprime to p
    Rational u = x;
    mpz_class pz(p);
    {
        mpz_class num = u.get_num(), den = u.get_den();
        mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
        mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
        u = Rational(num, den);
    }
    if (mpz_divisible_p(u.get_den().get_mpz_t(), pz.get_mpz_t())) {
        throw std::logic_error("p-free reduction left a divisible denominator");
    }

    // u mod p^count via modular inversion of the denominator
    mpz_class mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), p, count);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), u.get_den().get_mpz_t(), mod.get_mpz_t()) == 0) {
        throw std::logic_error("denominator not invertible mod p^n");
    }
    mpz_class r = u.get_num() * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());

    DigitExpansion out;
    out.valuation = gamma;
    out.digits.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        mpz_class d;
        mpz_mod(d.get_mpz_t(), r.get_mpz_t(), pz.get_mpz_t());
        out.digits.push_back(d.get_ui());
        r = (r - d) / pz;
    }
    if (out.digits[0] == 0) {
        throw std::logic_error("leading digit of a unit must be nonzero");
    }
    return out;
}

Cell cell_of(const Rational& x, unsigned level) {
    if (valuation(x, 2) < Valuation(0)) {
        throw std::domain_error("cell_of requires |x|_2 <= 1");
    }
    mpz_class mod = 1;
    mpz_mul_2exp(mod.get_mpz_t(), mod.get_mpz_t(), level);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), mod.get_mpz_t()) == 0) {
        if (level > 0) throw std::logic_error("odd denominator not invertible mod 2^j");
        inv = 0;
    }
    mpz_class k = x.get_num() * inv;
    mpz_mod(k.get_mpz_t(), k.get_mpz_t(), mod.get_mpz_t());
    return Cell{level, k};
}

std::pair<Cell, Cell> cell_children(const Cell& c) {
    mpz_class step = 1;
    mpz_mul_2exp(step.get_mpz_t(), step.get_mpz_t(), c.level);
    return {Cell{c.level + 1, c.index}, Cell{c.level + 1, c.index + step}};
}

} // namespace dyadic
