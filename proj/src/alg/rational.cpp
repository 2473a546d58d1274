#include "frobsub/alg/rational.hpp"

#include <stdexcept>

#include "frobsub/errors.hpp"

namespace frobsub::alg {

Rational::Rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw InputError("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(std::uint32_t e) const {
    mpq_class r(1);
    mpq_class base = v_;
    std::uint32_t k = e;
    while (k > 0) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return Rational(std::move(r));
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    auto check_int = [&](const std::string& s) {
        if (s.empty()) throw InputError("empty number in '" + text + "'");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw InputError("malformed number '" + text + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw InputError("malformed number '" + text + "'");
    };
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(mpq_class(mpz_class(text), 1));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    if (d == 0) throw InputError("rational with zero denominator: '" + text + "'");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero() && b.is_zero()) return Rational(0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    return Rational(mpq_class(g, l));
}

}  // namespace frobsub::alg
