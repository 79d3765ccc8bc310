#include "qmzv/rational.hpp"

#include <ostream>

namespace qmzv {

namespace {

// mpq_class does not canonicalize on construction; every constructor that
// takes a separate denominator must do it explicitly.
mpq_class make_canonical(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    mpq_class v(num, den);
    v.canonicalize();
    return v;
}

} // namespace

Rational::Rational(long num, long den) : v_(make_canonical(BigInt(num), BigInt(den))) {}

Rational::Rational(const BigInt& num, const BigInt& den) : v_(make_canonical(num, den)) {}

Rational Rational::from_string(std::string_view text) {
    const auto slash = text.find('/');
    const std::string num_part(text.substr(0, slash));
    mpz_class num;
    if (num_part.empty() || mpz_set_str(num.get_mpz_t(), num_part.c_str(), 10) != 0) {
        throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return Rational(num);
    }
    const std::string den_part(text.substr(slash + 1));
    mpz_class den;
    if (den_part.empty() || mpz_set_str(den.get_mpz_t(), den_part.c_str(), 10) != 0) {
        throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw DivisionByZero("inverse of zero");
    }
    mpq_class out;
    mpq_inv(out.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(out));
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw DivisionByZero("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw DivisionByZero("rational division by zero");
    }
    return Rational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Rational pow(const Rational& base, unsigned long e) {
    Rational result(1);
    Rational b = base;
    while (e > 0) {
        if (e & 1) {
            result *= b;
        }
        e >>= 1;
        if (e > 0) {
            b *= b;
        }
    }
    return result;
}

BigInt binomial(long m, unsigned long k) {
    if (m < 0) {
        throw std::domain_error("binomial: negative upper argument");
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), k);
    return out;
}

} // namespace qmzv
