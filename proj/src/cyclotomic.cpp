#include "qmzv/cyclotomic.hpp"

#include <mpfr.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qmzv {

FieldContext::FieldContext(unsigned order) : order_(order) {
    if (order < 2) {
        throw std::invalid_argument("cyclotomic field order must be at least 2");
    }
    modulus_ = cyclotomic_polynomial(order);
    degree_ = static_cast<unsigned>(modulus_.degree());

    // Canonical coefficients of z^e for every residue e: basis vectors up
    // to the degree, then repeated reduction of x * z^{e-1} through the
    // monic minimal polynomial.
    root_pow_.assign(order_, std::vector<BigInt>(degree_));
    for (unsigned e = 0; e < degree_ && e < order_; ++e) {
        root_pow_[e][e] = 1;
    }
    for (unsigned e = degree_; e < order_; ++e) {
        std::vector<BigInt> shifted(degree_ + 1);
        for (unsigned j = 0; j < degree_; ++j) {
            shifted[j + 1] = root_pow_[e - 1][j];
        }
        const BigInt top = shifted[degree_];
        if (top != 0) {
            for (unsigned j = 0; j < degree_; ++j) {
                shifted[j] -= top * modulus_.coeff(j);
            }
        }
        shifted.pop_back();
        root_pow_[e] = std::move(shifted);
    }
}

CyclotomicElement FieldContext::zero() const {
    return CyclotomicElement(this, std::vector<Rational>(degree_));
}

CyclotomicElement FieldContext::one() const {
    std::vector<Rational> c(degree_);
    c[0] = Rational(1);
    return CyclotomicElement(this, std::move(c));
}

CyclotomicElement FieldContext::from_rational(const Rational& v) const {
    std::vector<Rational> c(degree_);
    c[0] = v;
    return CyclotomicElement(this, std::move(c));
}

CyclotomicElement FieldContext::from_coeffs(const std::vector<Rational>& poly) const {
    std::vector<Rational> c(degree_);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i].is_zero()) continue;
        const unsigned e = static_cast<unsigned>(i % order_);
        if (e < degree_) {
            c[e] += poly[i];
        } else {
            const std::vector<BigInt>& row = root_pow_[e];
            for (unsigned j = 0; j < degree_; ++j) {
                if (row[j] != 0) {
                    c[j] += poly[i] * Rational(row[j]);
                }
            }
        }
    }
    return CyclotomicElement(this, std::move(c));
}

CyclotomicElement FieldContext::root_power(long long e) const {
    long long m = e % static_cast<long long>(order_);
    if (m < 0) m += order_;
    const std::vector<BigInt>& row = root_pow_[static_cast<unsigned>(m)];
    std::vector<Rational> c(degree_);
    for (unsigned j = 0; j < degree_; ++j) {
        if (row[j] != 0) {
            c[j] = Rational(row[j]);
        }
    }
    return CyclotomicElement(this, std::move(c));
}

CyclotomicElement FieldContext::one_minus_root() const {
    return one() - root_power(1);
}

const FieldContext& field_context(unsigned order) {
    static std::map<unsigned, std::unique_ptr<FieldContext>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) {
        it = cache.emplace(order, std::make_unique<FieldContext>(order)).first;
    }
    return *it->second;
}

namespace {

const FieldContext& require_context(const FieldContext* ctx) {
    if (ctx == nullptr) {
        throw std::logic_error("operation on a detached cyclotomic element");
    }
    return *ctx;
}

void require_compatible(const FieldContext* a, const FieldContext* b) {
    if (a == nullptr || b == nullptr) {
        throw std::logic_error("operation on a detached cyclotomic element");
    }
    if (a->order() != b->order()) {
        throw std::invalid_argument("cyclotomic elements of different orders");
    }
}

} // namespace

const FieldContext& CyclotomicElement::context() const {
    return require_context(ctx_);
}

unsigned CyclotomicElement::order() const {
    return require_context(ctx_).order();
}

bool CyclotomicElement::is_zero() const {
    for (const Rational& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool CyclotomicElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return false;
    }
    return true;
}

Rational CyclotomicElement::rational_part() const {
    return coeffs_.empty() ? Rational() : coeffs_[0];
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
    require_compatible(ctx_, o.ctx_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) {
    require_compatible(ctx_, o.ctx_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const Rational& c) {
    require_context(ctx_);
    for (Rational& x : coeffs_) {
        x *= c;
    }
    return *this;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    require_compatible(a.ctx_, b.ctx_);
    const FieldContext& ctx = *a.ctx_;
    const unsigned d = ctx.degree();
    const unsigned n = ctx.order();

    std::vector<Rational> conv(2 * d - 1);
    for (unsigned i = 0; i < d; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; j < d; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }

    std::vector<Rational> out(conv.begin(), conv.begin() + d);
    for (unsigned e = d; e < 2 * d - 1; ++e) {
        if (conv[e].is_zero()) continue;
        const unsigned em = e < n ? e : e - n;
        if (em < d) {
            out[em] += conv[e];
        } else {
            const std::vector<BigInt>& row = ctx.root_power_coeffs(em);
            for (unsigned j = 0; j < d; ++j) {
                if (row[j] != 0) {
                    out[j] += conv[e] * Rational(row[j]);
                }
            }
        }
    }
    return CyclotomicElement(&ctx, std::move(out));
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& o) {
    *this = *this * o;
    return *this;
}

CyclotomicElement operator-(const CyclotomicElement& a) {
    require_context(a.ctx_);
    std::vector<Rational> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = -a.coeffs_[i];
    }
    return CyclotomicElement(a.ctx_, std::move(c));
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.ctx_ == nullptr || b.ctx_ == nullptr) {
        return a.ctx_ == b.ctx_;
    }
    return a.ctx_->order() == b.ctx_->order() && a.coeffs_ == b.coeffs_;
}

namespace {

// Minimal rational polynomial helper used only by the inversion routine.
struct QPoly {
    std::vector<Rational> c;

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
};

QPoly qpoly_scale(const QPoly& p, const Rational& s) {
    QPoly out;
    out.c.reserve(p.c.size());
    for (const Rational& x : p.c) out.c.push_back(x * s);
    return out;
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
    QPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
    out.trim();
    return out;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QPoly out;
    out.c.resize(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            out.c[i + j] += a.c[i] * b.c[j];
        }
    }
    out.trim();
    return out;
}

// Division with remainder; quotient written into quot.
QPoly qpoly_rem(QPoly num, const QPoly& den, QPoly& quot) {
    quot = {};
    if (den.is_zero()) {
        throw DivisionByZero("polynomial division by zero");
    }
    if (num.degree() >= den.degree()) {
        quot.c.resize(num.degree() - den.degree() + 1);
    }
    const Rational lead_inv = den.c.back().inverse();
    while (!num.is_zero() && num.degree() >= den.degree()) {
        const long shift = num.degree() - den.degree();
        const Rational f = num.c.back() * lead_inv;
        quot.c[shift] = f;
        for (std::size_t j = 0; j < den.c.size(); ++j) {
            num.c[shift + j] -= f * den.c[j];
        }
        num.trim();
    }
    return num;
}

} // namespace

CyclotomicElement CyclotomicElement::inverse() const {
    const FieldContext& ctx = require_context(ctx_);
    if (is_zero()) {
        throw DivisionByZero("inverse of zero field element");
    }

    QPoly r0;
    r0.c.reserve(ctx.degree() + 1);
    for (const BigInt& x : ctx.modulus().coeffs()) r0.c.push_back(Rational(x));
    QPoly r1;
    r1.c = coeffs_;
    r1.trim();

    // Extended Euclid tracking only the cofactor of this element; the
    // working remainder is rescaled to monic each round to keep the
    // intermediate rationals small.
    QPoly t0;
    QPoly t1;
    t1.c.push_back(Rational(1));
    {
        const Rational s = r1.c.back().inverse();
        r1 = qpoly_scale(r1, s);
        t1 = qpoly_scale(t1, s);
        r1.trim();
    }
    while (r1.degree() > 0) {
        QPoly quot;
        QPoly rem = qpoly_rem(r0, r1, quot);
        QPoly tnew = qpoly_sub(t0, qpoly_mul(quot, t1));
        r0 = std::move(r1);
        t0 = std::move(t1);
        r1 = std::move(rem);
        t1 = std::move(tnew);
        if (r1.is_zero()) {
            // The minimal polynomial is irreducible, so a nonzero element
            // of smaller degree can never divide it.
            throw std::logic_error("gcd degenerated during field inversion");
        }
        const Rational s = r1.c.back().inverse();
        r1 = qpoly_scale(r1, s);
        t1 = qpoly_scale(t1, s);
    }

    // r1 is the constant 1 now, so t1 is the inverse.
    std::vector<Rational> out(ctx.degree());
    for (std::size_t i = 0; i < t1.c.size() && i < out.size(); ++i) {
        out[i] = t1.c[i];
    }
    return CyclotomicElement(&ctx, std::move(out));
}

std::complex<double> CyclotomicElement::to_complex() const {
    const FieldContext& ctx = require_context(ctx_);
    // The canonical coefficients of a small value can be individually huge
    // and cancel almost completely, so the evaluation runs at 320 bits.
    const mpfr_prec_t prec = 320;
    mpfr_t theta, angle, c, s, coeff, term, re, im;
    mpfr_inits2(prec, theta, angle, c, s, coeff, term, re, im, static_cast<mpfr_ptr>(nullptr));

    mpfr_const_pi(theta, MPFR_RNDN);
    mpfr_mul_ui(theta, theta, 2, MPFR_RNDN);
    mpfr_div_ui(theta, theta, ctx.order(), MPFR_RNDN);

    mpfr_set_zero(re, 0);
    mpfr_set_zero(im, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        mpfr_set_q(coeff, coeffs_[i].raw().get_mpq_t(), MPFR_RNDN);
        mpfr_mul_ui(angle, theta, static_cast<unsigned long>(i), MPFR_RNDN);
        mpfr_cos(c, angle, MPFR_RNDN);
        mpfr_sin(s, angle, MPFR_RNDN);
        mpfr_mul(term, coeff, c, MPFR_RNDN);
        mpfr_add(re, re, term, MPFR_RNDN);
        mpfr_mul(term, coeff, s, MPFR_RNDN);
        mpfr_add(im, im, term, MPFR_RNDN);
    }

    const double re_d = mpfr_get_d(re, MPFR_RNDN);
    const double im_d = mpfr_get_d(im, MPFR_RNDN);
    mpfr_clears(theta, angle, c, s, coeff, term, re, im, static_cast<mpfr_ptr>(nullptr));
    return {re_d, im_d};
}

CyclotomicElement pow(const CyclotomicElement& base, long e) {
    if (e < 0) {
        return pow(base.inverse(), -e);
    }
    CyclotomicElement result = base.context().one();
    CyclotomicElement b = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) {
            result *= b;
        }
        k >>= 1;
        if (k > 0) {
            b *= b;
        }
    }
    return result;
}

} // namespace qmzv
