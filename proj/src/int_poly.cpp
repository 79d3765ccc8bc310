#include "qmzv/int_poly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qmzv {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

IntPoly IntPoly::x_power_minus_one(unsigned n) {
    std::vector<BigInt> c(n + 1);
    c[0] = -1;
    c[n] = 1;
    return IntPoly(std::move(c));
}

const BigInt& IntPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

IntPoly IntPoly::multiply(const IntPoly& other) const {
    if (is_zero() || other.is_zero()) {
        return IntPoly();
    }
    std::vector<BigInt> out(c_.size() + other.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < other.c_.size(); ++j) {
            out[i + j] += c_[i] * other.c_[j];
        }
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) {
        throw DivisionByZero("polynomial division by zero");
    }
    if (is_zero()) {
        return IntPoly();
    }
    const long nd = degree();
    const long dd = divisor.degree();
    if (nd < dd) {
        throw std::invalid_argument("inexact polynomial division");
    }
    std::vector<BigInt> rem = c_;
    std::vector<BigInt> quot(nd - dd + 1);
    const BigInt& lead = divisor.c_.back();
    for (long i = nd; i >= dd; --i) {
        BigInt& top = rem[i];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
            throw std::invalid_argument("inexact polynomial division");
        }
        BigInt factor = top / lead;
        quot[i - dd] = factor;
        for (long j = 0; j <= dd; ++j) {
            rem[i - dd + j] -= factor * divisor.c_[j];
        }
    }
    for (const BigInt& r : rem) {
        if (r != 0) {
            throw std::invalid_argument("inexact polynomial division");
        }
    }
    return IntPoly(std::move(quot));
}

namespace {

// Unlocked recursive worker; the public entry point serializes access.
const IntPoly& cyclotomic_unlocked(unsigned n, std::map<unsigned, IntPoly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) {
        return it->second;
    }
    IntPoly result = IntPoly::x_power_minus_one(n);
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) {
            result = result.divide_exact(cyclotomic_unlocked(d, cache));
        }
    }
    return cache.emplace(n, std::move(result)).first->second;
}

} // namespace

const IntPoly& cyclotomic_polynomial(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("cyclotomic polynomial undefined for n = 0");
    }
    static std::map<unsigned, IntPoly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    return cyclotomic_unlocked(n, cache);
}

unsigned euler_phi(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("totient undefined for n = 0");
    }
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; static_cast<unsigned long long>(p) * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) {
        result -= result / m;
    }
    return result;
}

} // namespace qmzv
