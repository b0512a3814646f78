#include "hexsaw/cyclotomic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hexsaw {

CycloNum CycloNum::reduce_raw(std::array<Rational, 96>&& raw) {
    // x^16 == x^8 - 1, applied top-down.
    for (int k = 95; k >= kDegree; --k) {
        if (raw[k] == 0) continue;
        raw[k - 8] += raw[k];
        raw[k - 16] -= raw[k];
        raw[k] = 0;
    }
    CycloNum out;
    for (int i = 0; i < kDegree; ++i) out.coeff_[i] = std::move(raw[i]);
    return out;
}

CycloNum CycloNum::zeta_pow(long k) {
    long r = k % 48;
    if (r < 0) r += 48;
    return zeta_table()[static_cast<size_t>(r)];
}

bool CycloNum::is_zero() const {
    for (const auto& c : coeff_)
        if (c != 0) return false;
    return true;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    CycloNum out;
    for (int i = 0; i < kDegree; ++i) out.coeff_[i] = coeff_[i] + o.coeff_[i];
    return out;
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
    CycloNum out;
    for (int i = 0; i < kDegree; ++i) out.coeff_[i] = coeff_[i] - o.coeff_[i];
    return out;
}

CycloNum CycloNum::operator-() const {
    CycloNum out;
    for (int i = 0; i < kDegree; ++i) out.coeff_[i] = -coeff_[i];
    return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    for (int i = 0; i < kDegree; ++i) coeff_[i] += o.coeff_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    for (int i = 0; i < kDegree; ++i) coeff_[i] -= o.coeff_[i];
    return *this;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
    std::array<Rational, 96> raw{};
    for (int i = 0; i < kDegree; ++i) {
        if (coeff_[i] == 0) continue;
        for (int k = 0; k < kDegree; ++k) {
            if (o.coeff_[k] == 0) continue;
            raw[i + k] += coeff_[i] * o.coeff_[k];
        }
    }
    return reduce_raw(std::move(raw));
}

CycloNum CycloNum::scaled(const Rational& r) const {
    CycloNum out;
    for (int i = 0; i < kDegree; ++i) out.coeff_[i] = coeff_[i] * r;
    return out;
}

CycloNum CycloNum::scaled(long n) const {
    CycloNum out;
    for (int i = 0; i < kDegree; ++i) out.coeff_[i] = coeff_[i] * n;
    return out;
}

CycloNum CycloNum::mul_zeta_pow(long k) const {
    long r = k % 48;
    if (r < 0) r += 48;
    std::array<Rational, 96> raw{};
    for (int i = 0; i < kDegree; ++i) {
        if (coeff_[i] == 0) continue;
        raw[i + r] += coeff_[i];
    }
    return reduce_raw(std::move(raw));
}

CycloNum CycloNum::conjugate() const {
    CycloNum out;
    for (int i = 0; i < kDegree; ++i) {
        if (coeff_[i] == 0) continue;
        out += zeta_pow(48 - i).scaled(coeff_[i]);
    }
    return out;
}

namespace {

using Poly = std::vector<Rational>;  // coefficient vector, may carry leading zeros

int degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

// a -= q*b for one long-division step; returns quotient term applied to acc.
void divmod_step(Poly& a, const Poly& b, int da, int db, Poly& quotient) {
    Rational factor = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
    int shift = da - db;
    if (static_cast<int>(quotient.size()) <= shift) quotient.resize(static_cast<size_t>(shift) + 1);
    quotient[static_cast<size_t>(shift)] += factor;
    for (int i = 0; i <= db; ++i)
        a[static_cast<size_t>(i + shift)] -= factor * b[static_cast<size_t>(i)];
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t k = 0; k < b.size(); ++k) {
            if (b[k] == 0) continue;
            out[i + k] += a[i] * b[k];
        }
    }
    return out;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

}  // namespace

CycloNum CycloNum::invert() const {
    if (is_zero()) throw std::domain_error("CycloNum::invert: division by zero");
    // extended Euclid: s*phi + t*self == gcd (a nonzero constant, Phi_48 irreducible)
    Poly phi(17, Rational(0));
    phi[0] = 1;
    phi[8] = -1;
    phi[16] = 1;
    Poly a = phi;
    Poly b(coeff_.begin(), coeff_.end());
    Poly ta{Rational(0)}, tb{Rational(1)};  // coefficients of `self` along the way
    while (true) {
        int db = degree(b);
        if (db < 0) throw std::domain_error("CycloNum::invert: zero divisor (not coprime)");
        int da = degree(a);
        if (da < db) {
            std::swap(a, b);
            std::swap(ta, tb);
            continue;
        }
        if (db == 0) {
            // b is a nonzero constant: inverse = tb / b0
            CycloNum out;
            Rational inv_c = Rational(1) / b[0];
            for (int i = 0; i < kDegree && i < static_cast<int>(tb.size()); ++i)
                out.coeff_[static_cast<size_t>(i)] = tb[static_cast<size_t>(i)] * inv_c;
            // tb may exceed degree 15 before reduction; fold the tail in.
            if (static_cast<int>(tb.size()) > kDegree) {
                std::array<Rational, 96> raw{};
                for (size_t i = 0; i < tb.size() && i < 96; ++i) raw[i] = tb[i] * inv_c;
                out = reduce_raw(std::move(raw));
            }
            return out;
        }
        // one full division a = q*b + r
        Poly q;
        while (degree(a) >= db) divmod_step(a, b, degree(a), db, q);
        // a now holds the remainder; update cofactor: ta -= q*tb
        ta = poly_sub(std::move(ta), poly_mul(q, tb));
        std::swap(a, b);
        std::swap(ta, tb);
    }
}

CycloNum CycloNum::pow(unsigned long n) const {
    CycloNum base = *this;
    CycloNum out = one();
    while (n > 0) {
        if (n & 1UL) out = out * base;
        n >>= 1UL;
        if (n > 0) base = base * base;
    }
    return out;
}

std::complex<double> CycloNum::to_complex() const {
    static const std::array<std::complex<double>, 48> roots = [] {
        const long double pi = acosl(-1.0L);
        std::array<std::complex<double>, 48> r{};
        for (int k = 0; k < 48; ++k) {
            long double ang = static_cast<long double>(k) * pi / 24.0L;
            r[static_cast<size_t>(k)] = {static_cast<double>(cosl(ang)),
                                         static_cast<double>(sinl(ang))};
        }
        return r;
    }();
    std::complex<double> out{0.0, 0.0};
    for (int i = 0; i < kDegree; ++i) {
        if (coeff_[i] == 0) continue;
        double c = coeff_[i].convert_to<double>();
        if (!std::isfinite(c))
            throw std::overflow_error("CycloNum::to_complex: coefficient overflows double");
        out += c * roots[static_cast<size_t>(i)];
    }
    return out;
}

std::vector<std::string> CycloNum::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(kDegree);
    for (const auto& c : coeff_) {
        std::ostringstream ss;
        ss << boost::multiprecision::numerator(c) << "/" << boost::multiprecision::denominator(c);
        out.push_back(ss.str());
    }
    return out;
}

const std::array<CycloNum, 48>& CycloNum::zeta_table() {
    static const std::array<CycloNum, 48> table = [] {
        std::array<CycloNum, 48> t{};
        for (int k = 0; k < 48; ++k) {
            std::array<Rational, 96> raw{};
            raw[static_cast<size_t>(k)] = 1;
            t[static_cast<size_t>(k)] = reduce_raw(std::move(raw));
        }
        return t;
    }();
    return table;
}

const Constants& constants() {
    static const Constants c = [] {
        Constants k;
        k.lambda = CycloNum::zeta_pow(-5);
        k.j = CycloNum::zeta_pow(16);
        k.x_c = (CycloNum::zeta_pow(3) + CycloNum::zeta_pow(-3)).invert();
        k.c_alpha = (CycloNum::zeta_pow(9) + CycloNum::zeta_pow(-9)).scaled(Rational(1, 2));
        k.c_eps = (CycloNum::zeta_pow(6) + CycloNum::zeta_pow(-6)).scaled(Rational(1, 2));
        k.i_unit = CycloNum::zeta_pow(12);
        return k;
    }();
    return c;
}

}  // namespace hexsaw
