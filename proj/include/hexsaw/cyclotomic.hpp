#ifndef HEXSAW_CYCLOTOMIC_HPP
#define HEXSAW_CYCLOTOMIC_HPP

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hexsaw {

using Rational = boost::multiprecision::cpp_rational;

/// Element of the degree-16 cyclotomic field Q(zeta_48), reduced modulo
/// Phi_48(x) = x^16 - x^8 + 1. zeta_48 = exp(i*pi/24). The field contains
/// every constant this project needs: the sixth roots of unity e^{ik*pi/3}
/// (= zeta^{8k}), the turn weight lambda = zeta^{-5}, the critical step
/// weight x_c = 1/(2cos(pi/8)) (needs zeta^3), and cos(3pi/8), cos(pi/4).
///
/// Coefficients are arbitrary-precision rationals, so residuals that vanish
/// identically come out as exact zeros, not small doubles.
class CycloNum {
public:
    static constexpr int kDegree = 16;

    CycloNum() = default;
    explicit CycloNum(const Rational& r) { coeff_[0] = r; }
    explicit CycloNum(long n) { coeff_[0] = n; }

    /// Exact representative of zeta_48^k, any integer k (reduced mod 48).
    static CycloNum zeta_pow(long k);

    static CycloNum from_rational(const Rational& r) { return CycloNum(r); }

    const Rational& operator[](int i) const { return coeff_[i]; }

    bool is_zero() const;
    bool operator==(const CycloNum& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator-() const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);

    CycloNum scaled(const Rational& r) const;
    CycloNum scaled(long n) const;

    /// Multiplication by zeta_48^k without a full convolution.
    CycloNum mul_zeta_pow(long k) const;

    /// Complex conjugate: zeta^k -> zeta^{-k}.
    CycloNum conjugate() const;

    /// Multiplicative inverse via the extended Euclidean algorithm over
    /// Q[x] modulo Phi_48. Throws std::domain_error on zero.
    CycloNum invert() const;

    CycloNum pow(unsigned long n) const;

    bool is_real() const { return *this == conjugate(); }

    /// Lossy evaluation sum_k coeff[k] * e^{ik*pi/24} in double precision.
    /// Throws std::overflow_error if a coefficient does not fit a double.
    std::complex<double> to_complex() const;

    /// Exact coefficients as "num/den" strings (debug serialization).
    std::vector<std::string> coeff_strings() const;

    static CycloNum zero() { return CycloNum(); }
    static CycloNum one() { return CycloNum(1L); }

private:
    // reduce a raw power table of degree < 96 into the basis
    static CycloNum reduce_raw(std::array<Rational, 96>&& raw);
    static const std::array<CycloNum, 48>& zeta_table();

    std::array<Rational, kDegree> coeff_{};  // value-initialized to 0
};

/// The named constants of the vertex relation and the strip identity,
/// all exact. lambda = zeta^-5, j = zeta^16, x_c = (zeta^3 + zeta^-3)^-1,
/// c_alpha = (zeta^9 + zeta^-9)/2, c_eps = (zeta^6 + zeta^-6)/2, i = zeta^12.
struct Constants {
    CycloNum lambda;
    CycloNum j;
    CycloNum x_c;
    CycloNum c_alpha;
    CycloNum c_eps;
    CycloNum i_unit;
};

const Constants& constants();

}  // namespace hexsaw

#endif
