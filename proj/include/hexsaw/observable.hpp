#ifndef HEXSAW_OBSERVABLE_HPP
#define HEXSAW_OBSERVABLE_HPP

#include <complex>
#include <optional>
#include <vector>

#include "hexsaw/cyclotomic.hpp"
#include "hexsaw/enumerate.hpp"
#include "hexsaw/walk.hpp"

namespace hexsaw {

/// The spin, as an exact fraction. Exact-mode evaluation is available only
/// at sigma = 5/8, where e^{-i sigma W} = zeta48^{-5t}.
struct Sigma {
    long num = 5;
    long den = 8;
    bool is_critical() const { return num * 8 == den * 5; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Step weight x = coeff * x_c^xc_power with rational coeff; covers 1*x_c
/// (critical), rational multiples like (9/10)*x_c, and plain rationals.
/// Decimal weights carry no exact form and run in double mode only.
struct Weight {
    Rational coeff = 1;
    int xc_power = 1;
    bool has_exact = true;
    double dvalue = 0.0;

    static Weight critical();
    static Weight multiple_of_xc(long num, long den);
    static Weight rational(long num, long den);
    static Weight decimal(double v);

    /// exact x^ell (requires has_exact)
    CycloNum pow_exact(int ell) const;
    double pow_double(int ell) const { return std::pow(dvalue, ell); }
};

/// One observable evaluation: exact value when the parameters allow it,
/// double approximation always.
struct ObservableValue {
    std::optional<CycloNum> exact;
    std::complex<double> approx{0.0, 0.0};
};

/// The four boundary sums of the contour identity and its residual
/// -sum_alpha F + sum_beta F + j sum_eps F + conj(j) sum_epsbar F.
struct ContourSums {
    ObservableValue alpha, beta, eps, epsbar;
    ObservableValue residual;
};

/// Per-mid-edge values of F(z) = sum_{walks a->z} e^{-i sigma W} x^l(walk),
/// computed from a single enumeration pass. Exact values are carried when
/// sigma = 5/8 and x has an exact form.
class ObservableField {
public:
    ObservableField(const Domain& d, const MidEdge& a, Sigma sigma, Weight x,
                    const EnumOptions& opts = {});
    /// Same, from an already collected enumeration pass over (d, a).
    ObservableField(const Domain& d, const WalkStats& stats, Sigma sigma, Weight x);

    bool exact_mode() const { return static_cast<bool>(exact_); }
    const Domain& domain() const { return *dom_; }
    uint64_t walk_count() const { return walks_; }

    ObservableValue value_at(const MidEdge& z) const;

    /// Left-hand side of the vertex relation
    /// (p-v)F(p) + (q-v)F(q) + (r-v)F(r) at v. Throws if v is outside.
    ObservableValue vertex_residual(Vertex v) const;

    /// Max |residual| over all vertices (double norm of the exact value when
    /// available) plus the full per-vertex list.
    double max_vertex_residual(std::vector<ObservableValue>* per_vertex = nullptr) const;

    /// Boundary sums and the contour residual; requires a classified strip.
    ContourSums contour_sums() const;

private:
    const Domain* dom_;
    Sigma sigma_;
    Weight x_;
    uint64_t walks_ = 0;
    std::vector<std::complex<double>> approx_;        // per mid index
    std::optional<std::vector<CycloNum>> exact_;      // per mid index
};

/// Single-shot wrappers around ObservableField.
ObservableValue observable_F(const Domain& d, const MidEdge& a, const MidEdge& z,
                             Weight x, Sigma sigma, const EnumOptions& opts = {});
ObservableValue vertex_residual(const Domain& d, const MidEdge& a, Vertex v, Weight x,
                                Sigma sigma, const EnumOptions& opts = {});
ContourSums contour_sum(const Domain& d, const MidEdge& a, Weight x,
                        const EnumOptions& opts = {});

}  // namespace hexsaw

#endif
