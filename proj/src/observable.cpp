#include "hexsaw/observable.hpp"

#include <cmath>
#include <stdexcept>

namespace hexsaw {

namespace {

double xc_double() { return 1.0 / std::sqrt(2.0 + std::sqrt(2.0)); }

}  // namespace

Weight Weight::critical() { return multiple_of_xc(1, 1); }

Weight Weight::multiple_of_xc(long num, long den) {
    if (den == 0) throw std::invalid_argument("Weight: zero denominator");
    Weight w;
    w.coeff = Rational(num, den);
    w.xc_power = 1;
    w.has_exact = true;
    w.dvalue = (static_cast<double>(num) / static_cast<double>(den)) * xc_double();
    return w;
}

Weight Weight::rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Weight: zero denominator");
    Weight w;
    w.coeff = Rational(num, den);
    w.xc_power = 0;
    w.has_exact = true;
    w.dvalue = static_cast<double>(num) / static_cast<double>(den);
    return w;
}

Weight Weight::decimal(double v) {
    Weight w;
    w.has_exact = false;
    w.xc_power = 0;
    w.dvalue = v;
    return w;
}

CycloNum Weight::pow_exact(int ell) const {
    if (!has_exact) throw std::domain_error("Weight: no exact form");
    Rational c = 1;
    for (int i = 0; i < ell; ++i) c *= coeff;
    CycloNum out = CycloNum::from_rational(c);
    if (xc_power != 0)
        out = out * constants().x_c.pow(static_cast<unsigned long>(ell) *
                                        static_cast<unsigned long>(xc_power));
    return out;
}

ObservableField::ObservableField(const Domain& d, const MidEdge& a, Sigma sigma, Weight x,
                                 const EnumOptions& opts)
    : ObservableField(d, collect_stats(d, a, opts), sigma, x) {}

ObservableField::ObservableField(const Domain& d, const WalkStats& stats, Sigma sigma,
                                 Weight x)
    : dom_(&d), sigma_(sigma), x_(x) {
    walks_ = stats.total_walks();
    const size_t nm = d.mid_edges().size();
    approx_.assign(nm, {0.0, 0.0});

    const double sig = sigma.value();
    const double pi3 = std::acos(-1.0) / 3.0;
    std::vector<double> xpow_d(static_cast<size_t>(stats.max_len()) + 1, 1.0);
    for (size_t l = 1; l < xpow_d.size(); ++l) xpow_d[l] = xpow_d[l - 1] * x.dvalue;

    bool exact = sigma.is_critical() && x.has_exact;
    std::vector<CycloNum> xpow_e;
    if (exact) {
        xpow_e.resize(static_cast<size_t>(stats.max_len()) + 1);
        xpow_e[0] = CycloNum::one();
        CycloNum xe = x.pow_exact(1);
        for (size_t l = 1; l < xpow_e.size(); ++l) xpow_e[l] = xpow_e[l - 1] * xe;
        exact_.emplace(nm);
    }

    for (size_t m = 0; m < nm; ++m) {
        std::complex<double> acc{0.0, 0.0};
        CycloNum acc_e;
        stats.for_each(static_cast<int>(m), [&](int t, int ell, int64_t n) {
            double ang = -sig * static_cast<double>(t) * pi3;
            acc += static_cast<double>(n) *
                   std::complex<double>(std::cos(ang), std::sin(ang)) *
                   xpow_d[static_cast<size_t>(ell)];
            if (exact)
                acc_e += xpow_e[static_cast<size_t>(ell)].scaled(static_cast<long>(n))
                             .mul_zeta_pow(-5L * t);
        });
        approx_[m] = acc;
        if (exact) (*exact_)[m] = acc_e;
    }
}

ObservableValue ObservableField::value_at(const MidEdge& z) const {
    int i = dom_->mid_index(z);
    if (i < 0) throw std::invalid_argument("observable: mid-edge outside domain");
    ObservableValue v;
    v.approx = approx_[static_cast<size_t>(i)];
    if (exact_) v.exact = (*exact_)[static_cast<size_t>(i)];
    return v;
}

ObservableValue ObservableField::vertex_residual(Vertex v) const {
    if (!dom_->contains_vertex(v))
        throw std::invalid_argument("vertex_residual: vertex outside domain");
    ObservableValue out;
    if (exact_) out.exact = CycloNum::zero();
    for (const MidEdge& e : incident_mid_edges(v)) {
        int i = dom_->mid_index(e);
        Vertex other = (e.lo == v) ? e.hi : e.lo;
        int dir = edge_direction(v, other);
        const double pi3 = std::acos(-1.0) / 3.0;
        std::complex<double> off =
            0.5 * std::complex<double>(std::cos(dir * pi3), std::sin(dir * pi3));
        out.approx += off * approx_[static_cast<size_t>(i)];
        if (exact_)
            *out.exact += (*exact_)[static_cast<size_t>(i)]
                              .mul_zeta_pow(8L * dir)
                              .scaled(Rational(1, 2));
    }
    return out;
}

double ObservableField::max_vertex_residual(std::vector<ObservableValue>* per_vertex) const {
    double mx = 0.0;
    for (Vertex v : dom_->vertices()) {
        ObservableValue r = vertex_residual(v);
        mx = std::max(mx, std::abs(r.approx));
        if (per_vertex) per_vertex->push_back(std::move(r));
    }
    return mx;
}

ContourSums ObservableField::contour_sums() const {
    const auto& cls = dom_->classification();  // throws for non-strips
    ContourSums cs;
    if (exact_) {
        cs.alpha.exact = CycloNum::zero();
        cs.beta.exact = CycloNum::zero();
        cs.eps.exact = CycloNum::zero();
        cs.epsbar.exact = CycloNum::zero();
    }
    auto add_to = [&](ObservableValue& dst, const MidEdge& e) {
        int i = dom_->mid_index(e);
        dst.approx += approx_[static_cast<size_t>(i)];
        if (exact_) *dst.exact += (*exact_)[static_cast<size_t>(i)];
    };
    for (const auto& [e, label] : cls) {
        switch (label) {
            case BoundaryLabel::A:
            case BoundaryLabel::Alpha: add_to(cs.alpha, e); break;
            case BoundaryLabel::Beta: add_to(cs.beta, e); break;
            case BoundaryLabel::Eps: add_to(cs.eps, e); break;
            case BoundaryLabel::EpsBar: add_to(cs.epsbar, e); break;
        }
    }
    const std::complex<double> j{-0.5, 0.8660254037844386};
    cs.residual.approx = -cs.alpha.approx + cs.beta.approx + j * cs.eps.approx +
                         std::conj(j) * cs.epsbar.approx;
    if (exact_) {
        const CycloNum& je = constants().j;
        cs.residual.exact = -*cs.alpha.exact + *cs.beta.exact + je * *cs.eps.exact +
                            je.conjugate() * *cs.epsbar.exact;
    }
    return cs;
}

ObservableValue observable_F(const Domain& d, const MidEdge& a, const MidEdge& z, Weight x,
                             Sigma sigma, const EnumOptions& opts) {
    return ObservableField(d, a, sigma, x, opts).value_at(z);
}

ObservableValue vertex_residual(const Domain& d, const MidEdge& a, Vertex v, Weight x,
                                Sigma sigma, const EnumOptions& opts) {
    return ObservableField(d, a, sigma, x, opts).vertex_residual(v);
}

ContourSums contour_sum(const Domain& d, const MidEdge& a, Weight x,
                        const EnumOptions& opts) {
    return ObservableField(d, a, Sigma{5, 8}, x, opts).contour_sums();
}

}  // namespace hexsaw
