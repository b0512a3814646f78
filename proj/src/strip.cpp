#include "hexsaw/strip.hpp"

#include <stdexcept>

namespace hexsaw {

namespace {

// x^l sums per boundary label from the raw histograms, winding-marginalized
struct LabelSums {
    ObservableValue A, B, E;
    uint64_t walks = 0;
};

LabelSums label_sums(const Domain& d, const WalkStats& stats, Weight x) {
    LabelSums out;
    out.walks = stats.total_walks();
    bool exact = x.has_exact;
    if (exact) {
        out.A.exact = CycloNum::zero();
        out.B.exact = CycloNum::zero();
        out.E.exact = CycloNum::zero();
    }
    std::vector<double> xd(static_cast<size_t>(stats.max_len()) + 1, 1.0);
    for (size_t l = 1; l < xd.size(); ++l) xd[l] = xd[l - 1] * x.dvalue;
    std::vector<CycloNum> xe;
    if (exact) {
        xe.resize(xd.size());
        xe[0] = CycloNum::one();
        CycloNum x1 = x.pow_exact(1);
        for (size_t l = 1; l < xe.size(); ++l) xe[l] = xe[l - 1] * x1;
    }
    for (const auto& [e, label] : d.classification()) {
        ObservableValue* dst = nullptr;
        switch (label) {
            case BoundaryLabel::A: dst = nullptr; break;  // trivial walk: not in A
            case BoundaryLabel::Alpha: dst = &out.A; break;
            case BoundaryLabel::Beta: dst = &out.B; break;
            case BoundaryLabel::Eps:
            case BoundaryLabel::EpsBar: dst = &out.E; break;
        }
        if (!dst) continue;
        int i = d.mid_index(e);
        stats.for_each(i, [&](int, int ell, int64_t n) {
            dst->approx += static_cast<double>(n) * xd[static_cast<size_t>(ell)];
            if (exact)
                *dst->exact += xe[static_cast<size_t>(ell)].scaled(static_cast<long>(n));
        });
    }
    return out;
}

}  // namespace

PartitionReport partition_ABE(const Domain& d, Weight x, const EnumOptions& opts) {
    return partition_ABE(d, collect_stats(d, mid_edge_a(), opts), x);
}

PartitionReport partition_ABE(const Domain& d, const WalkStats& stats, Weight x) {
    PartitionReport r;
    r.T = d.strip_T().value_or(0);
    r.L = d.strip_L().value_or(0);
    r.x = x;
    LabelSums s = label_sums(d, stats, x);
    r.A = std::move(s.A);
    r.B = std::move(s.B);
    r.E = std::move(s.E);
    r.walk_count = s.walks;
    const Constants& k = constants();
    r.identity_residual.approx =
        1.0 - (k.c_alpha.to_complex().real() * r.A.approx.real() + r.B.approx.real() +
               k.c_eps.to_complex().real() * r.E.approx.real());
    if (r.A.exact) {
        r.identity_residual.exact =
            CycloNum::one() - (k.c_alpha * *r.A.exact + *r.B.exact + k.c_eps * *r.E.exact);
    }
    return r;
}

PartitionReport partition_ABE(int T, int L, Weight x, const EnumOptions& opts) {
    if (T < 1 || L < 1) throw std::invalid_argument("partition_ABE: T, L must be >= 1");
    Domain d = Domain::build_strip(T, L);
    return partition_ABE(d, x, opts);
}

std::vector<PartitionReport> scan_monotonicity(int T, int L_max, Weight x,
                                               const EnumOptions& opts) {
    std::vector<PartitionReport> out;
    for (int L = 1; L <= L_max; ++L) out.push_back(partition_ABE(T, L, x, opts));
    return out;
}

std::optional<std::pair<Walk, Walk>> cut_map(const Walk& w, int T) {
    if (w.is_trivial()) throw std::invalid_argument("cut_map: trivial walk is not A-type");
    if (!(w.start == mid_edge_a()))
        throw std::invalid_argument("cut_map: walk must start at a");
    // A-type within S_{T+1}: ends on a left-boundary horizontal mid-edge != a
    if (w.end.re4() != 0 || w.end == mid_edge_a())
        throw std::invalid_argument("cut_map: walk does not end on alpha minus a");
    const int p_right = 3 * (T + 1) + 2;  // rightmost column of S_{T+1}
    int p_max = 0;
    for (Vertex v : w.vertices) {
        p_max = std::max(p_max, v.p);
        if (v.p > p_right)
            throw std::invalid_argument("cut_map: walk leaves S_{T+1}");
    }
    if (p_max <= 3 * T + 2) return std::nullopt;  // fits S_T

    size_t k = 0;
    while (k < w.vertices.size() && w.vertices[k].p != p_right) ++k;
    if (k == w.vertices.size())
        throw std::logic_error("cut_map: walk leaves S_T but misses the rightmost column");
    Vertex vk = w.vertices[k];
    MidEdge chi(vk, Vertex{vk.p + 2, vk.q});  // east mid-edge, on the right side

    Walk first{w.start, std::vector<Vertex>(w.vertices.begin(),
                                            w.vertices.begin() + static_cast<long>(k) + 1),
               chi};
    Walk second{w.end, std::vector<Vertex>(w.vertices.rbegin(),
                                           w.vertices.rend() - static_cast<long>(k)),
                chi};
    return std::make_pair(std::move(first), std::move(second));
}

}  // namespace hexsaw
