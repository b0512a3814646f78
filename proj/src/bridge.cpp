#include "hexsaw/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hexsaw/strip.hpp"

namespace hexsaw {

namespace {

int p_min_of(const std::vector<Vertex>& vs) {
    int m = vs.front().p;
    for (Vertex v : vs) m = std::min(m, v.p);
    return m;
}

int p_max_of(const std::vector<Vertex>& vs) {
    int m = vs.front().p;
    for (Vertex v : vs) m = std::max(m, v.p);
    return m;
}

long span_of(const Walk& w) { return p_max_of(w.vertices) - p_min_of(w.vertices); }

// all vertices strictly to one side of the start mid-edge's vertical line
bool is_half_plane(const Walk& w) {
    int line = w.start.re4();
    bool all_right = true, all_left = true;
    for (Vertex v : w.vertices) {
        if (2 * v.p < line) all_right = false;
        if (2 * v.p > line) all_left = false;
    }
    return all_right || all_left;
}

// gap to the virtual vertex beyond a chain's start mid-edge
long virtual_gap(const MidEdge& start) { return start.is_horizontal() ? 2 : 1; }

struct ChainPiece {
    Walk walk;
    long key;
};

// Direct induction on a half-plane walk: cut at the last visit to the far
// extreme, prolong both halves into the cut vertex's free horizontal
// mid-edge, recurse on the remainder in the opposite heading. heading_east
// means the current sub-walk crosses rightward.
std::vector<ChainPiece> direct_chain(Walk cur, bool heading_east) {
    std::vector<ChainPiece> out;
    long bonus = virtual_gap(cur.start);
    while (true) {
        const auto& vs = cur.vertices;
        const int n = static_cast<int>(vs.size());
        int extreme = heading_east ? p_max_of(vs) : p_min_of(vs);
        int idx = -1;
        for (int i = 0; i < n; ++i)
            if (vs[static_cast<size_t>(i)].p == extreme) idx = i;  // last visit
        Vertex vstar = vs[static_cast<size_t>(idx)];
        // the free horizontal mid-edge on the far side of vstar, when it has one
        bool has_horizontal_far =
            heading_east ? (vertex_class(vstar) == 2) : (vertex_class(vstar) == 1);
        MidEdge chi;
        if (has_horizontal_far) {
            Vertex beyond{heading_east ? vstar.p + 2 : vstar.p - 2, vstar.q};
            chi = MidEdge(vstar, beyond);
        }
        bool terminal = false;
        if (!has_horizontal_far) {
            // class-1 maximum (resp. class-2 minimum) can only be the last
            // vertex, ending diagonally toward the far side
            if (idx != n - 1)
                throw std::logic_error("bridge chain: interior extreme without far edge");
            terminal = true;
        } else if (idx == n - 1 && cur.end == chi) {
            terminal = true;  // the walk itself completes the crossing
        }
        if (terminal) {
            out.push_back(ChainPiece{cur, span_of(cur) + bonus});
            return out;
        }
        Walk piece{cur.start,
                   std::vector<Vertex>(vs.begin(), vs.begin() + idx + 1), chi};
        out.push_back(ChainPiece{piece, span_of(piece) + bonus});
        cur = Walk{chi, std::vector<Vertex>(vs.begin() + idx, vs.end()), cur.end};
        heading_east = !heading_east;
        bonus = 0;
    }
}

// which way a chain rooted at `start` with first vertex v heads
bool heads_east(const MidEdge& start, Vertex first) { return 2 * first.p > start.re4(); }

}  // namespace

int width(const Walk& w) {
    if (w.is_trivial()) throw std::invalid_argument("width: empty walk");
    int lo = pair_index(w.vertices.front()), hi = lo;
    for (Vertex v : w.vertices) {
        lo = std::min(lo, pair_index(v));
        hi = std::max(hi, pair_index(v));
    }
    return hi - lo;
}

std::vector<int> BridgeDecomposition::negative_widths() const {
    std::vector<int> out;
    for (size_t i = 0; i < negative_count; ++i) out.push_back(width(pieces[i]));
    return out;
}

std::vector<int> BridgeDecomposition::nonnegative_widths() const {
    std::vector<int> out;
    for (size_t i = negative_count; i < pieces.size(); ++i) out.push_back(width(pieces[i]));
    return out;
}

std::string BridgeDecomposition::to_json() const {
    std::ostringstream ss;
    ss << "{\"anchor\":{\"mid\":[[" << anchor_mid.lo.p << "," << anchor_mid.lo.q << "],["
       << anchor_mid.hi.p << "," << anchor_mid.hi.q << "]],\"first_vertex\":["
       << first_vertex.p << "," << first_vertex.q << "]},\"widths_neg\":[";
    auto neg = negative_widths();
    for (size_t i = 0; i < neg.size(); ++i) ss << (i ? "," : "") << neg[i];
    ss << "],\"widths_nonneg\":[";
    auto pos = nonnegative_widths();
    for (size_t i = 0; i < pos.size(); ++i) ss << (i ? "," : "") << pos[i];
    ss << "],\"pieces\":[";
    for (size_t i = 0; i < pieces.size(); ++i) ss << (i ? "," : "") << pieces[i].to_json();
    ss << "]}";
    return ss.str();
}

BridgeDecomposition decompose(const Walk& w) {
    if (w.is_trivial()) throw std::invalid_argument("decompose: trivial walk");
    w.validate();
    BridgeDecomposition out;
    out.anchor_mid = w.start;
    out.first_vertex = w.vertices.front();

    if (is_half_plane(w)) {
        auto chain = direct_chain(w, heads_east(w.start, w.vertices.front()));
        for (auto& cp : chain) {
            out.pieces.push_back(std::move(cp.walk));
            out.keys.push_back(cp.key);
        }
        out.negative_count = 0;
        return out;
    }
    Walk rev = w.reversed();
    if (is_half_plane(rev)) {
        // reverse half-plane walk: decomposition of the reverse, reversed
        auto chain = direct_chain(rev, heads_east(rev.start, rev.vertices.front()));
        out.negative_count = chain.size();
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            out.pieces.push_back(it->walk.reversed());
            out.keys.push_back(it->key);
        }
        return out;
    }
    // genuine two-sided walk: split at the first vertex of maximal real part
    int pstar = p_max_of(w.vertices);
    size_t k = 0;
    while (w.vertices[k].p != pstar) ++k;
    Vertex vk = w.vertices[k];
    if (vertex_class(vk) != 2)
        throw std::logic_error("decompose: two-sided walk with class-1 global maximum");
    MidEdge chi(vk, Vertex{vk.p + 2, vk.q});

    Walk head{w.start, std::vector<Vertex>(w.vertices.begin(),
                                           w.vertices.begin() + static_cast<long>(k) + 1),
              chi};
    Walk tail{chi, std::vector<Vertex>(w.vertices.begin() + static_cast<long>(k),
                                       w.vertices.end()),
              w.end};

    auto neg_chain = direct_chain(head.reversed(), heads_east(chi, vk));
    out.negative_count = neg_chain.size();
    for (auto it = neg_chain.rbegin(); it != neg_chain.rend(); ++it) {
        out.pieces.push_back(it->walk.reversed());
        out.keys.push_back(it->key);
    }
    auto pos_chain = direct_chain(tail, heads_east(chi, vk));
    for (auto& cp : pos_chain) {
        out.pieces.push_back(std::move(cp.walk));
        out.keys.push_back(cp.key);
    }
    return out;
}

namespace {

// the unique lattice translation taking mid-edge `from` to mid-edge `to`,
// if one exists
bool translation_between(const MidEdge& from, const MidEdge& to, int& dp, int& dq) {
    dp = to.lo.p - from.lo.p;
    dq = to.lo.q - from.lo.q;
    if (to.hi.p - from.hi.p != dp || to.hi.q - from.hi.q != dq) return false;
    if (dp % 3 != 0) return false;
    if (((dp / 3) - dq) % 2 != 0) return false;
    return true;
}

Walk translate(const Walk& w, int dp, int dq) {
    auto mv = [&](Vertex v) { return Vertex{v.p + dp, v.q + dq}; };
    Walk out;
    out.start = MidEdge(mv(w.start.lo), mv(w.start.hi));
    out.end = MidEdge(mv(w.end.lo), mv(w.end.hi));
    out.vertices.reserve(w.vertices.size());
    for (Vertex v : w.vertices) out.vertices.push_back(mv(v));
    return out;
}

}  // namespace

Walk reconstruct(const MidEdge& anchor_mid, Vertex first_vertex,
                 const std::vector<Walk>& pieces) {
    if (pieces.empty()) throw std::invalid_argument("reconstruct: no pieces");
    std::vector<Walk> placed;
    placed.reserve(pieces.size());
    {
        int dp, dq;
        if (!translation_between(pieces[0].start, anchor_mid, dp, dq))
            throw std::invalid_argument("reconstruct: first piece cannot reach the anchor");
        placed.push_back(translate(pieces[0], dp, dq));
        if (!(placed[0].vertices.front() == first_vertex))
            throw std::invalid_argument("reconstruct: first vertex mismatch at the anchor");
    }
    for (size_t i = 1; i < pieces.size(); ++i) {
        int dp, dq;
        if (!translation_between(pieces[i].start, placed[i - 1].end, dp, dq))
            throw std::invalid_argument("reconstruct: pieces not chainable");
        Walk moved = translate(pieces[i], dp, dq);
        if (!(moved.vertices.front() == placed[i - 1].vertices.back()))
            throw std::invalid_argument("reconstruct: junction vertex mismatch");
        placed.push_back(std::move(moved));
    }
    Walk out;
    out.start = anchor_mid;
    out.vertices = placed[0].vertices;
    for (size_t i = 1; i < placed.size(); ++i)
        out.vertices.insert(out.vertices.end(), placed[i].vertices.begin() + 1,
                            placed[i].vertices.end());
    out.end = placed.back().end;
    out.validate();

    // the decomposition of the result must be exactly the placed chain;
    // this rejects width patterns no decomposition produces
    BridgeDecomposition check = decompose(out);
    if (check.pieces.size() != placed.size())
        throw std::invalid_argument("reconstruct: pieces are not a canonical decomposition");
    for (size_t i = 0; i < placed.size(); ++i)
        if (!(check.pieces[i] == placed[i]))
            throw std::invalid_argument("reconstruct: pieces are not a canonical decomposition");
    return out;
}

ObservableValue bridge_partition(int T, int L, Weight x, const EnumOptions& opts) {
    Domain d = Domain::build_strip(T, L);
    MidEdge a = mid_edge_a();
    ObservableValue out;
    bool exact = x.has_exact;
    if (exact) out.exact = CycloNum::zero();
    // x^l tables up to the domain size
    const size_t lmax = d.vertices().size();
    std::vector<double> xd(lmax + 1, 1.0);
    for (size_t l = 1; l <= lmax; ++l) xd[l] = xd[l - 1] * x.dvalue;
    std::vector<CycloNum> xe;
    if (exact) {
        xe.resize(lmax + 1);
        xe[0] = CycloNum::one();
        CycloNum x1 = x.pow_exact(1);
        for (size_t l = 1; l <= lmax; ++l) xe[l] = xe[l - 1] * x1;
    }
    enumerate_walks(d, a, opts, [&](const Walk& w) {
        if (w.is_trivial()) return;
        if (d.try_label(w.end) != BoundaryLabel::Beta) return;
        if (width(w) != T)
            throw std::logic_error("bridge_partition: beta walk of unexpected width");
        out.approx += xd[w.length()];
        if (exact) *out.exact += xe[w.length()];
    });
    PartitionReport ref = partition_ABE(d, x, opts);
    if (std::abs(out.approx.real() - ref.B.approx.real()) > 1e-9)
        throw std::logic_error("bridge_partition: mismatch with partition_ABE");
    if (exact && !(*out.exact == *ref.B.exact))
        throw std::logic_error("bridge_partition: exact mismatch with partition_ABE");
    // below criticality every width-T bridge has length >= T, so
    // B_{T,L}^x <= (x/x_c)^T
    double xc = 1.0 / std::sqrt(2.0 + std::sqrt(2.0));
    if (x.dvalue < xc && out.approx.real() > std::pow(x.dvalue / xc, T) + 1e-9)
        throw std::logic_error("bridge_partition: bound (x/x_c)^T violated");
    return out;
}

}  // namespace hexsaw
