#include "hexsaw/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace hexsaw {

namespace {

int floor_div3(int p) { return p >= 0 ? p / 3 : -((-p + 2) / 3); }

int mod3(int p) {
    int r = p % 3;
    return r < 0 ? r + 3 : r;
}

}  // namespace

bool is_valid_vertex(Vertex v) {
    int r = mod3(v.p);
    if (r == 0) return false;
    int m = floor_div3(v.p);
    int want = (r == 1) ? (m & 1) : ((m + 1) & 1);
    return ((v.q % 2 + 2) % 2) == want;
}

int vertex_class(Vertex v) { return mod3(v.p); }

std::array<Vertex, 3> neighbors(Vertex v) {
    if (!is_valid_vertex(v))
        throw std::invalid_argument("neighbors: invalid vertex coordinates");
    // ccw from the horizontal edge: class 1 sees W(180), SE(300), NE(60);
    // class 2 sees E(0), NW(120), SW(240)
    if (vertex_class(v) == 1)
        return {Vertex{v.p - 2, v.q}, Vertex{v.p + 1, v.q - 1}, Vertex{v.p + 1, v.q + 1}};
    return {Vertex{v.p + 2, v.q}, Vertex{v.p - 1, v.q + 1}, Vertex{v.p - 1, v.q - 1}};
}

std::array<MidEdge, 3> incident_mid_edges(Vertex v) {
    auto nb = neighbors(v);
    return {MidEdge(v, nb[0]), MidEdge(v, nb[1]), MidEdge(v, nb[2])};
}

int edge_direction(Vertex from, Vertex to) {
    int dp = to.p - from.p, dq = to.q - from.q;
    if (dq == 0) return dp == 2 ? 0 : (dp == -2 ? 3 : -1);
    if (dp == 1 && dq == 1) return 1;
    if (dp == -1 && dq == 1) return 2;
    if (dp == -1 && dq == -1) return 4;
    if (dp == 1 && dq == -1) return 5;
    throw std::invalid_argument("edge_direction: vertices not adjacent");
}

MidEdge::MidEdge(Vertex a, Vertex b) {
    if (a < b) {
        lo = a;
        hi = b;
    } else {
        lo = b;
        hi = a;
    }
}

MidEdge mid_edge_a() { return MidEdge(Vertex{-1, 0}, Vertex{1, 0}); }

ExactPoint embed(Vertex v) { return {Rational(v.p), Rational(v.q)}; }

ExactPoint embed(const MidEdge& e) {
    return {Rational(e.lo.p + e.hi.p, 2), Rational(e.lo.q + e.hi.q, 2)};
}

CycloNum mid_offset_cyclo(Vertex v, const MidEdge& e) {
    Vertex other = (e.lo == v) ? e.hi : e.lo;
    int dir = edge_direction(v, other);
    return CycloNum::zeta_pow(8L * dir).scaled(Rational(1, 2));
}

std::string to_string(BoundaryLabel l) {
    switch (l) {
        case BoundaryLabel::A: return "a";
        case BoundaryLabel::Alpha: return "alpha";
        case BoundaryLabel::Beta: return "beta";
        case BoundaryLabel::Eps: return "eps";
        case BoundaryLabel::EpsBar: return "epsbar";
    }
    return "?";
}

Domain::Domain(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    for (Vertex v : vertices_)
        if (!is_valid_vertex(v))
            throw std::invalid_argument("Domain: invalid vertex in set");
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    vertex_index_.reserve(vertices_.size() * 2);
    for (size_t i = 0; i < vertices_.size(); ++i)
        vertex_index_[vertices_[i]] = static_cast<int>(i);

    std::map<MidEdge, int> inside_count;
    for (Vertex v : vertices_)
        for (Vertex w : neighbors(v)) inside_count[MidEdge(v, w)] += 1;
    mids_.reserve(inside_count.size());
    for (const auto& [e, cnt] : inside_count) {
        mid_index_[e] = static_cast<int>(mids_.size());
        mids_.push_back(e);
        mid_is_boundary_.push_back(cnt == 1);
        if (cnt == 1) boundary_.push_back(e);
    }
}

Domain Domain::build_strip(int T, int L) {
    if (T < 1 || L < 1)
        throw std::invalid_argument("build_strip: T and L must be >= 1");
    std::vector<Vertex> vs;
    for (int p = 1; p <= 3 * T + 2; ++p) {
        if (mod3(p) == 0) continue;
        int qmax = (p + 6 * L + 1) / 3;
        for (int q = -qmax; q <= qmax; ++q) {
            Vertex v{p, q};
            if (std::abs(3 * q) <= p + 6 * L + 1 && is_valid_vertex(v)) vs.push_back(v);
        }
    }
    Domain d(std::move(vs));
    d.strip_T_ = T;
    d.strip_L_ = L;
    d.classify_boundary_of_strip();
    return d;
}

bool Domain::is_boundary_mid(const MidEdge& e) const {
    int i = mid_index(e);
    return i >= 0 && mid_is_boundary_[static_cast<size_t>(i)];
}

int Domain::vertex_index(Vertex v) const {
    auto it = vertex_index_.find(v);
    return it == vertex_index_.end() ? -1 : it->second;
}

int Domain::mid_index(const MidEdge& e) const {
    auto it = mid_index_.find(e);
    return it == mid_index_.end() ? -1 : it->second;
}

void Domain::classify_boundary_of_strip() {
    int re4_max = 0;
    for (const MidEdge& e : boundary_) re4_max = std::max(re4_max, e.re4());
    MidEdge a = mid_edge_a();
    for (const MidEdge& e : boundary_) {
        BoundaryLabel l;
        if (e == a)
            l = BoundaryLabel::A;
        else if (e.re4() == 0)
            l = BoundaryLabel::Alpha;
        else if (e.re4() == re4_max)
            l = BoundaryLabel::Beta;
        else
            l = e.im4() > 0 ? BoundaryLabel::Eps : BoundaryLabel::EpsBar;
        classification_[e] = l;
    }
}

const std::map<MidEdge, BoundaryLabel>& Domain::classification() const {
    if (!strip_T_)
        throw std::invalid_argument("classification: domain is not a strip");
    return classification_;
}

BoundaryLabel Domain::label_of(const MidEdge& e) const {
    auto it = classification().find(e);
    if (it == classification_.end())
        throw std::invalid_argument("label_of: not a boundary mid-edge");
    return it->second;
}

std::optional<BoundaryLabel> Domain::try_label(const MidEdge& e) const {
    auto it = classification().find(e);
    if (it == classification_.end()) return std::nullopt;
    return it->second;
}

const std::map<MidEdge, BoundaryLabel>& classify_boundary(const Domain& d) {
    return d.classification();
}

bool Domain::is_simply_connected() const {
    if (vertices_.empty()) return true;
    int pmin = vertices_.front().p, pmax = vertices_.back().p;
    int qmin = vertices_.front().q, qmax = qmin;
    for (Vertex v : vertices_) {
        qmin = std::min(qmin, v.q);
        qmax = std::max(qmax, v.q);
    }
    const int margin = 6;
    pmin -= margin, pmax += margin, qmin -= margin, qmax += margin;

    auto in_box = [&](Vertex v) {
        return v.p >= pmin && v.p <= pmax && v.q >= qmin && v.q <= qmax;
    };
    // complement vertices inside the box; components not reaching the frame
    // (outermost ring) are holes
    std::unordered_set<Vertex, VertexHash> seen;
    auto near_frame = [&](Vertex v) {
        return v.p <= pmin + 3 || v.p >= pmax - 3 || v.q <= qmin + 3 || v.q >= qmax - 3;
    };
    for (int p = pmin; p <= pmax; ++p) {
        for (int q = qmin; q <= qmax; ++q) {
            Vertex v{p, q};
            if (!is_valid_vertex(v) || contains_vertex(v) || seen.count(v)) continue;
            // flood fill this complement component
            bool touches_frame = false;
            std::queue<Vertex> bfs;
            bfs.push(v);
            seen.insert(v);
            while (!bfs.empty()) {
                Vertex u = bfs.front();
                bfs.pop();
                if (near_frame(u)) touches_frame = true;
                for (Vertex w : neighbors(u)) {
                    if (!in_box(w) || contains_vertex(w) || seen.count(w)) continue;
                    seen.insert(w);
                    bfs.push(w);
                }
            }
            if (!touches_frame) return false;  // enclosed hole
        }
    }
    return true;
}

std::string Domain::to_json() const {
    std::ostringstream ss;
    ss << "{\"vertices\":[";
    for (size_t i = 0; i < vertices_.size(); ++i) {
        if (i) ss << ",";
        ss << "[" << vertices_[i].p << "," << vertices_[i].q << "]";
    }
    ss << "]";
    if (strip_T_) ss << ",\"T\":" << *strip_T_ << ",\"L\":" << *strip_L_;
    ss << "}";
    return ss.str();
}

}  // namespace hexsaw
