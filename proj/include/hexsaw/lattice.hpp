#ifndef HEXSAW_LATTICE_HPP
#define HEXSAW_LATTICE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hexsaw/cyclotomic.hpp"

namespace hexsaw {

/// Honeycomb vertex in doubled coordinates: embedded Re = p/2, Im = q*sqrt(3)/2.
/// Valid sites have p % 3 in {1, 2} plus a parity constraint tying q to
/// floor(p/3); every valid vertex then has exactly 3 neighbors at distance 1,
/// exactly one of them across a horizontal edge.
///
/// Two site classes:
///   p = 3m+1 ("west-linked"):  neighbors W (p-2,q), NE (p+1,q+1), SE (p+1,q-1),
///                              parity q == m (mod 2);
///   p = 3m+2 ("east-linked"):  neighbors E (p+2,q), NW (p-1,q+1), SW (p-1,q-1),
///                              parity q == m+1 (mod 2).
struct Vertex {
    int p = 0;
    int q = 0;

    bool operator==(const Vertex& o) const { return p == o.p && q == o.q; }
    bool operator!=(const Vertex& o) const { return !(*this == o); }
    bool operator<(const Vertex& o) const { return p != o.p ? p < o.p : q < o.q; }
};

bool is_valid_vertex(Vertex v);

/// 1 if p = 3m+1 (horizontal edge to the west), 2 if p = 3m+2 (to the east).
int vertex_class(Vertex v);

/// Hexagon-column index: vertices 3m+1 and 3m+2 share column pair m.
inline int pair_index(Vertex v) {
    int m = v.p >= 0 ? v.p / 3 : -((-v.p + 2) / 3);
    return m;  // floor(p/3); valid p is never divisible by 3
}

/// The three neighbors in counter-clockwise order starting from the
/// horizontal one. Throws std::invalid_argument on malformed coordinates.
std::array<Vertex, 3> neighbors(Vertex v);

/// Edge direction in units of 60 degrees: 0 = East, 1 = NE, ..., 5 = SE.
int edge_direction(Vertex from, Vertex to);

/// Mid-edge, identified by its canonically ordered endpoint pair.
struct MidEdge {
    Vertex lo, hi;  // lo < hi lexicographically

    MidEdge() = default;
    MidEdge(Vertex a, Vertex b);

    bool operator==(const MidEdge& o) const { return lo == o.lo && hi == o.hi; }
    bool operator!=(const MidEdge& o) const { return !(*this == o); }
    bool operator<(const MidEdge& o) const {
        return lo != o.lo ? lo < o.lo : hi < o.hi;
    }

    bool is_horizontal() const { return lo.q == hi.q; }
    /// Quadrupled embedded coordinates: Re = re4()/4, Im = im4()*sqrt(3)/4.
    int re4() const { return lo.p + hi.p; }
    int im4() const { return lo.q + hi.q; }
};

/// The distinguished mid-edge a: the horizontal edge through the origin,
/// embedded at exactly 0.
MidEdge mid_edge_a();

/// The three incident mid-edges of v, counter-clockwise, starting from the
/// horizontal one (canonical first element).
std::array<MidEdge, 3> incident_mid_edges(Vertex v);

/// Exact planar point: Re = re_half * (1/2), Im = im_half * (sqrt(3)/2).
struct ExactPoint {
    Rational re_half;
    Rational im_half;

    double re() const { return re_half.convert_to<double>() / 2.0; }
    double im() const { return im_half.convert_to<double>() * 0.8660254037844386; }
};

ExactPoint embed(Vertex v);
ExactPoint embed(const MidEdge& e);

/// Exact offset (mid - vertex) as a cyclotomic number: (1/2) * zeta48^(8k)
/// where k is the edge direction from v toward the other endpoint.
CycloNum mid_offset_cyclo(Vertex v, const MidEdge& e);

struct VertexHash {
    size_t operator()(const Vertex& v) const {
        return std::hash<uint64_t>()((static_cast<uint64_t>(static_cast<uint32_t>(v.p)) << 32) ^
                                     static_cast<uint32_t>(v.q));
    }
};

enum class BoundaryLabel { A, Alpha, Beta, Eps, EpsBar };

std::string to_string(BoundaryLabel l);

/// A finite honeycomb domain: a vertex set plus every mid-edge emanating from
/// it. Immutable after construction. Boundary mid-edges have exactly one
/// endpoint inside.
class Domain {
public:
    explicit Domain(std::vector<Vertex> vertices);

    /// The truncated strip S_{T,L}: T hexagon columns, cut at heights ±L along
    /// the ±30-degree lines. Vertex set {1 <= p <= 3T+2, |3q| <= p + 6L + 1};
    /// the mid-edge a lies on the left boundary at exactly 0, the right
    /// boundary consists of horizontal mid-edges at Re = (3T+3)/2, and the
    /// top/bottom cuts expose only NW/SW mid-edges. Boundary classification
    /// is computed eagerly.
    static Domain build_strip(int T, int L);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<MidEdge>& mid_edges() const { return mids_; }
    const std::vector<MidEdge>& boundary() const { return boundary_; }

    bool contains_vertex(Vertex v) const { return vertex_index_.count(v) > 0; }
    bool contains_mid(const MidEdge& e) const { return mid_index_.count(e) > 0; }
    bool is_boundary_mid(const MidEdge& e) const;

    int vertex_index(Vertex v) const;     // -1 if absent
    int mid_index(const MidEdge& e) const;  // -1 if absent

    std::optional<int> strip_T() const { return strip_T_; }
    std::optional<int> strip_L() const { return strip_L_; }

    /// Boundary classification; present iff the domain is a strip.
    const std::map<MidEdge, BoundaryLabel>& classification() const;
    BoundaryLabel label_of(const MidEdge& e) const;
    std::optional<BoundaryLabel> try_label(const MidEdge& e) const;

    /// True iff the complement (within a margin-enlarged bounding box, plus
    /// the unbounded face) is connected.
    bool is_simply_connected() const;

    /// Canonical JSON {vertices: [[p,q],...]} plus T, L for strips.
    std::string to_json() const;

private:
    void classify_boundary_of_strip();

    std::vector<Vertex> vertices_;   // sorted lexicographically
    std::vector<MidEdge> mids_;      // sorted
    std::vector<MidEdge> boundary_;  // sorted
    std::unordered_map<Vertex, int, VertexHash> vertex_index_;
    std::map<MidEdge, int> mid_index_;
    std::vector<bool> mid_is_boundary_;
    std::optional<int> strip_T_, strip_L_;
    std::map<MidEdge, BoundaryLabel> classification_;
};

/// Classification map of a strip domain. Throws
/// std::invalid_argument for non-strip domains.
const std::map<MidEdge, BoundaryLabel>& classify_boundary(const Domain& d);

}  // namespace hexsaw

#endif
