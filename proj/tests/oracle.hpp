#ifndef HEXSAW_TESTS_ORACLE_HPP
#define HEXSAW_TESTS_ORACLE_HPP

// Independent brute-force reference enumerators, deliberately written with
// plain std::set containers and none of the engine's indexing. Results from
// here are the golden values the optimized paths are checked against.

#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "hexsaw/walk.hpp"

namespace oracle {

using hexsaw::MidEdge;
using hexsaw::Vertex;

struct EndTally {
    // (end mid-edge, winding turns, length) -> walk count
    std::map<std::tuple<MidEdge, int, int>, long long> counts;
    long long total = 0;
};

// every self-avoiding mid-edge walk from `a` staying inside `verts`,
// including the trivial walk
inline EndTally enumerate(const std::set<Vertex>& verts, const MidEdge& a) {
    using namespace hexsaw;
    EndTally tally;
    tally.counts[{a, 0, 0}] += 1;
    tally.total += 1;

    Vertex inner = verts.count(a.lo) ? a.lo : a.hi;
    Vertex outer = (inner == a.lo) ? a.hi : a.lo;
    std::set<Vertex> visited{inner};

    // mid-edges of the walk so far, to honor "never re-touch a"
    struct Rec {
        const std::set<Vertex>& verts;
        const MidEdge& a;
        EndTally& tally;
        std::set<Vertex>& visited;

        void operator()(Vertex v, int din, int t, int ell, const MidEdge& entry) {
            for (Vertex w : neighbors(v)) {
                MidEdge e(v, w);
                if (e == entry || e == a) continue;
                // a mid-edge belongs to the domain iff an endpoint is inside
                if (!verts.count(v) && !verts.count(w)) continue;
                int dout = edge_direction(v, w);
                int turn = ((dout - din + 3) % 6 + 6) % 6 - 3;
                tally.counts[{e, t + turn, ell}] += 1;
                tally.total += 1;
                if (verts.count(w) && !visited.count(w)) {
                    visited.insert(w);
                    (*this)(w, dout, t + turn, ell + 1, e);
                    visited.erase(w);
                }
            }
        }
    };
    Rec rec{verts, a, tally, visited};
    rec(inner, hexsaw::edge_direction(outer, inner), 0, 1, a);
    return tally;
}

// every self-avoiding mid-edge walk from a on the full lattice with at most
// max_v vertices: both first-vertex choices, every end mid-edge
inline void for_each_walk_from_a(int max_v,
                                 const std::function<void(const hexsaw::Walk&)>& visit) {
    using namespace hexsaw;
    MidEdge a = mid_edge_a();
    for (Vertex first : {Vertex{1, 0}, Vertex{-1, 0}}) {
        std::vector<Vertex> path{first};
        std::set<Vertex> visited{first};
        std::function<void(Vertex, MidEdge)> rec = [&](Vertex v, MidEdge entry) {
            for (Vertex w : neighbors(v)) {
                MidEdge m(v, w);
                if (m == entry || m == a) continue;
                visit(Walk{a, path, m});
                if (static_cast<int>(path.size()) < max_v && !visited.count(w)) {
                    visited.insert(w);
                    path.push_back(w);
                    rec(w, m);
                    path.pop_back();
                    visited.erase(w);
                }
            }
        };
        rec(first, a);
    }
}

// directed vertex self-avoiding walk counts from (1,0) on the full lattice
inline std::vector<long long> count_cn(int n_max) {
    using namespace hexsaw;
    std::vector<long long> c(static_cast<size_t>(n_max) + 1, 0);
    std::set<Vertex> visited{Vertex{1, 0}};
    struct Rec {
        int n_max;
        std::vector<long long>& c;
        std::set<Vertex>& visited;
        void operator()(Vertex v, int n) {
            if (n == n_max) return;
            for (Vertex w : neighbors(v)) {
                if (visited.count(w)) continue;
                c[static_cast<size_t>(n) + 1] += 1;
                visited.insert(w);
                (*this)(w, n + 1);
                visited.erase(w);
            }
        }
    };
    Rec rec{n_max, c, visited};
    rec(Vertex{1, 0}, 0);
    return std::vector<long long>(c.begin() + 1, c.end());
}

}  // namespace oracle

#endif
