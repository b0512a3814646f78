#ifndef HEXSAW_WALK_HPP
#define HEXSAW_WALK_HPP

#include <string>
#include <vector>

#include "hexsaw/lattice.hpp"

namespace hexsaw {

/// A self-avoiding mid-edge walk: start mid-edge, visited vertex sequence,
/// end mid-edge. The empty walk (vertices empty, start == end) is the unique
/// length-0 walk. Length l(w) = number of visited vertices.
struct Walk {
    MidEdge start;
    std::vector<Vertex> vertices;
    MidEdge end;

    static Walk trivial(const MidEdge& a) { return Walk{a, {}, a}; }

    size_t length() const { return vertices.size(); }
    bool is_trivial() const { return vertices.empty(); }

    /// Motion direction (units of 60 deg) of the first / last half-step.
    int start_direction() const;
    int end_direction() const;

    /// +-1 turn at each visited vertex, in order.
    std::vector<int> turns() const;

    Walk reversed() const;

    /// Checks every Walk invariant: distinct vertices, chain adjacency,
    /// mid-edge incidences, consecutive mid-edges distinct, end != start
    /// unless trivial. Throws std::invalid_argument with a reason.
    void validate() const;

    bool operator==(const Walk& o) const {
        return start == o.start && end == o.end && vertices == o.vertices;
    }

    std::string to_json() const;
};

/// Total winding in units of pi/3: t = #left turns - #right turns.
struct WindingTurns {
    int t = 0;
    double radians() const { return t * 1.0471975511965976; }
};

WindingTurns winding(const Walk& w);

/// The mid-edge sequence traversed (length l + 1; just {start} if trivial).
std::vector<MidEdge> traversed_mids(const Walk& w);

}  // namespace hexsaw

#endif
