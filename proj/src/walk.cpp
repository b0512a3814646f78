#include "hexsaw/walk.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hexsaw {

namespace {

Vertex other_endpoint(const MidEdge& e, Vertex v) {
    if (e.lo == v) return e.hi;
    if (e.hi == v) return e.lo;
    throw std::invalid_argument("mid-edge not incident to vertex");
}

}  // namespace

int Walk::start_direction() const {
    if (is_trivial()) throw std::invalid_argument("trivial walk has no direction");
    return edge_direction(other_endpoint(start, vertices.front()), vertices.front());
}

int Walk::end_direction() const {
    if (is_trivial()) throw std::invalid_argument("trivial walk has no direction");
    return edge_direction(vertices.back(), other_endpoint(end, vertices.back()));
}

std::vector<int> Walk::turns() const {
    std::vector<int> out;
    if (is_trivial()) return out;
    out.reserve(vertices.size());
    int din = start_direction();
    for (size_t i = 0; i < vertices.size(); ++i) {
        Vertex next = (i + 1 < vertices.size()) ? vertices[i + 1]
                                                : other_endpoint(end, vertices.back());
        int dout = edge_direction(vertices[i], next);
        int turn = ((dout - din + 3) % 6 + 6) % 6 - 3;
        if (turn != 1 && turn != -1)
            throw std::invalid_argument("walk has an impossible turn");
        out.push_back(turn);
        din = dout;
    }
    return out;
}

Walk Walk::reversed() const {
    Walk out;
    out.start = end;
    out.end = start;
    out.vertices.assign(vertices.rbegin(), vertices.rend());
    return out;
}

void Walk::validate() const {
    if (is_trivial()) {
        if (!(start == end)) throw std::invalid_argument("empty walk must have start == end");
        return;
    }
    std::set<Vertex> seen;
    for (Vertex v : vertices) {
        if (!is_valid_vertex(v)) throw std::invalid_argument("walk visits invalid vertex");
        if (!seen.insert(v).second) throw std::invalid_argument("walk revisits a vertex");
    }
    // incidences; other_endpoint throws if not incident
    other_endpoint(start, vertices.front());
    other_endpoint(end, vertices.back());
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
        edge_direction(vertices[i], vertices[i + 1]);  // throws if not adjacent
    if (end == start)
        throw std::invalid_argument("nontrivial walk may not end at its start mid-edge");
    turns();  // throws on straight-through or backtrack
}

std::string Walk::to_json() const {
    auto pair = [](Vertex v) {
        std::ostringstream s;
        s << "[" << v.p << "," << v.q << "]";
        return s.str();
    };
    std::ostringstream ss;
    ss << "{\"start\":[" << pair(start.lo) << "," << pair(start.hi) << "],\"vertices\":[";
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (i) ss << ",";
        ss << pair(vertices[i]);
    }
    ss << "],\"end\":[" << pair(end.lo) << "," << pair(end.hi) << "]}";
    return ss.str();
}

WindingTurns winding(const Walk& w) {
    int t = 0;
    for (int turn : w.turns()) t += turn;
    return WindingTurns{t};
}

std::vector<MidEdge> traversed_mids(const Walk& w) {
    std::vector<MidEdge> out;
    out.push_back(w.start);
    for (size_t i = 0; i + 1 < w.vertices.size(); ++i)
        out.emplace_back(w.vertices[i], w.vertices[i + 1]);
    if (!w.is_trivial()) out.push_back(w.end);
    return out;
}

}  // namespace hexsaw
