#include "hexsaw/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace hexsaw {

namespace {

// Indexed adjacency for the DFS: per vertex, 3 slots in canonical ccw order.
struct Slot {
    int nbr = -1;   // vertex index, -1 if outside the domain
    int mid = -1;   // mid-edge index (always present)
    int dir = 0;    // edge direction v -> other endpoint
};

struct Indexed {
    std::vector<std::array<Slot, 3>> slots;
    int start_vertex = -1;   // inner endpoint of a
    int start_dir = 0;       // motion direction of the half-step a -> inner
    int entry_slot = -1;     // slot of the inner endpoint holding a
};

Indexed build_index(const Domain& d, const MidEdge& a) {
    if (!d.is_boundary_mid(a))
        throw std::invalid_argument("enumerate_walks: a must be a boundary mid-edge");
    Indexed ix;
    const auto& vs = d.vertices();
    ix.slots.resize(vs.size());
    for (size_t i = 0; i < vs.size(); ++i) {
        auto nb = neighbors(vs[i]);
        for (int s = 0; s < 3; ++s) {
            Slot& sl = ix.slots[i][static_cast<size_t>(s)];
            sl.nbr = d.vertex_index(nb[static_cast<size_t>(s)]);
            sl.mid = d.mid_index(MidEdge(vs[i], nb[static_cast<size_t>(s)]));
            sl.dir = edge_direction(vs[i], nb[static_cast<size_t>(s)]);
        }
    }
    Vertex inner = d.contains_vertex(a.lo) ? a.lo : a.hi;
    Vertex outer = (inner == a.lo) ? a.hi : a.lo;
    ix.start_vertex = d.vertex_index(inner);
    ix.start_dir = edge_direction(outer, inner);
    auto nb = neighbors(inner);
    for (int s = 0; s < 3; ++s)
        if (MidEdge(inner, nb[static_cast<size_t>(s)]) == a) ix.entry_slot = s;
    return ix;
}

inline int turn_of(int din, int dout) {
    int t = ((dout - din + 3) % 6 + 6) % 6 - 3;
    return t;  // +-1 for genuine continuations
}

int slot_of_mid(const Indexed& ix, int v, int mid) {
    const auto& slots = ix.slots[static_cast<size_t>(v)];
    for (int s = 0; s < 3; ++s)
        if (slots[static_cast<size_t>(s)].mid == mid) return s;
    return -1;
}

}  // namespace

uint64_t enumerate_walks(const Domain& d, const MidEdge& a, const EnumOptions& opts,
                         const std::function<void(const Walk&)>& visit) {
    Indexed ix = build_index(d, a);
    uint64_t count = 0;

    visit(Walk::trivial(a));
    ++count;
    if (opts.max_vertices && *opts.max_vertices == 0) return count;

    const auto& vs = d.vertices();
    const auto& ms = d.mid_edges();
    std::vector<Vertex> path{vs[static_cast<size_t>(ix.start_vertex)]};
    std::vector<uint8_t> visited(vs.size(), 0);
    visited[static_cast<size_t>(ix.start_vertex)] = 1;

    // recursive DFS carrying the explicit vertex path for the callback
    std::function<void(int, int, int)> rec = [&](int v, int entry_slot, int ell) {
        const auto& slots = ix.slots[static_cast<size_t>(v)];
        for (int s = 0; s < 3; ++s) {
            if (s == entry_slot) continue;
            const Slot& sl = slots[static_cast<size_t>(s)];
            if (++count > opts.cap) throw WalkCapExceeded(opts.cap);
            visit(Walk{a, path, ms[static_cast<size_t>(sl.mid)]});
            if (sl.nbr >= 0 && !visited[static_cast<size_t>(sl.nbr)] &&
                (!opts.max_vertices || ell < *opts.max_vertices)) {
                visited[static_cast<size_t>(sl.nbr)] = 1;
                path.push_back(vs[static_cast<size_t>(sl.nbr)]);
                int entry2 = -1;
                for (int u = 0; u < 3; ++u)
                    if (ix.slots[static_cast<size_t>(sl.nbr)][static_cast<size_t>(u)].mid ==
                        sl.mid)
                        entry2 = u;
                rec(sl.nbr, entry2, ell + 1);
                path.pop_back();
                visited[static_cast<size_t>(sl.nbr)] = 0;
            }
        }
    };
    rec(ix.start_vertex, ix.entry_slot, 1);
    return count;
}

WalkStats::WalkStats(const Domain& d, int t_extent)
    : t_extent_(t_extent), max_len_(static_cast<int>(d.vertices().size())) {
    size_t cells = static_cast<size_t>(2 * t_extent_ + 1) * static_cast<size_t>(max_len_ + 1);
    hist_.assign(d.mid_edges().size(), std::vector<int64_t>(cells, 0));
}

void WalkStats::for_each(int mid_idx,
                         const std::function<void(int, int, int64_t)>& f) const {
    const auto& h = hist_[static_cast<size_t>(mid_idx)];
    for (int t = -t_extent_; t <= t_extent_; ++t)
        for (int ell = 0; ell <= max_len_; ++ell) {
            int64_t n = h[cell(t, ell)];
            if (n != 0) f(t, ell, n);
        }
}

namespace {

struct PrefixState {
    std::vector<int> path;  // vertex indices, in order
    int entry_slot;
    int din;
    int t;
};

// DFS recording ends into a shard histogram (no Walk construction).
void stats_dfs(const Indexed& ix, std::vector<uint8_t>& visited, int v, int entry_slot,
               int din, int t, int ell, const std::optional<int>& max_v, WalkStats& shard,
               uint64_t& count, uint64_t cap) {
    const auto& slots = ix.slots[static_cast<size_t>(v)];
    for (int s = 0; s < 3; ++s) {
        if (s == entry_slot) continue;
        const Slot& sl = slots[static_cast<size_t>(s)];
        int t2 = t + turn_of(din, sl.dir);
        if (++count > cap) throw WalkCapExceeded(cap);
        shard.add(sl.mid, t2, ell, 1);
        if (sl.nbr >= 0 && !visited[static_cast<size_t>(sl.nbr)] &&
            (!max_v || ell < *max_v)) {
            int entry2 = slot_of_mid(ix, sl.nbr, sl.mid);
            visited[static_cast<size_t>(sl.nbr)] = 1;
            stats_dfs(ix, visited, sl.nbr, entry2, sl.dir, t2, ell + 1, max_v, shard,
                      count, cap);
            visited[static_cast<size_t>(sl.nbr)] = 0;
        }
    }
}

// Serial pass to a fixed depth: records all ends with ell <= depth into base,
// collects the continuation states at exactly `depth` visited vertices.
void prefix_pass(const Indexed& ix, std::vector<uint8_t>& visited,
                 std::vector<int>& path, int v, int entry_slot, int din, int t,
                 int depth, const std::optional<int>& max_v, WalkStats& base,
                 uint64_t& count, uint64_t cap, std::vector<PrefixState>& out) {
    int ell = static_cast<int>(path.size());
    if (ell == depth) {
        // the worker owning this state records its walk ends
        out.push_back(PrefixState{path, entry_slot, din, t});
        return;
    }
    const auto& slots = ix.slots[static_cast<size_t>(v)];
    for (int s = 0; s < 3; ++s) {
        if (s == entry_slot) continue;
        const Slot& sl = slots[static_cast<size_t>(s)];
        int t2 = t + turn_of(din, sl.dir);
        if (++count > cap) throw WalkCapExceeded(cap);
        base.add(sl.mid, t2, ell, 1);
    }
    for (int s = 0; s < 3; ++s) {
        if (s == entry_slot) continue;
        const Slot& sl = slots[static_cast<size_t>(s)];
        int t2 = t + turn_of(din, sl.dir);
        if (sl.nbr >= 0 && !visited[static_cast<size_t>(sl.nbr)] &&
            (!max_v || ell < *max_v)) {
            int entry2 = slot_of_mid(ix, sl.nbr, sl.mid);
            visited[static_cast<size_t>(sl.nbr)] = 1;
            path.push_back(sl.nbr);
            prefix_pass(ix, visited, path, sl.nbr, entry2, sl.dir, t2, depth, max_v, base,
                        count, cap, out);
            path.pop_back();
            visited[static_cast<size_t>(sl.nbr)] = 0;
        }
    }
}

}  // namespace

WalkStats collect_stats(const Domain& d, const MidEdge& a, const EnumOptions& opts) {
    Indexed ix = build_index(d, a);
    int t_ext = static_cast<int>(d.vertices().size()) + 1;
    WalkStats total(d, t_ext);

    // trivial walk
    total.add(d.mid_index(a), 0, 0, 1);
    total.total_ = 1;
    if (opts.max_vertices && *opts.max_vertices == 0) return total;

    std::vector<uint8_t> visited(d.vertices().size(), 0);
    visited[static_cast<size_t>(ix.start_vertex)] = 1;
    uint64_t count = 0;

    int workers = std::max(1, opts.workers);
    if (workers == 1) {
        stats_dfs(ix, visited, ix.start_vertex, ix.entry_slot, ix.start_dir, 0, 1,
                  opts.max_vertices, total, count, opts.cap);
        total.total_ += count;
        return total;
    }

    // parallel: distribute fixed-depth prefixes
    const int depth = 8;
    std::vector<PrefixState> states;
    std::vector<int> path{ix.start_vertex};
    prefix_pass(ix, visited, path, ix.start_vertex, ix.entry_slot, ix.start_dir, 0, depth,
                opts.max_vertices, total, count, opts.cap, states);

    std::vector<WalkStats> shards(static_cast<size_t>(workers), WalkStats(d, t_ext));
    std::vector<uint64_t> shard_counts(static_cast<size_t>(workers), 0);
    std::atomic<size_t> next{0};
    std::atomic<bool> capped{false};
    auto worker_fn = [&](int w) {
        std::vector<uint8_t> vis(d.vertices().size(), 0);
        try {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= states.size() || capped.load()) break;
                const PrefixState& st = states[i];
                std::fill(vis.begin(), vis.end(), 0);
                for (int vi : st.path) vis[static_cast<size_t>(vi)] = 1;
                stats_dfs(ix, vis, st.path.back(), st.entry_slot, st.din, st.t,
                          static_cast<int>(st.path.size()), opts.max_vertices,
                          shards[static_cast<size_t>(w)], shard_counts[static_cast<size_t>(w)],
                          opts.cap);
            }
        } catch (const WalkCapExceeded&) {
            capped.store(true);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn, w);
    for (auto& th : pool) th.join();

    uint64_t grand = count;
    for (int w = 0; w < workers; ++w) grand += shard_counts[static_cast<size_t>(w)];
    if (capped.load() || grand > opts.cap) throw WalkCapExceeded(opts.cap);
    for (int w = 0; w < workers; ++w) {
        const auto& sh = shards[static_cast<size_t>(w)].hist_;
        for (size_t m = 0; m < sh.size(); ++m)
            for (size_t c = 0; c < sh[m].size(); ++c) total.hist_[m][c] += sh[m][c];
    }
    total.total_ += grand;
    return total;
}

std::vector<int64_t> count_cn(int n_max, uint64_t cap) {
    if (n_max < 1) throw std::invalid_argument("count_cn: n_max must be >= 1");
    if (n_max > 32) throw std::invalid_argument("count_cn: n_max > 32 not supported");
    // window big enough for any n_max-step walk from (1,0)
    const int P0 = 1 - 2 * (n_max + 1), P1 = 1 + 2 * (n_max + 1);
    const int Q0 = -(n_max + 1), Q1 = n_max + 1;
    const int W = P1 - P0 + 1;
    std::vector<uint8_t> visited(static_cast<size_t>(W) * static_cast<size_t>(Q1 - Q0 + 1), 0);
    auto idx = [&](int p, int q) {
        return static_cast<size_t>(q - Q0) * static_cast<size_t>(W) +
               static_cast<size_t>(p - P0);
    };
    std::vector<int64_t> c(static_cast<size_t>(n_max) + 1, 0);
    uint64_t total = 0;
    Vertex origin{1, 0};
    visited[idx(1, 0)] = 1;
    std::function<void(Vertex, int)> rec = [&](Vertex v, int n) {
        if (n == n_max) return;
        for (Vertex w : neighbors(v)) {
            size_t i = idx(w.p, w.q);
            if (visited[i]) continue;
            if (++total > cap) throw WalkCapExceeded(cap);
            c[static_cast<size_t>(n) + 1] += 1;
            visited[i] = 1;
            rec(w, n + 1);
            visited[i] = 0;
        }
    };
    rec(origin, 0);
    return std::vector<int64_t>(c.begin() + 1, c.end());
}

std::vector<double> estimate_mu(const std::vector<int64_t>& c, MuMethod method) {
    if (c.empty()) throw std::invalid_argument("estimate_mu: empty counts");
    for (int64_t x : c)
        if (x <= 0) throw std::invalid_argument("estimate_mu: counts must be positive");
    std::vector<double> out;
    if (method == MuMethod::Root) {
        for (size_t i = 0; i < c.size(); ++i)
            out.push_back(std::pow(static_cast<double>(c[i]), 1.0 / static_cast<double>(i + 1)));
    } else {
        for (size_t i = 1; i < c.size(); ++i)
            out.push_back(static_cast<double>(c[i]) / static_cast<double>(c[i - 1]));
    }
    return out;
}

}  // namespace hexsaw
