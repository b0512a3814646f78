#ifndef HEXSAW_ENUMERATE_HPP
#define HEXSAW_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hexsaw/walk.hpp"

namespace hexsaw {

/// Thrown when an enumeration would exceed its walk cap. No partial results.
class WalkCapExceeded : public std::runtime_error {
public:
    explicit WalkCapExceeded(uint64_t cap)
        : std::runtime_error("walk cap exceeded (" + std::to_string(cap) + ")") {}
};

struct EnumOptions {
    std::optional<int> max_vertices;     // nullopt = unbounded (domain is finite)
    uint64_t cap = 1000000000ULL;        // hard cap on enumerated walks
    int workers = 1;                     // histogram collection only
};

/// Visits every self-avoiding mid-edge walk in d starting at the boundary
/// mid-edge a (including the trivial walk), depth-first in canonical
/// neighbor order, serially. Returns the number of walks visited.
/// Throws std::invalid_argument if a is not a boundary mid-edge of d,
/// WalkCapExceeded past the cap.
uint64_t enumerate_walks(const Domain& d, const MidEdge& a, const EnumOptions& opts,
                         const std::function<void(const Walk&)>& visit);

/// Winding/length tallies of all walks from a, one (t, l) histogram per
/// mid-edge: everything the observable and the partition sums need, gathered
/// in a single enumeration pass. Counts are exact; parallel collection merges
/// shard histograms by addition, so totals are schedule-independent.
class WalkStats {
public:
    WalkStats(const Domain& d, int t_extent);

    int64_t count(int mid_idx, int t, int ell) const {
        return hist_[static_cast<size_t>(mid_idx)][cell(t, ell)];
    }
    int t_extent() const { return t_extent_; }
    int max_len() const { return max_len_; }
    uint64_t total_walks() const { return total_; }

    /// iterate nonzero cells of one mid-edge histogram
    void for_each(int mid_idx, const std::function<void(int t, int ell, int64_t n)>& f) const;

    void add(int mid_idx, int t, int ell, int64_t n) {
        hist_[static_cast<size_t>(mid_idx)][cell(t, ell)] += n;
    }

    friend WalkStats collect_stats(const Domain&, const MidEdge&, const EnumOptions&);

private:
    size_t cell(int t, int ell) const {
        return static_cast<size_t>(t + t_extent_) * static_cast<size_t>(max_len_ + 1) +
               static_cast<size_t>(ell);
    }

    int t_extent_;
    int max_len_;
    uint64_t total_ = 0;
    std::vector<std::vector<int64_t>> hist_;  // [mid][cell]
};

WalkStats collect_stats(const Domain& d, const MidEdge& a, const EnumOptions& opts);

/// Exact counts c_1..c_n of n-step self-avoiding vertex walks on the full
/// lattice from the origin vertex (a's inner endpoint). Directed walks.
/// Throws WalkCapExceeded when more than `cap` walks would be visited.
std::vector<int64_t> count_cn(int n_max, uint64_t cap = 1000000000ULL);

enum class MuMethod { Root, Ratio };

/// Root method: c_n^(1/n); ratio method: c_n / c_{n-1} (first entry at n = 2).
/// No extrapolation. Throws std::invalid_argument on empty or nonpositive
/// counts.
std::vector<double> estimate_mu(const std::vector<int64_t>& c, MuMethod method);

}  // namespace hexsaw

#endif
