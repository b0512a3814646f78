#ifndef HEXSAW_STRIP_HPP
#define HEXSAW_STRIP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hexsaw/observable.hpp"

namespace hexsaw {

/// Partition functions over S_{T,L}: A sums x^l over walks a -> alpha\{a},
/// B over a -> beta, E over a -> eps u epsbar. At x = x_c the identity
/// 1 = c_alpha*A + B + c_eps*E holds exactly; identity_residual is its
/// left-minus-right.
struct PartitionReport {
    int T = 0;
    int L = 0;
    Weight x;
    ObservableValue A, B, E;
    ObservableValue identity_residual;
    uint64_t walk_count = 0;
};

PartitionReport partition_ABE(int T, int L, Weight x, const EnumOptions& opts = {});

/// Same sums when the caller already has the domain, or a collected
/// enumeration pass over (d, a).
PartitionReport partition_ABE(const Domain& d, Weight x, const EnumOptions& opts = {});
PartitionReport partition_ABE(const Domain& d, const WalkStats& stats, Weight x);

/// A, B, E for L = 1..L_max at fixed T.
std::vector<PartitionReport> scan_monotonicity(int T, int L_max, Weight x,
                                               const EnumOptions& opts = {});

/// The recursion-inequality cut: for a walk counted by A_{T+1,L} that leaves
/// S_T, split at the first vertex of the rightmost column of S_{T+1}; both
/// halves become width-(T+1) bridges ending at that vertex's east mid-edge,
/// with l1 + l2 = l + 1. Returns nullopt when the walk stays inside S_T.
/// Throws std::invalid_argument when the walk is not A-type.
std::optional<std::pair<Walk, Walk>> cut_map(const Walk& w, int T);

}  // namespace hexsaw

#endif
