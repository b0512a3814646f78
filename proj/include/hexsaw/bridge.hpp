#ifndef HEXSAW_BRIDGE_HPP
#define HEXSAW_BRIDGE_HPP

#include <string>
#include <vector>

#include "hexsaw/observable.hpp"
#include "hexsaw/walk.hpp"

namespace hexsaw {

/// Strip width of a walk: the hexagon-column span of its vertices
/// (pair indices). A side-to-side bridge in S_T has width exactly T; a
/// one-vertex walk has width 0. Throws std::invalid_argument on the empty
/// walk.
int width(const Walk& w);

/// Canonical bridge decomposition of a walk. Pieces are stored in
/// chronological order; consecutive pieces share their junction: piece k+1
/// starts at piece k's end mid-edge with piece k's last vertex as its first.
/// The first `negative_count` pieces belong to the part of the walk before
/// the first vertex of maximal real part (widths increasing), the rest to
/// the half-plane tail (widths decreasing).
///
/// `keys` carry the exact strict-monotonicity certificates: the doubled-
/// coordinate span of each piece's vertices, the first piece of each of the
/// two chains credited with the gap to the virtual vertex beyond its start
/// mid-edge (2 for horizontal, 1 for diagonal). Within each chain the keys
/// strictly decrease; column widths alone may tie when a chain ends in an
/// incomplete piece.
struct BridgeDecomposition {
    MidEdge anchor_mid;
    Vertex first_vertex;
    std::vector<Walk> pieces;
    std::vector<long> keys;
    size_t negative_count = 0;

    std::vector<int> negative_widths() const;     // increasing
    std::vector<int> nonnegative_widths() const;  // decreasing (up to tail ties)
    std::string to_json() const;
};

/// Decompose a nonempty self-avoiding walk. Throws on the trivial walk.
BridgeDecomposition decompose(const Walk& w);

/// Rebuild the unique walk whose decomposition is `pieces`, translated so the
/// first piece starts at the anchor. Throws std::invalid_argument for
/// unchainable pieces or width patterns that no decomposition produces.
Walk reconstruct(const MidEdge& anchor_mid, Vertex first_vertex,
                 const std::vector<Walk>& pieces);

/// B_{T,L}^x computed by a second route: every a->beta walk is checked to be
/// a width-T bridge, then x^l summed. Cross-checked against partition_ABE's
/// B field; throws std::logic_error on mismatch.
ObservableValue bridge_partition(int T, int L, Weight x, const EnumOptions& opts = {});

}  // namespace hexsaw

#endif
