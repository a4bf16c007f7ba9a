#ifndef ogs_pi_phi_hpp
#define ogs_pi_phi_hpp

#include <map>
#include <optional>
#include <vector>

#include "ogs/domination.hpp"
#include "ogs/root_lattice.hpp"

namespace ogs {

// One block of an antichain monomial in N_v: a maximal run, in the
// ascending row/column arrangement, in which every column index stays
// below the preceding row index. w(B) is (max row, min col); B' collects
// the consecutive intersections (r_i, c_{i+1}).
struct GrBlock {
    std::vector<Root> elems; // ascending, repeats adjacent
    Root w_of;
    std::vector<Root> bprime;
};

std::vector<GrBlock> gr_blocks(const Monomial& antichain);

struct GrPiResult {
    IdElement x;
    Monomial sprime;
    std::vector<Root> heads; // union of w(B) over all blocks and layers
};

// Per depth layer: block decomposition; x swaps the block columns of the
// base for the block rows; S' is the union of the B'.
GrPiResult gr_pi(const RootRegions& rr, const Monomial& s);

struct GrPhiPiece {
    Root owner;     // element of S_x
    int owner_depth;
    Monomial piece; // members of the owner's layer it dominates
    Monomial star;  // reconstructed block
};

struct GrPhiResult {
    Monomial total;
    std::vector<GrPhiPiece> pieces;
};

// Inverse of gr_pi for pairs (x, T) with x dominating T: members of T are
// classed by the deepest slice x^k dominating every chain they head, pieces
// within a class belong to the unique same-depth element of S_x dominating
// them, and each piece is expanded back into a block.
GrPhiResult gr_phi_detailed(const RootRegions& rr, const IdElement& x, const Monomial& t);
Monomial gr_phi(const RootRegions& rr, const IdElement& x, const Monomial& t);

// S_{j,j+1}: the symmetrized O-depth layer pair. When the monomial is truly
// orthogonal at j, one copy of sigma_j is traded for both its projections.
Monomial build_layer_monomial(const RootRegions& rr, const Monomial& s, int j);

struct OrthoPiResult {
    IdElement w;
    Monomial sprime;
};

// The ortho pi map: layer monomials S_{j,j+1} over odd j, gr_pi on each,
// the block heads assembled into w and the primes intersected with ON_v.
// Empty input is a domain error.
OrthoPiResult ortho_pi(const RootRegions& rr, const Monomial& s);

// Classes T_{w,j,j+1}: every chain headed by the element is O-dominated by
// w^j but some chain is not O-dominated by w^{j+2}. Keys are the odd j.
std::map<int, Monomial> partition_T(const RootRegions& rr, const IdElement& w, const Monomial& t);

struct OrthoPhiLayer {
    int j = 0;
    IdElement w_slice;           // w_{j,j+1}
    Monomial class_monomial;     // T_{w,j,j+1}
    Monomial symmetrized;        // class united with its hash image
    GrPhiResult phi;             // gr_phi against w_{j,j+1}
    std::optional<Root> delta;   // delta_j when w is diagonal at j
    Monomial contribution;       // twisted result intersected with ON_v
};

struct OrthoPhiResult {
    Monomial total;
    std::vector<OrthoPhiLayer> layers;
};

// The ortho phi map: per class, symmetrize, apply gr_phi against w_{j,j+1},
// twist the diagonal pair when present, keep the part above the diagonal.
OrthoPhiResult ortho_phi_detailed(const RootRegions& rr, const IdElement& w, const Monomial& t);
Monomial ortho_phi(const RootRegions& rr, const IdElement& w, const Monomial& t);

// The orthogonal piece-star of beta in S_w(up): the piece star itself away
// from the diagonal, its above-diagonal part for the deeper diagonal owner,
// and that part plus delta_j for the shallower one.
Monomial ortho_piece_star(const RootRegions& rr, const OrthoPhiLayer& layer, Root beta,
                          int beta_depth);

namespace testing {
// Knob for the mutation check in the verify command: disables the diagonal
// twist inside ortho_phi so the inverse-map property visibly breaks.
extern bool disable_delta_twist;
} // namespace testing

} // namespace ogs

#endif
