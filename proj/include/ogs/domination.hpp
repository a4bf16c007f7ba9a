#ifndef ogs_domination_hpp
#define ogs_domination_hpp

#include <vector>

#include "ogs/chains.hpp"
#include "ogs/root_lattice.hpp"

namespace ogs {

// Subset of N_v whose pairs satisfy the noncomparability conditions
//   A: distinct rows and distinct columns,
//   B: for (R,C), (r,c) with R > r, either r < C or C < c.
// These are exactly the sets in bijection with {w >= v} in I(d,2d): drop
// the column indices from v, add the row indices.
class DistinguishedSet {
public:
    DistinguishedSet(const RootRegions& rr, std::vector<Root> roots);

    const std::vector<Root>& roots() const { return roots_; }
    const IdElement& element() const { return w_; }
    bool empty() const { return roots_.empty(); }

private:
    std::vector<Root> roots_;
    IdElement w_;
};

bool is_distinguished(const std::vector<Root>& roots);

// The unique distinguished subset S_w attached to w >= v: rows w \ v,
// columns v \ w, each row matched greedily (ascending) to the largest
// unused smaller column.
DistinguishedSet to_distinguished(const RootRegions& rr, const IdElement& w);
IdElement from_distinguished(const RootRegions& rr, const std::vector<Root>& roots);

// Grassmannian-sense domination over N_v.
bool gr_dominates_chain(const RootRegions& rr, const IdElement& x, const std::vector<Root>& chain);
// Depth criterion: every root of S is covered by an S_x root of at least
// its depth that dominates it.
bool gr_dominates(const RootRegions& rr, const IdElement& x, const Monomial& s);
// Chain-by-chain evaluation of the definition (test oracle).
bool gr_dominates_oracle(const RootRegions& rr, const IdElement& x, const Monomial& s);

// Depth slices of S_x pulled back to index elements.
IdElement slice_exact(const RootRegions& rr, const IdElement& x, int k);    // x_k
IdElement slice_at_least(const RootRegions& rr, const IdElement& x, int k); // x^k
IdElement slice_pair(const RootRegions& rr, const IdElement& x, int j);     // x_{j,j+1}
int distinguished_depth(const RootRegions& rr, const IdElement& x);

// w O-dominates a chain when w >= w(C).
bool o_dominates_chain(const RootRegions& rr, const IdElement& w, const VChain& c);
// w O-dominates an ON_v monomial when it O-dominates every chain in it.
// Evaluated by depth-first search over chains; a prefix that already fails
// settles the answer, and it is enough to reach every maximal chain.
bool o_dominates(const RootRegions& rr, const IdElement& w, const Monomial& s);
// Layered criterion: chains of each O-depth class pair {j, j+1} checked
// against x_{j,j+1}. Quadratic; used by the counting hot loops.
bool o_dominates_layered(const RootRegions& rr, const IdElement& x, const Monomial& s);

// First component of the ortho pi map (defined in pi_phi.cpp); the base
// element for empty input.
IdElement least_o_dominating(const RootRegions& rr, const Monomial& s);
// Exhaustive scan over I(d) kept behind this entry point as the oracle.
IdElement least_o_dominating_oracle(const RootRegions& rr, const Monomial& s);

} // namespace ogs

#endif
