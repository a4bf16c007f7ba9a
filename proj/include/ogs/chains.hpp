#ifndef ogs_chains_hpp
#define ogs_chains_hpp

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ogs/root_lattice.hpp"

namespace ogs {

enum class ElementType { V, H, S };

char type_letter(ElementType t);

// Strictly decreasing sequence of ON_v roots in the chain order
// (R,C) > (r,c) iff R > r and C < c. Empty chains are allowed.
class VChain {
public:
    VChain() = default;
    VChain(const RootRegions& rr, std::vector<Root> elements);

    bool empty() const { return elems_.empty(); }
    int length() const { return static_cast<int>(elems_.size()); }
    Root operator[](int i) const { return elems_[i]; }
    const std::vector<Root>& elements() const { return elems_; }
    Root head() const { return elems_.front(); }
    Root tail() const { return elems_.back(); }

private:
    std::vector<Root> elems_;
};

// Consecutive elements are connected when their legs intertwine
// (r_j <= c_{j+1}*) and (r_{j+1}, r_j*) lies in N_v (r_{j+1} > r_j*).
bool connected(const RootRegions& rr, Root a, Root b);

// Index ranges [first,last] of the connected components, in chain order.
std::vector<std::pair<int, int>> connected_components(const RootRegions& rr, const VChain& c);

struct ChainTypes {
    std::vector<ElementType> types;
    std::vector<std::pair<int, int>> components;
    // index of the first element whose horizontal projection leaves N_v
    std::optional<int> critical;
};

ChainTypes element_types(const RootRegions& rr, const VChain& c);

// S_{C,alpha}: {p_v} for type V, {p_v, p_h} for type H, {alpha, alpha#} for
// type S. S_C is their union over the chain.
Monomial chain_element_contribution(const RootRegions& rr, Root alpha, ElementType t);
Monomial chain_monomial(const RootRegions& rr, const VChain& c);
// q_{C,alpha}: p_v(alpha) for types V and H, alpha itself for type S.
Root q_element(const RootRegions& rr, const VChain& c, int index);

// w(C): start from the base element, drop the column indices of S_C and
// add its row indices. The empty chain gives back the base element.
IdElement w_of_chain(const RootRegions& rr, const VChain& c);
// Same recipe applied to the chain itself rather than S_C (the
// Grassmannian-case attachment; the chain need not lie in ON_v).
IdElement w_gr_of_roots(const RootRegions& rr, const std::vector<Root>& chain);

// Longest chain with a given tail, per support root (depth in N_v).
class DepthTable {
public:
    int depth_of(Root a) const;
    int max_depth() const { return max_depth_; }
    const std::map<Root, int>& values() const { return depths_; }

    friend DepthTable depth_table(const Monomial& s);

private:
    std::map<Root, int> depths_;
    int max_depth_ = 0;
};

DepthTable depth_table(const Monomial& s);

// O-depths of all elements of a chain, computed left to right: +2 exactly
// after a type H element whose horizontal projection exceeds the successor,
// +1 otherwise.
std::vector<int> odepths_in_chain(const RootRegions& rr, const VChain& c);
int odepth_in_chain(const RootRegions& rr, const VChain& c, Root alpha);

// O-depth of every support root of an ON_v monomial: the maximum of its
// O-depth over chains through it. Computed by dynamic programming over the
// chain-order DAG; the state per root is the parity of its connected
// component in the realizing chain, which is what the +1/+2 increment rule
// depends on.
class ODepthTable {
public:
    int odepth_of(Root a) const;
    int max_odepth() const { return max_; }
    const std::map<Root, int>& values() const { return values_; }

    friend ODepthTable odepth_table(const RootRegions& rr, const Monomial& s);
    friend ODepthTable odepth_table_oracle(const RootRegions& rr, const Monomial& s);

private:
    std::map<Root, int> values_;
    int max_ = 0;
};

ODepthTable odepth_table(const RootRegions& rr, const Monomial& s);
int odepth_in_monomial(const RootRegions& rr, const Monomial& s, Root alpha);
// Exhaustive chain enumeration; guards the recurrence. Refuses supports
// larger than 20 roots.
ODepthTable odepth_table_oracle(const RootRegions& rr, const Monomial& s);

// S_k^pr: multiset of elements of O-depth k. Index 0 of the result holds
// S_1^pr; entries keep multiplicities.
std::vector<Monomial> pr_partition(const RootRegions& rr, const Monomial& s);

// sigma_k: last element of S_k^pr in the ascending row/column arrangement.
Root sigma(const RootRegions& rr, const Monomial& s, int k);
// Whether p_h(sigma_j) stays in N_v, for odd j.
bool truly_orthogonal(const RootRegions& rr, const Monomial& s, int j);

// All maximal chains of the support, visited via callback. Used by oracles
// and definition-faithful domination checks.
void for_each_maximal_chain(const std::vector<Root>& support,
                            const std::function<void(const std::vector<Root>&)>& visit);

} // namespace ogs

#endif
