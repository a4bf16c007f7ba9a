#ifndef ogs_counting_hpp
#define ogs_counting_hpp

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ogs/bigint.hpp"
#include "ogs/domination.hpp"
#include "ogs/root_lattice.hpp"

namespace ogs {

struct CountOptions {
    int max_on_subset = 24;              // subset enumeration refusal threshold
    bool force = false;                  // overrides the guardrails
    std::uint64_t node_budget = 50000000; // backtracking node cap
    int workers = 1;                     // worker threads for subset counting
};

// Endpoint data for the lattice path attached to beta in S_w(up).
// Diagonal betas have no fixed finish; a missing start means the column
// holds no ON_v point above beta and the path is empty.
struct PathEndpoint {
    Root beta;
    int depth = 0;
    bool diagonal = false;
    std::optional<Root> start;
    std::optional<Root> finish; // set exactly when beta is off the diagonal
};

std::vector<PathEndpoint> path_endpoints(const RootRegions& rr, const IdElement& w);

// Points one step above the diagonal: (r, c) with r the largest non-entry
// below c*, kept when they land in ON_v.
std::vector<Root> one_step_points(const RootRegions& rr);

using Path = std::vector<Root>;

struct PathTuple {
    std::vector<Path> paths; // aligned with path_endpoints order
};

// Every lattice path between the fixed points, in canonical (down before
// right) order. Steps go to the next larger non-entry row or entry column.
std::vector<Path> lattice_paths_between(const RootRegions& rr, Root start, Root finish);

// nullopt when valid; otherwise the violated rule.
std::optional<std::string> validate_path_tuple(const RootRegions& rr, const IdElement& w,
                                               const PathTuple& tuple);

BigUint count_path_tuples(const RootRegions& rr, const IdElement& w,
                          const CountOptions& opts = {});
void for_each_path_tuple(const RootRegions& rr, const IdElement& w, const CountOptions& opts,
                         const std::function<void(const PathTuple&)>& emit);

enum class MultMethod { paths, monomials, oracle };
MultMethod parse_mult_method(const std::string& name);

// counts[s] = number of square-free O-dominated monomials in ON_v with
// exactly s elements, up to size_cap. The shared engine behind the
// monomials method and the Hilbert convolution.
std::vector<BigUint> dominated_support_counts(const RootRegions& rr, const IdElement& w,
                                              int size_cap, const CountOptions& opts = {});

BigUint multiplicity(const RootRegions& rr, const IdElement& w, MultMethod method,
                     const CountOptions& opts = {});

// Number of degree-m monomials in OR_v whose ON_v part is O-dominated by
// w: a convolution of free-variable multiset counts with the constrained
// support counts.
BigUint hilbert_value(const RootRegions& rr, const IdElement& w, int m,
                      const CountOptions& opts = {});
std::vector<BigUint> hilbert_series_prefix(const RootRegions& rr, const IdElement& w, int max_m,
                                           const CountOptions& opts = {});
// Explicit enumeration of all degree-m multisets with chain-by-chain
// domination tests; small instances only.
BigUint oracle_hilbert(const RootRegions& rr, const IdElement& w, int m,
                       const CountOptions& opts = {});

} // namespace ogs

#endif
