#include "ogs/counting.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "ogs/errors.hpp"

namespace ogs {

std::vector<Root> one_step_points(const RootRegions& rr) {
    std::vector<Root> out;
    for (int c : rr.base().entries()) {
        int best = 0;
        for (int r = 1; r < rr.star(c); ++r)
            if (!rr.is_entry(r)) best = r;
        if (best > c) out.push_back(Root{best, c});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PathEndpoint> path_endpoints(const RootRegions& rr, const IdElement& w) {
    DistinguishedSet sw = to_distinguished(rr, w);
    Monomial m(Region::N);
    for (Root a : sw.roots()) m.add(a);
    DepthTable depths = depth_table(m);

    std::vector<PathEndpoint> out;
    for (Root beta : sw.roots()) {
        if (!rr.in_up(beta)) continue;
        PathEndpoint pe;
        pe.beta = beta;
        pe.depth = depths.depth_of(beta);
        pe.diagonal = rr.on_diagonal(beta);
        for (int r = beta.c + 1; r < rr.star(beta.c); ++r) {
            if (!rr.is_entry(r)) {
                pe.start = Root{r, beta.c};
                break;
            }
        }
        if (!pe.diagonal) {
            int best = 0;
            for (int c : rr.base().entries())
                if (c < beta.r && c < rr.star(beta.r)) best = c;
            pe.finish = Root{beta.r, best}; // beta.c qualifies, so best >= beta.c
        }
        out.push_back(pe);
    }
    return out;
}

std::vector<Path> lattice_paths_between(const RootRegions& rr, Root start, Root finish) {
    std::vector<Path> out;
    if (!rr.in_ON(start) || !rr.in_ON(finish)) return out;
    if (finish.r < start.r || finish.c < start.c) return out;
    Path current{start};
    auto rec = [&](auto&& self, Root at) -> void {
        if (at == finish) {
            out.push_back(current);
            return;
        }
        if (auto r = rr.next_row(at.r); r && *r <= finish.r) {
            Root next{*r, at.c};
            if (rr.in_ON(next)) {
                current.push_back(next);
                self(self, next);
                current.pop_back();
            }
        }
        if (auto c = rr.next_col(at.c); c && *c <= finish.c) {
            Root next{at.r, *c};
            if (rr.in_ON(next)) {
                current.push_back(next);
                self(self, next);
                current.pop_back();
            }
        }
    };
    rec(rec, start);
    return out;
}

namespace {

// Candidate paths per endpoint; diagonal betas fan out over the admissible
// one-step finishes, an absent start yields the single empty path.
std::vector<std::vector<Path>> candidate_paths(const RootRegions& rr,
                                               const std::vector<PathEndpoint>& endpoints) {
    std::vector<Root> steps = one_step_points(rr);
    std::vector<std::vector<Path>> out;
    for (const PathEndpoint& pe : endpoints) {
        std::vector<Path> cands;
        if (!pe.start) {
            cands.push_back({}); // empty path
        } else if (!pe.diagonal) {
            cands = lattice_paths_between(rr, *pe.start, *pe.finish);
        } else {
            for (Root finish : steps) {
                if (finish.c < pe.beta.c) continue;
                for (Path& p : lattice_paths_between(rr, *pe.start, finish))
                    cands.push_back(std::move(p));
            }
        }
        out.push_back(std::move(cands));
    }
    return out;
}

// Index of the coupled partner for odd-depth diagonal endpoints: the
// diagonal element one depth lower... (one depth deeper, depth+1).
std::vector<int> coupling_partners(const std::vector<PathEndpoint>& endpoints) {
    std::vector<int> partner(endpoints.size(), -1);
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
        if (!endpoints[i].diagonal || endpoints[i].depth % 2 == 0) continue;
        for (std::size_t j = 0; j < endpoints.size(); ++j) {
            if (endpoints[j].diagonal && endpoints[j].depth == endpoints[i].depth + 1) {
                partner[i] = static_cast<int>(j);
                break;
            }
        }
        if (partner[i] < 0)
            throw validation_error("odd-depth diagonal element lacks its even partner");
    }
    return partner;
}

bool coupling_satisfied(const RootRegions& rr, const Path& odd_path, const Path& even_path,
                        Root even_beta) {
    // horizontal projection of the odd finish equals the vertical
    // projection of the even finish; an empty even path degenerates to the
    // diagonal point itself, an empty odd path forces both empty
    if (odd_path.empty()) return true;
    int even_col = even_path.empty() ? even_beta.c : even_path.back().c;
    return rr.star(odd_path.back().r) == even_col;
}

} // namespace

std::optional<std::string> validate_path_tuple(const RootRegions& rr, const IdElement& w,
                                               const PathTuple& tuple) {
    std::vector<PathEndpoint> endpoints = path_endpoints(rr, w);
    if (tuple.paths.size() != endpoints.size())
        return "tuple must carry one path per element of S_w(up)";
    std::vector<Root> steps = one_step_points(rr);
    std::set<Root> used;
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
        const PathEndpoint& pe = endpoints[i];
        const Path& path = tuple.paths[i];
        if (!pe.start) {
            if (!path.empty()) return "path attached to " + to_string(pe.beta) + " must be empty";
            continue;
        }
        if (path.empty()) return "missing path for " + to_string(pe.beta);
        if (path.front() != *pe.start)
            return "path for " + to_string(pe.beta) + " does not begin at its start point";
        for (Root a : path) {
            if (!rr.in_ON(a)) return "path point " + to_string(a) + " lies outside ON_v";
        }
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            Root a = path[k], b = path[k + 1];
            bool down = rr.next_row(a.r) && b == Root{*rr.next_row(a.r), a.c};
            bool right = rr.next_col(a.c) && b == Root{a.r, *rr.next_col(a.c)};
            if (!down && !right)
                return "illegal step " + to_string(a) + " -> " + to_string(b);
        }
        if (!pe.diagonal) {
            if (path.back() != *pe.finish)
                return "path for " + to_string(pe.beta) + " does not end at its finish point";
        } else {
            Root end = path.back();
            if (std::find(steps.begin(), steps.end(), end) == steps.end())
                return "diagonal path end " + to_string(end) +
                       " is not one step away from the diagonal";
            if (end.c < pe.beta.c)
                return "diagonal path end column precedes the column of " + to_string(pe.beta);
        }
        for (Root a : path) {
            if (!used.insert(a).second) return "paths intersect at " + to_string(a);
        }
    }
    std::vector<int> partner = coupling_partners(endpoints);
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
        if (partner[i] < 0) continue;
        if (!coupling_satisfied(rr, tuple.paths[i], tuple.paths[partner[i]],
                                endpoints[partner[i]].beta))
            return "diagonal coupling violated: the horizontal projection of the depth-" +
                   std::to_string(endpoints[i].depth) + " finish differs from the vertical " +
                   "projection of the depth-" + std::to_string(endpoints[i].depth + 1) + " finish";
    }
    return std::nullopt;
}

namespace {

struct TupleSearch {
    const RootRegions& rr;
    const std::vector<PathEndpoint>& endpoints;
    const std::vector<std::vector<Path>>& candidates;
    const std::vector<int>& partner;
    std::uint64_t budget;
    bool enforce_budget;
    std::uint64_t nodes = 0;
    std::set<Root> used;
    std::vector<const Path*> chosen;
    const std::function<void(const PathTuple&)>* emit = nullptr;
    BigUint count;

    void run() {
        chosen.assign(endpoints.size(), nullptr);
        rec(0);
    }

    void rec(std::size_t i) {
        if (enforce_budget && ++nodes > budget)
            throw guardrail_error("path tuple search exceeded the node budget");
        if (i == endpoints.size()) {
            if (emit) {
                PathTuple tuple;
                for (const Path* p : chosen) tuple.paths.push_back(*p);
                (*emit)(tuple);
            }
            count += BigUint(1);
            return;
        }
        for (const Path& path : candidates[i]) {
            bool clash = false;
            for (Root a : path) {
                if (used.count(a)) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            // couplings whose both sides are now fixed
            chosen[i] = &path;
            bool coupled_ok = true;
            for (std::size_t k = 0; k <= i && coupled_ok; ++k) {
                int p = partner[k];
                if (p >= 0 && static_cast<std::size_t>(p) <= i)
                    coupled_ok = coupling_satisfied(rr, *chosen[k], *chosen[p],
                                                    endpoints[p].beta);
            }
            if (!coupled_ok) {
                chosen[i] = nullptr;
                continue;
            }
            for (Root a : path) used.insert(a);
            rec(i + 1);
            for (Root a : path) used.erase(a);
            chosen[i] = nullptr;
        }
    }
};

} // namespace

BigUint count_path_tuples(const RootRegions& rr, const IdElement& w, const CountOptions& opts) {
    std::vector<PathEndpoint> endpoints = path_endpoints(rr, w);
    std::vector<std::vector<Path>> candidates = candidate_paths(rr, endpoints);
    std::vector<int> partner = coupling_partners(endpoints);
    TupleSearch search{rr, endpoints, candidates, partner, opts.node_budget, !opts.force};
    search.run();
    return search.count;
}

void for_each_path_tuple(const RootRegions& rr, const IdElement& w, const CountOptions& opts,
                         const std::function<void(const PathTuple&)>& emit) {
    std::vector<PathEndpoint> endpoints = path_endpoints(rr, w);
    std::vector<std::vector<Path>> candidates = candidate_paths(rr, endpoints);
    std::vector<int> partner = coupling_partners(endpoints);
    TupleSearch search{rr, endpoints, candidates, partner, opts.node_budget, !opts.force};
    search.emit = &emit;
    search.run();
}

MultMethod parse_mult_method(const std::string& name) {
    if (name == "paths") return MultMethod::paths;
    if (name == "monomials") return MultMethod::monomials;
    if (name == "oracle") return MultMethod::oracle;
    throw validation_error("unknown method \"" + name + "\" (expected paths|monomials|oracle)");
}

namespace {

// All chains through rho inside support+rho O-dominated by w? New chains
// after adding rho all pass through it, so this is the whole incremental
// domination check.
bool chains_through_ok(const RootRegions& rr, const IdElement& w, const std::vector<Root>& supp,
                       Root rho) {
    std::vector<Root> above, below;
    for (Root a : supp) {
        if (chain_gt(a, rho)) above.push_back(a);
        if (chain_gt(rho, a)) below.push_back(a);
    }
    bool ok = true;
    std::vector<Root> upper; // decreasing chain ending just above rho
    auto rec_down = [&](auto&& self, std::vector<Root>& chain) -> void {
        if (!ok) return;
        if (!o_dominates_chain(rr, w, VChain(rr, chain))) {
            ok = false;
            return;
        }
        for (Root b : below) {
            if (chain_gt(chain.back(), b)) {
                chain.push_back(b);
                self(self, chain);
                chain.pop_back();
                if (!ok) return;
            }
        }
    };
    auto rec_up = [&](auto&& self) -> void {
        if (!ok) return;
        std::vector<Root> chain = upper;
        chain.push_back(rho);
        rec_down(rec_down, chain);
        if (!ok) return;
        Root limit = upper.empty() ? rho : upper.back();
        for (Root a : above) {
            bool fits = upper.empty() ? chain_gt(a, rho) : chain_gt(limit, a);
            if (!fits) continue;
            upper.push_back(a);
            self(self);
            upper.pop_back();
            if (!ok) return;
        }
    };
    rec_up(rec_up);
    return ok;
}

struct SupportCounter {
    const RootRegions& rr;
    const IdElement& w;
    const std::vector<Root>& roots;
    int size_cap;
    std::vector<BigUint> by_size;
    std::vector<Root> current;

    void count_from(std::size_t idx) {
        if (static_cast<int>(current.size()) > size_cap) return;
        by_size[current.size()] += BigUint(1);
        if (static_cast<int>(current.size()) == size_cap) return;
        for (std::size_t i = idx; i < roots.size(); ++i) {
            if (!chains_through_ok(rr, w, current, roots[i])) continue;
            current.push_back(roots[i]);
            count_from(i + 1);
            current.pop_back();
        }
    }
};

std::vector<BigUint> merge_counts(std::vector<std::vector<BigUint>> parts, std::size_t size) {
    std::vector<BigUint> out(size, BigUint(0));
    for (const auto& part : parts)
        for (std::size_t s = 0; s < part.size() && s < size; ++s) out[s] += part[s];
    return out;
}

} // namespace

std::vector<BigUint> dominated_support_counts(const RootRegions& rr, const IdElement& w,
                                              int size_cap, const CountOptions& opts) {
    if (!leq(rr.base(), w)) throw validation_error("w must dominate the base element");
    const std::vector<Root>& roots = rr.on_roots();
    size_cap = std::min<int>(size_cap, static_cast<int>(roots.size()));
    const std::size_t out_size = static_cast<std::size_t>(size_cap) + 1;

    if (opts.workers <= 1 || roots.size() < 2) {
        SupportCounter counter{rr, w, roots, size_cap, {}, {}};
        counter.by_size.assign(out_size, BigUint(0));
        counter.count_from(0);
        return counter.by_size;
    }

    // split on the fate of the first few roots; each task owns the subtree
    // of subsets with a fixed prefix, so merging by addition is exact and
    // independent of scheduling
    int prefix = 1;
    while ((1 << prefix) < 4 * opts.workers &&
           prefix < static_cast<int>(roots.size()))
        ++prefix;
    struct Task {
        std::vector<Root> current;
        std::size_t next;
    };
    std::vector<Task> tasks;
    std::vector<Root> current;
    auto build = [&](auto&& self, std::size_t idx) -> void {
        if (static_cast<int>(idx) == prefix) {
            tasks.push_back(Task{current, idx});
            return;
        }
        // excluded branch
        self(self, idx + 1);
        if (static_cast<int>(current.size()) < size_cap &&
            chains_through_ok(rr, w, current, roots[idx])) {
            current.push_back(roots[idx]);
            self(self, idx + 1);
            current.pop_back();
        }
    };
    build(build, 0);

    std::vector<std::vector<BigUint>> results(tasks.size());
    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size()) return;
            SupportCounter counter{rr, w, roots, size_cap, {}, tasks[i].current};
            counter.by_size.assign(out_size, BigUint(0));
            counter.count_from(tasks[i].next);
            results[i] = std::move(counter.by_size);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < opts.workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    return merge_counts(std::move(results), out_size);
}

namespace {

BigUint oracle_support_count_max(const RootRegions& rr, const IdElement& w,
                                 const CountOptions& opts, int* max_size_out) {
    const std::vector<Root>& roots = rr.on_roots();
    if (static_cast<int>(roots.size()) > opts.max_on_subset && !opts.force)
        throw guardrail_error("ON_v has " + std::to_string(roots.size()) +
                              " roots; subset enumeration refused without force");
    std::vector<BigUint> by_size(roots.size() + 1, BigUint(0));
    const std::uint64_t total = 1ull << roots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Monomial s(Region::ON);
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (mask & (1ull << i)) s.add(roots[i]);
        if (o_dominates(rr, w, s)) by_size[s.support_size()] += BigUint(1);
    }
    int max_size = 0;
    for (std::size_t s = 0; s < by_size.size(); ++s)
        if (!by_size[s].is_zero()) max_size = static_cast<int>(s);
    if (max_size_out) *max_size_out = max_size;
    return by_size[max_size];
}

} // namespace

BigUint multiplicity(const RootRegions& rr, const IdElement& w, MultMethod method,
                     const CountOptions& opts) {
    if (!w.in_I_d()) throw validation_error("w must lie in I(d)");
    if (!leq(rr.base(), w)) throw validation_error("multiplicity requires v <= w");
    switch (method) {
        case MultMethod::paths:
            return count_path_tuples(rr, w, opts);
        case MultMethod::monomials: {
            if (static_cast<int>(rr.on_roots().size()) > opts.max_on_subset && !opts.force)
                throw guardrail_error("ON_v has " + std::to_string(rr.on_roots().size()) +
                                      " roots; subset enumeration refused without force");
            std::vector<BigUint> by_size =
                dominated_support_counts(rr, w, static_cast<int>(rr.on_roots().size()), opts);
            int max_size = 0;
            for (std::size_t s = 0; s < by_size.size(); ++s)
                if (!by_size[s].is_zero()) max_size = static_cast<int>(s);
            return by_size[max_size];
        }
        case MultMethod::oracle:
            return oracle_support_count_max(rr, w, opts, nullptr);
    }
    throw validation_error("unreachable multiplicity method");
}

namespace {

// multisets of degree deg over n free roots
BigUint free_multiset_count(int n, int deg) {
    if (deg == 0) return BigUint(1);
    if (n == 0) return BigUint(0);
    return binomial(static_cast<unsigned>(deg + n - 1), static_cast<unsigned>(deg));
}

// compositions of deg into exactly parts positive parts
BigUint composition_count(int deg, int parts) {
    if (parts == 0) return deg == 0 ? BigUint(1) : BigUint(0);
    if (deg < parts) return BigUint(0);
    return binomial(static_cast<unsigned>(deg - 1), static_cast<unsigned>(parts - 1));
}

} // namespace

std::vector<BigUint> hilbert_series_prefix(const RootRegions& rr, const IdElement& w, int max_m,
                                           const CountOptions& opts) {
    if (max_m < 0) throw validation_error("degree bound must be non-negative");
    const int free_count = static_cast<int>(rr.or_minus_on().size());
    std::vector<BigUint> by_size = dominated_support_counts(rr, w, max_m, opts);
    std::vector<BigUint> out;
    for (int m = 0; m <= max_m; ++m) {
        BigUint total(0);
        for (int s = 0; s <= m && s < static_cast<int>(by_size.size()); ++s) {
            if (by_size[s].is_zero()) continue;
            BigUint constrained(0);
            for (int k = s; k <= m; ++k)
                constrained += composition_count(k, s) * free_multiset_count(free_count, m - k);
            total += by_size[s] * constrained;
        }
        out.push_back(total);
    }
    return out;
}

BigUint hilbert_value(const RootRegions& rr, const IdElement& w, int m, const CountOptions& opts) {
    return hilbert_series_prefix(rr, w, m, opts).back();
}

BigUint oracle_hilbert(const RootRegions& rr, const IdElement& w, int m,
                       const CountOptions& opts) {
    if (m < 0) throw validation_error("degree must be non-negative");
    const std::vector<Root>& roots = rr.or_roots();
    BigUint estimate = free_multiset_count(static_cast<int>(roots.size()), m);
    if (!opts.force && BigUint(5000000) < estimate)
        throw guardrail_error("oracle_hilbert instance too large (" + estimate.to_string() +
                              " multisets)");
    BigUint total(0);
    std::vector<int> mults(roots.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx == roots.size()) {
            if (remaining != 0) return;
            Monomial on_part(Region::ON);
            for (std::size_t i = 0; i < roots.size(); ++i)
                if (mults[i] > 0 && rr.in_ON(roots[i])) on_part.add(roots[i], mults[i]);
            if (o_dominates(rr, w, on_part)) total += BigUint(1);
            return;
        }
        for (int take = 0; take <= remaining; ++take) {
            mults[idx] = take;
            self(self, idx + 1, remaining - take);
        }
        mults[idx] = 0;
    };
    rec(rec, 0, m);
    return total;
}

} // namespace ogs
