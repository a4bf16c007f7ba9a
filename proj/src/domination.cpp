#include "ogs/domination.hpp"

#include <algorithm>

#include "ogs/errors.hpp"

namespace ogs {

bool is_distinguished(const std::vector<Root>& roots) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (i == j) continue;
            Root big = roots[i], small = roots[j];
            if (big.r == small.r || big.c == small.c) return false; // A
            if (big.r > small.r && !(small.r < big.c || big.c < small.c)) return false; // B
        }
    }
    return true;
}

DistinguishedSet::DistinguishedSet(const RootRegions& rr, std::vector<Root> roots)
    : roots_(std::move(roots)), w_(from_distinguished(rr, roots_)) {
    std::sort(roots_.begin(), roots_.end());
    for (Root a : roots_) {
        if (!rr.in_N(a))
            throw validation_error("distinguished root " + to_string(a) + " is not in N_v");
    }
    if (!is_distinguished(roots_))
        throw validation_error("set violates the distinguishedness conditions");
}

IdElement from_distinguished(const RootRegions& rr, const std::vector<Root>& roots) {
    return w_gr_of_roots(rr, roots);
}

DistinguishedSet to_distinguished(const RootRegions& rr, const IdElement& w) {
    const IdElement& v = rr.base();
    if (w.d() != v.d()) throw validation_error("mismatched d in to_distinguished");
    if (!leq(v, w))
        throw validation_error("to_distinguished requires v <= w; got w = " + w.to_string());
    std::vector<int> rows, cols;
    for (int e : w.entries())
        if (!v.contains(e)) rows.push_back(e);
    for (int e : v.entries())
        if (!w.contains(e)) cols.push_back(e);
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    std::vector<bool> used(cols.size(), false);
    std::vector<Root> roots;
    for (int r : rows) {
        int pick = -1;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (!used[i] && cols[i] < r) pick = static_cast<int>(i);
        }
        if (pick < 0)
            throw validation_error("no admissible column for row " + std::to_string(r));
        used[pick] = true;
        roots.push_back(Root{r, cols[pick]});
    }
    std::sort(roots.begin(), roots.end());
    DistinguishedSet out(rr, roots);
    if (out.element() != w)
        throw validation_error("distinguished set does not round-trip to w"); // unreachable
    return out;
}

bool gr_dominates_chain(const RootRegions& rr, const IdElement& x,
                        const std::vector<Root>& chain) {
    return leq(w_gr_of_roots(rr, chain), x);
}

bool gr_dominates(const RootRegions& rr, const IdElement& x, const Monomial& s) {
    if (s.empty()) return leq(rr.base(), x);
    DistinguishedSet sx = to_distinguished(rr, x);
    DepthTable s_depths = depth_table(s);
    Monomial sx_monomial(Region::N);
    for (Root a : sx.roots()) sx_monomial.add(a);
    DepthTable x_depths = depth_table(sx_monomial);
    for (Root alpha : s.support()) {
        bool covered = false;
        for (Root beta : sx.roots()) {
            if (dominates_root(beta, alpha) &&
                x_depths.depth_of(beta) >= s_depths.depth_of(alpha)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

bool gr_dominates_oracle(const RootRegions& rr, const IdElement& x, const Monomial& s) {
    if (!leq(rr.base(), x)) return false;
    bool ok = true;
    std::vector<Root> chain;
    std::vector<Root> supp = s.support();
    auto rec = [&](auto&& self, Root last) -> void {
        if (!ok) return;
        if (!gr_dominates_chain(rr, x, chain)) {
            ok = false;
            return;
        }
        for (Root b : supp) {
            if (chain_gt(last, b)) {
                chain.push_back(b);
                self(self, b);
                chain.pop_back();
                if (!ok) return;
            }
        }
    };
    for (Root a : supp) {
        chain.assign(1, a);
        rec(rec, a);
        if (!ok) return false;
    }
    return true;
}

namespace {

IdElement slice_from(const RootRegions& rr, const IdElement& x,
                     const std::function<bool(int)>& keep_depth) {
    DistinguishedSet sx = to_distinguished(rr, x);
    Monomial m(Region::N);
    for (Root a : sx.roots()) m.add(a);
    DepthTable depths = depth_table(m);
    std::vector<Root> kept;
    for (Root a : sx.roots())
        if (keep_depth(depths.depth_of(a))) kept.push_back(a);
    return from_distinguished(rr, kept);
}

} // namespace

IdElement slice_exact(const RootRegions& rr, const IdElement& x, int k) {
    return slice_from(rr, x, [k](int depth) { return depth == k; });
}

IdElement slice_at_least(const RootRegions& rr, const IdElement& x, int k) {
    return slice_from(rr, x, [k](int depth) { return depth >= k; });
}

IdElement slice_pair(const RootRegions& rr, const IdElement& x, int j) {
    return slice_from(rr, x, [j](int depth) { return depth == j || depth == j + 1; });
}

int distinguished_depth(const RootRegions& rr, const IdElement& x) {
    DistinguishedSet sx = to_distinguished(rr, x);
    Monomial m(Region::N);
    for (Root a : sx.roots()) m.add(a);
    return depth_table(m).max_depth();
}

bool o_dominates_chain(const RootRegions& rr, const IdElement& w, const VChain& c) {
    return leq(w_of_chain(rr, c), w);
}

bool o_dominates(const RootRegions& rr, const IdElement& w, const Monomial& s) {
    if (!leq(rr.base(), w)) return false;
    verify_region(rr, s); // chains only make sense over ON_v
    std::vector<Root> supp = s.support();
    bool ok = true;
    std::vector<Root> chain;
    auto rec = [&](auto&& self, Root last) -> void {
        if (!ok) return;
        if (!o_dominates_chain(rr, w, VChain(rr, chain))) {
            ok = false;
            return;
        }
        for (Root b : supp) {
            if (chain_gt(last, b)) {
                chain.push_back(b);
                self(self, b);
                chain.pop_back();
                if (!ok) return;
            }
        }
    };
    for (Root a : supp) {
        chain.assign(1, a);
        rec(rec, a);
        if (!ok) return false;
    }
    return true;
}

bool o_dominates_layered(const RootRegions& rr, const IdElement& x, const Monomial& s) {
    if (!leq(rr.base(), x)) return false;
    if (s.empty()) return true;
    std::vector<Monomial> classes = pr_partition(rr, s);
    for (int j = 1; j <= static_cast<int>(classes.size()); j += 2) {
        std::vector<Root> layer = classes[j - 1].support();
        if (j < static_cast<int>(classes.size())) {
            for (Root a : classes[j].support()) layer.push_back(a);
        }
        if (layer.empty()) continue;
        IdElement xjj = slice_pair(rr, x, j);
        for (std::size_t i = 0; i < layer.size(); ++i) {
            if (!o_dominates_chain(rr, xjj, VChain(rr, {layer[i]}))) return false;
            for (std::size_t k = 0; k < layer.size(); ++k) {
                if (chain_gt(layer[i], layer[k]) &&
                    !o_dominates_chain(rr, xjj, VChain(rr, {layer[i], layer[k]})))
                    return false;
            }
        }
    }
    return true;
}

IdElement least_o_dominating_oracle(const RootRegions& rr, const Monomial& s) {
    std::vector<IdElement> candidates;
    for (const IdElement& x : enumerate_I_d(rr.d())) {
        if (leq(rr.base(), x) && o_dominates(rr, x, s)) candidates.push_back(x);
    }
    if (candidates.empty()) throw validation_error("no element of I(d) O-dominates the monomial");
    for (const IdElement& x : candidates) {
        bool least = true;
        for (const IdElement& y : candidates) {
            if (!leq(x, y)) {
                least = false;
                break;
            }
        }
        if (least) return x;
    }
    throw validation_error("the set of O-dominating elements has no least member");
}

} // namespace ogs
