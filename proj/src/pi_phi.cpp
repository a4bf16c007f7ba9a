#include "ogs/pi_phi.hpp"

#include <algorithm>
#include <limits>

#include "ogs/errors.hpp"

namespace ogs {

namespace testing {
bool disable_delta_twist = false;
} // namespace testing

namespace {

std::vector<Root> expanded(const Monomial& m) {
    std::vector<Root> out;
    for (const auto& [root, mult] : m.items())
        for (int i = 0; i < mult; ++i) out.push_back(root);
    return out;
}

} // namespace

std::vector<GrBlock> gr_blocks(const Monomial& antichain) {
    // The break rule is applied mechanically in the canonical arrangement;
    // inside gr_pi the inputs are depth layers and hence antichains, where
    // ascending rows agree with ascending columns.
    std::vector<Root> elems = expanded(antichain);
    std::vector<GrBlock> out;
    for (Root a : elems) {
        if (out.empty() || a.c > out.back().elems.back().r) {
            out.push_back(GrBlock{{a}, a, {}});
        } else {
            GrBlock& block = out.back();
            block.bprime.push_back(Root{block.elems.back().r, a.c});
            block.elems.push_back(a);
            block.w_of = Root{std::max(block.w_of.r, a.r), std::min(block.w_of.c, a.c)};
        }
    }
    return out;
}

GrPiResult gr_pi(const RootRegions& rr, const Monomial& s) {
    verify_region(rr, s);
    DepthTable depths = depth_table(s);
    std::vector<Monomial> layers(depths.max_depth(), Monomial(Region::N));
    for (const auto& [root, mult] : s.items()) layers[depths.depth_of(root) - 1].add(root, mult);
    std::vector<Root> heads;
    Monomial sprime(Region::N);
    for (const Monomial& layer : layers) {
        for (const GrBlock& block : gr_blocks(layer)) {
            heads.push_back(block.w_of);
            for (Root a : block.bprime) sprime.add(a);
        }
    }
    IdElement x = from_distinguished(rr, heads);
    return GrPiResult{std::move(x), std::move(sprime), std::move(heads)};
}

namespace {

// Largest k with x^k >= the attached element of the chain; 0 when even x
// itself fails. Slices are passed precomputed, slices[k-1] = x^k.
int deepest_dominating_slice(const RootRegions& rr, const std::vector<IdElement>& slices,
                             const IdElement& w_of_c) {
    int best = 0;
    for (std::size_t k = 0; k < slices.size(); ++k) {
        if (leq(w_of_c, slices[k]))
            best = static_cast<int>(k) + 1;
        else
            break; // slices decrease, deeper ones cannot dominate either
    }
    return best;
}

// Minimum over maximal chains headed by alpha of the deepest dominating
// slice, under the Grassmannian attachment.
int gr_head_class(const RootRegions& rr, const std::vector<IdElement>& slices,
                  const std::vector<Root>& supp, Root alpha) {
    int best = std::numeric_limits<int>::max();
    std::vector<Root> chain{alpha};
    auto rec = [&](auto&& self, Root last) -> void {
        bool extended = false;
        for (Root b : supp) {
            if (chain_gt(last, b)) {
                extended = true;
                chain.push_back(b);
                self(self, b);
                chain.pop_back();
            }
        }
        if (!extended)
            best = std::min(best, deepest_dominating_slice(rr, slices, w_gr_of_roots(rr, chain)));
    };
    rec(rec, alpha);
    return best;
}

} // namespace

GrPhiResult gr_phi_detailed(const RootRegions& rr, const IdElement& x, const Monomial& t) {
    verify_region(rr, t);
    DistinguishedSet sx = to_distinguished(rr, x);
    Monomial sx_monomial(Region::N);
    for (Root a : sx.roots()) sx_monomial.add(a);
    DepthTable x_depths = depth_table(sx_monomial);
    const int max_depth = x_depths.max_depth();

    std::vector<IdElement> slices;
    for (int k = 1; k <= max_depth; ++k) slices.push_back(slice_at_least(rr, x, k));

    // layer classes by the deepest slice dominating all chains headed here
    std::vector<Monomial> layers(max_depth, Monomial(t.tag()));
    std::vector<Root> supp = t.support();
    for (const auto& [alpha, mult] : t.items()) {
        int k = gr_head_class(rr, slices, supp, alpha);
        if (k < 1 || k > max_depth)
            throw validation_error("gr_phi: " + to_string(alpha) + " is not dominated by x");
        layers[k - 1].add(alpha, mult);
    }

    GrPhiResult out;
    out.total = Monomial(Region::N);
    for (Root beta : sx.roots()) {
        const int depth = x_depths.depth_of(beta);
        Monomial piece(t.tag());
        for (const auto& [alpha, mult] : layers[depth - 1].items())
            if (dominates_root(beta, alpha)) piece.add(alpha, mult);
        Monomial star(Region::N);
        if (piece.empty()) {
            star.add(beta);
        } else {
            std::vector<Root> members = expanded(piece);
            star.add(Root{members.front().r, beta.c});
            for (std::size_t i = 0; i + 1 < members.size(); ++i)
                star.add(Root{members[i + 1].r, members[i].c});
            star.add(Root{beta.r, members.back().c});
        }
        out.total = out.total.united(star);
        out.pieces.push_back(GrPhiPiece{beta, depth, std::move(piece), std::move(star)});
    }
    // ownership must be a partition of t
    int owned = 0;
    for (const GrPhiPiece& piece : out.pieces) owned += piece.piece.degree();
    if (owned != t.degree())
        throw validation_error("gr_phi: pieces do not partition the input monomial");
    return out;
}

Monomial gr_phi(const RootRegions& rr, const IdElement& x, const Monomial& t) {
    return gr_phi_detailed(rr, x, t).total;
}

Monomial build_layer_monomial(const RootRegions& rr, const Monomial& s, int j) {
    if (j % 2 == 0) throw validation_error("layer monomials are indexed by odd j");
    std::vector<Monomial> classes = pr_partition(rr, s);
    Monomial pr(Region::ON);
    if (j <= static_cast<int>(classes.size())) pr = classes[j - 1];
    if (j < static_cast<int>(classes.size())) pr = pr.united(classes[j]);
    if (pr.empty()) return Monomial(Region::N);
    Monomial out(Region::N);
    if (truly_orthogonal(rr, s, j)) {
        Root sj = sigma(rr, s, j);
        Monomial rest = pr;
        rest.remove_one(sj);
        for (const auto& [root, mult] : rest.items()) {
            out.add(root, mult);
            out.add(rr.reflect(root), mult);
        }
        out.add(rr.project_v(sj));
        out.add(rr.project_h_raw(sj));
    } else {
        for (const auto& [root, mult] : pr.items()) {
            out.add(root, mult);
            out.add(rr.reflect(root), mult);
        }
    }
    return out;
}

OrthoPiResult ortho_pi(const RootRegions& rr, const Monomial& s) {
    verify_region(rr, s);
    if (s.empty()) throw validation_error("ortho_pi is undefined on the empty monomial");
    ODepthTable odepths = odepth_table(rr, s);
    std::vector<Root> heads;
    Monomial sprime_all(Region::N);
    for (int j = 1; j <= odepths.max_odepth(); j += 2) {
        Monomial layer = build_layer_monomial(rr, s, j);
        if (layer.empty()) continue;
        GrPiResult res = gr_pi(rr, layer);
        heads.insert(heads.end(), res.heads.begin(), res.heads.end());
        sprime_all = sprime_all.united(res.sprime);
    }
    DistinguishedSet dist(rr, heads);
    IdElement w = dist.element();
    if (!w.in_I_d())
        throw validation_error("ortho_pi produced an element outside I(d)"); // unreachable
    Monomial sprime = sprime_all.filtered([&](Root a) { return rr.in_ON(a); });
    Monomial tagged(Region::ON);
    for (const auto& [root, mult] : sprime.items()) tagged.add(root, mult);
    return OrthoPiResult{std::move(w), std::move(tagged)};
}

namespace {

// Minimum over maximal chains headed by alpha of the deepest w^k
// O-dominating the chain (orthogonal attachment this time).
int o_head_class(const RootRegions& rr, const std::vector<IdElement>& slices,
                 const std::vector<Root>& supp, Root alpha) {
    int best = std::numeric_limits<int>::max();
    std::vector<Root> chain{alpha};
    auto rec = [&](auto&& self, Root last) -> void {
        bool extended = false;
        for (Root b : supp) {
            if (chain_gt(last, b)) {
                extended = true;
                chain.push_back(b);
                self(self, b);
                chain.pop_back();
            }
        }
        if (!extended)
            best = std::min(best,
                            deepest_dominating_slice(rr, slices, w_of_chain(rr, VChain(rr, chain))));
    };
    rec(rec, alpha);
    return best;
}

} // namespace

std::map<int, Monomial> partition_T(const RootRegions& rr, const IdElement& w, const Monomial& t) {
    verify_region(rr, t);
    const int max_depth = distinguished_depth(rr, w);
    std::vector<IdElement> slices;
    for (int k = 1; k <= max_depth; ++k) slices.push_back(slice_at_least(rr, w, k));
    std::map<int, Monomial> out;
    std::vector<Root> supp = t.support();
    for (const auto& [alpha, mult] : t.items()) {
        int k = o_head_class(rr, slices, supp, alpha);
        if (k < 1 || k > max_depth)
            throw validation_error("partition_T: " + to_string(alpha) +
                                   " is not O-dominated by w");
        int j = k % 2 == 1 ? k : k - 1;
        auto [it, inserted] = out.try_emplace(j, Monomial(Region::ON));
        it->second.add(alpha, mult);
    }
    return out;
}

OrthoPhiResult ortho_phi_detailed(const RootRegions& rr, const IdElement& w, const Monomial& t) {
    if (!w.in_I_d()) throw validation_error("ortho_phi requires w in I(d)");
    if (!leq(rr.base(), w)) throw validation_error("ortho_phi requires w >= v");
    std::map<int, Monomial> classes = partition_T(rr, w, t);
    const int max_depth = distinguished_depth(rr, w);

    OrthoPhiResult out;
    out.total = Monomial(Region::ON);
    for (int j = 1; j <= max_depth; j += 2) {
        IdElement w_slice = slice_pair(rr, w, j);
        auto it = classes.find(j);
        Monomial class_monomial = it != classes.end() ? it->second : Monomial(Region::ON);
        Monomial sym(Region::N);
        for (const auto& [root, mult] : class_monomial.items()) sym.add(root, mult);
        Monomial symmetrized = sym.united(sym.hash_image(rr));
        GrPhiResult phi = gr_phi_detailed(rr, w_slice, symmetrized);
        std::optional<Root> delta;

        Monomial twisted = phi.total;
        std::vector<Root> diag;
        for (const auto& [root, mult] : phi.total.items()) {
            if (rr.on_diagonal(root)) {
                if (mult != 1)
                    throw validation_error("diagonal element with multiplicity in phi layer");
                diag.push_back(root);
            }
        }
        if (!diag.empty()) {
            if (diag.size() != 2)
                throw validation_error("phi layer has an odd number of diagonal elements");
            // sorted by row: diag[0] = (b,b*) from the deeper piece row,
            // diag[1] = (a,a*) with a > b
            Root upper = diag[0], lower = diag[1];
            if (!testing::disable_delta_twist) {
                twisted.remove_one(upper);
                twisted.remove_one(lower);
                Root twist{upper.r, lower.c};   // (b, a*), above the diagonal
                twisted.add(twist);
                twisted.add(rr.reflect(twist)); // (a, b*)
                delta = twist;
            }
        }
        Monomial contribution(Region::ON);
        for (const auto& [root, mult] : twisted.items())
            if (rr.in_ON(root)) contribution.add(root, mult);
        out.total = out.total.united(contribution);
        out.layers.push_back(OrthoPhiLayer{j, std::move(w_slice), std::move(class_monomial),
                                           std::move(symmetrized), std::move(phi), delta,
                                           std::move(contribution)});
    }
    return out;
}

Monomial ortho_phi(const RootRegions& rr, const IdElement& w, const Monomial& t) {
    return ortho_phi_detailed(rr, w, t).total;
}

Monomial ortho_piece_star(const RootRegions& rr, const OrthoPhiLayer& layer, Root beta,
                          int beta_depth) {
    for (const GrPhiPiece& piece : layer.phi.pieces) {
        if (piece.owner != beta) continue;
        if (!rr.on_diagonal(beta)) {
            return piece.star;
        }
        Monomial above(Region::ON);
        for (const auto& [root, mult] : piece.star.items())
            if (rr.in_ON(root)) above.add(root, mult);
        if (beta_depth == layer.j && layer.delta) above.add(*layer.delta);
        return above;
    }
    throw validation_error("beta " + to_string(beta) + " does not own a piece in this layer");
}

IdElement least_o_dominating(const RootRegions& rr, const Monomial& s) {
    if (s.empty()) return rr.base();
    return ortho_pi(rr, s).w;
}

} // namespace ogs
