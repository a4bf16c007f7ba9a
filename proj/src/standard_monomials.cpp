#include "ogs/standard_monomials.hpp"

#include <algorithm>

#include "ogs/errors.hpp"
#include "ogs/pi_phi.hpp"

namespace ogs {

StandardMonomial::StandardMonomial(std::vector<IdElement> thetas) : thetas_(std::move(thetas)) {
    for (std::size_t i = 1; i < thetas_.size(); ++i) {
        if (!leq(thetas_[i], thetas_[i - 1]))
            throw validation_error("standard monomial factors must be weakly decreasing");
    }
}

int StandardMonomial::degree(const IdElement& v) const {
    int sum = 0;
    for (const IdElement& theta : thetas_) sum += v_degree(theta, v);
    return sum;
}

bool StandardMonomial::v_compatible(const IdElement& v) const {
    for (const IdElement& theta : thetas_) {
        if (!(lt(v, theta) || lt(theta, v))) return false;
    }
    return true;
}

bool StandardMonomial::dominated_by(const IdElement& w) const {
    return thetas_.empty() || leq(thetas_.front(), w);
}

bool StandardMonomial::anti_dominated_by(const IdElement& v) const {
    return thetas_.empty() || lt(v, thetas_.back());
}

std::string StandardMonomial::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < thetas_.size(); ++i) {
        if (i) out += " >= ";
        out += thetas_[i].to_string();
    }
    return out + "]";
}

int v_degree(const IdElement& theta, const IdElement& v) {
    if (theta.d() != v.d()) throw validation_error("v_degree: mismatched d");
    int diff = 0;
    for (int e : v.entries())
        if (!theta.contains(e)) ++diff;
    if (diff % 2 != 0)
        throw validation_error("odd |v \\ theta| for " + theta.to_string() +
                               "; inputs are not both in I(d)");
    return diff / 2;
}

std::vector<StandardMonomial> enumerate_sm(const RootRegions& rr, const IdElement& w, int m) {
    const IdElement& v = rr.base();
    if (m < 0) throw validation_error("degree must be non-negative");
    // candidate factors: strictly comparable to v, dominated by w
    std::vector<std::pair<IdElement, int>> candidates;
    for (const IdElement& theta : enumerate_I_d(v.d())) {
        if (!(lt(v, theta) || lt(theta, v))) continue;
        if (lt(v, theta) && !leq(theta, w)) continue;
        candidates.push_back({theta, v_degree(theta, v)});
    }
    // descending order so sequences can be built left to right
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return b.first.entries() < a.first.entries();
    });
    std::vector<StandardMonomial> out;
    std::vector<IdElement> current;
    auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t i = from; i < candidates.size(); ++i) {
            const auto& [theta, deg] = candidates[i];
            if (deg > remaining) continue;
            if (!current.empty() && !leq(theta, current.back())) continue;
            current.push_back(theta);
            self(self, i, remaining - deg);
            current.pop_back();
        }
    };
    rec(rec, 0, m);
    return out;
}

namespace {

// Iterated ortho pi: peel off the least O-dominating element until the
// monomial empties. The step count is capped by the degree.
std::vector<IdElement> pi_iterate(const RootRegions& rr, Monomial t) {
    std::vector<IdElement> out;
    const int cap = t.degree();
    while (!t.empty()) {
        if (static_cast<int>(out.size()) > cap)
            throw validation_error("ortho pi iteration failed to terminate");
        OrthoPiResult step = ortho_pi(rr, t);
        out.push_back(step.w);
        t = step.sprime;
    }
    return out;
}

Monomial phi_iterate(const RootRegions& rr, const std::vector<IdElement>& thetas) {
    Monomial t(Region::ON);
    for (std::size_t i = thetas.size(); i-- > 0;) t = ortho_phi(rr, thetas[i], t);
    return t;
}

} // namespace

StandardMonomial monomial_to_sm(const RootRegions& rr, const Monomial& s) {
    const IdElement& v = rr.base();
    Monomial on_part(Region::ON);
    Monomial free_part(Region::OR);
    for (const auto& [root, mult] : s.items()) {
        if (rr.in_ON(root)) {
            on_part.add(root, mult);
        } else if (rr.in_OR(root)) {
            free_part.add(root, mult);
        } else {
            throw validation_error("root " + to_string(root) + " is not in OR_v");
        }
    }

    std::vector<IdElement> thetas = pi_iterate(rr, on_part);

    if (!free_part.empty()) {
        if (v.d() % 2 == 0) {
            // mirror through the star: flip (r,c) -> (c,r) into ON_{v*}
            RootRegions mirror(star_reverse(v));
            Monomial flipped(Region::ON);
            for (const auto& [root, mult] : free_part.items())
                flipped.add(Root{root.c, root.r}, mult);
            verify_region(mirror, flipped);
            std::vector<IdElement> mus = pi_iterate(mirror, flipped);
            for (std::size_t i = mus.size(); i-- > 0;) thetas.push_back(star_reverse(mus[i]));
        } else {
            // mirror through the d+2 embedding of I(d)*
            const int d = v.d();
            RootRegions mirror(pass_embed(star_reverse(v)));
            Monomial flipped(Region::ON);
            for (const auto& [root, mult] : free_part.items())
                flipped.add(Root{pass_entry(d, root.c), pass_entry(d, root.r)}, mult);
            verify_region(mirror, flipped);
            std::vector<IdElement> mus = pi_iterate(mirror, flipped);
            for (std::size_t i = mus.size(); i-- > 0;) thetas.push_back(pass_unembed_to_id(mus[i]));
        }
    }
    StandardMonomial out(std::move(thetas));
    if (out.degree(v) != s.degree())
        throw validation_error("degree mismatch in monomial_to_sm"); // unreachable
    return out;
}

Monomial sm_to_monomial(const RootRegions& rr, const StandardMonomial& sm) {
    const IdElement& v = rr.base();
    if (!sm.v_compatible(v))
        throw validation_error("standard monomial is not v-compatible");
    std::vector<IdElement> above, below;
    for (const IdElement& theta : sm.thetas()) {
        if (lt(v, theta))
            above.push_back(theta);
        else
            below.push_back(theta);
    }

    Monomial out(Region::OR);
    Monomial on_part = phi_iterate(rr, above);
    for (const auto& [root, mult] : on_part.items()) out.add(root, mult);

    if (!below.empty()) {
        if (v.d() % 2 == 0) {
            RootRegions mirror(star_reverse(v));
            std::vector<IdElement> mus;
            for (std::size_t i = below.size(); i-- > 0;) mus.push_back(star_reverse(below[i]));
            Monomial flipped = phi_iterate(mirror, mus);
            for (const auto& [root, mult] : flipped.items())
                out.add(Root{root.c, root.r}, mult);
        } else {
            const int d = v.d();
            RootRegions mirror(pass_embed(star_reverse(v)));
            std::vector<IdElement> mus;
            for (std::size_t i = below.size(); i-- > 0;)
                mus.push_back(pass_embed(star_reverse(below[i])));
            Monomial flipped = phi_iterate(mirror, mus);
            for (const auto& [root, mult] : flipped.items())
                out.add(Root{unpass_entry(d, root.c), unpass_entry(d, root.r)}, mult);
        }
    }
    verify_region(rr, out);
    return out;
}

} // namespace ogs
