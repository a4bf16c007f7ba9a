#include "ogs/root_lattice.hpp"

#include <algorithm>

#include "ogs/errors.hpp"

namespace ogs {

std::string to_string(Root a) {
    return "(" + std::to_string(a.r) + "," + std::to_string(a.c) + ")";
}

RootRegions::RootRegions(IdElement v) : v_(std::move(v)) {
    if (!v_.in_I_d())
        throw validation_error("base element " + v_.to_string() + " is not in I(d)");
    entry_lookup_.assign(2 * d() + 1, false);
    for (int e : v_.entries()) entry_lookup_[e] = true;
    for (int r = 1; r <= two_d(); ++r) {
        if (entry_lookup_[r]) continue;
        for (int c : v_.entries()) {
            Root a{r, c};
            all_.push_back(a);
            if (r > c) n_.push_back(a);
            if (r < star(c)) or_.push_back(a);
            if (r > c && r < star(c)) on_.push_back(a);
            if (r == star(c)) diag_.push_back(a);
            if (r < star(c) && !(r > c)) free_.push_back(a);
        }
    }
    auto by_canonical = [](Root a, Root b) { return a < b; };
    std::sort(all_.begin(), all_.end(), by_canonical);
    std::sort(n_.begin(), n_.end(), by_canonical);
    std::sort(or_.begin(), or_.end(), by_canonical);
    std::sort(on_.begin(), on_.end(), by_canonical);
    std::sort(diag_.begin(), diag_.end(), by_canonical);
    std::sort(free_.begin(), free_.end(), by_canonical);
}

bool RootRegions::in_R(Root a) const {
    if (a.r < 1 || a.r > two_d() || a.c < 1 || a.c > two_d()) return false;
    return !entry_lookup_[a.r] && entry_lookup_[a.c];
}

Root RootRegions::project_v(Root a) const { return Root{star(a.c), a.c}; }

Root RootRegions::project_h_raw(Root a) const { return Root{a.r, star(a.r)}; }

std::optional<Root> RootRegions::project_h(Root a) const {
    Root p = project_h_raw(a);
    if (p.r > p.c) return p; // lands in N_v
    return std::nullopt;
}

std::optional<int> RootRegions::next_row(int r) const {
    for (int k = r + 1; k <= two_d(); ++k)
        if (!entry_lookup_[k]) return k;
    return std::nullopt;
}

std::optional<int> RootRegions::next_col(int c) const {
    for (int k = c + 1; k <= two_d(); ++k)
        if (entry_lookup_[k]) return k;
    return std::nullopt;
}

int Monomial::degree() const {
    int sum = 0;
    for (const auto& [root, mult] : items_) sum += mult;
    return sum;
}

int Monomial::multiplicity(Root a) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), a,
                               [](const auto& item, Root key) { return item.first < key; });
    if (it != items_.end() && it->first == a) return it->second;
    return 0;
}

std::vector<Root> Monomial::support() const {
    std::vector<Root> out;
    out.reserve(items_.size());
    for (const auto& [root, mult] : items_) out.push_back(root);
    return out;
}

void Monomial::add(Root a, int mult) {
    if (mult <= 0) throw validation_error("multiplicities must be positive");
    auto it = std::lower_bound(items_.begin(), items_.end(), a,
                               [](const auto& item, Root key) { return item.first < key; });
    if (it != items_.end() && it->first == a) {
        it->second += mult;
    } else {
        items_.insert(it, {a, mult});
    }
}

void Monomial::remove_one(Root a) {
    auto it = std::lower_bound(items_.begin(), items_.end(), a,
                               [](const auto& item, Root key) { return item.first < key; });
    if (it == items_.end() || it->first != a)
        throw validation_error("cannot remove absent root " + ogs::to_string(a));
    if (--it->second == 0) items_.erase(it);
}

Monomial Monomial::united(const Monomial& other) const {
    Monomial out = *this;
    for (const auto& [root, mult] : other.items_) out.add(root, mult);
    return out;
}

Monomial Monomial::hash_image(const RootRegions& rr) const {
    Monomial out(tag_);
    for (const auto& [root, mult] : items_) out.add(rr.reflect(root), mult);
    return out;
}

std::string Monomial::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [root, mult] : items_) {
        if (!first) out += ",";
        first = false;
        out += ogs::to_string(root);
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out + "}";
}

void verify_region(const RootRegions& rr, const Monomial& m) {
    for (const auto& [root, mult] : m.items()) {
        bool ok = true;
        switch (m.tag()) {
            case Region::any: ok = rr.in_R(root); break;
            case Region::N: ok = rr.in_N(root); break;
            case Region::OR: ok = rr.in_OR(root); break;
            case Region::ON: ok = rr.in_ON(root); break;
        }
        if (!ok)
            throw validation_error("root " + to_string(root) + " lies outside the declared region");
    }
}

Monomial checked_monomial(const RootRegions& rr, Region tag,
                          const std::vector<std::pair<Root, int>>& items) {
    Monomial out(tag);
    for (const auto& [root, mult] : items) out.add(root, mult);
    verify_region(rr, out);
    return out;
}

Monomial up(const RootRegions& rr, const Monomial& m) {
    return m.filtered([&](Root a) { return a.r <= rr.star(a.c); });
}

Monomial down(const RootRegions& rr, const Monomial& m) {
    return m.filtered([&](Root a) { return a.r > rr.star(a.c); });
}

} // namespace ogs
