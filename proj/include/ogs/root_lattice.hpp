#ifndef ogs_root_lattice_hpp
#define ogs_root_lattice_hpp

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ogs/index_sets.hpp"

namespace ogs {

// Row-column pair (r,c): r a non-entry of the base element v, c an entry.
// The canonical total order (row, then column) fixes iteration order in
// monomials and block decompositions.
struct Root {
    int r = 0;
    int c = 0;
    auto operator<=>(const Root&) const = default;
};

std::string to_string(Root a);

// a > b in the chain order: strictly lower row and strictly smaller column.
inline bool chain_gt(Root a, Root b) { return a.r > b.r && a.c < b.c; }
// a dominates b: weakly lower row and weakly smaller column.
inline bool dominates_root(Root a, Root b) { return b.r <= a.r && a.c <= b.c; }

// Support region a monomial is declared over.
enum class Region { any, N, OR, ON };

// The board attached to a base element v of I(d): all roots R_v and the
// regions N_v (r > c), OR_v (r < c*), ON_v (both) and the diagonal D_v
// (r = c*) that carve it up.
class RootRegions {
public:
    explicit RootRegions(IdElement v);

    const IdElement& base() const { return v_; }
    int d() const { return v_.d(); }
    int two_d() const { return v_.two_d(); }
    int star(int k) const { return v_.star(k); }
    bool is_entry(int k) const { return v_.contains(k); }

    const std::vector<Root>& all_roots() const { return all_; }    // R_v
    const std::vector<Root>& n_roots() const { return n_; }        // N_v
    const std::vector<Root>& or_roots() const { return or_; }      // OR_v
    const std::vector<Root>& on_roots() const { return on_; }      // ON_v
    const std::vector<Root>& diagonal() const { return diag_; }    // D_v
    const std::vector<Root>& or_minus_on() const { return free_; } // OR_v \ ON_v

    bool in_R(Root a) const;
    bool in_N(Root a) const { return in_R(a) && a.r > a.c; }
    bool in_OR(Root a) const { return in_R(a) && a.r < star(a.c); }
    bool in_ON(Root a) const { return in_N(a) && in_OR(a); }
    bool on_diagonal(Root a) const { return in_R(a) && a.r == star(a.c); }
    // on or above the diagonal within N_v
    bool in_up(Root a) const { return in_N(a) && a.r <= star(a.c); }

    Root reflect(Root a) const { return Root{star(a.c), star(a.r)}; } // across D_v
    Root project_v(Root a) const;                                     // (c*, c)
    Root project_h_raw(Root a) const;                                 // (r, r*)
    // horizontal projection when it lands in N_v (r > r*), else nothing
    std::optional<Root> project_h(Root a) const;

    // next larger non-entry row / entry column, if any (lattice path steps)
    std::optional<int> next_row(int r) const;
    std::optional<int> next_col(int c) const;

private:
    IdElement v_;
    std::vector<Root> all_, n_, or_, on_, diag_, free_;
    std::vector<bool> entry_lookup_;
};

// Finite multiset of roots; stored as a sorted association list
// root -> multiplicity so that iteration is deterministic everywhere.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(Region tag) : tag_(tag) {}

    Region tag() const { return tag_; }

    bool empty() const { return items_.empty(); }
    int degree() const;
    std::size_t support_size() const { return items_.size(); }
    int multiplicity(Root a) const;
    bool contains(Root a) const { return multiplicity(a) > 0; }

    const std::vector<std::pair<Root, int>>& items() const { return items_; }
    std::vector<Root> support() const;

    void add(Root a, int mult = 1);
    void remove_one(Root a);

    Monomial united(const Monomial& other) const;
    // reflect every root across the diagonal (the # image)
    Monomial hash_image(const RootRegions& rr) const;
    // keep only roots satisfying the predicate
    template <typename Pred>
    Monomial filtered(Pred&& keep) const {
        Monomial out(tag_);
        for (const auto& [root, mult] : items_)
            if (keep(root)) out.add(root, mult);
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.items_ == b.items_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.items_ < b.items_; }

    std::string to_string() const;

private:
    Region tag_ = Region::any;
    std::vector<std::pair<Root, int>> items_;
};

// Throws validation_error unless every support root lies in the region the
// monomial is tagged with.
void verify_region(const RootRegions& rr, const Monomial& m);
Monomial checked_monomial(const RootRegions& rr, Region tag,
                          const std::vector<std::pair<Root, int>>& items);

// Multiset intersection with the part of N_v on or above / strictly below
// the diagonal.
Monomial up(const RootRegions& rr, const Monomial& m);
Monomial down(const RootRegions& rr, const Monomial& m);

} // namespace ogs

#endif
