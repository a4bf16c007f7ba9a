#ifndef ogs_standard_monomials_hpp
#define ogs_standard_monomials_hpp

#include <vector>

#include "ogs/index_sets.hpp"
#include "ogs/root_lattice.hpp"

namespace ogs {

// Weakly decreasing sequence theta_1 >= ... >= theta_t of I(d) elements.
class StandardMonomial {
public:
    StandardMonomial() = default;
    explicit StandardMonomial(std::vector<IdElement> thetas);

    const std::vector<IdElement>& thetas() const { return thetas_; }
    bool empty() const { return thetas_.empty(); }
    int length() const { return static_cast<int>(thetas_.size()); }

    // sum of the v-degrees of the factors
    int degree(const IdElement& v) const;
    // every factor strictly comparable to v
    bool v_compatible(const IdElement& v) const;
    // theta_1 <= w (empty monomials are dominated by everything)
    bool dominated_by(const IdElement& w) const;
    // theta_t > v
    bool anti_dominated_by(const IdElement& v) const;

    friend bool operator==(const StandardMonomial& a, const StandardMonomial& b) {
        return a.thetas_ == b.thetas_;
    }
    friend bool operator!=(const StandardMonomial& a, const StandardMonomial& b) {
        return !(a == b);
    }

    std::string to_string() const;

private:
    std::vector<IdElement> thetas_;
};

// |v \ theta| / 2; throws when the difference has odd cardinality.
int v_degree(const IdElement& theta, const IdElement& v);

// All v-compatible w-dominated standard monomials of the given degree.
std::vector<StandardMonomial> enumerate_sm(const RootRegions& rr, const IdElement& w, int m);

// The degree preserving bijection between monomials in OR_v and
// v-compatible standard monomials: the ON_v part iterates the ortho pi
// map; the remainder goes through the mirror construction (star for even
// d, the d+2 embedding for odd d) before iterating.
StandardMonomial monomial_to_sm(const RootRegions& rr, const Monomial& s);
Monomial sm_to_monomial(const RootRegions& rr, const StandardMonomial& sm);

} // namespace ogs

#endif
