#ifndef ogs_index_sets_hpp
#define ogs_index_sets_hpp

#include <string>
#include <vector>

namespace ogs {

// A d-element subset of {1,...,2d} with strictly increasing 1-indexed
// entries; the Plucker index set I(d,2d). Membership in I(d) (exactly one
// of each pair {k, 2d+1-k}, evenly many entries above d) and in I(d)* (the
// same with odd count) are queryable predicates, not separate types.
class IdElement {
public:
    IdElement(int d, std::vector<int> entries);

    int d() const { return d_; }
    int two_d() const { return 2 * d_; }
    const std::vector<int>& entries() const { return entries_; }

    int star(int k) const { return 2 * d_ + 1 - k; }
    bool contains(int k) const;

    // one of {k, k*} for every k
    bool pair_condition() const;
    int count_above_d() const;
    bool in_I_d() const { return pair_condition() && count_above_d() % 2 == 0; }
    bool in_I_d_star() const { return pair_condition() && count_above_d() % 2 == 1; }

    friend bool operator==(const IdElement& a, const IdElement& b) {
        return a.d_ == b.d_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const IdElement& a, const IdElement& b) { return !(a == b); }

    std::string to_string() const; // "(1,2,5,6)"

private:
    int d_;
    std::vector<int> entries_;
};

// Shape check plus optional I(d) membership requirement; throws
// validation_error with a reason on failure.
IdElement validate(int d, const std::vector<int>& entries, bool require_id);

// Componentwise partial order on I(d,2d); both arguments must share d.
bool leq(const IdElement& a, const IdElement& b);
inline bool lt(const IdElement& a, const IdElement& b) { return leq(a, b) && !(a == b); }

// a# = ({1..2d} \ a)*, the order preserving involution fixing I(d).
IdElement hash_involution(const IdElement& a);

// a* = all starred entries, sorted; an order reversing involution.
IdElement star_reverse(const IdElement& a);

// Index lift for odd ambient dimension n = 2d+1: shifts entries past the
// middle and appends d+1 or d+2 according to the parity of the count of
// entries above d. Input is a d-subset of {1..2d+1} avoiding d+1 that
// contains one of {k, 2d+2-k} for every k; output lands in I(d+1).
IdElement lift_odd(int d, const std::vector<int>& subset);

// Order preserving injection I(d)* -> I(d+1) for odd d: entries above d
// are shifted by two and d+2 is appended.
IdElement pass_embed(const IdElement& u);
int pass_entry(int d, int e);
int unpass_entry(int d, int e);
// Inverse of u -> pass_embed(u)* composed with star: recovers the I(d)
// element x from pass_embed(star_reverse(x)).
IdElement pass_unembed_to_id(const IdElement& lifted);

// All of I(d), sorted lexicographically; |I(d)| = 2^(d-1).
std::vector<IdElement> enumerate_I_d(int d);
// All of I(d,2d); for small d only (C(2d,d) elements).
std::vector<IdElement> enumerate_I_d2d(int d);

// Text form "d=7;v=1,2,3,4,7,9,10". The label before '=' in the second
// field is ignored (v or w both accepted).
IdElement parse_id_element(const std::string& text, bool require_id = false);

} // namespace ogs

#endif
