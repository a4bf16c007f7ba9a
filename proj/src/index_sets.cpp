#include "ogs/index_sets.hpp"

#include <algorithm>
#include <sstream>

#include "ogs/errors.hpp"

namespace ogs {

IdElement::IdElement(int d, std::vector<int> entries) : d_(d), entries_(std::move(entries)) {
    if (d_ <= 0) throw validation_error("d must be positive");
    if (static_cast<int>(entries_.size()) != d_)
        throw validation_error("expected " + std::to_string(d_) + " entries, got " +
                               std::to_string(entries_.size()));
    for (int i = 0; i < d_; ++i) {
        if (entries_[i] < 1 || entries_[i] > 2 * d_)
            throw validation_error("entry " + std::to_string(entries_[i]) + " out of range [1," +
                                   std::to_string(2 * d_) + "]");
        if (i > 0 && entries_[i] <= entries_[i - 1])
            throw validation_error("entries not strictly increasing at position " +
                                   std::to_string(i + 1));
    }
}

bool IdElement::contains(int k) const {
    return std::binary_search(entries_.begin(), entries_.end(), k);
}

bool IdElement::pair_condition() const {
    for (int k = 1; k <= 2 * d_; ++k) {
        if (contains(k) == contains(star(k))) return false;
    }
    return true;
}

int IdElement::count_above_d() const {
    int n = 0;
    for (int e : entries_)
        if (e > d_) ++n;
    return n;
}

std::string IdElement::to_string() const {
    std::string out = "(";
    for (int i = 0; i < d_; ++i) {
        if (i) out += ",";
        out += std::to_string(entries_[i]);
    }
    return out + ")";
}

IdElement validate(int d, const std::vector<int>& entries, bool require_id) {
    IdElement a(d, entries);
    if (require_id) {
        if (!a.pair_condition())
            throw validation_error(a.to_string() + " violates the pair condition for I(" +
                                   std::to_string(d) + ")");
        if (a.count_above_d() % 2 != 0)
            throw validation_error(a.to_string() + " has oddly many entries above " +
                                   std::to_string(d));
    }
    return a;
}

bool leq(const IdElement& a, const IdElement& b) {
    if (a.d() != b.d())
        throw validation_error("cannot compare elements with d=" + std::to_string(a.d()) +
                               " and d=" + std::to_string(b.d()));
    for (int i = 0; i < a.d(); ++i) {
        if (a.entries()[i] > b.entries()[i]) return false;
    }
    return true;
}

IdElement hash_involution(const IdElement& a) {
    std::vector<int> out;
    out.reserve(a.d());
    for (int k = 1; k <= a.two_d(); ++k) {
        if (!a.contains(k)) out.push_back(a.star(k));
    }
    std::sort(out.begin(), out.end());
    return IdElement(a.d(), std::move(out));
}

IdElement star_reverse(const IdElement& a) {
    std::vector<int> out;
    out.reserve(a.d());
    for (int e : a.entries()) out.push_back(a.star(e));
    std::sort(out.begin(), out.end());
    return IdElement(a.d(), std::move(out));
}

IdElement lift_odd(int d, const std::vector<int>& subset) {
    const int n = 2 * d + 1;
    if (static_cast<int>(subset.size()) != d)
        throw validation_error("lift_odd expects a d-element subset");
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    int above = 0;
    for (int i = 0; i < d; ++i) {
        int e = sorted[i];
        if (e < 1 || e > n) throw validation_error("lift_odd entry out of range");
        if (e == d + 1) throw validation_error("lift_odd input must not contain d+1");
        if (i > 0 && e == sorted[i - 1]) throw validation_error("lift_odd entries must be distinct");
        if (e > d) ++above;
    }
    for (int e : sorted) {
        int estar = n + 1 - e;
        if (e != estar && std::binary_search(sorted.begin(), sorted.end(), estar))
            throw validation_error("lift_odd input contains both members of a pair");
    }
    std::vector<int> lifted;
    lifted.reserve(d + 1);
    for (int e : sorted) lifted.push_back(e <= d ? e : e + 1);
    lifted.push_back(above % 2 == 0 ? d + 1 : d + 2);
    std::sort(lifted.begin(), lifted.end());
    return validate(d + 1, lifted, true);
}

int pass_entry(int d, int e) { return e <= d ? e : e + 2; }

int unpass_entry(int d, int e) {
    if (e <= d) return e;
    if (e >= d + 3) return e - 2;
    throw validation_error("entry " + std::to_string(e) + " is not in the image of the embedding");
}

IdElement pass_embed(const IdElement& u) {
    if (u.d() % 2 == 0) throw validation_error("pass_embed requires odd d");
    if (!u.in_I_d_star())
        throw validation_error("pass_embed requires an element of I(d)*; got " + u.to_string());
    std::vector<int> out;
    out.reserve(u.d() + 1);
    for (int e : u.entries()) out.push_back(pass_entry(u.d(), e));
    out.push_back(u.d() + 2);
    std::sort(out.begin(), out.end());
    return validate(u.d() + 1, out, true);
}

IdElement pass_unembed_to_id(const IdElement& lifted) {
    const int d = lifted.d() - 1;
    if (d < 1 || d % 2 == 0) throw validation_error("pass_unembed_to_id requires odd d+1 input rank");
    if (lifted.contains(d + 1))
        throw validation_error("element has entry d+1 and is outside the embedded image");
    std::vector<int> u;
    u.reserve(d);
    for (int e : lifted.entries()) {
        if (e == d + 2) continue;
        u.push_back(unpass_entry(d, e));
    }
    if (static_cast<int>(u.size()) != d)
        throw validation_error("element lacks the appended entry d+2");
    IdElement ustar(d, u);
    if (!ustar.in_I_d_star()) throw validation_error("pulled-back element is not in I(d)*");
    return star_reverse(ustar);
}

std::vector<IdElement> enumerate_I_d(int d) {
    std::vector<IdElement> out;
    // pick one member from each pair {k, 2d+1-k}, k = 1..d
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<int> entries;
        int above = 0;
        for (int k = 1; k <= d; ++k) {
            if (mask & (1u << (k - 1))) {
                entries.push_back(2 * d + 1 - k);
                ++above;
            } else {
                entries.push_back(k);
            }
        }
        if (above % 2 != 0) continue;
        std::sort(entries.begin(), entries.end());
        out.emplace_back(d, std::move(entries));
    }
    std::sort(out.begin(), out.end(),
              [](const IdElement& a, const IdElement& b) { return a.entries() < b.entries(); });
    return out;
}

std::vector<IdElement> enumerate_I_d2d(int d) {
    std::vector<IdElement> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(pick.size()) == d) {
            out.emplace_back(d, pick);
            return;
        }
        for (int e = next; e <= 2 * d; ++e) {
            if (2 * d - e + 1 < d - static_cast<int>(pick.size())) break;
            pick.push_back(e);
            self(self, e + 1);
            pick.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

IdElement parse_id_element(const std::string& text, bool require_id) {
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw validation_error("expected \"d=<n>;v=<entries>\", got \"" + text + "\"");
    auto parse_field = [&](const std::string& field) -> std::string {
        auto eq = field.find('=');
        if (eq == std::string::npos)
            throw validation_error("malformed field \"" + field + "\"");
        return field.substr(eq + 1);
    };
    int d = 0;
    try {
        d = std::stoi(parse_field(text.substr(0, semi)));
    } catch (const std::exception&) {
        throw validation_error("malformed d in \"" + text + "\"");
    }
    std::vector<int> entries;
    std::stringstream ss(parse_field(text.substr(semi + 1)));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            entries.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw validation_error("malformed entry \"" + item + "\"");
        }
    }
    return validate(d, entries, require_id);
}

} // namespace ogs
