#include "ogs/chains.hpp"

#include <algorithm>
#include <array>

#include "ogs/errors.hpp"

namespace ogs {

char type_letter(ElementType t) {
    switch (t) {
        case ElementType::V: return 'V';
        case ElementType::H: return 'H';
        case ElementType::S: return 'S';
    }
    return '?';
}

VChain::VChain(const RootRegions& rr, std::vector<Root> elements) : elems_(std::move(elements)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (!rr.in_ON(elems_[i]))
            throw validation_error("chain element " + to_string(elems_[i]) + " is not in ON_v");
        if (i > 0 && !chain_gt(elems_[i - 1], elems_[i]))
            throw validation_error("chain not strictly decreasing: " + to_string(elems_[i - 1]) +
                                   " then " + to_string(elems_[i]));
    }
}

bool connected(const RootRegions& rr, Root a, Root b) {
    // legs intertwine and (b.r, a.r*) stays in N_v
    return a.r <= rr.star(b.c) && b.r > rr.star(a.r);
}

std::vector<std::pair<int, int>> connected_components(const RootRegions& rr, const VChain& c) {
    std::vector<std::pair<int, int>> comps;
    int begin = 0;
    for (int i = 0; i + 1 < c.length(); ++i) {
        if (!connected(rr, c[i], c[i + 1])) {
            comps.push_back({begin, i});
            begin = i + 1;
        }
    }
    if (c.length() > 0) comps.push_back({begin, c.length() - 1});
    return comps;
}

ChainTypes element_types(const RootRegions& rr, const VChain& c) {
    ChainTypes out;
    out.components = connected_components(rr, c);
    out.types.resize(c.length(), ElementType::V);
    for (auto [first, last] : out.components) {
        int size = last - first + 1;
        if (size % 2 == 0) continue; // last element stays type V
        out.types[last] =
            rr.project_h(c[last]).has_value() ? ElementType::H : ElementType::S;
    }
    for (int i = 0; i < c.length(); ++i) {
        if (!rr.project_h(c[i]).has_value()) {
            out.critical = i;
            break;
        }
    }
    return out;
}

Monomial chain_element_contribution(const RootRegions& rr, Root alpha, ElementType t) {
    Monomial out(Region::N);
    switch (t) {
        case ElementType::V:
            out.add(rr.project_v(alpha));
            break;
        case ElementType::H:
            out.add(rr.project_v(alpha));
            out.add(rr.project_h_raw(alpha));
            break;
        case ElementType::S:
            out.add(alpha);
            out.add(rr.reflect(alpha));
            break;
    }
    return out;
}

Monomial chain_monomial(const RootRegions& rr, const VChain& c) {
    ChainTypes types = element_types(rr, c);
    Monomial out(Region::N);
    for (int i = 0; i < c.length(); ++i)
        out = out.united(chain_element_contribution(rr, c[i], types.types[i]));
    return out;
}

Root q_element(const RootRegions& rr, const VChain& c, int index) {
    ChainTypes types = element_types(rr, c);
    if (index < 0 || index >= c.length()) throw validation_error("q_element index out of range");
    return types.types[index] == ElementType::S ? c[index] : rr.project_v(c[index]);
}

namespace {

IdElement swap_columns_for_rows(const RootRegions& rr, const std::vector<Root>& roots) {
    std::vector<int> entries = rr.base().entries();
    for (Root a : roots) {
        auto it = std::find(entries.begin(), entries.end(), a.c);
        if (it == entries.end())
            throw validation_error("column " + std::to_string(a.c) + " is not an entry of v");
        entries.erase(it);
    }
    for (Root a : roots) {
        if (std::find(entries.begin(), entries.end(), a.r) != entries.end())
            throw validation_error("row " + std::to_string(a.r) + " would repeat an entry");
        entries.push_back(a.r);
    }
    std::sort(entries.begin(), entries.end());
    return IdElement(rr.d(), std::move(entries));
}

} // namespace

IdElement w_of_chain(const RootRegions& rr, const VChain& c) {
    if (c.empty()) return rr.base();
    return swap_columns_for_rows(rr, chain_monomial(rr, c).support());
}

IdElement w_gr_of_roots(const RootRegions& rr, const std::vector<Root>& chain) {
    return swap_columns_for_rows(rr, chain);
}

int DepthTable::depth_of(Root a) const {
    auto it = depths_.find(a);
    if (it == depths_.end()) throw validation_error("root " + to_string(a) + " not in monomial");
    return it->second;
}

DepthTable depth_table(const Monomial& s) {
    DepthTable out;
    std::vector<Root> supp = s.support();
    // process heads first: chain order decreases row, so sort rows descending
    std::sort(supp.begin(), supp.end(), [](Root a, Root b) {
        return a.r != b.r ? a.r > b.r : a.c < b.c;
    });
    for (Root a : supp) {
        int best = 1;
        for (Root b : supp) {
            if (chain_gt(b, a)) {
                auto it = out.depths_.find(b);
                if (it != out.depths_.end()) best = std::max(best, it->second + 1);
            }
        }
        out.depths_[a] = best;
        out.max_depth_ = std::max(out.max_depth_, best);
    }
    return out;
}

std::vector<int> odepths_in_chain(const RootRegions& rr, const VChain& c) {
    ChainTypes types = element_types(rr, c);
    std::vector<int> out(c.length());
    for (int i = 0; i < c.length(); ++i) {
        if (i == 0) {
            out[i] = 1;
            continue;
        }
        Root prev = c[i - 1];
        bool jump = types.types[i - 1] == ElementType::H &&
                    chain_gt(rr.project_h_raw(prev), c[i]);
        out[i] = out[i - 1] + (jump ? 2 : 1);
    }
    return out;
}

int odepth_in_chain(const RootRegions& rr, const VChain& c, Root alpha) {
    std::vector<int> all = odepths_in_chain(rr, c);
    for (int i = 0; i < c.length(); ++i)
        if (c[i] == alpha) return all[i];
    throw validation_error("root " + to_string(alpha) + " not in chain");
}

int ODepthTable::odepth_of(Root a) const {
    auto it = values_.find(a);
    if (it == values_.end()) throw validation_error("root " + to_string(a) + " not in monomial");
    return it->second;
}

ODepthTable odepth_table(const RootRegions& rr, const Monomial& s) {
    ODepthTable out;
    std::vector<Root> supp = s.support();
    std::sort(supp.begin(), supp.end(), [](Root a, Root b) {
        return a.r != b.r ? a.r > b.r : a.c < b.c;
    });
    // best[i][p]: largest O-depth of supp[i] over chains with tail supp[i]
    // whose final connected component has cardinality of parity p
    // (0 = even, 1 = odd); -1 when unreachable.
    const int n = static_cast<int>(supp.size());
    std::vector<std::array<int, 2>> best(n, {-1, -1});
    for (int i = 0; i < n; ++i) {
        Root a = supp[i];
        best[i][1] = 1; // the singleton chain
        for (int j = 0; j < n; ++j) {
            if (!chain_gt(supp[j], a)) continue;
            Root b = supp[j];
            bool conn = connected(rr, b, a);
            bool b_h_capable = rr.project_h(b).has_value(); // type H needs p_h in N_v
            bool jump_pair = b_h_capable && chain_gt(rr.project_h_raw(b), a);
            for (int p = 0; p < 2; ++p) {
                if (best[j][p] < 0) continue;
                int value, parity;
                if (conn) {
                    value = best[j][p] + 1;
                    parity = 1 - p;
                } else {
                    bool jump = p == 1 && jump_pair;
                    value = best[j][p] + (jump ? 2 : 1);
                    parity = 1;
                }
                best[i][parity] = std::max(best[i][parity], value);
            }
        }
        int value = std::max(best[i][0], best[i][1]);
        out.values_[a] = value;
        out.max_ = std::max(out.max_, value);
    }
    return out;
}

int odepth_in_monomial(const RootRegions& rr, const Monomial& s, Root alpha) {
    return odepth_table(rr, s).odepth_of(alpha);
}

void for_each_maximal_chain(const std::vector<Root>& support,
                            const std::function<void(const std::vector<Root>&)>& visit) {
    std::vector<Root> chain;
    auto rec = [&](auto&& self, Root last) -> void {
        bool extended = false;
        for (Root b : support) {
            if (chain_gt(last, b)) {
                extended = true;
                chain.push_back(b);
                self(self, b);
                chain.pop_back();
            }
        }
        if (!extended) visit(chain);
    };
    for (Root a : support) {
        bool is_head = true;
        for (Root b : support) {
            if (chain_gt(b, a)) {
                is_head = false;
                break;
            }
        }
        if (!is_head) continue;
        chain.assign(1, a);
        rec(rec, a);
    }
}

ODepthTable odepth_table_oracle(const RootRegions& rr, const Monomial& s) {
    if (s.support_size() > 20)
        throw guardrail_error("odepth oracle refuses supports larger than 20 roots");
    ODepthTable out;
    for (Root a : s.support()) out.values_[a] = s.empty() ? 0 : 1;
    for_each_maximal_chain(s.support(), [&](const std::vector<Root>& chain) {
        VChain c(rr, chain);
        std::vector<int> depths = odepths_in_chain(rr, c);
        for (int i = 0; i < c.length(); ++i) {
            int& slot = out.values_[c[i]];
            slot = std::max(slot, depths[i]);
            out.max_ = std::max(out.max_, depths[i]);
        }
    });
    return out;
}

std::vector<Monomial> pr_partition(const RootRegions& rr, const Monomial& s) {
    ODepthTable table = odepth_table(rr, s);
    std::vector<Monomial> out(table.max_odepth(), Monomial(Region::ON));
    for (const auto& [root, mult] : s.items()) out[table.odepth_of(root) - 1].add(root, mult);
    return out;
}

Root sigma(const RootRegions& rr, const Monomial& s, int k) {
    std::vector<Monomial> classes = pr_partition(rr, s);
    if (k < 1 || k > static_cast<int>(classes.size()) || classes[k - 1].empty())
        throw validation_error("no elements of O-depth " + std::to_string(k));
    // same-O-depth elements are pairwise incomparable, so ascending rows
    // agree with ascending columns and the canonical order gives the
    // arrangement; the last support root is sigma_k
    return classes[k - 1].items().back().first;
}

bool truly_orthogonal(const RootRegions& rr, const Monomial& s, int j) {
    if (j % 2 == 0) throw validation_error("truly_orthogonal expects odd j");
    return rr.project_h(sigma(rr, s, j)).has_value();
}

} // namespace ogs
