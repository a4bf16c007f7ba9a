#include <doctest.h>

#include <algorithm>

#include "ogs/chains.hpp"
#include "ogs/domination.hpp"
#include "ogs/errors.hpp"
#include "test_util.hpp"

using namespace ogs;

TEST_SUITE_BEGIN("chains");

TEST_CASE("chain validation") {
    RootRegions rr(validate(4, {1, 2, 5, 6}, true));
    CHECK_NOTHROW(VChain(rr, {Root{7, 1}, Root{3, 2}}));
    CHECK_THROWS_AS(VChain(rr, {Root{3, 2}, Root{7, 1}}), validation_error); // increasing
    CHECK_THROWS_AS(VChain(rr, {Root{8, 1}}), validation_error);             // diagonal, not ON_v
}

TEST_CASE("connected components") {
    RootRegions rr(validate(4, {1, 2, 5, 6}, true));
    VChain c(rr, {Root{7, 1}, Root{3, 2}});
    CHECK(connected_components(rr, c) == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(connected_components(rr, VChain(rr, {Root{7, 1}})) ==
          std::vector<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("component quirk: a subchain may be connected while the chain splits") {
    // alpha > beta > gamma falls into components {alpha,beta},{gamma},
    // yet alpha > gamma on its own is connected
    RootRegions rr(validate(6, {1, 2, 3, 5, 7, 9}, true));
    Root alpha{10, 1}, beta{6, 2}, gamma{4, 3};
    VChain full(rr, {alpha, beta, gamma});
    CHECK(connected_components(rr, full) == std::vector<std::pair<int, int>>{{0, 1}, {2, 2}});
    VChain sub(rr, {alpha, gamma});
    CHECK(connected_components(rr, sub) == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("element types") {
    RootRegions r56(validate(4, {1, 2, 5, 6}, true));
    CHECK(element_types(r56, VChain(r56, {Root{3, 1}})).types ==
          std::vector<ElementType>{ElementType::S});
    RootRegions r34(validate(4, {1, 2, 3, 4}, true));
    CHECK(element_types(r34, VChain(r34, {Root{6, 1}})).types ==
          std::vector<ElementType>{ElementType::H});
    CHECK(element_types(r56, VChain(r56, {Root{7, 1}, Root{3, 2}})).types ==
          std::vector<ElementType>{ElementType::V, ElementType::V});
    CHECK(element_types(r56, VChain(r56, {Root{3, 1}})).critical == 0);
    CHECK_FALSE(element_types(r34, VChain(r34, {Root{6, 1}})).critical.has_value());
}

TEST_CASE("attached monomials S_C") {
    RootRegions r34(validate(4, {1, 2, 3, 4}, true));
    Monomial h = chain_monomial(r34, VChain(r34, {Root{6, 1}}));
    CHECK(h == checked_monomial(r34, Region::N, {{Root{8, 1}, 1}, {Root{6, 3}, 1}}));
    RootRegions r56(validate(4, {1, 2, 5, 6}, true));
    CHECK(chain_monomial(r56, VChain(r56, {Root{3, 1}})) ==
          checked_monomial(r56, Region::N, {{Root{3, 1}, 1}, {Root{8, 6}, 1}}));
    CHECK(chain_monomial(r56, VChain(r56, {Root{7, 1}, Root{3, 2}})) ==
          checked_monomial(r56, Region::N, {{Root{8, 1}, 1}, {Root{7, 2}, 1}}));
}

TEST_CASE("w of a chain") {
    RootRegions r34(validate(4, {1, 2, 3, 4}, true));
    CHECK(w_of_chain(r34, VChain()) == r34.base());
    CHECK(w_of_chain(r34, VChain(r34, {Root{6, 1}})) == validate(4, {2, 4, 6, 8}, true));
    RootRegions r56(validate(4, {1, 2, 5, 6}, true));
    CHECK(w_of_chain(r56, VChain(r56, {Root{3, 1}})) == validate(4, {2, 3, 5, 8}, true));
}

TEST_CASE("depth tables") {
    RootRegions rr(validate(4, {1, 2, 5, 6}, true));
    Monomial antichain(Region::ON);
    antichain.add(Root{3, 1});
    antichain.add(Root{3, 2});
    DepthTable flat = depth_table(antichain);
    CHECK(flat.depth_of(Root{3, 1}) == 1);
    CHECK(flat.depth_of(Root{3, 2}) == 1);

    Monomial s(Region::N);
    s.add(Root{8, 1});
    s.add(Root{7, 2});
    DepthTable t = depth_table(s);
    CHECK(t.depth_of(Root{8, 1}) == 1);
    CHECK(t.depth_of(Root{7, 2}) == 2);

    Monomial doubled(Region::ON);
    doubled.add(Root{3, 1}, 2);
    CHECK(depth_table(doubled).depth_of(Root{3, 1}) == 1);
}

TEST_CASE("O-depths along a chain") {
    RootRegions r56(validate(4, {1, 2, 5, 6}, true));
    VChain c(r56, {Root{7, 1}, Root{3, 2}});
    CHECK(odepths_in_chain(r56, c) == std::vector<int>{1, 2});
    CHECK(odepth_in_chain(r56, c, Root{3, 2}) == 2);

    // type H head whose horizontal projection exceeds the successor: +2
    RootRegions r15(validate(5, {1, 2, 3, 4, 5}, true));
    VChain jump(r15, {Root{9, 1}, Root{6, 3}});
    auto types = element_types(r15, jump).types;
    CHECK(types[0] == ElementType::H);
    CHECK(odepths_in_chain(r15, jump) == std::vector<int>{1, 3});
}

TEST_CASE("O-depth of a monomial, fixtures") {
    RootRegions rr(validate(4, {1, 2, 5, 6}, true));
    Monomial s(Region::ON);
    s.add(Root{7, 1});
    s.add(Root{3, 2});
    ODepthTable t = odepth_table(rr, s);
    CHECK(t.odepth_of(Root{7, 1}) == 1);
    CHECK(t.odepth_of(Root{3, 2}) == 2);
    CHECK(odepth_in_monomial(rr, s, Root{3, 2}) == 2);
}

TEST_CASE("O-depth recurrence matches the exhaustive oracle") {
    // every subset of ON_v for every base, small ranks
    for (int d = 2; d <= 4; ++d) {
        for (const IdElement& v : enumerate_I_d(d)) {
            RootRegions rr(v);
            const auto& roots = rr.on_roots();
            for (unsigned mask = 0; mask < (1u << roots.size()); ++mask) {
                Monomial s(Region::ON);
                for (std::size_t i = 0; i < roots.size(); ++i)
                    if (mask & (1u << i)) s.add(roots[i]);
                ODepthTable fast = odepth_table(rr, s);
                ODepthTable slow = odepth_table_oracle(rr, s);
                CHECK(fast.values() == slow.values());
            }
        }
    }
    // randomized multisets at d = 5, 6
    test::Rng rng(20240311);
    for (int d : {5, 6}) {
        for (int trial = 0; trial < 400; ++trial) {
            RootRegions rr(test::random_id_element(rng, d));
            if (rr.on_roots().empty()) continue;
            Monomial s = test::random_monomial(rng, rr.on_roots(), 9, Region::ON);
            if (s.support_size() > 20) continue;
            CHECK(odepth_table(rr, s).values() == odepth_table_oracle(rr, s).values());
        }
    }
}

TEST_CASE("odd components end in H or S and conversely, d <= 5") {
    for (int d = 2; d <= 5; ++d) {
        for (const IdElement& v : enumerate_I_d(d)) {
            RootRegions rr(v);
            test::for_each_chain(rr, rr.on_roots(), [&](const VChain& c) {
                ChainTypes info = element_types(rr, c);
                for (auto [first, last] : info.components) {
                    bool odd = (last - first + 1) % 2 == 1;
                    bool ends_hs = info.types[last] != ElementType::V;
                    CHECK(odd == ends_hs);
                    for (int i = first; i < last; ++i) CHECK(info.types[i] == ElementType::V);
                }
                if (info.critical) {
                    for (int i = *info.critical + 1; i < c.length(); ++i)
                        CHECK(info.types[i] == ElementType::S);
                    CHECK(info.types[*info.critical] != ElementType::H);
                }
            });
        }
    }
}

TEST_CASE("q elements decrease along the chain, d <= 5") {
    for (int d = 2; d <= 5; ++d) {
        for (const IdElement& v : enumerate_I_d(d)) {
            RootRegions rr(v);
            test::for_each_chain(rr, rr.on_roots(), [&](const VChain& c) {
                for (int i = 0; i + 1 < c.length(); ++i)
                    CHECK(chain_gt(q_element(rr, c, i), q_element(rr, c, i + 1)));
            });
        }
    }
}

TEST_CASE("S_C is distinguished, symmetric, with evenly many diagonal points, d <= 5") {
    for (int d = 2; d <= 5; ++d) {
        for (const IdElement& v : enumerate_I_d(d)) {
            RootRegions rr(v);
            test::for_each_chain(rr, rr.on_roots(), [&](const VChain& c) {
                Monomial sc = chain_monomial(rr, c);
                for (const auto& [root, mult] : sc.items()) CHECK(mult == 1);
                CHECK(is_distinguished(sc.support()));
                CHECK(sc.hash_image(rr) == sc);
                int diag = 0;
                for (Root a : sc.support())
                    if (rr.on_diagonal(a)) ++diag;
                CHECK(diag % 2 == 0);
                CHECK(w_of_chain(rr, c).in_I_d());
            });
        }
    }
}

TEST_CASE("O-depths are stable under initial segments and monotone, d <= 6") {
    test::Rng rng(7041);
    for (int trial = 0; trial < 600; ++trial) {
        int d = test::pick(rng, 2, 6);
        RootRegions rr(test::random_id_element(rng, d));
        VChain chain = test::random_chain(rng, rr, 6);
        if (chain.empty()) continue;
        // initial segment
        int cut = test::pick(rng, 1, chain.length());
        VChain prefix(rr, std::vector<Root>(chain.elements().begin(),
                                            chain.elements().begin() + cut));
        auto full = odepths_in_chain(rr, chain);
        auto part = odepths_in_chain(rr, prefix);
        for (int i = 0; i < cut; ++i) CHECK(full[i] == part[i]);
        // subchain monotonicity of the attached elements
        std::vector<Root> picked;
        for (Root a : chain.elements())
            if (test::pick(rng, 0, 1)) picked.push_back(a);
        VChain sub(rr, picked);
        CHECK(leq(w_of_chain(rr, sub), w_of_chain(rr, chain)));
        // O-depth in the chain never exceeds O-depth in any extension
        for (int i = 0; i < cut; ++i)
            CHECK(part[i] <= odepth_in_chain(rr, chain, prefix[i]));
    }
}

TEST_CASE("O-depth dominates plain depth in the symmetrized monomial, d <= 5") {
    for (int d = 2; d <= 5; ++d) {
        for (const IdElement& v : enumerate_I_d(d)) {
            RootRegions rr(v);
            const auto& roots = rr.on_roots();
            if (roots.size() > 10) continue;
            for (unsigned mask = 0; mask < (1u << roots.size()); ++mask) {
                Monomial s(Region::ON);
                for (std::size_t i = 0; i < roots.size(); ++i)
                    if (mask & (1u << i)) s.add(roots[i]);
                if (s.empty()) continue;
                Monomial sym = s.united(s.hash_image(rr));
                DepthTable depths = depth_table(sym);
                ODepthTable odepths = odepth_table(rr, s);
                for (Root a : s.support()) CHECK(odepths.odepth_of(a) >= depths.depth_of(a));
            }
        }
    }
}

TEST_CASE("parity of O-depth by type, d <= 5") {
    for (int d = 2; d <= 5; ++d) {
        for (const IdElement& v : enumerate_I_d(d)) {
            RootRegions rr(v);
            test::for_each_chain(rr, rr.on_roots(), [&](const VChain& c) {
                ChainTypes info = element_types(rr, c);
                auto depths = odepths_in_chain(rr, c);
                for (auto [first, last] : info.components) {
                    if (info.types[last] == ElementType::H) CHECK(depths[last] % 2 == 1);
                    if (info.types[last] == ElementType::V) CHECK(depths[last] % 2 == 0);
                }
            });
        }
    }
}

TEST_CASE("shift law for the deep part, d <= 6") {
    test::Rng rng(90210);
    for (int trial = 0; trial < 500; ++trial) {
        int d = test::pick(rng, 2, 6);
        RootRegions rr(test::random_id_element(rng, d));
        if (rr.on_roots().empty()) continue;
        Monomial s = test::random_monomial(rng, rr.on_roots(), 10, Region::ON);
        if (s.empty()) continue;
        ODepthTable table = odepth_table(rr, s);
        for (int j = 1; j <= table.max_odepth(); j += 2) {
            Monomial deep(Region::ON);
            for (const auto& [root, mult] : s.items())
                if (table.odepth_of(root) >= j) deep.add(root, mult);
            if (deep.empty()) continue;
            ODepthTable shifted = odepth_table(rr, deep);
            for (Root a : deep.support())
                CHECK(shifted.odepth_of(a) == table.odepth_of(a) - j + 1);
        }
    }
}

TEST_CASE("preliminary classes, sigma and true orthogonality") {
    RootRegions rr(validate(4, {1, 2, 3, 4}, true));
    Monomial s(Region::ON);
    s.add(Root{6, 1});
    auto classes = pr_partition(rr, s);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0] == s);
    CHECK(sigma(rr, s, 1) == Root{6, 1});
    CHECK(truly_orthogonal(rr, s, 1)); // p_h = (6,3) stays in N_v
    CHECK_THROWS_AS(sigma(rr, s, 2), validation_error);
    CHECK_THROWS_AS(truly_orthogonal(rr, s, 2), validation_error);

    RootRegions r56(validate(4, {1, 2, 5, 6}, true));
    Monomial t(Region::ON);
    t.add(Root{3, 1});
    CHECK_FALSE(truly_orthogonal(r56, t, 1)); // p_h = (3,6) leaves N_v

    // an antichain is all of S_1^pr
    Monomial anti(Region::ON);
    anti.add(Root{3, 1});
    anti.add(Root{3, 2});
    CHECK(pr_partition(r56, anti).size() == 1);
    CHECK(sigma(r56, anti, 1) == Root{3, 2});
}

TEST_SUITE_END();
