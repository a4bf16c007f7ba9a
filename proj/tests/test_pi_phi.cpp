#include <doctest.h>

#include <algorithm>

#include "ogs/errors.hpp"
#include "ogs/pi_phi.hpp"
#include "test_util.hpp"

using namespace ogs;

namespace {

Monomial on_monomial(std::initializer_list<std::pair<Root, int>> items) {
    Monomial out(Region::ON);
    for (const auto& [root, mult] : items) out.add(root, mult);
    return out;
}

bool satisfies_ddag(const Monomial& m, const RootRegions& rr, int f) {
    for (Root a : m.support())
        if (a.r == f || a.c == rr.star(f)) return false;
    return true;
}

} // namespace

TEST_SUITE_BEGIN("pi_phi");

TEST_CASE("block decomposition") {
    // two comparable points still merge under the mechanical break rule
    Monomial m(Region::N);
    m.add(Root{8, 1});
    m.add(Root{6, 3});
    auto blocks = gr_blocks(m);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].w_of == Root{8, 1});
    CHECK(blocks[0].bprime == std::vector<Root>{{6, 1}});

    Monomial single(Region::N);
    single.add(Root{5, 2});
    auto one = gr_blocks(single);
    REQUIRE(one.size() == 1);
    CHECK(one[0].w_of == Root{5, 2});
    CHECK(one[0].bprime.empty());

    // far apart: the second column exceeds the first row
    Monomial two(Region::N);
    two.add(Root{3, 1});
    two.add(Root{8, 6});
    CHECK(gr_blocks(two).size() == 2);

    // a repeated root intersects with itself
    Monomial doubled(Region::N);
    doubled.add(Root{5, 2}, 2);
    auto rep = gr_blocks(doubled);
    REQUIRE(rep.size() == 1);
    CHECK(rep[0].w_of == Root{5, 2});
    CHECK(rep[0].bprime == std::vector<Root>{{5, 2}});
}

TEST_CASE("block heads of a layer are spaced out") {
    // c_1 < r_1 < c_2 < r_2 < ... for the blocks of a depth layer
    test::Rng rng(424242);
    for (int trial = 0; trial < 300; ++trial) {
        int d = test::pick(rng, 2, 6);
        RootRegions rr(test::random_id_element(rng, d));
        if (rr.n_roots().empty()) continue;
        Monomial s = test::random_monomial(rng, rr.n_roots(), 8, Region::N);
        if (s.empty()) continue;
        DepthTable depths = depth_table(s);
        for (int k = 1; k <= depths.max_depth(); ++k) {
            Monomial layer(Region::N);
            for (const auto& [root, mult] : s.items())
                if (depths.depth_of(root) == k) layer.add(root, mult);
            auto blocks = gr_blocks(layer);
            for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
                CHECK(blocks[i].w_of.c < blocks[i].w_of.r);
                CHECK(blocks[i].w_of.r < blocks[i + 1].w_of.c);
            }
        }
    }
}

TEST_CASE("gr pi on simple inputs") {
    RootRegions rr(validate(4, {1, 2, 5, 6}, true));
    GrPiResult empty = gr_pi(rr, Monomial(Region::N));
    CHECK(empty.x == rr.base());
    CHECK(empty.sprime.empty());

    // a single block: head swaps in, consecutive intersections remain
    Monomial block(Region::N);
    block.add(Root{3, 1});
    block.add(Root{4, 2});
    GrPiResult res = gr_pi(rr, block);
    CHECK(res.heads == std::vector<Root>{{4, 1}});
    CHECK(res.sprime == checked_monomial(rr, Region::N, {{Root{3, 2}, 1}}));
    CHECK(res.x == validate(4, {2, 4, 5, 6}, false));
    CHECK(static_cast<int>(res.heads.size()) + res.sprime.degree() == block.degree());
}

TEST_CASE("gr phi inverts gr pi") {
    RootRegions rr(validate(4, {1, 2, 5, 6}, true));
    // empty piece reconstruction
    IdElement x = validate(4, {2, 4, 5, 6}, false);
    DistinguishedSet dist_x = to_distinguished(rr, x);
    Monomial sx(Region::N);
    for (Root a : dist_x.roots()) sx.add(a);
    CHECK(gr_phi(rr, x, Monomial(Region::N)) == sx);

    // single-piece inverse of the block example
    Monomial t(Region::N);
    t.add(Root{3, 2});
    Monomial back = gr_phi(rr, x, t);
    CHECK(back == checked_monomial(rr, Region::N, {{Root{3, 1}, 1}, {Root{4, 2}, 1}}));

    test::Rng rng(112233);
    for (int trial = 0; trial < 800; ++trial) {
        int d = test::pick(rng, 2, 5);
        RootRegions rv(test::random_id_element(rng, d));
        if (rv.n_roots().empty()) continue;
        Monomial s = test::random_monomial(rng, rv.n_roots(), 8, Region::N);
        if (s.empty()) continue;
        GrPiResult pi = gr_pi(rv, s);
        CHECK(gr_dominates(rv, pi.x, pi.sprime));
        CHECK(gr_phi(rv, pi.x, pi.sprime) == s);
        // and the other way, starting from the produced pair
        GrPiResult again = gr_pi(rv, gr_phi(rv, pi.x, pi.sprime));
        CHECK(again.x == pi.x);
        CHECK(again.sprime == pi.sprime);
    }
}

TEST_CASE("layer monomials") {
    RootRegions r34(validate(4, {1, 2, 3, 4}, true));
    CHECK(build_layer_monomial(r34, on_monomial({{Root{6, 1}, 1}}), 1) ==
          checked_monomial(r34, Region::N, {{Root{8, 1}, 1}, {Root{6, 3}, 1}}));
    RootRegions r56(validate(4, {1, 2, 5, 6}, true));
    CHECK(build_layer_monomial(r56, on_monomial({{Root{3, 1}, 1}}), 1) ==
          checked_monomial(r56, Region::N, {{Root{3, 1}, 1}, {Root{8, 6}, 1}}));
    CHECK(build_layer_monomial(r56, on_monomial({{Root{3, 1}, 1}}), 3).empty());
    CHECK_THROWS_AS(build_layer_monomial(r56, on_monomial({{Root{3, 1}, 1}}), 2),
                    validation_error);
}

TEST_CASE("layer monomials have depth at most two, d <= 5") {
    test::Rng rng(99100);
    for (int trial = 0; trial < 400; ++trial) {
        int d = test::pick(rng, 2, 5);
        RootRegions rr(test::random_id_element(rng, d));
        if (rr.on_roots().empty()) continue;
        Monomial s = test::random_monomial(rng, rr.on_roots(), 8, Region::ON);
        if (s.empty()) continue;
        ODepthTable table = odepth_table(rr, s);
        for (int j = 1; j <= table.max_odepth(); j += 2) {
            Monomial layer = build_layer_monomial(rr, s, j);
            if (layer.empty()) continue;
            CHECK(depth_table(layer).max_depth() <= 2);
            CHECK(layer.degree() % 2 == 0);
        }
    }
}

TEST_CASE("ortho pi fixtures") {
    RootRegions r56(validate(4, {1, 2, 5, 6}, true));
    CHECK_THROWS_AS(ortho_pi(r56, Monomial(Region::ON)), validation_error);
    OrthoPiResult res = ortho_pi(r56, on_monomial({{Root{3, 1}, 1}}));
    CHECK(res.w == validate(4, {2, 3, 5, 8}, true));
    CHECK(res.sprime.empty());
}

TEST_CASE("ortho pi satisfies the degree and minimality contracts") {
    // exhaustive over square-free monomials for d <= 4
    for (int d = 2; d <= 4; ++d) {
        for (const IdElement& v : enumerate_I_d(d)) {
            RootRegions rr(v);
            const auto& roots = rr.on_roots();
            for (unsigned mask = 1; mask < (1u << roots.size()); ++mask) {
                Monomial s(Region::ON);
                for (std::size_t i = 0; i < roots.size(); ++i)
                    if (mask & (1u << i)) s.add(roots[i]);
                OrthoPiResult res = ortho_pi(rr, s);
                CHECK(leq(v, res.w));
                CHECK(res.w.in_I_d());
                int vdeg = 0;
                for (int e : v.entries())
                    if (!res.w.contains(e)) ++vdeg;
                CHECK(vdeg % 2 == 0);
                CHECK(vdeg / 2 + res.sprime.degree() == s.degree());
                CHECK(o_dominates(rr, res.w, res.sprime));
                CHECK(res.w == least_o_dominating_oracle(rr, s));
                for (Root a : res.sprime.support()) CHECK_FALSE(rr.on_diagonal(a));
            }
        }
    }
    // randomized multisets at d = 5
    test::Rng rng(55555);
    for (int trial = 0; trial < 1000; ++trial) {
        RootRegions rr(test::random_id_element(rng, 5));
        if (rr.on_roots().empty()) continue;
        Monomial s = test::random_monomial(rng, rr.on_roots(), 8, Region::ON, false);
        OrthoPiResult res = ortho_pi(rr, s);
        CHECK(leq(rr.base(), res.w));
        int vdeg = 0;
        for (int e : rr.base().entries())
            if (!res.w.contains(e)) ++vdeg;
        CHECK(vdeg / 2 + res.sprime.degree() == s.degree());
        CHECK(o_dominates(rr, res.w, res.sprime));
        CHECK(res.w == least_o_dominating_oracle(rr, s));
    }
}

TEST_CASE("ortho pi of a chain gives its attached element") {
    test::Rng rng(662607);
    for (int trial = 0; trial < 300; ++trial) {
        int d = test::pick(rng, 2, 5);
        RootRegions rr(test::random_id_element(rng, d));
        VChain c = test::random_chain(rng, rr, 5);
        if (c.empty()) continue;
        Monomial s(Region::ON);
        for (Root a : c.elements()) s.add(a);
        CHECK(ortho_pi(rr, s).w == w_of_chain(rr, c));
    }
}

TEST_CASE("partition into domination classes") {
    RootRegions r56(validate(4, {1, 2, 5, 6}, true));
    IdElement w = validate(4, {2, 3, 5, 8}, true);
    CHECK(partition_T(r56, w, Monomial(Region::ON)).empty());

    test::Rng rng(777);
    for (int trial = 0; trial < 300; ++trial) {
        int d = test::pick(rng, 2, 5);
        RootRegions rr(test::random_id_element(rng, d));
        if (rr.on_roots().empty()) continue;
        Monomial s = test::random_monomial(rng, rr.on_roots(), 8, Region::ON, false);
        OrthoPiResult pi = ortho_pi(rr, s);
        std::map<int, Monomial> classes = partition_T(rr, pi.w, pi.sprime);
        int covered = 0;
        for (const auto& [j, part] : classes) {
            CHECK(j % 2 == 1);
            covered += part.degree();
            ODepthTable table = odepth_table(rr, part);
            CHECK(table.max_odepth() <= 2);
            CHECK(o_dominates(rr, slice_pair(rr, pi.w, j), part));
        }
        CHECK(covered == pi.sprime.degree());
        // reading the layer identity backward: the layer contribution of
        // phi on the produced pair is the O-depth layer pair of its output
        OrthoPhiResult phi = ortho_phi_detailed(rr, pi.w, pi.sprime);
        ODepthTable out_layers = odepth_table(rr, phi.total);
        for (const OrthoPhiLayer& layer : phi.layers) {
            Monomial expected(Region::ON);
            for (const auto& [root, mult] : phi.total.items()) {
                int od = out_layers.odepth_of(root);
                if (od == layer.j || od == layer.j + 1) expected.add(root, mult);
            }
            CHECK(layer.contribution == expected);
        }
    }
}

TEST_CASE("ortho phi reconstructs pure distinguished data on empty input") {
    RootRegions r56(validate(4, {1, 2, 5, 6}, true));
    IdElement w = validate(4, {3, 4, 7, 8}, true);
    Monomial back = ortho_phi(r56, w, Monomial(Region::ON));
    OrthoPiResult pi = ortho_pi(r56, back);
    CHECK(pi.w == w);
    CHECK(pi.sprime.empty());
}

TEST_CASE("ortho phi and ortho pi are mutually inverse") {
    test::Rng rng(314159);
    for (int trial = 0; trial < 1500; ++trial) {
        int d = test::pick(rng, 2, 5);
        RootRegions rr(test::random_id_element(rng, d));
        if (rr.on_roots().empty()) continue;
        Monomial s = test::random_monomial(rng, rr.on_roots(), 8, Region::ON, false);
        OrthoPiResult pi = ortho_pi(rr, s);
        CHECK(ortho_phi(rr, pi.w, pi.sprime) == s);

        IdElement w = test::random_id_above(rng, rr.base());
        Monomial t = test::random_monomial(rng, rr.on_roots(), 6, Region::ON);
        if (!o_dominates(rr, w, t)) continue;
        if (w == rr.base()) continue; // phi output would be empty, pi undefined
        Monomial u = ortho_phi(rr, w, t);
        OrthoPiResult back = ortho_pi(rr, u);
        CHECK(back.w == w);
        CHECK(back.sprime == t);
    }
}

TEST_CASE("the delta twist is what makes the inverse work") {
    // with the twist suppressed, some round trip must fail
    test::Rng rng(161803);
    bool saw_failure = false;
    testing::disable_delta_twist = true;
    for (int trial = 0; trial < 400 && !saw_failure; ++trial) {
        int d = test::pick(rng, 2, 5);
        RootRegions rr(test::random_id_element(rng, d));
        if (rr.on_roots().empty()) continue;
        Monomial s = test::random_monomial(rng, rr.on_roots(), 8, Region::ON, false);
        OrthoPiResult pi = ortho_pi(rr, s);
        try {
            if (ortho_phi(rr, pi.w, pi.sprime) != s) saw_failure = true;
        } catch (const validation_error&) {
            saw_failure = true;
        }
    }
    testing::disable_delta_twist = false;
    CHECK(saw_failure);
}

TEST_CASE("phi layers: structure of the stars") {
    test::Rng rng(202020);
    for (int trial = 0; trial < 400; ++trial) {
        int d = test::pick(rng, 2, 5);
        RootRegions rr(test::random_id_element(rng, d));
        if (rr.on_roots().empty()) continue;
        IdElement w = test::random_id_above(rng, rr.base());
        if (w == rr.base()) continue;
        Monomial t = test::random_monomial(rng, rr.on_roots(), 6, Region::ON);
        if (!o_dominates(rr, w, t)) continue;
        OrthoPhiResult res = ortho_phi_detailed(rr, w, t);
        DistinguishedSet sw = to_distinguished(rr, w);
        Monomial swm(Region::N);
        for (Root a : sw.roots()) swm.add(a);
        DepthTable depths = depth_table(swm);
        for (const OrthoPhiLayer& layer : res.layers) {
            // symmetric with zero or two diagonal points, matching S_{w,j,j+1}
            CHECK(layer.phi.total.hash_image(rr) == layer.phi.total);
            int star_diag = 0;
            for (Root a : layer.phi.total.support())
                if (rr.on_diagonal(a)) ++star_diag;
            int slice_diag = 0;
            for (Root a : sw.roots()) {
                int dep = depths.depth_of(a);
                if ((dep == layer.j || dep == layer.j + 1) && rr.on_diagonal(a)) ++slice_diag;
            }
            CHECK(star_diag == slice_diag);
            CHECK((star_diag == 0 || star_diag == 2));

            // depth split of the orthogonal piece stars
            if (layer.contribution.empty()) continue;
            DepthTable contrib_depths = depth_table(layer.contribution);
            CHECK(contrib_depths.max_depth() <= 2);
            CHECK(odepth_table(rr, layer.contribution).max_odepth() <= 2);
            Monomial depth1(Region::ON), depth2(Region::ON);
            for (const auto& [root, mult] : layer.contribution.items())
                (contrib_depths.depth_of(root) == 1 ? depth1 : depth2).add(root, mult);
            Monomial star1(Region::ON), star2(Region::ON);
            for (Root beta : sw.roots()) {
                if (!rr.in_up(beta)) continue;
                int dep = depths.depth_of(beta);
                if (dep == layer.j)
                    star1 = star1.united(ortho_piece_star(rr, layer, beta, dep));
                else if (dep == layer.j + 1)
                    star2 = star2.united(ortho_piece_star(rr, layer, beta, dep));
            }
            CHECK(star1 == depth1);
            CHECK(star2 == depth2);
            if (layer.delta) {
                // the twist is the last depth-1 element in the ascending arrangement
                CHECK(depth1.items().back().first == *layer.delta);
            }
        }
    }
}

TEST_CASE("row and column avoidance is preserved, d <= 5") {
    test::Rng rng(271828);
    int checked = 0;
    for (int trial = 0; trial < 3000 && checked < 400; ++trial) {
        int d = test::pick(rng, 2, 5);
        RootRegions rr(test::random_id_element(rng, d));
        if (rr.on_roots().empty()) continue;
        // pick f with f not an entry of v
        std::vector<int> candidates;
        for (int f = 1; f <= rr.two_d(); ++f)
            if (!rr.base().contains(f)) candidates.push_back(f);
        int f = candidates[test::pick(rng, 0, static_cast<int>(candidates.size()) - 1)];
        std::vector<Root> pool;
        for (Root a : rr.on_roots())
            if (a.r != f && a.c != rr.star(f)) pool.push_back(a);
        if (pool.empty()) continue;

        Monomial s = test::random_monomial(rng, pool, 6, Region::ON, false);
        OrthoPiResult pi = ortho_pi(rr, s);
        CHECK_FALSE(pi.w.contains(f));
        CHECK(satisfies_ddag(pi.sprime, rr, f));

        IdElement w = pi.w;
        Monomial t = pi.sprime;
        if (w == rr.base()) continue;
        Monomial back = ortho_phi(rr, w, t);
        CHECK(satisfies_ddag(back, rr, f));
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_SUITE_END();
