#include <doctest.h>

#include "oracles/naive.hpp"

#include <plabel/choosability.hpp>
#include <plabel/constructive.hpp>
#include <plabel/errors.hpp>
#include <plabel/generators.hpp>
#include <plabel/harness.hpp>
#include <plabel/solver.hpp>

using namespace plabel;

namespace {

void check_output(const Graph & g, int p, const Construction & built, const ListAssignment & lists)
{
    CHECK(is_valid(g, p, built.labelling, true));
    CHECK(respects_lists(built.labelling, lists));
}

} // namespace

TEST_CASE("path greedy")
{
    const Graph p3 = make_path(3);
    const auto full = ListAssignment::full(p3, 0, 4);
    check_output(p3, 2, label_path_greedy(p3, 2, full), full);

    Rng rng(1);
    for (int t = 0; t < 300; ++t) {
        const Graph p2 = make_path(2);
        const auto lists = random_assignment(p2, 3, 6, rng);
        check_output(p2, 1, label_path_greedy(p2, 1, lists), lists);
    }
    const Graph p10 = make_path(10);
    for (int t = 0; t < 1000; ++t) {
        const auto lists = random_assignment(p10, 7, 13, rng);
        check_output(p10, 3, label_path_greedy(p10, 3, lists), lists);
    }
    SUBCASE("vertices are not relabelled in index order when the path is scrambled")
    {
        const Graph scrambled(4, {{2, 0}, {0, 3}, {3, 1}});
        const auto lists = random_assignment(scrambled, 5, 9, rng);
        check_output(scrambled, 2, label_path_greedy(scrambled, 2, lists), lists);
    }
    CHECK_THROWS_AS(label_path_greedy(make_star(3), 1, ListAssignment::full(make_star(3), 0, 5)), std::invalid_argument);
    CHECK_THROWS_AS(label_path_greedy(p3, 2, ListAssignment::full(p3, 0, 3)), std::invalid_argument);
    CHECK_THROWS_AS(label_path_greedy(p3, 0, ListAssignment::full(p3, 0, 3)), std::invalid_argument);
}

TEST_CASE("tree dfs")
{
    Rng rng(2);
    const Graph star = make_star(3);
    for (int t = 0; t < 300; ++t) {
        const auto lists = random_assignment(star, 6, 10, rng);
        const auto built = label_tree_dfs(star, 2, lists);
        check_output(star, 2, built, lists);
        CHECK(solve_list(star, 2, lists).labelled());
    }
    const Graph path = make_path(6);
    for (int t = 0; t < 300; ++t) {
        const auto lists = random_assignment(path, 5, 9, rng);
        check_output(path, 2, label_tree_dfs(path, 2, lists), lists);
        check_output(path, 2, label_path_greedy(path, 2, lists), lists);
    }
    for (int t = 0; t < 300; ++t) {
        const Graph tree = make_random_tree(2 + static_cast<int>(draw_below(rng, 49)), rng());
        const int p = 1 + static_cast<int>(draw_below(rng, 4));
        const int k = std::max(tree.max_degree(), 2) + 2 * p - 1;
        const auto lists = random_assignment(tree, k, k + 2 * p, rng);
        const auto built = label_tree_dfs(tree, p, lists);
        check_output(tree, p, built, lists);
        for (const auto & r : built.audit.reductions)
            CHECK(r.size >= r.bound);
    }
    CHECK_THROWS_AS(label_tree_dfs(make_cycle(4), 1, ListAssignment::full(make_cycle(4), 0, 5)), std::invalid_argument);
}

TEST_CASE("K_2 needs 2p+1 colors, not Delta+2p-1")
{
    // the single edge is a tree with Delta = 1, and 2-lists do not suffice for p = 1
    const Graph p2 = make_path(2);
    CHECK(find_bad_assignment(p2, 1, {2, 3}).kind == CertificateKind::lower_witness);
    CHECK_THROWS_AS(label_tree_dfs(p2, 1, ListAssignment::full(p2, 0, 1)), std::invalid_argument);
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const auto lists = random_assignment(p2, 3, 7, rng);
        check_output(p2, 1, label_tree_dfs(p2, 1, lists), lists);
    }
}

TEST_CASE("star list algorithm")
{
    SUBCASE("hand trace on full lists")
    {
        const Graph star = make_star(3);
        const auto lists = ListAssignment::full(star, 0, 5);
        const auto built = label_star_list(star, 2, lists);
        check_output(star, 2, built, lists);
        const auto & c = built.labelling;
        CHECK(c.at(Element::vertex(0)) == 0);
        CHECK(c.at(Element::edge(0, 1)) == 4);
        CHECK(c.at(Element::edge(0, 2)) == 2);
        CHECK(c.at(Element::edge(0, 3)) == 3);
        CHECK(built.audit.center_attempts == 1);
    }
    Rng rng(4);
    for (int n = 3; n <= 6; ++n)
        for (int p = 2; p <= 3; ++p) {
            const Graph star = make_star(n);
            for (int t = 0; t < 200; ++t) {
                const auto lists = random_assignment(star, n + 2 * p - 1, n + 4 * p, rng);
                check_output(star, p, label_star_list(star, p, lists), lists);
            }
        }
    SUBCASE("the bound is one above the smallest list size that always works for p = 2")
    {
        const Graph star = make_star(4);
        CHECK(find_bad_assignment(star, 2, {5, 10}).kind == CertificateKind::lower_witness);
        for (int t = 0; t < 200; ++t) {
            const auto lists = random_assignment(star, 7, 12, rng);
            check_output(star, 2, label_star_list(star, 2, lists), lists);
        }
    }
    SUBCASE("center may be any vertex")
    {
        const Graph star(4, {{0, 2}, {1, 2}, {2, 3}});
        const auto lists = random_assignment(star, 6, 10, rng);
        check_output(star, 2, label_star_list(star, 2, lists), lists);
    }
    CHECK_THROWS_AS(label_star_list(make_star(2), 2, ListAssignment::full(make_star(2), 0, 6)), std::invalid_argument);
    CHECK_THROWS_AS(label_star_list(make_star(3), 1, ListAssignment::full(make_star(3), 0, 6)), std::invalid_argument);
    CHECK_THROWS_AS(label_star_list(make_star(3), 2, ListAssignment::full(make_star(3), 0, 4)), std::invalid_argument);
}

TEST_CASE("star span construction")
{
    const auto c = label_star_span(3, 2);
    CHECK(c.at(Element::vertex(0)) == 5);
    CHECK(c.at(Element::edge(0, 1)) == 1);
    CHECK(c.at(Element::edge(0, 2)) == 2);
    CHECK(c.at(Element::edge(0, 3)) == 3);
    CHECK(c.at(Element::vertex(1)) == 3);
    CHECK(c.at(Element::vertex(2)) == 4);
    CHECK(c.at(Element::vertex(3)) == 1);
    CHECK(c.span() == 4);

    CHECK(label_star_span(1, 1).span() + 1 == 3);
    for (int n = 1; n <= 6; ++n)
        for (int p = 1; p <= 5; ++p) {
            const auto s = label_star_span(n, p);
            CHECK(is_valid(make_star(n), p, s, true));
            CHECK(s.span() == n + p - (p < n ? 1 : 0));
        }
}

TEST_CASE("configurations")
{
    using Kind = ConfigurationMatch::Kind;
    const auto leaf = find_configuration(make_path(4));
    CHECK(leaf.kind == Kind::leaf);
    CHECK(leaf.roles == std::vector<Vertex>{0, 1});

    const auto c1 = find_configuration(make_cycle(4));
    CHECK(c1.kind == Kind::c1);
    CHECK(c1.roles == std::vector<Vertex>{0, 1});

    // hub 0, path 1..4: vertex 1 has degree 2, neighbour 2 has degree 3
    const auto c2 = find_configuration(make_fan(4));
    CHECK(c2.kind == Kind::c2);
    CHECK(c2.roles == std::vector<Vertex>{1, 2, 0});

    SUBCASE("C3 on two ears glued at a degree-4 vertex")
    {
        // x = 0 with ears 0-1-2 and 0-3-4, joined through 2-5-4 and 0-5
        const Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}, {2, 5}, {4, 5}, {0, 5}});
        const auto m = find_configuration(g);
        CHECK(m.kind != Kind::not_found);
    }

    CHECK(find_configuration(Graph(3, {{0, 1}})).kind == Kind::leaf);
    CHECK(find_configuration(Graph(2)).kind == Kind::not_found);
    CHECK(find_configuration(oracle::connected_graphs(4).back()).kind == Kind::not_found);
    CHECK_THROWS_AS(find_configuration(Graph()), std::invalid_argument);
}

TEST_CASE("configurations satisfy their invariants on random outerplanar graphs")
{
    using Kind = ConfigurationMatch::Kind;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Graph g = make_random_maximal_outerplanar(5 + static_cast<int>(seed % 12), seed);
        const auto m = find_configuration(g);
        REQUIRE(m.kind != Kind::not_found);
        REQUIRE(m.kind != Kind::leaf);
        const auto & r = m.roles;
        switch (m.kind) {
        case Kind::c1:
            CHECK(g.degree(r[0]) == 2);
            CHECK(g.degree(r[1]) == 2);
            CHECK(g.adjacent(r[0], r[1]));
            break;
        case Kind::c2:
            CHECK(g.degree(r[0]) == 2);
            CHECK(g.degree(r[1]) == 3);
            CHECK(g.adjacent(r[0], r[1]));
            CHECK(g.adjacent(r[0], r[2]));
            CHECK(g.adjacent(r[1], r[2]));
            break;
        case Kind::c3:
            CHECK(g.degree(r[0]) == 4);
            CHECK(g.degree(r[1]) == 2);
            CHECK(g.degree(r[3]) == 2);
            CHECK(r[1] != r[3]);
            CHECK(g.adjacent(r[1], r[2]));
            CHECK(g.adjacent(r[2], r[0]));
            CHECK(g.adjacent(r[0], r[1]));
            CHECK(g.adjacent(r[3], r[4]));
            CHECK(g.adjacent(r[4], r[0]));
            CHECK(g.adjacent(r[0], r[3]));
            break;
        default:
            break;
        }
    }
}

TEST_CASE("outerplanar labeller")
{
    Rng rng(6);
    SUBCASE("full lists reach span Delta+2")
    {
        int checked = 0;
        for (std::uint64_t seed = 0; checked < 20; ++seed) {
            const Graph g = make_random_maximal_outerplanar(12, seed);
            if (g.max_degree() < 5)
                continue;
            ++checked;
            const int top = g.max_degree() + 2;
            const auto lists = ListAssignment::full(g, 0, top);
            const auto built = label_outerplanar_list(g, 2, lists);
            check_output(g, 2, built, lists);
            CHECK(built.labelling.max_color() <= top);
            CHECK(built.audit.full_resolves == 0);
        }
    }
    SUBCASE("trees reduce by leaves alone")
    {
        const Graph star = make_star(6);
        const auto lists = random_assignment(star, 9, 14, rng);
        const auto built = label_outerplanar_list(star, 2, lists);
        check_output(star, 2, built, lists);
        for (const auto & step : built.audit.steps)
            CHECK(step.rfind("Leaf", 0) == 0);
    }
    SUBCASE("random assignments agree with the exact solver")
    {
        for (int t = 0; t < 300; ++t) {
            Graph g = make_random_maximal_outerplanar(8, rng());
            if (g.max_degree() < 5)
                g = make_fan(7);
            const int k = g.max_degree() + 3;
            const auto lists = random_assignment(g, k, k + 4, rng);
            const auto built = label_outerplanar_list(g, 2, lists);
            check_output(g, 2, built, lists);
            CHECK(built.audit.full_resolves == 0);
            for (const auto & r : built.audit.reductions)
                CHECK(r.size >= r.bound);
        }
    }
    SUBCASE("refusals")
    {
        const Graph small = make_cycle(5);
        CHECK_THROWS_AS(label_outerplanar_list(small, 2, ListAssignment::full(small, 0, 9)), std::invalid_argument);
        const Graph k4 = oracle::connected_graphs(4).back();
        const Graph big(8, [] {
            std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
            for (int v = 4; v < 8; ++v)
                edges.push_back({0, v});
            return edges;
        }());
        CHECK(k4.size() == 6);
        CHECK_THROWS_AS(label_outerplanar_list(big, 1, ListAssignment::full(big, 0, 12)), ConfigurationNotFound);
    }
}
