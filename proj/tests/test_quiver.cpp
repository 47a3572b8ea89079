#include <catch2/catch_amalgamated.hpp>

#include "qdim/quiver.hpp"

using namespace qdim;

namespace {

Quiver chain(int m) {
    Quiver q;
    for (int i = 0; i < m; ++i) q.vlabel.push_back(std::to_string(i));
    for (int i = 0; i + 1 < m; ++i) q.arrows.push_back({"a" + std::to_string(i), i, i + 1});
    return q;
}

Quiver two_cycle() {  // x: 0 -> 1, y: 1 -> 0
    Quiver q;
    q.vlabel = {"0", "1"};
    q.arrows = {{"x", 0, 1}, {"y", 1, 0}};
    return q;
}

}  // namespace

TEST_CASE("path enumeration") {
    // 0 -> 1 -> 2: three trivial paths, two arrows, one length-2 path
    auto q = chain(3);
    auto ps = enumerate_paths(q, 5);
    CHECK(ps.size() == 6);

    Quiver pt;
    pt.vlabel = {"v"};
    CHECK(enumerate_paths(pt, 4).size() == 1);

    // 0 <-> 1 with cap 3: e0, e1, x, y, xy, yx, xyx, yxy
    auto ps2 = enumerate_paths(two_cycle(), 3);
    CHECK(ps2.size() == 8);
    int len3 = 0;
    for (const auto& p : ps2) len3 += (p.length() == 3);
    CHECK(len3 == 2);
}

TEST_CASE("quiver length") {
    CHECK(quiver_length(chain(4)) == 3);
    Quiver pt;
    pt.vlabel = {"v"};
    CHECK(quiver_length(pt) == 0);
    CHECK_THROWS(quiver_length(two_cycle()));

    // x: 0->1, y: 1->2, z: 0->2 has a path of length 2 regardless of relations
    Quiver q;
    q.vlabel = {"0", "1", "2"};
    q.arrows = {{"x", 0, 1}, {"y", 1, 2}, {"z", 0, 2}};
    CHECK(quiver_length(q) == 2);
}

TEST_CASE("reflection") {
    auto q = chain(3);
    auto r = reflect(q, 2, ReflectDir::Sink);
    // 0 -> 1 <- 2
    CHECK(r.arrows[1].src == 2);
    CHECK(r.arrows[1].dst == 1);
    auto rr = reflect(r, 2, ReflectDir::Source);
    CHECK(rr.arrows[1].src == 1);
    CHECK(rr.arrows[1].dst == 2);

    CHECK_THROWS(reflect(q, 1, ReflectDir::Source));

    // star with all arrows out of 0; reflect at 0 turns them all around
    Quiver s;
    s.vlabel = {"0", "1", "2"};
    s.arrows = {{"a", 0, 1}, {"b", 0, 2}};
    auto sr = reflect(s, 0, ReflectDir::Source);
    for (const auto& a : sr.arrows) CHECK(a.dst == 0);
}

TEST_CASE("Dynkin classification") {
    auto a4 = classify_underlying(chain(4));
    CHECK(a4.type == DynkinType::A);
    CHECK(a4.n == 4);
    CHECK(a4.coxeter == 5);

    Quiver star;  // D4: three legs of length one
    star.vlabel = {"c", "1", "2", "3"};
    star.arrows = {{"a", 0, 1}, {"b", 0, 2}, {"d", 0, 3}};
    auto d4 = classify_underlying(star);
    CHECK(d4.type == DynkinType::D);
    CHECK(d4.n == 4);
    CHECK(d4.coxeter == 6);

    Quiver kr;
    kr.vlabel = {"0", "1"};
    kr.arrows = {{"u", 0, 1}, {"v", 0, 1}};
    CHECK(classify_underlying(kr).type == DynkinType::NonDynkin);

    // classification is orientation-independent
    auto refl = classify_underlying(reflect(chain(4), 3, ReflectDir::Sink));
    CHECK(refl.type == DynkinType::A);
    CHECK(refl.n == 4);

    // E6: chain of five with a branch at the middle
    Quiver e6 = chain(5);
    e6.vlabel.push_back("b");
    e6.arrows.push_back({"ab", 2, 5});
    auto r6 = classify_underlying(e6);
    CHECK(r6.type == DynkinType::E6);
    CHECK(r6.coxeter == 12);

    // D5
    Quiver d5 = chain(4);
    d5.vlabel.push_back("b");
    d5.arrows.push_back({"ab", 2, 4});
    auto r5 = classify_underlying(d5);
    CHECK(r5.type == DynkinType::D);
    CHECK(r5.n == 5);
    CHECK(r5.coxeter == 8);

    // cycle graph: not Dynkin
    Quiver cyc;
    cyc.vlabel = {"0", "1", "2"};
    cyc.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 2}};
    CHECK(classify_underlying(cyc).type == DynkinType::NonDynkin);

    // disconnected
    Quiver two;
    two.vlabel = {"0", "1"};
    CHECK(!classify_underlying(two).connected);
}

TEST_CASE("order validation") {
    Quiver q = chain(3);
    q.order = std::vector<int>{0, 1, 2};
    CHECK_NOTHROW(q.validate());
    q.order = std::vector<int>{2, 1, 0};
    CHECK_THROWS(q.validate());
}
