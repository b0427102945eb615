#include "chev/shacheck.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace chev;
using namespace chev::shacheck;
using rootsys::SystemType;

namespace {

const GroupTable& a1(int p) {
    static std::map<int, GroupTable> cache;
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, generate_group(SystemType::A1, p, Realization::A1Std)).first;
    return it->second;
}

// conjugacy test by scanning every conjugator
bool conjugate(const GroupTable& G, int x, int y) {
    for (int g = 0; g < G.size(); ++g)
        if (G.conj(g, x) == y) return true;
    return false;
}

std::vector<int> compose(const EndoMap& f, const EndoMap& g) {  // f after g, on the generators
    std::vector<int> out;
    for (int x : g.images) out.push_back(f.table[x]);
    return out;
}

}  // namespace

TEST_CASE("group orders") {
    CHECK(a1(3).size() == 12);
    CHECK(a1(5).size() == 60);
    CHECK(generate_group(SystemType::A2, 2, Realization::Pgl3).size() == 168);
    CHECK_THROWS_AS(generate_group(SystemType::A1, 5, Realization::A1Std, 20), CapExceeded);
}

TEST_CASE("closure does not depend on generator order") {
    finite::FpChevalley C(SystemType::A1, Realization::A1Std, 5);
    std::vector<finite::FpMat> gens;
    for (auto& g : rootsys::all_roots(SystemType::A1))
        for (int c = 1; c < 5; ++c) gens.push_back(C.x(g, c));
    std::mt19937 rng(5);
    std::shuffle(gens.begin(), gens.end(), rng);
    auto G = generate_group(SystemType::A1, 5, Realization::A1Std, 10000, gens);
    auto a = G.elements, b = a1(5).elements;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("conjugacy classes") {
    for (int p : {3, 5}) {
        auto& G = a1(p);
        auto C = conjugacy_classes(G);
        CHECK(C.members[0] == std::vector<int>{0});
        size_t total = 0;
        for (auto& m : C.members) total += m.size();
        CHECK(total == size_t(G.size()));
        // oracle: direct conjugation scan from each class representative
        for (auto& m : C.members) {
            std::set<int> orbit;
            for (int g = 0; g < G.size(); ++g) orbit.insert(G.conj(g, m[0]));
            CHECK(orbit == std::set<int>(m.begin(), m.end()));
        }
        if (p == 3) CHECK(C.members.size() == 4);
    }
}

TEST_CASE("extending generator images") {
    auto& G = a1(3);
    std::vector<int> gens;
    for (auto& [_, g] : G.generators) gens.push_back(g);
    auto id = extend_homomorphism(G, gens);
    REQUIRE(id.has_value());
    for (int x = 0; x < G.size(); ++x) CHECK(id->table[x] == x);

    int h = 5;
    std::vector<int> conj;
    for (int g : gens) conj.push_back(G.conj(h, g));
    auto inner = extend_homomorphism(G, conj);
    REQUIRE(inner.has_value());
    for (int x = 0; x < G.size(); ++x) CHECK(inner->table[x] == G.conj(h, x));

    // x(a,1) has order 3; send it to an element of order 2
    int order2 = -1;
    for (int x = 1; x < G.size() && order2 < 0; ++x)
        if (G.mul(x, x) == 0) order2 = x;
    REQUIRE(order2 > 0);
    auto bad = gens;
    bad[0] = order2;
    CHECK(!extend_homomorphism(G, bad).has_value());

    // composing extended maps = extending composed images
    auto twice = extend_homomorphism(G, compose(*inner, *inner));
    REQUIRE(twice.has_value());
    for (int x = 0; x < G.size(); ++x) CHECK(twice->table[x] == inner->table[inner->table[x]]);
}

TEST_CASE("class-preserving endomorphisms of A1") {
    for (int p : {3, 5}) {
        auto& G = a1(p);
        auto C = conjugacy_classes(G);
        auto endos = class_preserving_endos(G, C);
        CHECK(endos.size() >= size_t(inner_count(G)));
        std::set<std::vector<int>> tables;
        for (auto& e : endos) {
            tables.insert(e.table);
            CHECK(is_inner(G, e).has_value());
            for (int x = 0; x < G.size(); ++x) REQUIRE(conjugate(G, x, e.table[x]));
        }
        CHECK(tables.size() == size_t(inner_count(G)));
        // closed under composition
        std::set<std::vector<int>> images;
        for (auto& e : endos) images.insert(e.images);
        for (auto& f : endos)
            for (auto& g : endos) CHECK(images.count(compose(f, g)) == 1);
    }
}

TEST_CASE("inner maps") {
    auto& G = a1(3);
    std::vector<int> gens;
    for (auto& [_, g] : G.generators) gens.push_back(g);
    auto id = extend_homomorphism(G, gens);
    auto c = is_inner(G, *id);
    REQUIRE(c.has_value());
    CHECK(*c == 0);
    finite::FpChevalley F(SystemType::A1, Realization::A1Std, 3);
    int w = G.id_of(G.field().canon(F.w(rootsys::parse_root(SystemType::A1, "a"))));
    REQUIRE(w >= 0);
    std::vector<int> conj;
    for (int g : gens) conj.push_back(G.conj(w, g));
    CHECK(is_inner(G, *extend_homomorphism(G, conj)).has_value());
}

TEST_CASE("Sha reports") {
    for (int p : {3, 5}) {
        auto r = sha_report(SystemType::A1, p);
        CHECK(r.pass);
        CHECK(r.cp_endo_count == r.inner_count);
        CHECK(!r.hypothesis_violated);
    }
    auto r2 = sha_report(SystemType::A1, 2);
    CHECK(r2.hypothesis_violated);
    CHECK(r2.verdict().find("HYPOTHESIS-VIOLATED") != std::string::npos);
    CHECK_THROWS_AS(sha_report(SystemType::A2, 3), SlowRequired);
}
