#include "support.hpp"

#include <doctest.h>

using namespace chev;
using namespace chev::chevgroup;
using exactring::RingSpec;
using rootsys::SystemType;
using testing_support::el;
using testing_support::word;

namespace {
const auto A1 = SystemType::A1, A2 = SystemType::A2, B2 = SystemType::B2, G2 = SystemType::G2;
const auto Ad = Realization::Adjoint, Pg = Realization::Pgl3, Std = Realization::A1Std;
}  // namespace

TEST_CASE("basis dimensions and structure constants") {
    CHECK(build_basis(A1).dim() == 3);
    CHECK(build_basis(G2).dim() == 14);
    auto& b2 = build_basis(B2);
    auto a = rootsys::parse_root(B2, "a"), b = rootsys::parse_root(B2, "b"), apb = rootsys::parse_root(B2, "a+b");
    CHECK(std::abs(b2.structure_constant(a, b)) == 1);
    CHECK(std::abs(b2.structure_constant(apb, b)) == 2);
    for (auto t : rootsys::all_types()) CHECK(build_basis(t).jacobi_holds());
}

TEST_CASE("root elements") {
    auto T = RingSpec::poly({"t"});
    CHECK(word(A1, Std, T, "x(a,t)") == word(A1, Std, T, "mat(1,t^2,2*t; 0,1,0; 0,t,1)"));
    for (auto t : rootsys::all_types())
        for (auto r : testing_support::realizations(t))
            for (auto& g : rootsys::all_roots(t))
                CHECK(root_element(t, r, g, exactring::RingElement::zero(T)).is_identity());
    auto Q = RingSpec::poly({});
    auto X = word(G2, Ad, Q, "x(a,1)");
    auto N = X - Matrix::identity(Q, 14, Ad);
    CHECK(N.pow(3).is_zero());
    CHECK(!N.pow(2).is_zero());
}

TEST_CASE("additivity for every root") {
    auto S = RingSpec::poly({"t", "s"});
    for (auto t : rootsys::all_types())
        for (auto r : testing_support::realizations(t))
            for (auto& g : rootsys::all_roots(t)) {
                auto G = g.to_string();
                CHECK(word(t, r, S, "x(" + G + ",t) x(" + G + ",s)") == word(t, r, S, "x(" + G + ",t+s)"));
            }
}

TEST_CASE("torus weights") {
    auto F = RingSpec::fraction({"u", "t"});
    auto u = el(F, "u"), tt = el(F, "t");
    for (auto t : rootsys::all_types())
        for (auto r : testing_support::realizations(t))
            for (auto& g : rootsys::all_roots(t))
                for (auto& d : rootsys::all_roots(t)) {
                    auto h = torus_element(t, r, g, u);
                    auto lhs = h * root_element(t, r, d, tt) * h.inverse();
                    int k = rootsys::cartan_integer(d, g);
                    auto rhs = root_element(t, r, d, (k >= 0 ? u.pow(k) : u.inverse().pow(-k)) * tt);
                    CAPTURE(g.to_string());
                    CAPTURE(d.to_string());
                    bool same = r == Pg ? pgl3_equal(lhs, rhs) : lhs == rhs;
                    CHECK(same);
                }
    CHECK(torus_element(A1, Std, rootsys::parse_root(A1, "a"), exactring::RingElement::one(F)).is_identity());
    auto Q = RingSpec::poly({});
    CHECK(word(A1, Ad, Q, "h(a,-1)").is_identity());
}

TEST_CASE("Weyl elements act by reflection up to sign") {
    auto T = RingSpec::poly({"t"});
    auto tt = el(T, "t");
    for (auto t : rootsys::all_types())
        for (auto r : testing_support::realizations(t))
            for (auto& g : rootsys::all_roots(t))
                for (auto& d : rootsys::all_roots(t)) {
                    auto w = weyl_element(t, r, g, exactring::RingElement::one(T));
                    auto lhs = w * root_element(t, r, d, tt) * w.inverse();
                    auto s = rootsys::reflect(d, g);
                    bool plus = lhs == root_element(t, r, s, tt);
                    bool minus = lhs == root_element(t, r, s, tt * -1);
                    if (r == Pg) {
                        plus = pgl3_equal(lhs, root_element(t, r, s, tt));
                        minus = pgl3_equal(lhs, root_element(t, r, s, tt * -1));
                    }
                    CAPTURE(g.to_string());
                    CAPTURE(d.to_string());
                    CHECK(plus != minus);
                }
}

TEST_CASE("Weyl element examples") {
    auto Q = RingSpec::poly({});
    CHECK(pgl3_equal(word(A2, Pg, Q, "w(a1+a2,1)"), word(A2, Pg, Q, "mat(0,0,1; 0,1,0; -1,0,0)")));
    auto F = RingSpec::fraction({"u"});
    for (auto a : {"a1", "a2"})
        CHECK(pgl3_equal(word(A2, Pg, F, std::string("w(") + a + ",u)^2"),
                         word(A2, Pg, F, std::string("h(") + a + ",-1)")));
    CHECK(word(A2, Pg, Q, "w(a1+a2,1) w(a1+a2,1)^-1").is_identity());
}

TEST_CASE("words") {
    auto Q = RingSpec::poly({});
    CHECK(word(A1, Std, Q, "1").is_identity());
    CHECK(word(A1, Std, Q, "(x(a,-1) x(-a,1) x(a,-1))^2").is_identity());
    auto Z7 = RingSpec::modular(7);
    // h~_{a2}(3) = w~(3) w~(1)^-1 with w~(u) = x(u) x(-u^-1) x(u); 3^-1 = 5
    std::string wt3 = "x(a2,3) x(-a2,-5) x(a2,3)", wt1 = "x(a2,1) x(-a2,-1) x(a2,1)";
    auto M = word(A2, Pg, Z7, "x(a1,1) x(-a1,2) " + wt3 + " (" + wt1 + ")^-1");
    CHECK(pgl3_equal(M, word(A2, Pg, Z7, "mat(3,3,0; 2,3,0; 0,0,5)")));
    CHECK(pgl3_equal(word(A2, Pg, Z7, wt3 + " (" + wt1 + ")^-1"), word(A2, Pg, Z7, "h(a2,3)")));
    CHECK(pgl3_equal(M, M.scaled(exactring::RingElement::residue(Z7, 2))));
    CHECK(!pgl3_equal(word(A2, Pg, Z7, "1"), word(A2, Pg, Z7, "x(a1,1)")));

    WordContext ctx{A2, {{"X0", "x(a1,1) x(a2,1)"}}};
    CHECK(evaluate_word(ctx, Pg, Q, "[x(a1+a2,1), X0]").is_identity());
    auto w = parse_word(ctx, "[x(a1,1), x(a2,2)]^-1");
    CHECK(parse_word(ctx, word_to_string(w)) != nullptr);
    CHECK(word_to_string(parse_word(ctx, word_to_string(w))) == word_to_string(w));
    CHECK_THROWS(parse_word(ctx, "x(a3,1)"));
    CHECK_THROWS(parse_word(ctx, "x(a1,1"));
}

TEST_CASE("commutator relation examples") {
    auto A2g = rootsys::parse_root(A2, "a1"), A2d = rootsys::parse_root(A2, "a2");
    CHECK(commutator_relation(A2, A2g, A2d).text() == "[x(a1, t), x(a2, u)] = x(a1+a2, t*u)");
    CHECK(commutator_relation(G2, rootsys::parse_root(G2, "a+2b"), rootsys::parse_root(G2, "b")).text() ==
          "[x(a+2b, t), x(b, u)] = x(a+3b, -3*t*u)");
    CHECK(commutator_relation(B2, rootsys::parse_root(B2, "a"), rootsys::parse_root(B2, "a+2b")).factors.empty());
}

TEST_CASE("commutator relations agree with matrix commutators") {
    auto S = RingSpec::poly({"t", "u"});
    for (auto t : rootsys::all_types())
        for (auto& g : rootsys::all_roots(t))
            for (auto& d : rootsys::all_roots(t)) {
                if (g == d || g == -d) continue;
                auto rel = commutator_relation(t, g, d);
                auto lhs = word(t, Ad, S, "[x(" + g.to_string() + ",t), x(" + d.to_string() + ",u)]");
                auto rhs = Matrix::identity(S, build_basis(t).dim(), Ad);
                for (auto& f : rel.factors)
                    rhs = rhs * root_element(t, Ad, f.root,
                                             el(S, "t").pow(f.i) * el(S, "u").pow(f.j) *
                                                 exactring::RingElement::constant(S, f.coeff));
                CAPTURE(rel.text());
                CHECK(lhs == rhs);
            }
}

TEST_CASE("trace constant term equals the dimension for long roots") {
    auto Q = RingSpec::poly({});
    for (auto t : rootsys::all_types())
        for (auto& g : rootsys::positive_roots(t)) {
            if (g.length != rootsys::Length::Long) continue;
            auto tr = trace_poly(t, g);
            auto c = exactring::substitute(tr, {{"t", exactring::RingElement::zero(Q)},
                                                {"s", exactring::RingElement::zero(Q)}}, Q);
            CHECK(c == exactring::RingElement::constant(Q, build_basis(t).dim()));
        }
    auto S = RingSpec::poly({"t", "s"});
    CHECK(trace_poly(A1, rootsys::parse_root(A1, "a")) == el(S, "s^2*t^2+4*s*t+3"));
}

TEST_CASE("random words over F_p have unit determinant") {
    std::mt19937 rng(2024);
    for (int p : {5, 7, 11}) {
        auto Zp = RingSpec::modular(p);
        for (auto t : rootsys::all_types())
            for (auto r : testing_support::realizations(t))
                for (int i = 0; i < 10; ++i) {
                    auto w = testing_support::random_word(t, p, 8, rng);
                    CAPTURE(w);
                    CHECK(word(t, r, Zp, w).det().is_unit());
                }
    }
}

TEST_CASE("realizations") {
    CHECK((realization_from_name("pgl3") == Pg));
    CHECK(std::string(realization_name(Std)) == "a1std");
    CHECK_THROWS(check_realization(G2, Pg));
    CHECK(realization_dim(A2, Pg) == 3);
    CHECK(realization_dim(A2, Ad) == 8);
}
