#include "support.hpp"

#include <doctest.h>

using namespace chev::exactring;
using testing_support::el;
using testing_support::mono;

namespace {

// small random element: up to three terms in the first two variables
RingElement random_el(const SpecPtr& s, std::mt19937& rng) {
    if (s->kind() == RingKind::Modular) return RingElement::residue(s, long(rng() % s->modulus()));
    auto small = [&] {
        std::vector<Poly::Term> terms;
        int n = int(rng() % 4);
        for (int k = 0; k < n; ++k) {
            Mono m{};
            m[0] = uint16_t(rng() % 3), m[1] = uint16_t(rng() % 3);
            terms.push_back({m, mpq_class(int(rng() % 7) - 3, int(rng() % 3) + 1)});
        }
        return Poly::from_terms(std::move(terms));
    };
    RingElement a = RingElement::from_poly(s, small());
    if (s->kind() != RingKind::Fraction) return a;
    // denominators of the form 1 + (something), never zero
    Poly d = small();
    if (d.is_zero() || (rng() % 2)) return a;
    return a / (RingElement::from_poly(s, d) * RingElement::from_poly(s, d) + 1);
}

std::vector<SpecPtr> all_kinds() {
    return {RingSpec::poly({"t", "s"}), RingSpec::quotient({"a", "b"}, {{mono({2}), Poly::variable(1)}}),
            RingSpec::fraction({"u", "v"}), RingSpec::modular(7), RingSpec::modular(9)};
}

}  // namespace

TEST_CASE("examples: arithmetic in each ring kind") {
    auto P = RingSpec::poly({"t", "s"});
    CHECK(el(P, "(t+s)*(t-s)") == el(P, "t^2-s^2"));
    auto Qa = RingSpec::quotient({"a"}, {{mono({2}), Poly()}});
    CHECK(el(Qa, "(1+a)*(1-a)").is_one());
    auto Z7 = RingSpec::modular(7);
    CHECK(RingElement::residue(Z7, 4).pow(3).is_one());
}

TEST_CASE("examples: normal forms") {
    auto Qa = RingSpec::quotient({"a"}, {{mono({2}), Poly()}});
    CHECK(normal_form(el(Qa, "a^3+a")).to_string() == "a");
    // c3^2 -> -c2^3, c2^4 -> 0
    // weights c3:2, c2:1 make both rules descend
    auto C = RingSpec::quotient({"c3", "c2"}, {{mono({2}), Poly::monomial(mono({0, 3}), -1)}, {mono({0, 4}), Poly()}},
                                {2, 1});
    CHECK(el(C, "c3^4").is_zero());
    CHECK(!el(C, "c3^2").is_zero());
    auto P = RingSpec::poly({"t"});
    CHECK(el(P, "t-t").is_zero());
}

TEST_CASE("examples: inverses") {
    auto Z7 = RingSpec::modular(7);
    CHECK(invert(RingElement::residue(Z7, 5)).residue_value() == 3);
    auto F = RingSpec::fraction({"u", "v"});
    auto x = el(F, "1+u*v");
    CHECK(invert(x) * x == RingElement::one(F));
    CHECK(invert(x).to_string().find("/") != std::string::npos);
    auto P = RingSpec::poly({"t"});
    CHECK_THROWS_AS(invert(el(P, "t")), NotAUnit);
}

TEST_CASE("examples: substitution") {
    auto P = RingSpec::poly({"s", "t"});
    auto Ps = RingSpec::poly({"s"});
    auto tr = el(P, "s^2*t^2+4*s*t+3");
    auto s = RingElement::variable(Ps, "s");
    CHECK(substitute(tr, {{"t", RingElement::one(Ps)}, {"s", s}}, Ps) == el(Ps, "s^2+4*s+3"));
    CHECK(substitute(el(P, "5*t^3+t*s+s^2-2"), {{"t", RingElement::zero(Ps)}, {"s", s}}, Ps) == el(Ps, "s^2-2"));
    auto B = RingSpec::poly({"b"});
    auto Q0 = RingSpec::poly({});
    auto b4 = el(B, "-2/3*b^3+1/2*b^2+1/6*b");
    // oracle: -2/3 + 1/2 + 1/6 = 0
    CHECK((mpq_class(-2, 3) + mpq_class(1, 2) + mpq_class(1, 6)) == 0);
    CHECK(substitute(b4, {{"b", RingElement::one(Q0)}}, Q0).is_zero());
}

TEST_CASE("examples: reduction mod p") {
    auto B = RingSpec::poly({"b"});
    // (9 - 3)/2 = 3
    CHECK(map_to_modular(el(B, "(b^2-b)/2"), 5, {{"b", 3}}).residue_value() == (9 - 3) / 2 % 5);
    CHECK(map_to_modular(el(B, "b^5+3*b+19"), 7, {{"b", 0}}).residue_value() == 19 % 7);
    CHECK_THROWS_AS(map_to_modular(el(B, "b/6"), 2, {{"b", 1}}), DenominatorNotInvertible);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(12345);
    for (auto& s : all_kinds()) {
        CAPTURE(s->describe());
        auto zero = RingElement::zero(s), one = RingElement::one(s);
        for (int i = 0; i < 1000; ++i) {
            auto a = random_el(s, rng), b = random_el(s, rng), c = random_el(s, rng);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE(a * b == b * a);
            REQUIRE(a + b == b + a);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + zero == a);
            REQUIRE(a * one == a);
            REQUIRE((a * zero).is_zero());
            REQUIRE((a - a).is_zero());
        }
    }
}

TEST_CASE("normal_form is idempotent and multiplicative") {
    std::mt19937 rng(7);
    auto s = RingSpec::quotient({"a", "b"}, {{mono({2}), Poly::variable(1)}, {mono({0, 3}), Poly()}});
    for (int i = 0; i < 300; ++i) {
        auto a = random_el(s, rng), b = random_el(s, rng);
        auto na = normal_form(a);
        CHECK(normal_form(na).to_string() == na.to_string());
        CHECK(normal_form(a * b).to_string() == normal_form(na * normal_form(b)).to_string());
    }
    CHECK(el(s, "a^6").is_zero());
}

TEST_CASE("substitute commutes with reduction mod p") {
    auto P = RingSpec::poly({"x", "y"});
    auto T = RingSpec::poly({"s", "t"});
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        auto f = random_el(P, rng);
        auto gx = random_el(T, rng), gy = random_el(T, rng);
        for (long p : {5L, 7L, 11L}) {
            long s0 = long(rng() % p), t0 = long(rng() % p);
            auto lhs = map_to_modular(substitute(f, {{"x", gx}, {"y", gy}}, T), p, {{"s", s0}, {"t", t0}});
            long xv = map_to_modular(gx, p, {{"s", s0}, {"t", t0}}).residue_value();
            long yv = map_to_modular(gy, p, {{"s", s0}, {"t", t0}}).residue_value();
            auto rhs = map_to_modular(f, p, {{"x", xv}, {"y", yv}});
            REQUIRE(lhs.residue_value() == rhs.residue_value());
        }
    }
}

TEST_CASE("invert(a) * a = 1 when invert succeeds") {
    std::mt19937 rng(3);
    int inverted = 0;
    for (auto& s : all_kinds())
        for (int i = 0; i < 300; ++i) {
            auto a = random_el(s, rng);
            try {
                auto b = invert(a);
                ++inverted;
                REQUIRE((a * b).is_one());
            } catch (const NotAUnit&) {
            }
        }
    CHECK(inverted > 500);
}

TEST_CASE("mod_inverse and rational_mod") {
    CHECK(mod_inverse(3, 7) == 5);
    CHECK_THROWS_AS(mod_inverse(3, 9), NotAUnit);
    CHECK(rational_mod(mpq_class(1, 2), 7) == 4);
}
