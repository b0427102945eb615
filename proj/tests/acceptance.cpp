// Acceptance run: one PASS/FAIL line per criterion 1-10.
//
// Criteria 2 and 7 contain printed values that are false. Those lines print
// FAIL; the exit status is 0 when every other criterion passes and the two
// failures are exactly the known ones (computed value = independent oracle,
// printed value refuted).

#include "chev/decomp.hpp"
#include "chev/prooflab.hpp"
#include "chev/shacheck.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace chev;
using chevgroup::Matrix;
using chevgroup::Realization;
using exactring::RingElement;
using exactring::RingSpec;
using exactring::SpecPtr;
using prooflab::Verdict;
using rootsys::SystemType;

namespace {

const auto A1 = SystemType::A1, A2 = SystemType::A2, B2 = SystemType::B2, G2 = SystemType::G2;

struct Outcome {
    bool pass = true;
    bool known_failure = false;  // fails only where a printed value is refuted
    std::ostringstream detail;
    std::vector<std::string> problems;
    void fail(const std::string& why) {
        pass = false;
        problems.push_back(why);
    }
};

Matrix word(SystemType t, Realization r, const SpecPtr& s, const std::string& w) {
    return chevgroup::evaluate_word(chevgroup::WordContext{t, {}}, r, s, w);
}

RingElement el(const SpecPtr& s, const std::string& text) { return exactring::parse_element(s, text); }

prooflab::IdentityRecord record(SystemType t, const std::string& name) {
    for (auto& r : prooflab::builtin_catalog(t))
        if (r.name == name) return r;
    throw std::runtime_error("missing record " + name);
}

// ---------------------------------------------------------------- 1

struct Displayed {
    SystemType t;
    std::string g, d;
    std::vector<std::tuple<std::string, int, int, int>> rhs;  // root, coeff, deg t, deg u
};

Outcome relation_tables() {
    Outcome o;
    std::vector<Displayed> shown = {
        {A2, "a1", "a2", {{"a1+a2", 1, 1, 1}}},
        {A2, "a1", "-a1-a2", {{"-a2", -1, 1, 1}}},
        {A2, "a2", "-a1-a2", {{"-a1", 1, 1, 1}}},
        {A2, "a1+a2", "-a1", {{"a2", -1, 1, 1}}},
        {A2, "a1+a2", "-a2", {{"a1", 1, 1, 1}}},
        {B2, "a", "b", {{"a+b", -1, 1, 1}, {"a+2b", -1, 1, 2}}},
        {B2, "a+b", "b", {{"a+2b", -2, 1, 1}}},
        {G2, "a", "b", {{"a+b", 1, 1, 1}, {"a+3b", -1, 1, 3}, {"a+2b", -1, 1, 2}, {"2a+3b", 1, 2, 3}}},
        {G2, "a+b", "b", {{"a+2b", 2, 1, 1}, {"a+3b", 3, 1, 2}, {"2a+3b", 3, 2, 1}}},
        {G2, "a", "a+3b", {{"2a+3b", 1, 1, 1}}},
        {G2, "a+2b", "b", {{"a+3b", -3, 1, 1}}},
        {G2, "a+b", "a+2b", {{"2a+3b", 3, 1, 1}}},
    };
    auto S = RingSpec::poly({"t", "u"});
    for (auto& D : shown) {
        auto g = rootsys::parse_root(D.t, D.g), d = rootsys::parse_root(D.t, D.d);
        auto rel = chevgroup::commutator_relation(D.t, g, d);
        std::set<std::tuple<std::string, int, int, int>> got, want(D.rhs.begin(), D.rhs.end());
        for (auto& f : rel.factors) got.insert({f.root.to_string(), int(mpz_class(f.coeff).get_si()), f.i, f.j});
        if (got != want) o.fail("table differs: " + rel.text());
        // the displayed right-hand side, in its displayed order, as a group element
        std::string rhs;
        for (auto& [r, c, i, j] : D.rhs)
            rhs += "x(" + r + "," + std::to_string(c) + "*t^" + std::to_string(i) + "*u^" + std::to_string(j) + ") ";
        if (word(D.t, Realization::Adjoint, S, "[x(" + D.g + ",t), x(" + D.d + ",u)]") !=
            word(D.t, Realization::Adjoint, S, rhs))
            o.fail("matrix commutator differs for " + rel.text());
    }
    // x_a2(v) x_a1(u) = x_a1(u) x_a2(v) x_g(-uv)
    if (word(A2, Realization::Adjoint, S, "x(a2,t) x(a1,u)") !=
        word(A2, Realization::Adjoint, S, "x(a1,u) x(a2,t) x(a1+a2,-u*t)"))
        o.fail("A2 swap relation");
    o.detail << shown.size() << " displayed commutators + A2 swap";
    return o;
}

// ---------------------------------------------------------------- 2

Outcome traces() {
    Outcome o;
    auto S = RingSpec::poly({"t", "s"});
    auto ts = el(S, "t*s");
    auto long_root = [](SystemType t) { return rootsys::positive_roots(t).back(); };
    auto tr = [&](SystemType t) { return chevgroup::trace_poly(t, long_root(t)); };

    if (tr(A1) != el(S, "s^2*t^2+4*s*t+3")) o.fail("A1 trace " + tr(A1).to_string());

    // oracles: Ad on sl3 has trace tr(g) tr(g^-1) - 1 with g = [[1+ts,t],[s,1]] + 1;
    // Ad on so5 = wedge^2 of the 5-dim module where g acts as A, A^-T, 1
    auto a2_oracle = (ts + 3) * (ts + 3) - 1;
    auto trA = ts + 2;
    auto trA2 = trA * trA - 2;
    auto b2_oracle = ((ts * 2 + 5) * (ts * 2 + 5) - (trA2 * 2 + 1)) * RingElement::constant(S, mpq_class(1, 2));
    struct Printed {
        SystemType t;
        std::string value;
        RingElement oracle;
    };
    bool only_sign = true;
    for (auto& P : {Printed{A2, "s^2*t^2-6*s*t+8", a2_oracle}, Printed{B2, "s^2*t^2-6*s*t+10", b2_oracle}}) {
        auto got = tr(P.t);
        if (got != el(S, P.value)) {
            o.fail(std::string(rootsys::type_name(P.t)) + " trace is " + got.to_string() + ", printed " + P.value);
            only_sign = only_sign && got == P.oracle;
        }
    }
    // G2: s^2 t^2 + c st + 14; the constant and the quartic term are what is claimed
    auto g2 = tr(G2);
    auto rest = g2 - el(S, "s^2*t^2+14");
    auto Q0 = RingSpec::poly({});
    auto c = exactring::substitute(rest, {{"t", RingElement::one(Q0)}, {"s", RingElement::one(Q0)}}, Q0);
    bool g2_ok = rest == ts * RingElement::constant(S, *c.as_rational());
    if (!g2_ok) o.fail("G2 trace " + g2.to_string());
    o.detail << "A1 " << tr(A1).to_string() << "; A2 " << tr(A2).to_string() << "; B2 " << tr(B2).to_string()
             << "; G2 " << g2.to_string() << " (A = " << -*c.as_rational() << ")";
    o.known_failure = !o.pass && only_sign && tr(A1) == el(S, "s^2*t^2+4*s*t+3") && g2_ok;
    return o;
}

// ---------------------------------------------------------------- 3

Outcome centralizers() {
    Outcome o;
    int brute = 0;
    for (auto& f : prooflab::builtin_families()) {
        auto r = prooflab::centralizer_check(f);
        if (r.verdict != Verdict::Pass) o.fail(f.name + " " + r.residual);
        for (int p : {3, 5}) {
            // the G2 family has denominators 3 (b4 = -2/3 b1^3 + ...): undefined over F_3
            if (f.system == G2 && p == 3) continue;
            size_t cap = f.system == G2 ? 300000 : 10000;
            auto b = prooflab::centralizer_bruteforce(f, p, cap);
            ++brute;
            if (!b.matches_family) o.fail(f.name + " over F" + std::to_string(p) + " does not match the family");
            size_t want = f.system == A1 ? size_t(p) : size_t(p) * p;
            if (b.count != want)
                o.fail(f.name + " over F" + std::to_string(p) + ": " + std::to_string(b.count) + " elements");
        }
    }
    o.detail << prooflab::builtin_families().size() << " families, " << brute
             << " exhaustive comparisons (G2 over F3 not applicable: family has denominator 3)";
    return o;
}

// ---------------------------------------------------------------- 4

Outcome g2_chain() {
    Outcome o;
    for (auto& s : prooflab::chain_stage_names()) {
        auto r = prooflab::entry_chain_g2(s);
        if (r.verdict != Verdict::Pass) o.fail(s + ": " + r.residual);
    }
    auto last = prooflab::chain_stage_names().back();
    if (last != "final-2b") o.fail("last stage is " + last);
    if (!el(prooflab::chain_final_ring(), "b").is_zero()) o.fail("b does not reduce to 0");
    o.detail << prooflab::chain_stage_names().size() << " stages, final residual 2b, b -> 0";
    return o;
}

// ---------------------------------------------------------------- 5

Outcome catalog() {
    Outcome o;
    size_t recs = 0, skipped = 0, muts = 0;
    for (auto& rec : prooflab::full_catalog()) {
        ++recs;
        for (auto& r : prooflab::run_record(rec)) {
            if (r.verdict == Verdict::Skipped && rec.form == prooflab::Form::Skipped) {
                ++skipped;
                continue;
            }
            if (r.verdict != Verdict::Pass) o.fail(r.name + " " + prooflab::verdict_name(r.verdict) + " " + r.residual);
        }
        for (auto& m : prooflab::mutants(rec)) {
            ++muts;
            if (prooflab::run_identity(m).verdict == Verdict::Pass) o.fail("mutant survived: " + m.name);
        }
    }
    o.detail << recs << " records (" << skipped << " prose-only), " << muts << " mutants all rejected";
    return o;
}

// ---------------------------------------------------------------- 6

Outcome obstructions() {
    Outcome o;
    std::string Y = "x(a1,1) w(a1+a2,1) x(a2,1)", Yp = "x(a2,1) w(a1+a2,-1) x(a1,1)";
    auto P = Realization::Pgl3;
    std::vector<SpecPtr> impossible{RingSpec::poly({})};
    for (long p : {2L, 3L, 5L, 11L, 13L}) impossible.push_back(RingSpec::modular(p));
    for (auto& s : impossible) {
        auto r = prooflab::scalar_conjugacy_obstruction(word(A2, P, s, Y), word(A2, P, s, Yp));
        if (r.possible) o.fail("Y, Y' not obstructed over " + s->describe());
    }
    auto F7 = RingSpec::modular(7);
    auto r7 = prooflab::scalar_conjugacy_obstruction(word(A2, P, F7, Y), word(A2, P, F7, Yp));
    // oracle: 1 = 2 lambda gives lambda = 4 in F7, and 4^3 = 64 = 1 mod 7
    if (!r7.possible || !r7.lambda || r7.lambda->residue_value() != 4 || (4 * 2) % 7 != 1 || 64 % 7 != 1)
        o.fail("Y, Y' over F7 should pass the necessary conditions with lambda = 4");
    auto A = word(A2, P, F7, "mat(3,3,0; 2,3,0; 0,0,5)"), B = word(A2, P, F7, "mat(3,0,0; 0,1,1; 0,3,1)");
    if (prooflab::scalar_conjugacy_obstruction(A, B).possible) o.fail("A, B over F7 not obstructed");
    o.detail << "Y/Y' impossible over Q, F2, F3, F5, F11, F13; possible over F7 (lambda = 4); A/B impossible";
    return o;
}

// ---------------------------------------------------------------- 7

Outcome factorization() {
    Outcome o;
    auto F = RingSpec::fraction({"u", "v"});
    auto u = el(F, "u"), v = el(F, "v");
    int roots = 0, printed_false = 0;
    bool corrected_ok = true;
    for (auto t : rootsys::all_types()) {
        auto r = shacheck::default_realization(t);
        for (auto& g : rootsys::all_roots(t)) {
            ++roots;
            auto target = chevgroup::word_product({chevgroup::letter_x(-g, "u"), chevgroup::letter_x(g, "v")});
            if (!decomp::verify_factorization(t, r, F, target, decomp::rank_one_factor(g, u, v)).equal) ++printed_false;
            if (!decomp::verify_factorization(t, r, F, target, decomp::rank_one_factor(g, u, v, true)).equal)
                corrected_ok = false;
        }
    }
    if (printed_false) o.fail("printed rank-one identity false for " + std::to_string(printed_false) + "/" +
                              std::to_string(roots) + " roots (h(1+uv) must be h((1+uv)^-1))");
    if (!corrected_ok) o.fail("corrected rank-one identity fails");
    bool rest_ok = corrected_ok;

    auto D = RingSpec::quotient({"u"}, {{exactring::Mono{2}, exactring::Poly()}});
    auto g = rootsys::parse_root(A2, "a1");
    auto nil_target = chevgroup::word_product({chevgroup::letter_x(-g, "u"), chevgroup::letter_x(g, "1")});
    if (!decomp::verify_factorization(A2, Realization::Pgl3, D, nil_target, decomp::nilpotent_commute(g, el(D, "u")))
             .equal) {
        o.fail("nilpotent identity");
        rest_ok = false;
    }

    std::mt19937 rng(20240601);
    int gauss = 0;
    for (int p : {3, 5, 7})
        for (int k : {1, 2}) {
            long n = k == 1 ? p : long(p) * p;
            auto R = RingSpec::modular(n);
            auto roots1 = rootsys::all_roots(A1);
            for (int i = 0; i < 200; ++i) {
                std::string w;
                for (int j = 0; j < 6; ++j)
                    w += "x(" + roots1[rng() % 2].to_string() + "," + std::to_string(rng() % n) + ") ";
                auto M = word(A1, Realization::A1Std, R, w);
                auto f = decomp::gauss_decompose_a1(M);
                ++gauss;
                if (chevgroup::evaluate_word(A1, Realization::A1Std, R, f.word()) != M) {
                    o.fail("Gauss round trip " + w);
                    rest_ok = false;
                }
            }
        }

    struct Cell {
        SystemType t;
        Realization r;
        int p;
    };
    for (Cell c : {Cell{A1, Realization::A1Std, 3}, Cell{A1, Realization::A1Std, 5}, Cell{A2, Realization::Pgl3, 2}}) {
        auto G = shacheck::generate_group(c.t, c.p, c.r);
        decomp::BruhatSearch B(c.t, c.r, c.p);
        for (auto& m : G.elements)
            if (B.count_cells(m) != 1) {
                o.fail("Bruhat cells overlap or miss an element");
                rest_ok = false;
                break;
            }
    }
    o.detail << "corrected rank-one identity holds for " << roots << " roots; nilpotent identity; " << gauss
             << " Gauss round trips; Bruhat partitions of A1/F3, A1/F5, A2/F2";
    o.known_failure = !o.pass && rest_ok && printed_false == roots;
    return o;
}

// ---------------------------------------------------------------- 8

Outcome nilpotency() {
    Outcome o;
    for (auto n : {"G2-X1-nilpotent", "G2-X2-nilpotent", "G2-X1-index-sharp", "G2-X2-index-sharp"}) {
        auto r = prooflab::run_identity(record(G2, n));
        if (r.verdict != Verdict::Pass) o.fail(std::string(n) + " " + r.residual);
    }
    o.detail << "(X1-1)^3 = 0, (X2-1)^4 = 0 in d; (X1-1)^2, (X2-1)^3 nonzero at d = 0";
    return o;
}

// ---------------------------------------------------------------- 9

Outcome sha() {
    Outcome o;
    for (int p : {3, 5, 7}) {
        auto r = shacheck::sha_report(A1, p);
        if (!r.pass || r.cp_endo_count != r.inner_count) o.fail("A1 over F" + std::to_string(p) + ": " + r.verdict());
        o.detail << "F" << p << ": |G| = " << r.group_order << ", " << r.cp_endo_count << " class-preserving = "
                 << r.inner_count << " inner; ";
    }
    return o;
}

// ---------------------------------------------------------------- 10

Outcome transvection() {
    Outcome o;
    auto U = RingSpec::poly({"u1", "u2", "u3"});
    auto sq = prooflab::transvection_square(el(U, "u1"), el(U, "u2"), el(U, "u3"));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (sq(i, j) != (i == 0 && j == 2 ? el(U, "u1*u2") : RingElement::zero(U))) o.fail("(u-I)^2 entry");
    auto T = RingSpec::poly({"t"});
    if (prooflab::symmetric_difference(el(T, "t^2-6*t+8")) != el(T, "4*t+2")) o.fail("symmetric difference");
    o.detail << "(u-I)^2 = u1 u2 E13; Delta(t^2-6t+8) = 4t+2";
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
        {1, relation_tables}, {2, traces},      {3, centralizers}, {4, g2_chain}, {5, catalog},
        {6, obstructions},    {7, factorization}, {8, nilpotency},   {9, sha},      {10, transvection},
    };
    bool ok = true;
    for (auto& [n, run] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("error: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d: %s  %s (%.2f s)\n", n, o.pass ? "PASS" : "FAIL", o.detail.str().c_str(), secs);
        for (auto& p : o.problems) std::printf("    %s%s\n", o.known_failure ? "refuted: " : "", p.c_str());
        std::fflush(stdout);
        if (!o.pass && !o.known_failure) ok = false;
    }
    return ok ? 0 : 1;
}
