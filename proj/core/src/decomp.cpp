#include "chev/decomp.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace chev::decomp {

using chevgroup::letter_h;
using chevgroup::letter_w;
using chevgroup::letter_x;
using chevgroup::word_product;
using exactring::RingKind;

namespace {
std::string par(const RingElement& e) { return "(" + e.to_string() + ")"; }
}  // namespace

Word rank_one_factor(const Root& g, const RingElement& u, const RingElement& v, bool corrected) {
    RingElement d = u * v + 1;
    if (!d.is_unit()) throw exactring::NotAUnit("1+uv = " + d.to_string() + " is not a unit");
    std::string D = "(1+" + par(u) + "*" + par(v) + ")";
    return word_product({letter_x(g, par(v) + "/" + D), letter_h(g, corrected ? D + "^-1" : D),
                         letter_x(-g, par(u) + "/" + D)});
}

Word nilpotent_commute(const Root& g, const RingElement& u) {
    if (u.kind() != RingKind::Quotient || !(u * u).is_zero())
        throw MissingRule("nilpotent_commute needs a quotient ring in which u^2 = 0");
    return word_product({letter_h(g, "1-" + par(u)), letter_x(g, "1+" + par(u)), letter_x(-g, par(u))});
}

FactorizationCheck verify_factorization(SystemType t, Realization r, const SpecPtr& ring, const Word& target,
                                        const Word& claim) {
    Matrix a = chevgroup::evaluate_word(t, r, ring, target);
    Matrix b = chevgroup::evaluate_word(t, r, ring, claim);
    Matrix d = a - b;
    FactorizationCheck out;
    out.equal = d.is_zero();
    if (!out.equal) out.residual = d;
    return out;
}

// ---------------------------------------------------------------- Gauss, A1

Word GaussFactorization::word() const { return word_product({torus, u1, v, u2}); }

GaussFactorization gauss_decompose_a1(const Matrix& M) {
    if (M.realization() != Realization::A1Std) throw NoFactorization("Gauss decomposition expects an a1std matrix");
    const SpecPtr& s = M.spec();
    if (s->kind() != RingKind::Modular) throw NoFactorization("Gauss decomposition expects Z/p^k");
    long n = s->modulus();
    if (n % 2 == 0) throw NoFactorization("Gauss decomposition needs 2 invertible");
    Root al = rootsys::simple_roots(SystemType::A1)[0];
    auto res = [&](long v) { return RingElement::residue(s, ((v % n) + n) % n); };
    for (long c = 0; c < n; ++c) {
        Matrix Mp = M * chevgroup::root_element(SystemType::A1, Realization::A1Std, al, res(-c));
        RingElement e22 = Mp(1, 1);
        if (!e22.is_unit()) continue;
        RingElement t = e22.inverse();
        RingElement b = Mp(1, 2) * (e22 * 2).inverse();
        RingElement a = Mp(2, 1);
        GaussFactorization f;
        f.t = t.residue_value(), f.a = a.residue_value(), f.b = b.residue_value(), f.c = c;
        chevgroup::WordNode tn;
        tn.kind = chevgroup::WordNode::Kind::T;
        tn.tindex = 1;
        tn.param = std::to_string(f.t);
        f.torus = std::make_shared<const chevgroup::WordNode>(tn);
        f.u1 = letter_x(al, std::to_string(f.a));
        f.v = letter_x(-al, std::to_string(f.b));
        f.u2 = letter_x(al, std::to_string(f.c));
        if (chevgroup::evaluate_word(SystemType::A1, Realization::A1Std, s, f.word()) == M) return f;
    }
    throw NoFactorization("no factorization t1(t) x_a(a) x_-a(b) x_a(c) exists");
}

// ---------------------------------------------------------------- Weyl group

Root WeylElement::apply(const Root& r) const {
    auto all = rootsys::all_roots(r.type);
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] == r) return image[i];
    throw chevgroup::GroupError("root not in system");
}

std::vector<WeylElement> weyl_group(SystemType t) {
    auto all = rootsys::all_roots(t);
    auto simple = rootsys::simple_roots(t);
    std::vector<WeylElement> out{{{}, all}};
    std::deque<size_t> q{0};
    while (!q.empty()) {
        WeylElement w = out[q.front()];
        q.pop_front();
        for (size_t i = 0; i < simple.size(); ++i) {
            WeylElement n;
            n.word = w.word;
            n.word.push_back((int)i);
            for (auto& r : all) n.image.push_back(w.apply(rootsys::reflect(r, simple[i])));
            bool seen = false;
            for (auto& e : out)
                if (e.image == n.image) seen = true;
            if (!seen) {
                out.push_back(n);
                q.push_back(out.size() - 1);
            }
        }
    }
    return out;
}

std::vector<Root> inversion_set(SystemType t, const WeylElement& w) {
    std::vector<Root> out;
    for (auto& r : rootsys::positive_roots(t))
        if (!w.apply(r).positive()) out.push_back(r);
    return out;
}

// ---------------------------------------------------------------- Bruhat

Word BruhatFactorization::word() const { return word_product({torus, u, weyl, u_prime}); }

namespace {
// all coordinate vectors in F_p^k, lexicographic
template <class F>
void for_coords(int k, int p, F&& f) {
    std::vector<int> c(k, 0);
    for (;;) {
        if (f(c)) return;
        int i = k - 1;
        while (i >= 0 && ++c[i] == p) c[i--] = 0;
        if (i < 0) return;
    }
}
}  // namespace

BruhatSearch::BruhatSearch(SystemType t, Realization r, int p) : G_(t, r, p), W_(weyl_group(t)) {
    const auto& F = G_.field();
    auto simple = rootsys::simple_roots(t);
    for (auto& w : W_) {
        finite::FpMat m = F.identity(G_.dim());
        for (int i : w.word) m = F.mul(m, G_.w(simple[i]));
        wdot_.push_back(m);
        uw_.push_back(inversion_set(t, w));
    }
    std::vector<finite::FpMat> tori;
    int u2max = rootsys::rank(t) == 2 ? p - 1 : 1;
    for (int u1 = 1; u1 < p; ++u1)
        for (int u2 = 1; u2 <= u2max; ++u2) {
            finite::FpMat h = G_.h(simple[0], u1);
            if (rootsys::rank(t) == 2) h = F.mul(h, G_.h(simple[1], u2));
            if (std::find(tori.begin(), tori.end(), h) != tori.end()) continue;
            tori.push_back(h);
            torus_params_.push_back({u1, u2});
        }
    auto pos = rootsys::positive_roots(t);
    for (size_t k = 0; k < tori.size(); ++k)
        for_coords((int)pos.size(), p, [&](const std::vector<int>& c) {
            finite::FpMat m = tori[k];
            for (size_t i = 0; i < pos.size(); ++i)
                if (c[i]) m = F.mul(m, G_.x(pos[i], c[i]));
            B_.emplace(m, BEntry{(int)k, c});
            return false;
        });
}

template <class F>
void BruhatSearch::scan(const finite::FpMat& M, F&& on_match) const {
    const auto& fld = G_.field();
    finite::FpMat Mc = fld.canon(M);
    for (size_t wi = 0; wi < W_.size(); ++wi) {
        finite::FpMat winv = fld.inverse(wdot_[wi]);
        bool stop = false;
        for_coords((int)uw_[wi].size(), G_.p(), [&](const std::vector<int>& c) {
            finite::FpMat up = fld.identity(G_.dim());
            for (size_t i = 0; i < c.size(); ++i)
                if (c[i]) up = fld.mul(up, G_.x(uw_[wi][i], c[i]));
            finite::FpMat N = fld.mul(fld.mul(Mc, fld.inverse(up)), winv);
            auto it = B_.find(N);
            if (it != B_.end() && on_match(wi, c, it->second)) stop = true;
            return stop;
        });
        if (stop) return;
    }
}

std::optional<BruhatFactorization> BruhatSearch::decompose(const finite::FpMat& M) const {
    std::optional<BruhatFactorization> out;
    SystemType t = G_.type();
    auto simple = rootsys::simple_roots(t);
    auto pos = rootsys::positive_roots(t);
    scan(M, [&](size_t wi, const std::vector<int>& c, const BEntry& b) {
        BruhatFactorization f;
        auto [u1, u2] = torus_params_[b.torus];
        std::vector<Word> tw{letter_h(simple[0], std::to_string(u1))};
        if (simple.size() == 2) tw.push_back(letter_h(simple[1], std::to_string(u2)));
        f.torus = word_product(tw);
        std::vector<Word> uw;
        for (size_t i = 0; i < pos.size(); ++i)
            if (b.u[i]) uw.push_back(letter_x(pos[i], std::to_string(b.u[i])));
        f.u = word_product(uw);
        std::vector<Word> ww;
        for (int i : W_[wi].word) ww.push_back(letter_w(simple[i], "1"));
        f.weyl = word_product(ww);
        f.weyl_word = W_[wi].word;
        std::vector<Word> upw;
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i]) upw.push_back(letter_x(uw_[wi][i], std::to_string(c[i])));
        f.u_prime = word_product(upw);
        out = f;
        return true;
    });
    return out;
}

int BruhatSearch::count_cells(const finite::FpMat& M) const {
    int n = 0;
    scan(M, [&](size_t, const std::vector<int>&, const BEntry&) {
        ++n;
        return false;
    });
    return n;
}

BruhatFactorization bruhat_bruteforce(SystemType t, Realization r, int p, const finite::FpMat& M) {
    BruhatSearch s(t, r, p);
    auto f = s.decompose(M);
    if (!f) throw ElementNotInGroup("element has no Bruhat factorization in the elementary group");
    return *f;
}

}  // namespace chev::decomp
