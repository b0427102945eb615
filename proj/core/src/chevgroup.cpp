#include "chev/chevgroup.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>
#include <sstream>

namespace chev::chevgroup {

using exactring::Poly;
using exactring::RingKind;
using exactring::RingSpec;
using rootsys::make_root;

const char* realization_name(Realization r) {
    switch (r) {
        case Realization::Adjoint: return "adjoint";
        case Realization::Pgl3: return "pgl3";
        case Realization::A1Std: return "a1std";
    }
    return "?";
}
Realization realization_from_name(const std::string& s) {
    if (s == "adjoint") return Realization::Adjoint;
    if (s == "pgl3") return Realization::Pgl3;
    if (s == "a1std") return Realization::A1Std;
    throw GroupError("unknown realization '" + s + "'");
}
void check_realization(SystemType t, Realization r) {
    if (r == Realization::Pgl3 && t != SystemType::A2) throw GroupError("pgl3 realization exists only for A2");
    if (r == Realization::A1Std && t != SystemType::A1) throw GroupError("a1std realization exists only for A1");
}
int realization_dim(SystemType t, Realization r) {
    check_realization(t, r);
    if (r != Realization::Adjoint) return 3;
    return (int)rootsys::all_roots(t).size() + rootsys::rank(t);
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(SpecPtr s, int n, Realization r)
    : spec_(std::move(s)), n_(n), real_(r), a_(size_t(n) * n, RingElement::zero(spec_)) {}

Matrix Matrix::identity(SpecPtr s, int n, Realization r) {
    Matrix m(s, n, r);
    for (int i = 0; i < n; ++i) m(i, i) = RingElement::one(s);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (n_ != o.n_) throw GroupError("dimension mismatch");
    Matrix r(spec_, n_, real_);
    RingKind k = spec_->kind();
    if (k == RingKind::Poly || k == RingKind::Quotient) {
        std::vector<Poly::Term> acc;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                acc.clear();
                for (int l = 0; l < n_; ++l) {
                    const Poly& x = (*this)(i, l).numerator();
                    if (x.is_zero()) continue;
                    const Poly& y = o(l, j).numerator();
                    if (y.is_zero()) continue;
                    for (auto& tx : x.terms())
                        for (auto& ty : y.terms()) acc.push_back({exactring::mono_mul(tx.m, ty.m), tx.c * ty.c});
                }
                if (!acc.empty()) r(i, j) = RingElement::from_poly(spec_, Poly::from_terms(acc));
            }
        return r;
    }
    for (int i = 0; i < n_; ++i)
        for (int l = 0; l < n_; ++l) {
            const RingElement& x = (*this)(i, l);
            if (x.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                const RingElement& y = o(l, j);
                if (y.is_zero()) continue;
                r(i, j) += x * y;
            }
        }
    return r;
}
Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}
Matrix Matrix::operator-(const Matrix& o) const {
    if (n_ != o.n_) throw GroupError("dimension mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}
Matrix Matrix::scaled(const RingElement& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = x * c;
    return r;
}
Matrix Matrix::transpose() const {
    Matrix r(spec_, n_, real_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
}
Matrix Matrix::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Matrix r = identity(spec_, n_, real_), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}
Matrix Matrix::inverse() const {
    Matrix a = *this, inv = identity(spec_, n_, real_);
    for (int c = 0; c < n_; ++c) {
        int piv = -1;
        for (int r = c; r < n_ && piv < 0; ++r)
            if (!a(r, c).is_zero() && a(r, c).is_unit()) piv = r;
        if (piv < 0) throw exactring::NotAUnit("matrix has no unit pivot in column " + std::to_string(c + 1));
        if (piv != c)
            for (int j = 0; j < n_; ++j) {
                std::swap(a(c, j), a(piv, j));
                std::swap(inv(c, j), inv(piv, j));
            }
        RingElement s = a(c, c).inverse();
        for (int j = 0; j < n_; ++j) {
            a(c, j) = a(c, j) * s;
            inv(c, j) = inv(c, j) * s;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == c || a(r, c).is_zero()) continue;
            RingElement f = a(r, c);
            for (int j = 0; j < n_; ++j) {
                a(r, j) = a(r, j) - f * a(c, j);
                inv(r, j) = inv(r, j) - f * inv(c, j);
            }
        }
    }
    return inv;
}
RingElement Matrix::trace() const {
    RingElement t = RingElement::zero(spec_);
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}
RingElement Matrix::det() const {
    if (spec_->is_field()) {
        Matrix a = *this;
        RingElement d = RingElement::one(spec_);
        for (int c = 0; c < n_; ++c) {
            int piv = -1;
            for (int r = c; r < n_ && piv < 0; ++r)
                if (!a(r, c).is_zero()) piv = r;
            if (piv < 0) return RingElement::zero(spec_);
            if (piv != c) {
                for (int j = 0; j < n_; ++j) std::swap(a(c, j), a(piv, j));
                d = -d;
            }
            d = d * a(c, c);
            RingElement s = a(c, c).inverse();
            for (int r = c + 1; r < n_; ++r) {
                if (a(r, c).is_zero()) continue;
                RingElement f = a(r, c) * s;
                for (int j = c; j < n_; ++j) a(r, j) = a(r, j) - f * a(c, j);
            }
        }
        return d;
    }
    // cofactor expansion; only used for small matrices over non-fields
    if (n_ == 1) return (*this)(0, 0);
    RingElement d = RingElement::zero(spec_);
    for (int j = 0; j < n_; ++j) {
        if ((*this)(0, j).is_zero()) continue;
        Matrix m(spec_, n_ - 1, real_);
        for (int r = 1; r < n_; ++r)
            for (int c = 0, cc = 0; c < n_; ++c)
                if (c != j) m(r - 1, cc++) = (*this)(r, c);
        RingElement term = (*this)(0, j) * m.det();
        d = (j % 2) ? d - term : d + term;
    }
    return d;
}
bool Matrix::is_zero() const {
    for (auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}
bool Matrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const RingElement& x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}
Matrix Matrix::map(const std::function<RingElement(const RingElement&)>& f, const SpecPtr& target) const {
    Matrix r(target, n_, real_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f(a_[i]);
    return r;
}
std::string Matrix::to_string() const {
    std::vector<std::string> cells(a_.size());
    size_t w = 1;
    for (size_t i = 0; i < a_.size(); ++i) {
        cells[i] = a_[i].to_string();
        w = std::max(w, cells[i].size());
    }
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        os << "[ ";
        for (int j = 0; j < n_; ++j) {
            const std::string& c = cells[size_t(i) * n_ + j];
            os << std::string(w - c.size(), ' ') << c << (j + 1 < n_ ? "  " : " ");
        }
        os << "]\n";
    }
    return os.str();
}

bool pgl3_equal(const Matrix& M, const Matrix& N) {
    if (M.n() != N.n()) return false;
    int pi = -1, pj = -1;
    for (int i = 0; i < N.n() && pi < 0; ++i)
        for (int j = 0; j < N.n(); ++j)
            if (!N(i, j).is_zero()) {
                pi = i, pj = j;
                break;
            }
    if (pi < 0) return M.is_zero();
    if (!N(pi, pj).is_unit()) throw GroupError("pgl3_equal needs a unit pivot (field ring expected)");
    RingElement lambda = M(pi, pj) * N(pi, pj).inverse();
    if (!lambda.is_unit()) return false;
    return (M - N.scaled(lambda)).is_zero();
}

// ---------------------------------------------------------------- Chevalley basis

namespace {
using Coords = std::array<int, 2>;
Coords neg(const Coords& a) { return {-a[0], -a[1]}; }
Coords add(const Coords& a, const Coords& b) { return {a[0] + b[0], a[1] + b[1]}; }
bool is_root_c(SystemType t, const Coords& c) {
    std::vector<int> v{c[0]};
    if (rootsys::rank(t) == 2) v.push_back(c[1]);
    else if (c[1] != 0) return false;
    return rootsys::is_root(t, v);
}
int string_down(SystemType t, const Coords& x, const Coords& y) {  // largest p: y - p x root
    int p = 0;
    while (is_root_c(t, {y[0] - (p + 1) * x[0], y[1] - (p + 1) * x[1]})) ++p;
    return p;
}
using RatMat = std::vector<mpq_class>;
RatMat ratmul(const RatMat& a, const RatMat& b, int n) {
    RatMat r(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[size_t(i) * n + k] == 0) continue;
            for (int j = 0; j < n; ++j) r[size_t(i) * n + j] += a[size_t(i) * n + k] * b[size_t(k) * n + j];
        }
    return r;
}
}  // namespace

std::vector<std::array<Root, 3>> root_triangles(SystemType t) {
    std::vector<std::array<Root, 3>> out;
    std::set<std::set<Coords>> seen;
    auto roots = rootsys::all_roots(t);
    for (auto& a : roots)
        for (auto& b : roots) {
            if (a == -b) continue;
            Coords c = neg(add(a.c, b.c));
            if (!is_root_c(t, c)) continue;
            std::set<Coords> key{a.c, b.c, c}, nkey{neg(a.c), neg(b.c), neg(c)};
            if (seen.count(key) || seen.count(nkey)) continue;
            seen.insert(key);
            out.push_back({a, b, make_root(t, c)});
        }
    return out;
}

int ChevalleyBasis::index_of(const Root& r) const {
    for (size_t i = 0; i < order_.size(); ++i)
        if (!order_[i].is_h && order_[i].root == r) return (int)i;
    throw GroupError("root not in basis");
}
int ChevalleyBasis::index_of_h(int i) const {
    for (size_t k = 0; k < order_.size(); ++k)
        if (order_[k].is_h && order_[k].h == i) return (int)k;
    throw GroupError("coroot index out of range");
}
int ChevalleyBasis::structure_constant(const Root& g, const Root& d) const {
    auto it = N_.find({g.c, d.c});
    return it == N_.end() ? 0 : it->second;
}

std::vector<mpq_class> ChevalleyBasis::bracket(int x, int y) const {
    std::vector<mpq_class> out(order_.size());
    const BasisVector &X = order_[x], &Y = order_[y];
    auto simple = rootsys::simple_roots(type_);
    if (X.is_h && Y.is_h) return out;
    if (X.is_h) {
        out[y] = rootsys::cartan_integer(Y.root, simple[X.h]);
        return out;
    }
    if (Y.is_h) {
        out[x] = -rootsys::cartan_integer(X.root, simple[Y.h]);
        return out;
    }
    Coords s = add(X.root.c, Y.root.c);
    if (s == Coords{0, 0}) {
        // [e_d, e_-d] = h_d = sum_i d_i (a_i,a_i)/(d,d) h_i
        int dd = rootsys::inner(type_, X.root.c, X.root.c);
        for (int i = 0; i < rootsys::rank(type_); ++i) {
            int aa = rootsys::inner(type_, simple[i].c, simple[i].c);
            out[index_of_h(i)] = mpq_class(X.root.c[i] * aa, dd);
        }
        for (auto& q : out) q.canonicalize();
        return out;
    }
    if (is_root_c(type_, s)) out[index_of(make_root(type_, s))] = structure_constant(X.root, Y.root);
    return out;
}

const std::vector<mpq_class>& ChevalleyBasis::ad(const Root& r) const {
    auto roots = rootsys::all_roots(type_);
    for (size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == r) return ad_[i];
    throw GroupError("root not in basis");
}
const std::vector<std::vector<mpq_class>>& ChevalleyBasis::exp_terms(const Root& r) const {
    auto roots = rootsys::all_roots(type_);
    for (size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == r) return exp_[i];
    throw GroupError("root not in basis");
}

void ChevalleyBasis::finish() {
    int n = dim();
    ad_.clear();
    exp_.clear();
    for (auto& r : rootsys::all_roots(type_)) {
        int x = index_of(r);
        RatMat m(size_t(n) * n);
        for (int j = 0; j < n; ++j) {
            auto col = bracket(x, j);
            for (int i = 0; i < n; ++i) m[size_t(i) * n + j] = col[i];
        }
        ad_.push_back(m);
        std::vector<RatMat> terms;
        RatMat id(size_t(n) * n);
        for (int i = 0; i < n; ++i) id[size_t(i) * n + i] = 1;
        terms.push_back(id);
        RatMat p = id;
        for (int k = 1;; ++k) {
            p = ratmul(p, m, n);
            bool zero = std::all_of(p.begin(), p.end(), [](const mpq_class& q) { return q == 0; });
            if (zero) break;
            RatMat scaled = p;
            mpz_class f = 1;
            for (int i = 2; i <= k; ++i) f *= i;
            for (auto& q : scaled) q /= f;
            for (auto& q : scaled) {
                mpz_class d = q.get_den();
                while (d % 2 == 0) d /= 2;
                while (d % 3 == 0) d /= 3;
                if (d != 1) throw GroupError("exponential denominator not a power of 6");
            }
            terms.push_back(scaled);
        }
        exp_.push_back(terms);
    }
}

bool ChevalleyBasis::jacobi_holds() const {
    int n = dim();
    std::vector<RatMat> full(n);
    for (int x = 0; x < n; ++x) {
        RatMat m(size_t(n) * n);
        for (int j = 0; j < n; ++j) {
            auto col = bracket(x, j);
            for (int i = 0; i < n; ++i) m[size_t(i) * n + j] = col[i];
        }
        full[x] = m;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto br = bracket(x, y);
            RatMat lhs(size_t(n) * n);
            for (int k = 0; k < n; ++k)
                if (br[k] != 0)
                    for (size_t e = 0; e < lhs.size(); ++e) lhs[e] += br[k] * full[k][e];
            RatMat ab = ratmul(full[x], full[y], n), ba = ratmul(full[y], full[x], n);
            for (size_t e = 0; e < lhs.size(); ++e)
                if (lhs[e] != ab[e] - ba[e]) return false;
        }
    return true;
}

ChevalleyBasis make_basis(SystemType t, const std::vector<int>& signs, const std::vector<int>& flips) {
    ChevalleyBasis b;
    b.type_ = t;
    auto pos = rootsys::positive_roots(t);
    for (auto& r : pos) b.order_.push_back({false, r, 0});
    for (int i = 0; i < rootsys::rank(t); ++i) b.order_.push_back({true, Root{}, i});
    for (auto& r : pos) b.order_.push_back({false, -r, 0});
    auto tris = root_triangles(t);
    if (signs.size() != tris.size()) throw GroupError("triangle sign count mismatch");
    for (size_t k = 0; k < tris.size(); ++k) {
        auto& [a, bb, c] = tris[k];
        int s = signs[k];
        std::array<std::pair<Root, Root>, 3> cyc{{{a, bb}, {bb, c}, {c, a}}};
        for (auto& [x, y] : cyc) {
            int mag = string_down(t, x.c, y.c) + 1;
            b.N_[{x.c, y.c}] = s * mag;
            b.N_[{y.c, x.c}] = -s * mag;
            b.N_[{neg(x.c), neg(y.c)}] = -s * mag;
            b.N_[{neg(y.c), neg(x.c)}] = s * mag;
        }
    }
    b.tri_signs_ = signs;
    b.flips_ = flips.empty() ? std::vector<int>(pos.size(), 1) : flips;
    auto eta = [&](const Coords& c) {
        Root r = make_root(t, c);
        int i = rootsys::positive_index(r);
        return b.flips_[i >= 0 ? i : -(i + 1)];
    };
    for (auto& [key, v] : b.N_) v *= eta(key.first) * eta(key.second) * eta(add(key.first, key.second));
    b.finish();
    return b;
}

namespace {
struct Target {
    Coords g, d;
    std::vector<std::array<int, 3>> f;  // i, j, coefficient
};
std::vector<Target> displayed_relations(SystemType t) {
    switch (t) {
        case SystemType::A1: return {};
        case SystemType::A2:
            return {{{1, 0}, {0, 1}, {{1, 1, 1}}},
                    {{1, 0}, {-1, -1}, {{1, 1, -1}}},
                    {{0, 1}, {-1, -1}, {{1, 1, 1}}},
                    {{1, 1}, {-1, 0}, {{1, 1, -1}}},
                    {{1, 1}, {0, -1}, {{1, 1, 1}}}};
        case SystemType::B2: return {{{1, 0}, {0, 1}, {{1, 1, -1}, {1, 2, -1}}}, {{1, 1}, {0, 1}, {{1, 1, -2}}}};
        case SystemType::G2:
            return {{{1, 0}, {0, 1}, {{1, 1, 1}, {1, 2, -1}, {1, 3, -1}, {2, 3, 1}}},
                    {{1, 1}, {0, 1}, {{1, 1, 2}, {1, 2, 3}, {2, 1, 3}}},
                    {{1, 0}, {1, 3}, {{1, 1, 1}}},
                    {{1, 2}, {0, 1}, {{1, 1, -3}}},
                    {{1, 1}, {1, 2}, {{1, 1, 3}}}};
    }
    return {};
}

ChevalleyBasis calibrate(SystemType t) {
    auto tris = root_triangles(t);
    size_t nt = tris.size();
    // default: first Jacobi-valid sign vector, + before -
    ChevalleyBasis base;
    bool found = false;
    for (size_t mask = 0; mask < (size_t(1) << nt) && !found; ++mask) {
        std::vector<int> signs(nt);
        for (size_t k = 0; k < nt; ++k) signs[k] = (mask >> (nt - 1 - k)) & 1 ? -1 : 1;
        ChevalleyBasis b = make_basis(t, signs, {});
        if (b.jacobi_holds()) {
            base = b;
            found = true;
        }
    }
    if (!found) throw GroupError("no Jacobi-valid sign choice");
    auto targets = displayed_relations(t);
    size_t npos = rootsys::positive_roots(t).size();
    if (targets.empty()) return base;
    // constants of the default basis; a flip vector eta rescales the (i,j) constant by
    // eta_g^i eta_d^j eta_{ig+jd}
    std::vector<CommutatorRelation> rel;
    for (auto& tg : targets) rel.push_back(commutator_relation(base, make_root(t, tg.g), make_root(t, tg.d)));
    for (size_t mask = 0; mask < (size_t(1) << npos); ++mask) {
        std::vector<int> eta(npos);
        for (size_t k = 0; k < npos; ++k) eta[k] = (mask >> (npos - 1 - k)) & 1 ? -1 : 1;
        auto e = [&](const Root& r) {
            int i = rootsys::positive_index(r);
            return eta[i >= 0 ? i : -(i + 1)];
        };
        bool ok = true;
        for (size_t k = 0; k < targets.size() && ok; ++k) {
            auto& tg = targets[k];
            Root g = make_root(t, tg.g), d = make_root(t, tg.d);
            std::map<std::pair<int, int>, mpq_class> got;
            for (auto& f : rel[k].factors) {
                int s = ((f.i % 2) ? e(g) : 1) * ((f.j % 2) ? e(d) : 1) * e(f.root);
                got[{f.i, f.j}] = f.coeff * s;
            }
            for (auto& [key, v] : got) {
                auto it = std::find_if(tg.f.begin(), tg.f.end(),
                                       [&](auto& x) { return x[0] == key.first && x[1] == key.second; });
                if ((it == tg.f.end() && v != 0) || (it != tg.f.end() && v != (*it)[2])) ok = false;
            }
            for (auto& x : tg.f)
                if (!got.count({x[0], x[1]})) ok = false;
        }
        if (ok) return make_basis(t, base.triangle_signs(), eta);
    }
    throw GroupError(std::string("sign calibration failed for ") + rootsys::type_name(t));
}
}  // namespace

const ChevalleyBasis& build_basis(SystemType t) {
    switch (t) {
        case SystemType::A1: {
            static const ChevalleyBasis b = calibrate(SystemType::A1);
            return b;
        }
        case SystemType::A2: {
            static const ChevalleyBasis b = calibrate(SystemType::A2);
            return b;
        }
        case SystemType::B2: {
            static const ChevalleyBasis b = calibrate(SystemType::B2);
            return b;
        }
        case SystemType::G2: {
            static const ChevalleyBasis b = calibrate(SystemType::G2);
            return b;
        }
    }
    throw GroupError("unknown system");
}

// ---------------------------------------------------------------- elements

namespace {
Matrix adjoint_root_element(const ChevalleyBasis& b, const Root& g, const RingElement& p) {
    const SpecPtr& s = p.spec();
    int n = b.dim();
    auto& terms = b.exp_terms(g);
    Matrix m(s, n, Realization::Adjoint);
    std::vector<RingElement> pw{RingElement::one(s)};
    for (size_t k = 1; k < terms.size(); ++k) pw.push_back(pw.back() * p);
    for (size_t k = 0; k < terms.size(); ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const mpq_class& c = terms[k][size_t(i) * n + j];
                if (c != 0) m(i, j) += pw[k] * RingElement::constant(s, c);
            }
    return m;
}
Matrix diag3(const SpecPtr& s, Realization r, const RingElement& a, const RingElement& b, const RingElement& c) {
    Matrix m(s, 3, r);
    m(0, 0) = a, m(1, 1) = b, m(2, 2) = c;
    return m;
}
std::pair<int, int> pgl3_pos(const Root& g) {
    // a1 -> E12, a2 -> E23, a1+a2 -> E13, negatives transposed
    Coords c = g.positive() ? g.c : neg(g.c);
    std::pair<int, int> p = c == Coords{1, 0} ? std::make_pair(0, 1) : c == Coords{0, 1} ? std::make_pair(1, 2) : std::make_pair(0, 2);
    if (!g.positive()) std::swap(p.first, p.second);
    return p;
}
}  // namespace

Matrix root_element(SystemType t, Realization r, const Root& g, const RingElement& p) {
    check_realization(t, r);
    if (g.type != t) throw GroupError("root from another system");
    const SpecPtr& s = p.spec();
    switch (r) {
        case Realization::Adjoint: return adjoint_root_element(build_basis(t), g, p);
        case Realization::Pgl3: {
            Matrix m = Matrix::identity(s, 3, r);
            auto [i, j] = pgl3_pos(g);
            m(i, j) = p;
            return m;
        }
        case Realization::A1Std: {
            // basis (e_a, e_-a, h'); rows/cols as in the displayed 3x3 matrices
            Matrix m = Matrix::identity(s, 3, r);
            if (g.positive()) {
                m(0, 1) = p * p, m(0, 2) = p * 2, m(2, 1) = p;
            } else {
                m(1, 0) = p * p, m(1, 2) = p * 2, m(2, 0) = p;
            }
            return m;
        }
    }
    throw GroupError("bad realization");
}

Matrix torus_element(SystemType t, Realization r, const Root& g, const RingElement& u) {
    check_realization(t, r);
    const SpecPtr& s = u.spec();
    RingElement ui = u.inverse();
    auto one = RingElement::one(s);
    switch (r) {
        case Realization::Adjoint: {
            const ChevalleyBasis& b = build_basis(t);
            Matrix m = Matrix::identity(s, b.dim(), r);
            for (int i = 0; i < b.dim(); ++i) {
                if (b.order()[i].is_h) continue;
                int k = rootsys::cartan_integer(b.order()[i].root, g);
                m(i, i) = k >= 0 ? u.pow(k) : ui.pow(-k);
            }
            return m;
        }
        case Realization::Pgl3: {
            RingElement v = g.positive() ? u : ui, vi = g.positive() ? ui : u;
            Coords c = g.positive() ? g.c : neg(g.c);
            if (c == Coords{1, 0}) return diag3(s, r, v, vi, one);
            if (c == Coords{0, 1}) return diag3(s, r, one, v, vi);
            return diag3(s, r, v, one, vi);
        }
        case Realization::A1Std: {
            RingElement v = g.positive() ? u : ui, vi = g.positive() ? ui : u;
            return diag3(s, r, v * v, vi * vi, one);
        }
    }
    throw GroupError("bad realization");
}

Matrix diag_torus(SystemType t, Realization r, int i, const RingElement& u) {
    check_realization(t, r);
    if (i < 1 || i > rootsys::rank(t)) throw GroupError("torus index out of range");
    const SpecPtr& s = u.spec();
    RingElement ui = u.inverse();
    auto one = RingElement::one(s);
    switch (r) {
        case Realization::Adjoint: {
            const ChevalleyBasis& b = build_basis(t);
            Matrix m = Matrix::identity(s, b.dim(), r);
            for (int k = 0; k < b.dim(); ++k) {
                if (b.order()[k].is_h) continue;
                int e = b.order()[k].root.c[i - 1];
                m(k, k) = e >= 0 ? u.pow(e) : ui.pow(-e);
            }
            return m;
        }
        case Realization::Pgl3: return i == 1 ? diag3(s, r, u, one, one) : diag3(s, r, u, u, one);
        case Realization::A1Std: return diag3(s, r, u, ui, one);
    }
    throw GroupError("bad realization");
}

Matrix weyl_element(SystemType t, Realization r, const Root& g, const RingElement& u) {
    RingElement ui = u.inverse();
    return root_element(t, r, g, u) * root_element(t, r, -g, -ui) * root_element(t, r, g, u);
}

// ---------------------------------------------------------------- words

namespace {
Word node(WordNode n) { return std::make_shared<const WordNode>(std::move(n)); }

class WordParser {
public:
    WordParser(const WordContext& ctx, const std::string& text, int depth) : ctx_(ctx), s_(text), depth_(depth) {
        if (depth > 32) throw GroupError("word definitions nest too deeply");
    }
    Word parse() {
        Word w = product();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& m) {
        throw GroupError("word parse error in '" + s_ + "' at " + std::to_string(pos_) + ": " + m);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Word product() {
        std::vector<Word> parts;
        for (;;) {
            skip();
            if (pos_ >= s_.size() || s_[pos_] == ')' || s_[pos_] == ',' || s_[pos_] == ']') break;
            if (s_[pos_] == '*' || s_[pos_] == '.') {
                ++pos_;
                continue;
            }
            parts.push_back(factor());
        }
        if (parts.empty()) return node({});
        if (parts.size() == 1) return parts[0];
        return word_product(parts);
    }
    Word factor() {
        Word p = primary();
        while (eat('^')) {
            skip();
            bool negx = eat('-');
            skip();
            size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
            if (st == pos_) fail("expected exponent");
            long e = std::stol(s_.substr(st, pos_ - st));
            if (negx) e = -e;
            WordNode n;
            if (e == -1) {
                n.kind = WordNode::Kind::Inverse;
                n.kids = {p};
            } else {
                n.kind = WordNode::Kind::Power;
                n.kids = {p};
                n.exponent = e;
            }
            p = node(n);
        }
        return p;
    }
    // text up to the matching close bracket, split at top-level separators
    std::vector<std::string> args(char sep, char close) {
        std::vector<std::string> out;
        std::string cur;
        int depth = 0;
        while (pos_ < s_.size()) {
            char c = s_[pos_++];
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') {
                if (depth == 0) {
                    if (c != close) fail("mismatched bracket");
                    out.push_back(cur);
                    return out;
                }
                --depth;
            }
            if (c == sep && depth == 0) {
                out.push_back(cur);
                cur.clear();
                continue;
            }
            cur += c;
        }
        fail("unterminated argument list");
    }
    static std::string trim(const std::string& x) {
        size_t a = x.find_first_not_of(" \t\n"), b = x.find_last_not_of(" \t\n");
        return a == std::string::npos ? "" : x.substr(a, b - a + 1);
    }
    Word primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Word w = product();
            if (!eat(')')) fail("expected ')'");
            return w;
        }
        if (c == '[') {
            ++pos_;
            Word a = product();
            if (!eat(',')) fail("expected ',' in commutator");
            Word b = product();
            if (!eat(']')) fail("expected ']'");
            WordNode n;
            n.kind = WordNode::Kind::Commutator;
            n.kids = {a, b};
            return node(n);
        }
        if (c == '1') {
            ++pos_;
            return node({});
        }
        if (!(std::isalpha((unsigned char)c) || c == '_')) fail("unexpected '" + std::string(1, c) + "'");
        size_t st = pos_;
        while (pos_ < s_.size() && (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) ++pos_;
        std::string id = s_.substr(st, pos_ - st);
        skip();
        bool call = pos_ < s_.size() && s_[pos_] == '(';
        if (call && (id == "x" || id == "h" || id == "w")) {
            ++pos_;
            auto a = args(',', ')');
            if (a.size() != 2) fail(id + "(root, param) takes two arguments");
            WordNode n;
            n.kind = id == "x" ? WordNode::Kind::X : id == "h" ? WordNode::Kind::H : WordNode::Kind::W;
            try {
                n.root = rootsys::parse_root(ctx_.type, a[0]);
            } catch (const rootsys::RootError& e) {
                throw GroupError(e.what());
            }
            n.param = trim(a[1]);
            if (n.param.empty()) fail("empty parameter");
            return node(n);
        }
        if (call && (id == "t1" || id == "t2")) {
            ++pos_;
            auto a = args(',', ')');
            if (a.size() != 1) fail(id + "(param) takes one argument");
            WordNode n;
            n.kind = WordNode::Kind::T;
            n.tindex = id == "t1" ? 1 : 2;
            if (n.tindex > rootsys::rank(ctx_.type)) fail("t2 needs a rank-two system");
            n.param = trim(a[0]);
            return node(n);
        }
        if (call && id == "mat") {
            ++pos_;
            auto rows = args(';', ')');
            WordNode n;
            n.kind = WordNode::Kind::Mat;
            for (auto& r : rows) {
                std::vector<std::string> cells;
                std::stringstream ss(r);
                std::string cell;
                while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
                n.mat.push_back(cells);
            }
            for (auto& r : n.mat)
                if (r.size() != n.mat.size()) fail("matrix literal must be square");
            return node(n);
        }
        auto it = ctx_.defs.find(id);
        if (it == ctx_.defs.end()) fail("unknown name '" + id + "'");
        return WordParser(ctx_, it->second, depth_ + 1).parse();
    }

    const WordContext& ctx_;
    std::string s_;
    size_t pos_ = 0;
    int depth_;
};

std::string paren(const std::string& p) {
    bool simple = std::all_of(p.begin(), p.end(), [](char c) { return std::isalnum((unsigned char)c) || c == '_'; });
    return simple ? p : "(" + p + ")";
}
}  // namespace

Word parse_word(const WordContext& ctx, const std::string& text) { return WordParser(ctx, text, 0).parse(); }

Word word_product(std::vector<Word> parts) {
    WordNode n;
    n.kind = WordNode::Kind::Product;
    for (auto& p : parts) {
        if (p->kind == WordNode::Kind::Product)
            n.kids.insert(n.kids.end(), p->kids.begin(), p->kids.end());
        else if (p->kind != WordNode::Kind::Identity)
            n.kids.push_back(p);
    }
    if (n.kids.empty()) return node({});
    if (n.kids.size() == 1) return n.kids[0];
    return node(n);
}
Word letter_x(const Root& r, const std::string& p) {
    WordNode n;
    n.kind = WordNode::Kind::X, n.root = r, n.param = p;
    return node(n);
}
Word letter_h(const Root& r, const std::string& p) {
    WordNode n;
    n.kind = WordNode::Kind::H, n.root = r, n.param = p;
    return node(n);
}
Word letter_w(const Root& r, const std::string& p) {
    WordNode n;
    n.kind = WordNode::Kind::W, n.root = r, n.param = p;
    return node(n);
}

Word word_inverse(const Word& w) {
    WordNode n = *w;
    using K = WordNode::Kind;
    switch (w->kind) {
        case K::Identity: return w;
        case K::X:
        case K::W: n.param = "-" + paren(w->param); return node(n);
        case K::H:
        case K::T: n.param = paren(w->param) + "^-1"; return node(n);
        case K::Mat: {
            WordNode inv;
            inv.kind = K::Inverse;
            inv.kids = {w};
            return node(inv);
        }
        case K::Product: {
            std::vector<Word> parts;
            for (auto it = w->kids.rbegin(); it != w->kids.rend(); ++it) parts.push_back(word_inverse(*it));
            return word_product(parts);
        }
        case K::Inverse: return w->kids[0];
        case K::Power: n.exponent = -w->exponent; return node(n);
        case K::Commutator: n.kids = {w->kids[1], w->kids[0]}; return node(n);
    }
    return w;
}

std::string word_to_string(const Word& w) {
    using K = WordNode::Kind;
    switch (w->kind) {
        case K::Identity: return "1";
        case K::X: return "x(" + w->root.to_string() + ", " + w->param + ")";
        case K::H: return "h(" + w->root.to_string() + ", " + w->param + ")";
        case K::W: return "w(" + w->root.to_string() + ", " + w->param + ")";
        case K::T: return "t" + std::to_string(w->tindex) + "(" + w->param + ")";
        case K::Mat: {
            std::string s = "mat(";
            for (size_t i = 0; i < w->mat.size(); ++i) {
                if (i) s += "; ";
                for (size_t j = 0; j < w->mat[i].size(); ++j) s += (j ? ", " : "") + w->mat[i][j];
            }
            return s + ")";
        }
        case K::Product: {
            std::string s;
            for (size_t i = 0; i < w->kids.size(); ++i) s += (i ? " " : "") + word_to_string(w->kids[i]);
            return s;
        }
        case K::Inverse: return "(" + word_to_string(w->kids[0]) + ")^-1";
        case K::Power: return "(" + word_to_string(w->kids[0]) + ")^" + std::to_string(w->exponent);
        case K::Commutator: return "[" + word_to_string(w->kids[0]) + ", " + word_to_string(w->kids[1]) + "]";
    }
    return "?";
}

namespace {
Word map_params_impl(const Word& w, const std::function<std::string(const std::string&)>& f, int& k, int target) {
    using K = WordNode::Kind;
    WordNode n = *w;
    switch (w->kind) {
        case K::X:
        case K::H:
        case K::W:
        case K::T:
            if (target < 0 || k == target) n.param = f(n.param);
            ++k;
            return node(n);
        case K::Mat:
            for (auto& r : n.mat)
                for (auto& c : r) {
                    if (target < 0 || k == target) c = f(c);
                    ++k;
                }
            return node(n);
        case K::Identity: return w;
        default:
            for (auto& kid : n.kids) kid = map_params_impl(kid, f, k, target);
            return node(n);
    }
}
}  // namespace

Word map_params(const Word& w, const std::function<std::string(const std::string&)>& f) {
    int k = 0;
    return map_params_impl(w, f, k, -1);
}
int count_params(const Word& w) {
    int k = 0;
    map_params_impl(w, [](const std::string& s) { return s; }, k, -1);
    return k;
}
Word mutate_param(const Word& w, int target, const std::function<std::string(const std::string&)>& f) {
    int k = 0;
    return map_params_impl(w, f, k, target);
}

Matrix evaluate_word(SystemType t, Realization r, const SpecPtr& s, const Word& w) {
    using K = WordNode::Kind;
    check_realization(t, r);
    int n = realization_dim(t, r);
    auto param = [&](const std::string& p) { return exactring::parse_element(s, p); };
    switch (w->kind) {
        case K::Identity: return Matrix::identity(s, n, r);
        case K::X: return root_element(t, r, w->root, param(w->param));
        case K::H: return torus_element(t, r, w->root, param(w->param));
        case K::W: return weyl_element(t, r, w->root, param(w->param));
        case K::T: return diag_torus(t, r, w->tindex, param(w->param));
        case K::Mat: {
            if ((int)w->mat.size() != n) throw GroupError("matrix literal has the wrong size for this realization");
            Matrix m(s, n, r);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = param(w->mat[i][j]);
            return m;
        }
        case K::Product: {
            Matrix m = evaluate_word(t, r, s, w->kids[0]);
            for (size_t i = 1; i < w->kids.size(); ++i) m = m * evaluate_word(t, r, s, w->kids[i]);
            return m;
        }
        case K::Inverse:
            if (w->kids[0]->kind == K::Mat) return evaluate_word(t, r, s, w->kids[0]).inverse();
            return evaluate_word(t, r, s, word_inverse(w->kids[0]));
        case K::Power: {
            Word base = w->exponent < 0 ? word_inverse(w->kids[0]) : w->kids[0];
            return evaluate_word(t, r, s, base).pow(std::abs(w->exponent));
        }
        case K::Commutator: {
            Matrix a = evaluate_word(t, r, s, w->kids[0]), b = evaluate_word(t, r, s, w->kids[1]);
            Matrix ai = evaluate_word(t, r, s, word_inverse(w->kids[0]));
            Matrix bi = evaluate_word(t, r, s, word_inverse(w->kids[1]));
            return a * b * ai * bi;
        }
    }
    throw GroupError("bad word");
}

Matrix evaluate_word(const WordContext& ctx, Realization r, const SpecPtr& s, const std::string& text) {
    return evaluate_word(ctx.type, r, s, parse_word(ctx, text));
}

// ---------------------------------------------------------------- relations

std::string CommutatorRelation::text() const {
    std::ostringstream os;
    os << "[x(" << g.to_string() << ", t), x(" << d.to_string() << ", u)] = ";
    if (factors.empty()) os << "1";
    for (size_t k = 0; k < factors.size(); ++k) {
        auto& f = factors[k];
        os << (k ? " " : "") << "x(" << f.root.to_string() << ", ";
        mpq_class c = f.coeff;
        std::string mono;
        auto put = [&](const char* v, int e) {
            if (!e) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        put("t", f.i);
        put("u", f.j);
        if (c == 1) os << mono;
        else if (c == -1) os << "-" << mono;
        else os << c.get_str() << "*" << mono;
        os << ")";
    }
    return os.str();
}

namespace {
std::optional<std::vector<RingElement>> peel_with(const ChevalleyBasis& b, Matrix M, const std::vector<Root>& roots) {
    std::vector<RingElement> out;
    auto simple = rootsys::simple_roots(b.type());
    for (auto& rho : roots) {
        int k = 0, pk = 0;
        for (; k < (int)simple.size(); ++k)
            if ((pk = rootsys::cartan_integer(rho, simple[k])) != 0) break;
        mpq_class inv(1, std::abs(pk));
        if (pk < 0) inv = -inv;
        RingElement c = -M(b.index_of(rho), b.index_of_h(k)) * RingElement::constant(M.spec(), inv);
        out.push_back(c);
        M = adjoint_root_element(b, rho, -c) * M;
    }
    if (!M.is_identity()) return std::nullopt;
    return out;
}
}  // namespace

std::optional<std::vector<RingElement>> peel_coordinates(SystemType t, const Matrix& M, const std::vector<Root>& roots) {
    if (M.realization() != Realization::Adjoint) throw GroupError("coordinate peeling needs the adjoint realization");
    return peel_with(build_basis(t), M, roots);
}

CommutatorRelation commutator_relation(const ChevalleyBasis& b, const Root& g, const Root& d) {
    if (g == d || g == -d) throw GroupError("commutator relation needs non-proportional roots");
    SystemType t = b.type();
    auto s = RingSpec::poly({"t", "u"});
    auto T = RingElement::variable(s, "t"), U = RingElement::variable(s, "u");
    Matrix C = adjoint_root_element(b, g, T) * adjoint_root_element(b, d, U) * adjoint_root_element(b, g, -T) *
               adjoint_root_element(b, d, -U);
    struct Cand {
        int i, j;
        Root r;
    };
    std::vector<Cand> cands;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            Coords c{i * g.c[0] + j * d.c[0], i * g.c[1] + j * d.c[1]};
            if (is_root_c(t, c)) cands.push_back({i, j, make_root(t, c)});
        }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return a.i + a.j != b.i + b.j ? a.i + a.j < b.i + b.j : a.i < b.i;
    });
    std::vector<Root> roots;
    for (auto& c : cands) roots.push_back(c.r);
    auto coords = peel_with(b, C, roots);
    if (!coords) throw GroupError("commutator does not factor over the expected roots");
    CommutatorRelation rel{g, d, {}};
    for (size_t k = 0; k < cands.size(); ++k) {
        const Poly& p = (*coords)[k].numerator();
        if (p.is_zero()) continue;
        exactring::Mono m = exactring::mono_zero();
        m[0] = uint16_t(cands[k].i), m[1] = uint16_t(cands[k].j);
        if (p.size() != 1 || p.terms()[0].m != m) throw GroupError("unexpected commutator coefficient shape");
        rel.factors.push_back({cands[k].r, cands[k].i, cands[k].j, p.terms()[0].c});
    }
    return rel;
}

CommutatorRelation commutator_relation(SystemType t, const Root& g, const Root& d) {
    return commutator_relation(build_basis(t), g, d);
}

RingElement trace_poly(SystemType t, const Root& g) {
    auto s = RingSpec::poly({"t", "s"});
    auto T = RingElement::variable(s, "t"), S = RingElement::variable(s, "s");
    Realization r = t == SystemType::A1 ? Realization::A1Std : Realization::Adjoint;
    return (root_element(t, r, g, T) * root_element(t, r, -g, S)).trace();
}

}  // namespace chev::chevgroup
