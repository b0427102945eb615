#include "chev/finite.hpp"

#include <sstream>

namespace chev::finite {

size_t FpMatHash::operator()(const FpMat& m) const {
    // FNV-1a
    size_t h = 1469598103934665603ull;
    for (uint8_t b : m.a) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

FpField::FpField(int p, bool projective) : p_(p), proj_(projective), inv_(p, 0) {
    if (p < 2 || p > 255) throw chevgroup::GroupError("F_p matrices need 2 <= p <= 255");
    for (int x = 1; x < p; ++x)
        for (int y = 1; y < p; ++y)
            if (x * y % p == 1) inv_[x] = y;
    for (int x = 1; x < p; ++x)
        if (!inv_[x]) throw chevgroup::GroupError("modulus is not prime");
}

FpMat FpField::identity(int n) const {
    FpMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FpMat FpField::mul(const FpMat& x, const FpMat& y) const {
    int n = x.n;
    FpMat r(n);
    std::vector<int> acc(n);
    for (int i = 0; i < n; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int k = 0; k < n; ++k) {
            int v = x(i, k);
            if (!v) continue;
            const uint8_t* row = &y.a[size_t(k) * n];
            for (int j = 0; j < n; ++j) acc[j] += v * row[j];
        }
        for (int j = 0; j < n; ++j) r(i, j) = uint8_t(acc[j] % p_);
    }
    return proj_ ? canon(std::move(r)) : r;
}

FpMat FpField::canon(FpMat x) const {
    if (!proj_) return x;
    for (uint8_t v : x.a)
        if (v) {
            int s = inv_[v];
            if (s != 1)
                for (auto& e : x.a) e = uint8_t(e * s % p_);
            break;
        }
    return x;
}

FpMat FpField::inverse(const FpMat& x) const {
    int n = x.n;
    std::vector<int> a(x.a.begin(), x.a.end());
    FpMat r = identity(n);
    std::vector<int> b(r.a.begin(), r.a.end());
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a[size_t(i) * n + c]) {
                piv = i;
                break;
            }
        if (piv < 0) throw chevgroup::GroupError("singular matrix over F_p");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a[size_t(c) * n + j], a[size_t(piv) * n + j]);
                std::swap(b[size_t(c) * n + j], b[size_t(piv) * n + j]);
            }
        int s = inv_[a[size_t(c) * n + c]];
        for (int j = 0; j < n; ++j) {
            a[size_t(c) * n + j] = a[size_t(c) * n + j] * s % p_;
            b[size_t(c) * n + j] = b[size_t(c) * n + j] * s % p_;
        }
        for (int i = 0; i < n; ++i) {
            int f = a[size_t(i) * n + c];
            if (i == c || !f) continue;
            for (int j = 0; j < n; ++j) {
                a[size_t(i) * n + j] = ((a[size_t(i) * n + j] - f * a[size_t(c) * n + j]) % p_ + p_) % p_;
                b[size_t(i) * n + j] = ((b[size_t(i) * n + j] - f * b[size_t(c) * n + j]) % p_ + p_) % p_;
            }
        }
    }
    for (size_t k = 0; k < b.size(); ++k) r.a[k] = uint8_t(b[k]);
    return canon(std::move(r));
}

int FpField::det(const FpMat& x) const {
    int n = x.n;
    std::vector<int> a(x.a.begin(), x.a.end());
    long d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a[size_t(i) * n + c]) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a[size_t(c) * n + j], a[size_t(piv) * n + j]);
            d = (p_ - d) % p_;
        }
        int pv = a[size_t(c) * n + c];
        d = d * pv % p_;
        int s = inv_[pv];
        for (int i = c + 1; i < n; ++i) {
            int f = a[size_t(i) * n + c] * s % p_;
            if (!f) continue;
            for (int j = c; j < n; ++j) a[size_t(i) * n + j] = ((a[size_t(i) * n + j] - f * a[size_t(c) * n + j]) % p_ + p_) % p_;
        }
    }
    return int(d);
}

bool FpField::is_identity(const FpMat& x) const {
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j)
            if (x(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

FpChevalley::FpChevalley(SystemType t, Realization r, int p)
    : t_(t), r_(r), F_(p, r == Realization::Pgl3), n_(chevgroup::realization_dim(t, r)), roots_(rootsys::all_roots(t)) {
    auto spec = exactring::RingSpec::modular(p);
    for (auto& g : roots_) {
        std::vector<FpMat> row;
        for (int c = 0; c < p; ++c)
            row.push_back(from_matrix(chevgroup::root_element(t, r, g, exactring::RingElement::residue(spec, c))));
        x_.push_back(row);
    }
}

const FpMat& FpChevalley::x(const Root& g, int c) const {
    for (size_t i = 0; i < roots_.size(); ++i)
        if (roots_[i] == g) return x_[i][((c % p()) + p()) % p()];
    throw chevgroup::GroupError("root not in system");
}

FpMat FpChevalley::h(const Root& g, int u) const {
    auto spec = exactring::RingSpec::modular(p());
    return from_matrix(chevgroup::torus_element(t_, r_, g, exactring::RingElement::residue(spec, u)));
}

FpMat FpChevalley::w(const Root& g) const { return F_.mul(F_.mul(x(g, 1), x(-g, -1)), x(g, 1)); }

FpMat FpChevalley::from_matrix(const chevgroup::Matrix& m) const {
    FpMat r(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            const auto& e = m(i, j);
            long v;
            if (e.kind() == exactring::RingKind::Modular) {
                if (e.spec()->modulus() != p()) throw chevgroup::GroupError("modulus mismatch");
                v = e.residue_value();
            } else {
                auto q = e.as_rational();
                if (!q) throw chevgroup::GroupError("matrix entry is not a constant");
                v = exactring::rational_mod(*q, p());
            }
            r(i, j) = uint8_t(v);
        }
    return F_.canon(r);
}

chevgroup::Matrix FpChevalley::to_matrix(const FpMat& m) const {
    auto spec = exactring::RingSpec::modular(p());
    chevgroup::Matrix r(spec, m.n, r_);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r(i, j) = exactring::RingElement::residue(spec, m(i, j));
    return r;
}

FpMat FpChevalley::eval(const chevgroup::Word& w) const {
    return from_matrix(chevgroup::evaluate_word(t_, r_, exactring::RingSpec::modular(p()), w));
}

std::string fp_to_string(const FpMat& m) {
    std::ostringstream os;
    for (int i = 0; i < m.n; ++i) {
        os << "[";
        for (int j = 0; j < m.n; ++j) os << (j ? " " : "") << int(m(i, j));
        os << "]" << (i + 1 < m.n ? " " : "");
    }
    return os.str();
}

}  // namespace chev::finite
