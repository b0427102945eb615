#pragma once
// Dense small matrices over F_p (p < 256) for the exhaustive searches.

#include "chev/chevgroup.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chev::finite {

using chevgroup::Realization;
using rootsys::Root;
using rootsys::SystemType;

struct FpMat {
    int n = 0;
    std::vector<uint8_t> a;

    FpMat() = default;
    explicit FpMat(int n_) : n(n_), a(size_t(n_) * n_, 0) {}
    uint8_t& operator()(int i, int j) { return a[size_t(i) * n + j]; }
    uint8_t operator()(int i, int j) const { return a[size_t(i) * n + j]; }
    bool operator==(const FpMat& o) const { return a == o.a; }
    bool operator<(const FpMat& o) const { return a < o.a; }
    std::string key() const { return std::string(a.begin(), a.end()); }
};

struct FpMatHash {
    size_t operator()(const FpMat& m) const;
};

// Arithmetic in GL_n(F_p), optionally modulo scalars (pgl3).
class FpField {
public:
    FpField(int p, bool projective);
    int p() const { return p_; }
    bool projective() const { return proj_; }
    int inv(int x) const { return inv_[x]; }

    FpMat identity(int n) const;
    FpMat mul(const FpMat& x, const FpMat& y) const;  // canonical
    FpMat inverse(const FpMat& x) const;              // canonical; throws when singular
    FpMat canon(FpMat x) const;  // projective: first nonzero entry (row-major) scaled to 1
    int det(const FpMat& x) const;
    bool is_identity(const FpMat& x) const;

private:
    int p_;
    bool proj_;
    std::vector<int> inv_;
};

// Chevalley generators over F_p, cached per (root, parameter).
class FpChevalley {
public:
    FpChevalley(SystemType t, Realization r, int p);
    SystemType type() const { return t_; }
    Realization realization() const { return r_; }
    int p() const { return F_.p(); }
    int dim() const { return n_; }
    const FpField& field() const { return F_; }

    const FpMat& x(const Root& g, int c) const;
    FpMat h(const Root& g, int u) const;  // u != 0
    FpMat w(const Root& g) const;         // w_g(1)
    FpMat from_matrix(const chevgroup::Matrix& m) const;
    chevgroup::Matrix to_matrix(const FpMat& m) const;
    // evaluate a word over Z/p
    FpMat eval(const chevgroup::Word& w) const;

private:
    SystemType t_;
    Realization r_;
    FpField F_;
    int n_;
    std::vector<Root> roots_;
    std::vector<std::vector<FpMat>> x_;
};

std::string fp_to_string(const FpMat& m);

}  // namespace chev::finite
