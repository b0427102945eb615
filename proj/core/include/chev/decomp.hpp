#pragma once
// Rank-one identities, Gauss decomposition in A1 over Z/p^k, brute-force Bruhat
// decomposition over F_p, factorization checks.

#include "chev/chevgroup.hpp"
#include "chev/finite.hpp"

#include <optional>
#include <unordered_map>
#include <string>
#include <vector>

namespace chev::decomp {

using chevgroup::Matrix;
using chevgroup::Realization;
using chevgroup::Word;
using exactring::RingElement;
using exactring::SpecPtr;
using rootsys::Root;
using rootsys::SystemType;

struct NoFactorization : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ElementNotInGroup : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingRule : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// x_g(v/(1+uv)) h_g(1+uv) x_{-g}(u/(1+uv)), the displayed rank-one factorization
// of x_{-g}(u) x_g(v). `corrected` uses h_g((1+uv)^-1), which is the true identity.
Word rank_one_factor(const Root& g, const RingElement& u, const RingElement& v, bool corrected = false);
// h_g(1-u) x_g(1+u) x_{-g}(u), equal to x_{-g}(u) x_g(1) when u^2 = 0
Word nilpotent_commute(const Root& g, const RingElement& u);

struct FactorizationCheck {
    bool equal = false;
    std::optional<Matrix> residual;  // target - claim, when not equal
};
FactorizationCheck verify_factorization(SystemType t, Realization r, const SpecPtr& ring, const Word& target,
                                        const Word& claim);

struct GaussFactorization {
    Word torus, u1, v, u2;
    long t = 1, a = 0, b = 0, c = 0;  // residues mod p^k
    Word word() const;
};
// M = t1(t) x_a(a) x_-a(b) x_a(c) in the a1std realization over Z/p^k (p odd)
GaussFactorization gauss_decompose_a1(const Matrix& M);

struct BruhatFactorization {
    Word torus, u, weyl, u_prime;
    std::vector<int> weyl_word;  // simple indices, reduced
    Word word() const;
};

// Weyl group element: reduced word and action on roots.
struct WeylElement {
    std::vector<int> word;
    std::vector<Root> image;  // image of all_roots(t)[i]
    Root apply(const Root& r) const;
};
std::vector<WeylElement> weyl_group(SystemType t);  // BFS order (by length)
// positive roots sent to negative roots
std::vector<Root> inversion_set(SystemType t, const WeylElement& w);

class BruhatSearch {
public:
    BruhatSearch(SystemType t, Realization r, int p);
    std::optional<BruhatFactorization> decompose(const finite::FpMat& M) const;
    // number of (w, u') with M u'^-1 w^-1 in B; 1 for every group element
    int count_cells(const finite::FpMat& M) const;
    const finite::FpChevalley& group() const { return G_; }
    const std::vector<WeylElement>& weyl() const { return W_; }

private:
    struct BEntry {
        int torus;
        std::vector<int> u;
    };
    template <class F>
    void scan(const finite::FpMat& M, F&& on_match) const;
    finite::FpChevalley G_;
    std::vector<WeylElement> W_;
    std::vector<finite::FpMat> wdot_;
    std::vector<std::vector<Root>> uw_;
    std::vector<std::pair<int, int>> torus_params_;
    std::unordered_map<finite::FpMat, BEntry, finite::FpMatHash> B_;
};

BruhatFactorization bruhat_bruteforce(SystemType t, Realization r, int p, const finite::FpMat& M);

}  // namespace chev::decomp
