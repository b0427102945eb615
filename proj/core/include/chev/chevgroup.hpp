#pragma once
// Chevalley basis, adjoint / PGL3 / standard-A1 matrices, group words.

#include "chev/exactring.hpp"
#include "chev/rootsys.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace chev::chevgroup {

using exactring::RingElement;
using exactring::SpecPtr;
using rootsys::Root;
using rootsys::SystemType;

enum class Realization { Adjoint, Pgl3, A1Std };
const char* realization_name(Realization r);
Realization realization_from_name(const std::string& s);
// throws when the realization does not exist for the system
void check_realization(SystemType t, Realization r);

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(SpecPtr s, int n, Realization r);
    static Matrix identity(SpecPtr s, int n, Realization r);

    int n() const { return n_; }
    Realization realization() const { return real_; }
    const SpecPtr& spec() const { return spec_; }
    RingElement& operator()(int i, int j) { return a_[size_t(i) * n_ + j]; }
    const RingElement& operator()(int i, int j) const { return a_[size_t(i) * n_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const RingElement& c) const;
    Matrix transpose() const;
    Matrix pow(long k) const;  // k >= 0, or k < 0 via inverse()
    Matrix inverse() const;    // Gauss-Jordan with unit pivots
    RingElement trace() const;
    RingElement det() const;
    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& o) const { return (*this - o).is_zero(); }
    // entrywise substitution into another ring
    Matrix map(const std::function<RingElement(const RingElement&)>& f, const SpecPtr& target) const;
    std::string to_string() const;

private:
    SpecPtr spec_;
    int n_ = 0;
    Realization real_ = Realization::Adjoint;
    std::vector<RingElement> a_;
};

// M = lambda * N for a unit lambda
bool pgl3_equal(const Matrix& M, const Matrix& N);

struct BasisVector {
    bool is_h = false;
    Root root;     // when !is_h
    int h = 0;     // simple index when is_h
};

class ChevalleyBasis {
public:
    SystemType type() const { return type_; }
    int dim() const { return (int)order_.size(); }
    const std::vector<BasisVector>& order() const { return order_; }
    int index_of(const Root& r) const;
    int index_of_h(int i) const;
    // N_{g,d}: [e_g, e_d] = N e_{g+d}; 0 when g+d is not a root
    int structure_constant(const Root& g, const Root& d) const;
    // basis-vector sign flips applied on top of the default triangle signs
    const std::vector<int>& flips() const { return flips_; }
    const std::vector<int>& triangle_signs() const { return tri_signs_; }
    // [x, y] in basis coordinates (rational)
    std::vector<mpq_class> bracket(int x, int y) const;
    const std::vector<mpq_class>& ad(const Root& r) const;  // dense dim x dim, row-major
    // ad(e_r)^k / k!, k = 0..K
    const std::vector<std::vector<mpq_class>>& exp_terms(const Root& r) const;
    bool jacobi_holds() const;

private:
    friend const ChevalleyBasis& build_basis(SystemType t);
    friend ChevalleyBasis make_basis(SystemType t, const std::vector<int>& signs, const std::vector<int>& flips);
    void finish();
    SystemType type_ = SystemType::A1;
    std::vector<BasisVector> order_;
    std::map<std::pair<std::array<int, 2>, std::array<int, 2>>, int> N_;
    std::vector<int> flips_, tri_signs_;
    std::vector<std::vector<mpq_class>> ad_;                 // per root index in all_roots order
    std::vector<std::vector<std::vector<mpq_class>>> exp_;  // per root
};

// Calibrated basis (cached). Deterministic.
const ChevalleyBasis& build_basis(SystemType t);
// Uncalibrated construction for given triangle signs / flips (tests and calibration).
ChevalleyBasis make_basis(SystemType t, const std::vector<int>& signs, const std::vector<int>& flips);
// root triangles {a, b, c} with a + b + c = 0, one per +/- pair, in enumeration order
std::vector<std::array<Root, 3>> root_triangles(SystemType t);

int realization_dim(SystemType t, Realization r);
Matrix root_element(SystemType t, Realization r, const Root& g, const RingElement& p);
Matrix torus_element(SystemType t, Realization r, const Root& g, const RingElement& u);
Matrix diag_torus(SystemType t, Realization r, int i, const RingElement& u);  // i = 1, 2
Matrix weyl_element(SystemType t, Realization r, const Root& g, const RingElement& u);

// ---------------------------------------------------------------- words

struct WordNode;
using Word = std::shared_ptr<const WordNode>;

struct WordNode {
    enum class Kind { Identity, X, H, W, T, Mat, Product, Inverse, Power, Commutator };
    Kind kind = Kind::Identity;
    Root root;                                  // X, H, W
    int tindex = 0;                             // T
    std::string param;                          // X, H, W, T
    std::vector<std::vector<std::string>> mat;  // Mat
    std::vector<Word> kids;                     // Product, Inverse(1), Power(1), Commutator(2)
    long exponent = 1;                          // Power
};

struct WordContext {
    SystemType type = SystemType::A1;
    std::map<std::string, std::string> defs;  // named subwords
};

Word parse_word(const WordContext& ctx, const std::string& text);
std::string word_to_string(const Word& w);
Word word_product(std::vector<Word> parts);
Word word_inverse(const Word& w);
Word letter_x(const Root& r, const std::string& p);
Word letter_h(const Root& r, const std::string& p);
Word letter_w(const Root& r, const std::string& p);
// rewrite each parameter slot; f returns the new text
Word map_params(const Word& w, const std::function<std::string(const std::string&)>& f);
// number of parameter slots (X/H/W/T params and matrix entries), in evaluation order
int count_params(const Word& w);
// replace parameter slot #k by f(old)
Word mutate_param(const Word& w, int k, const std::function<std::string(const std::string&)>& f);

Matrix evaluate_word(SystemType t, Realization r, const SpecPtr& s, const Word& w);
Matrix evaluate_word(const WordContext& ctx, Realization r, const SpecPtr& s, const std::string& text);

// ---------------------------------------------------------------- relations

struct RelationFactor {
    Root root;
    int i = 0, j = 0;
    mpq_class coeff;  // factor x_root(coeff t^i u^j)
};
struct CommutatorRelation {
    Root g, d;
    std::vector<RelationFactor> factors;  // product order
    std::string text() const;             // "[x_g(t),x_d(u)] = ..."
};
// Peel a unipotent element into root coordinates, roots given in a height-compatible order.
// Returns nullopt when the remainder is not the identity.
std::optional<std::vector<RingElement>> peel_coordinates(SystemType t, const Matrix& M,
                                                         const std::vector<Root>& roots);
CommutatorRelation commutator_relation(SystemType t, const Root& g, const Root& d);
CommutatorRelation commutator_relation(const ChevalleyBasis& b, const Root& g, const Root& d);
// trace of x_g(t) x_{-g}(s) (adjoint; a1std for A1 gives the same value), in Q[t,s]
RingElement trace_poly(SystemType t, const Root& g);

}  // namespace chev::chevgroup
