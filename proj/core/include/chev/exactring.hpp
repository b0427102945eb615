#pragma once
// Exact commutative rings: Q[vars], Q[vars]/(rules), Q(vars), Z/n.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chev::exactring {

constexpr int kMaxVars = 16;
using Mono = std::array<uint16_t, kMaxVars>;

struct RingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAUnit : RingError {
    using RingError::RingError;
};
struct DenominatorNotInvertible : RingError {
    using RingError::RingError;
};
struct SpecMismatch : RingError {
    using RingError::RingError;
};

inline Mono mono_zero() { Mono m{}; return m; }
Mono mono_mul(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_div(const Mono& b, const Mono& a);      // b / a, requires a | b
unsigned mono_degree(const Mono& a);

// Sparse polynomial over Q. Terms kept sorted by raw exponent array, so
// equal polynomials have identical term vectors.
class Poly {
public:
    struct Term {
        Mono m;
        mpq_class c;
    };

    Poly() = default;
    static Poly constant(const mpq_class& c);
    static Poly variable(int idx);
    static Poly monomial(const Mono& m, const mpq_class& c);
    static Poly from_terms(std::vector<Term> terms);  // merges, drops zeros

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    mpq_class constant_term() const;
    size_t size() const { return t_.size(); }
    unsigned total_degree() const;
    unsigned degree_in(int var) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const mpq_class& c) const;
    Poly times_mono(const Mono& m) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const;  // arbitrary total order, for containers

    // exact division; nullopt when d does not divide *this
    std::optional<Poly> divide_exact(const Poly& d) const;
    // largest term under plain lex on exponent arrays
    const Term& lex_leading() const { return t_.back(); }
    Mono monomial_gcd() const;

private:
    std::vector<Term> t_;
};

// weighted degree, ties broken lexicographically with variable 0 most significant
struct MonoOrder {
    std::vector<int> weights;
    int nvars = 0;
    int compare(const Mono& a, const Mono& b) const;
    bool greater(const Mono& a, const Mono& b) const { return compare(a, b) > 0; }
    long wdeg(const Mono& a) const;
};

struct RewriteRule {
    Mono lhs;
    Poly rhs;
};

enum class RingKind { Poly, Quotient, Fraction, Modular };
const char* kind_name(RingKind k);
RingKind kind_from_name(const std::string& s);

class RingSpec;
using SpecPtr = std::shared_ptr<const RingSpec>;

class RingSpec {
public:
    static SpecPtr poly(std::vector<std::string> vars);
    static SpecPtr fraction(std::vector<std::string> vars);
    static SpecPtr modular(long modulus);
    // rules must strictly descend in the weighted order; weights default to 1
    static SpecPtr quotient(std::vector<std::string> vars, std::vector<RewriteRule> rules,
                            std::vector<int> weights = {});
    // rule "lead(p) -> lead(p) - p/lc(p)" oriented by the given weights
    static RewriteRule orient(const Poly& p, const MonoOrder& ord);

    RingKind kind() const { return kind_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const MonoOrder& order() const { return order_; }
    long modulus() const { return modulus_; }
    int var_index(const std::string& name) const;  // -1 when absent
    bool is_field() const;
    bool has_rules() const { return !rules_.empty(); }
    bool same_as(const RingSpec& o) const;
    std::string describe() const;

    Poly reduce(const Poly& p) const;  // normal form under the rules

private:
    RingSpec() = default;
    void validate();
    RingKind kind_ = RingKind::Poly;
    std::vector<std::string> vars_;
    std::vector<RewriteRule> rules_;
    MonoOrder order_;
    long modulus_ = 0;
};

class RingElement {
public:
    RingElement() = default;
    static RingElement zero(const SpecPtr& s);
    static RingElement one(const SpecPtr& s);
    static RingElement constant(const SpecPtr& s, const mpq_class& c);
    static RingElement constant(const SpecPtr& s, long c) { return constant(s, mpq_class(c)); }
    static RingElement variable(const SpecPtr& s, const std::string& name);
    static RingElement from_poly(const SpecPtr& s, const Poly& p);
    static RingElement residue(const SpecPtr& s, long r);

    const SpecPtr& spec() const { return spec_; }
    RingKind kind() const { return spec_->kind(); }
    const Poly& numerator() const { return num_; }
    const std::vector<std::pair<Poly, int>>& denominator_atoms() const { return den_; }
    Poly denominator() const;
    long residue_value() const { return r_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;  // cheap sufficient test; exact for fraction/modular/constant cases
    std::optional<mpq_class> as_rational() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    RingElement operator+(long c) const { return *this + constant(spec_, c); }
    RingElement operator-(long c) const { return *this - constant(spec_, c); }
    RingElement operator*(long c) const { return *this * constant(spec_, c); }
    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
    RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
    RingElement pow(long n) const;
    RingElement inverse() const;  // throws NotAUnit
    RingElement operator/(const RingElement& o) const { return *this * o.inverse(); }
    bool operator==(const RingElement& o) const { return (*this - o).is_zero(); }
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    // Coefficient denominators all of the form 2^a 3^b.
    bool denominators_six_smooth() const;
    std::string to_string() const;

private:
    void check_same(const RingElement& o) const;
    void normalize();
    SpecPtr spec_;
    Poly num_;
    std::vector<std::pair<Poly, int>> den_;  // fraction only: monic atoms with multiplicity
    long r_ = 0;
};

RingElement arith_pow(const RingElement& a, long n);
RingElement normal_form(const RingElement& a);
RingElement invert(const RingElement& a);

// Homomorphic substitution; every variable of a's ring must be bound.
RingElement substitute(const RingElement& a, const std::map<std::string, RingElement>& bindings,
                       const SpecPtr& target);
// Partial substitution inside the same ring: unbound variables stay themselves.
RingElement substitute(const RingElement& a, const std::map<std::string, RingElement>& bindings);
RingElement map_to_modular(const RingElement& a, long p, const std::map<std::string, long>& bindings);
// rational -> Z/n, DenominatorNotInvertible when gcd(den, n) != 1
long rational_mod(const mpq_class& q, long n);
long mod_inverse(long a, long n);  // throws NotAUnit

// Parse "s^2*t^2 + 4*s*t + 3", "(b-b^2)/2", "-1/6*b" over the ring.
RingElement parse_element(const SpecPtr& s, const std::string& text);

std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars,
                           const MonoOrder* ord = nullptr);

}  // namespace chev::exactring
