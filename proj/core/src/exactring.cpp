#include "chev/exactring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace chev::exactring {

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r[i] = uint16_t(a[i] + b[i]);
    return r;
}
bool mono_divides(const Mono& a, const Mono& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}
Mono mono_div(const Mono& b, const Mono& a) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r[i] = uint16_t(b[i] - a[i]);
    return r;
}
unsigned mono_degree(const Mono& a) {
    unsigned d = 0;
    for (auto e : a) d += e;
    return d;
}

// ---------------------------------------------------------------- Poly

Poly Poly::constant(const mpq_class& c) { return monomial(mono_zero(), c); }
Poly Poly::variable(int idx) {
    Mono m = mono_zero();
    m[idx] = 1;
    return monomial(m, 1);
}
Poly Poly::monomial(const Mono& m, const mpq_class& c) {
    Poly p;
    if (c != 0) p.t_.push_back({m, c});
    return p;
}
Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
    Poly p;
    p.t_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().m == t.m) {
            p.t_.back().c += t.c;
        } else {
            if (!p.t_.empty() && p.t_.back().c == 0) p.t_.pop_back();
            p.t_.push_back(std::move(t));
        }
    }
    if (!p.t_.empty() && p.t_.back().c == 0) p.t_.pop_back();
    return p;
}
bool Poly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m == mono_zero()); }
mpq_class Poly::constant_term() const {
    if (!t_.empty() && t_[0].m == mono_zero()) return t_[0].c;
    return 0;
}
unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (auto& t : t_) d = std::max(d, mono_degree(t.m));
    return d;
}
unsigned Poly::degree_in(int var) const {
    unsigned d = 0;
    for (auto& t : t_) d = std::max<unsigned>(d, t.m[var]);
    return d;
}
Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}
Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j == o.t_.size() || (i < t_.size() && t_[i].m < o.t_[j].m)) {
            r.t_.push_back(t_[i++]);
        } else if (i == t_.size() || o.t_[j].m < t_[i].m) {
            r.t_.push_back(o.t_[j++]);
        } else {
            mpq_class c = t_[i].c + o.t_[j].c;
            if (c != 0) r.t_.push_back({t_[i].m, c});
            ++i, ++j;
        }
    }
    return r;
}
Poly Poly::operator-(const Poly& o) const { return *this + (-o); }
Poly Poly::operator*(const Poly& o) const {
    if (t_.empty() || o.t_.empty()) return {};
    if (o.t_.size() == 1) return times_mono(o.t_[0].m).scaled(o.t_[0].c);
    if (t_.size() == 1) return o.times_mono(t_[0].m).scaled(t_[0].c);
    std::vector<Term> acc;
    acc.reserve(t_.size() * o.t_.size());
    for (auto& a : t_)
        for (auto& b : o.t_) acc.push_back({mono_mul(a.m, b.m), a.c * b.c});
    return from_terms(std::move(acc));
}
Poly Poly::scaled(const mpq_class& c) const {
    if (c == 0) return {};
    Poly r = *this;
    for (auto& t : r.t_) t.c *= c;
    return r;
}
Poly Poly::times_mono(const Mono& m) const {
    Poly r = *this;  // multiplying by a monomial preserves lex order
    for (auto& t : r.t_) t.m = mono_mul(t.m, m);
    return r;
}
bool Poly::operator==(const Poly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
    return true;
}
bool Poly::operator<(const Poly& o) const {
    if (t_.size() != o.t_.size()) return t_.size() < o.t_.size();
    for (size_t i = 0; i < t_.size(); ++i) {
        if (t_[i].m != o.t_[i].m) return t_[i].m < o.t_[i].m;
        if (t_[i].c != o.t_[i].c) return t_[i].c < o.t_[i].c;
    }
    return false;
}
std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) return std::nullopt;
    Poly r = *this, q;
    const Term& ld = d.lex_leading();
    std::vector<Term> qt;
    while (!r.is_zero()) {
        const Term& lr = r.lex_leading();
        if (!mono_divides(ld.m, lr.m)) return std::nullopt;
        Poly step = Poly::monomial(mono_div(lr.m, ld.m), lr.c / ld.c);
        qt.push_back(step.t_[0]);
        r = r - d * step;
    }
    return from_terms(std::move(qt));
}
Mono Poly::monomial_gcd() const {
    if (t_.empty()) return mono_zero();
    Mono g = t_[0].m;
    for (auto& t : t_)
        for (int i = 0; i < kMaxVars; ++i) g[i] = std::min(g[i], t.m[i]);
    return g;
}

// ---------------------------------------------------------------- order

long MonoOrder::wdeg(const Mono& a) const {
    long d = 0;
    for (int i = 0; i < nvars; ++i) d += long(a[i]) * (weights.empty() ? 1 : weights[i]);
    return d;
}
int MonoOrder::compare(const Mono& a, const Mono& b) const {
    long da = wdeg(a), db = wdeg(b);
    if (da != db) return da < db ? -1 : 1;
    for (int i = 0; i < kMaxVars; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

// ---------------------------------------------------------------- RingSpec

const char* kind_name(RingKind k) {
    switch (k) {
        case RingKind::Poly: return "poly";
        case RingKind::Quotient: return "quotient";
        case RingKind::Fraction: return "fraction";
        case RingKind::Modular: return "modular";
    }
    return "?";
}
RingKind kind_from_name(const std::string& s) {
    if (s == "poly") return RingKind::Poly;
    if (s == "quotient") return RingKind::Quotient;
    if (s == "fraction") return RingKind::Fraction;
    if (s == "modular") return RingKind::Modular;
    throw RingError("unknown ring kind '" + s + "'");
}

void RingSpec::validate() {
    if ((int)vars_.size() > kMaxVars) throw RingError("too many variables");
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].empty()) throw RingError("empty variable name");
        for (size_t j = 0; j < i; ++j)
            if (vars_[i] == vars_[j]) throw RingError("duplicate variable '" + vars_[i] + "'");
    }
    order_.nvars = (int)vars_.size();
    if (order_.weights.empty()) order_.weights.assign(vars_.size(), 1);
    if (order_.weights.size() != vars_.size()) throw RingError("weight count mismatch");
    for (int w : order_.weights)
        if (w <= 0) throw RingError("weights must be positive");
    for (auto& r : rules_) {
        for (int i = (int)vars_.size(); i < kMaxVars; ++i)
            if (r.lhs[i]) throw RingError("rule uses undeclared variable");
        if (r.lhs == mono_zero()) throw RingError("rule with constant lhs");
        for (auto& t : r.rhs.terms())
            if (!order_.greater(r.lhs, t.m))
                throw RingError("rewrite rule does not descend: " +
                                poly_to_string(Poly::monomial(r.lhs, 1), vars_) + " -> " +
                                poly_to_string(r.rhs, vars_));
    }
    if (kind_ == RingKind::Modular && modulus_ < 2) throw RingError("modulus must be >= 2");
}

SpecPtr RingSpec::poly(std::vector<std::string> vars) {
    std::shared_ptr<RingSpec> s(new RingSpec());
    s->kind_ = RingKind::Poly;
    s->vars_ = std::move(vars);
    s->validate();
    return s;
}
SpecPtr RingSpec::fraction(std::vector<std::string> vars) {
    std::shared_ptr<RingSpec> s(new RingSpec());
    s->kind_ = RingKind::Fraction;
    s->vars_ = std::move(vars);
    s->validate();
    return s;
}
SpecPtr RingSpec::modular(long modulus) {
    std::shared_ptr<RingSpec> s(new RingSpec());
    s->kind_ = RingKind::Modular;
    s->modulus_ = modulus;
    s->validate();
    return s;
}
SpecPtr RingSpec::quotient(std::vector<std::string> vars, std::vector<RewriteRule> rules,
                           std::vector<int> weights) {
    std::shared_ptr<RingSpec> s(new RingSpec());
    s->kind_ = RingKind::Quotient;
    s->vars_ = std::move(vars);
    s->rules_ = std::move(rules);
    s->order_.weights = std::move(weights);
    s->validate();
    return s;
}
RewriteRule RingSpec::orient(const Poly& p, const MonoOrder& ord) {
    if (p.is_zero()) throw RingError("cannot orient the zero polynomial");
    const Poly::Term* lead = &p.terms()[0];
    for (auto& t : p.terms())
        if (ord.greater(t.m, lead->m)) lead = &t;
    if (lead->m == mono_zero()) throw RingError("cannot orient a constant");
    Mono lm = lead->m;
    mpq_class lc = lead->c;
    Poly rest = p - Poly::monomial(lm, lc);
    return {lm, rest.scaled(-1 / lc)};
}

int RingSpec::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return (int)i;
    return -1;
}
bool RingSpec::is_field() const {
    if (kind_ == RingKind::Fraction) return true;
    if (kind_ == RingKind::Modular) {
        for (long d = 2; d * d <= modulus_; ++d)
            if (modulus_ % d == 0) return false;
        return true;
    }
    return vars_.empty() && rules_.empty();  // plain Q
}
bool RingSpec::same_as(const RingSpec& o) const {
    if (this == &o) return true;
    if (kind_ != o.kind_ || vars_ != o.vars_ || modulus_ != o.modulus_ ||
        order_.weights != o.order_.weights || rules_.size() != o.rules_.size())
        return false;
    for (size_t i = 0; i < rules_.size(); ++i)
        if (rules_[i].lhs != o.rules_[i].lhs || rules_[i].rhs != o.rules_[i].rhs) return false;
    return true;
}
std::string RingSpec::describe() const {
    std::ostringstream os;
    if (kind_ == RingKind::Modular) {
        os << "Z/" << modulus_;
        return os.str();
    }
    os << (kind_ == RingKind::Fraction ? "Q(" : "Q[");
    for (size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << vars_[i];
    os << (kind_ == RingKind::Fraction ? ")" : "]");
    if (!rules_.empty()) {
        os << "/(";
        for (size_t i = 0; i < rules_.size(); ++i)
            os << (i ? ", " : "") << poly_to_string(Poly::monomial(rules_[i].lhs, 1), vars_) << "->"
               << poly_to_string(rules_[i].rhs, vars_, &order_);
        os << ")";
    }
    return os.str();
}

Poly RingSpec::reduce(const Poly& p) const {
    if (rules_.empty() || p.is_zero()) return p;
    struct Desc {
        const MonoOrder* o;
        bool operator()(const Mono& a, const Mono& b) const { return o->greater(a, b); }
    };
    std::map<Mono, mpq_class, Desc> work(Desc{&order_});
    for (auto& t : p.terms()) work.emplace(t.m, t.c);
    std::vector<Poly::Term> out;
    while (!work.empty()) {
        auto it = work.begin();
        Mono m = it->first;
        mpq_class c = it->second;
        work.erase(it);
        const RewriteRule* hit = nullptr;
        for (auto& r : rules_)
            if (mono_divides(r.lhs, m)) {
                hit = &r;
                break;
            }
        if (!hit) {
            out.push_back({m, c});
            continue;
        }
        Mono q = mono_div(m, hit->lhs);
        for (auto& t : hit->rhs.terms()) {
            Mono k = mono_mul(q, t.m);
            auto [pos, fresh] = work.emplace(k, c * t.c);
            if (!fresh) {
                pos->second += c * t.c;
                if (pos->second == 0) work.erase(pos);
            }
        }
    }
    return Poly::from_terms(std::move(out));
}

// ---------------------------------------------------------------- modular helpers

long mod_inverse(long a, long n) {
    long t = 0, nt = 1, r = n, nr = ((a % n) + n) % n;
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt, std::swap(t, nt);
        r -= q * nr, std::swap(r, nr);
    }
    if (r != 1) throw NotAUnit(std::to_string(a) + " is not a unit mod " + std::to_string(n));
    return t < 0 ? t + n : t;
}
long rational_mod(const mpq_class& q, long n) {
    mpz_class num = q.get_num() % n, den = q.get_den() % n;
    long a = num.get_si(), b = den.get_si();
    if (std::gcd(b, n) != 1)
        throw DenominatorNotInvertible("denominator " + q.get_den().get_str() + " not invertible mod " +
                                       std::to_string(n));
    a = ((a % n) + n) % n;
    return (long)((__int128)a * mod_inverse(b, n) % n);
}

// ---------------------------------------------------------------- RingElement

RingElement RingElement::zero(const SpecPtr& s) { return constant(s, 0); }
RingElement RingElement::one(const SpecPtr& s) { return constant(s, 1); }
RingElement RingElement::constant(const SpecPtr& s, const mpq_class& c) {
    RingElement e;
    e.spec_ = s;
    if (s->kind() == RingKind::Modular)
        e.r_ = rational_mod(c, s->modulus());
    else
        e.num_ = Poly::constant(c);
    return e;
}
RingElement RingElement::variable(const SpecPtr& s, const std::string& name) {
    int i = s->var_index(name);
    if (i < 0) throw RingError("unknown variable '" + name + "' in " + s->describe());
    return from_poly(s, Poly::variable(i));
}
RingElement RingElement::from_poly(const SpecPtr& s, const Poly& p) {
    if (s->kind() == RingKind::Modular) {
        if (!p.is_constant()) throw RingError("polynomial in a modular ring");
        return constant(s, p.constant_term());
    }
    RingElement e;
    e.spec_ = s;
    e.num_ = p;
    e.normalize();
    return e;
}
RingElement RingElement::residue(const SpecPtr& s, long r) {
    if (s->kind() != RingKind::Modular) return constant(s, r);
    RingElement e;
    e.spec_ = s;
    long n = s->modulus();
    e.r_ = ((r % n) + n) % n;
    return e;
}

Poly RingElement::denominator() const {
    Poly d = Poly::constant(1);
    for (auto& [a, k] : den_)
        for (int i = 0; i < k; ++i) d = d * a;
    return d;
}

void RingElement::check_same(const RingElement& o) const {
    if (!spec_ || !o.spec_) throw SpecMismatch("uninitialised ring element");
    if (spec_ != o.spec_ && !spec_->same_as(*o.spec_))
        throw SpecMismatch("ring mismatch: " + spec_->describe() + " vs " + o.spec_->describe());
}

void RingElement::normalize() {
    switch (spec_->kind()) {
        case RingKind::Quotient: num_ = spec_->reduce(num_); break;
        case RingKind::Fraction: {
            if (num_.is_zero()) {
                den_.clear();
                break;
            }
            for (auto it = den_.begin(); it != den_.end();) {
                while (it->second > 0) {
                    auto q = num_.divide_exact(it->first);
                    if (!q) break;
                    num_ = *q;
                    --it->second;
                }
                if (it->second == 0)
                    it = den_.erase(it);
                else
                    ++it;
            }
            break;
        }
        default: break;
    }
}

bool RingElement::is_zero() const {
    if (spec_->kind() == RingKind::Modular) return r_ == 0;
    return num_.is_zero();
}
bool RingElement::is_one() const {
    if (spec_->kind() == RingKind::Modular) return r_ == 1 % spec_->modulus();
    return den_.empty() && num_ == Poly::constant(1);
}
bool RingElement::is_unit() const {
    switch (spec_->kind()) {
        case RingKind::Modular: return std::gcd(r_, spec_->modulus()) == 1;
        case RingKind::Fraction: return !num_.is_zero();
        case RingKind::Poly: return num_.is_constant() && !num_.is_zero();
        case RingKind::Quotient:
            try {
                (void)inverse();
                return true;
            } catch (const NotAUnit&) {
                return false;
            }
    }
    return false;
}
std::optional<mpq_class> RingElement::as_rational() const {
    if (spec_->kind() == RingKind::Modular) return mpq_class(r_);
    if (!den_.empty() || !num_.is_constant()) return std::nullopt;
    return num_.constant_term();
}

namespace {
// lcm of factored denominators plus the cofactors for each side
using Atoms = std::vector<std::pair<Poly, int>>;
Atoms atoms_lcm(const Atoms& a, const Atoms& b) {
    Atoms l = a;
    for (auto& [p, k] : b) {
        auto it = std::find_if(l.begin(), l.end(), [&](auto& x) { return x.first == p; });
        if (it == l.end())
            l.push_back({p, k});
        else
            it->second = std::max(it->second, k);
    }
    return l;
}
Poly atoms_cofactor(const Atoms& l, const Atoms& a) {
    Poly r = Poly::constant(1);
    for (auto& [p, k] : l) {
        auto it = std::find_if(a.begin(), a.end(), [&](auto& x) { return x.first == p; });
        int have = it == a.end() ? 0 : it->second;
        for (int i = have; i < k; ++i) r = r * p;
    }
    return r;
}
}  // namespace

RingElement RingElement::operator+(const RingElement& o) const {
    check_same(o);
    RingElement r;
    r.spec_ = spec_;
    if (spec_->kind() == RingKind::Modular) {
        r.r_ = (r_ + o.r_) % spec_->modulus();
        return r;
    }
    if (spec_->kind() == RingKind::Fraction && (!den_.empty() || !o.den_.empty())) {
        r.den_ = atoms_lcm(den_, o.den_);
        r.num_ = num_ * atoms_cofactor(r.den_, den_) + o.num_ * atoms_cofactor(r.den_, o.den_);
        r.normalize();
        return r;
    }
    r.num_ = num_ + o.num_;
    r.normalize();
    return r;
}
RingElement RingElement::operator-() const {
    RingElement r = *this;
    if (spec_->kind() == RingKind::Modular)
        r.r_ = (spec_->modulus() - r_) % spec_->modulus();
    else
        r.num_ = -num_;
    return r;
}
RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }
RingElement RingElement::operator*(const RingElement& o) const {
    check_same(o);
    RingElement r;
    r.spec_ = spec_;
    if (spec_->kind() == RingKind::Modular) {
        r.r_ = (long)((__int128)r_ * o.r_ % spec_->modulus());
        return r;
    }
    r.num_ = num_ * o.num_;
    if (spec_->kind() == RingKind::Fraction) {
        r.den_ = den_;
        for (auto& [p, k] : o.den_) {
            auto it = std::find_if(r.den_.begin(), r.den_.end(), [&](auto& x) { return x.first == p; });
            if (it == r.den_.end())
                r.den_.push_back({p, k});
            else
                it->second += k;
        }
    }
    r.normalize();
    return r;
}
RingElement RingElement::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    RingElement result = one(spec_), base = *this;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}
RingElement RingElement::inverse() const {
    switch (spec_->kind()) {
        case RingKind::Modular: {
            RingElement r = *this;
            r.r_ = mod_inverse(r_, spec_->modulus());
            return r;
        }
        case RingKind::Poly: {
            if (num_.is_constant() && !num_.is_zero()) return constant(spec_, 1 / num_.constant_term());
            throw NotAUnit(to_string() + " is not a unit in " + spec_->describe());
        }
        case RingKind::Quotient: {
            // constant + nilpotent: geometric series, truncated when the powers die
            mpq_class c = num_.constant_term();
            if (c == 0) throw NotAUnit(to_string() + " is not a unit in " + spec_->describe());
            RingElement n = *this - constant(spec_, c);
            RingElement step = n * constant(spec_, -1 / c);
            RingElement term = one(spec_), sum = one(spec_);
            for (int k = 0; k < 256; ++k) {
                term = term * step;
                if (term.is_zero()) return sum * constant(spec_, 1 / c);
                sum = sum + term;
            }
            throw NotAUnit(to_string() + " is not recognisably a unit in " + spec_->describe());
        }
        case RingKind::Fraction: {
            if (num_.is_zero()) throw NotAUnit("zero is not a unit");
            RingElement r;
            r.spec_ = spec_;
            r.num_ = denominator();
            // factor the old numerator into content * monomial * monic rest
            Mono g = num_.monomial_gcd();
            Poly rest = *num_.divide_exact(Poly::monomial(g, 1));
            mpq_class lc = rest.lex_leading().c;
            rest = rest.scaled(1 / lc);
            r.num_ = r.num_.scaled(1 / lc);
            for (int i = 0; i < kMaxVars; ++i)
                if (g[i]) r.den_.push_back({Poly::variable(i), g[i]});
            if (!rest.is_constant()) r.den_.push_back({rest, 1});
            r.normalize();
            return r;
        }
    }
    throw NotAUnit("unreachable");
}

bool RingElement::denominators_six_smooth() const {
    if (spec_->kind() == RingKind::Modular) return true;
    auto smooth = [](mpz_class d) {
        while (d % 2 == 0) d /= 2;
        while (d % 3 == 0) d /= 3;
        return d == 1;
    };
    for (auto& t : num_.terms())
        if (!smooth(t.c.get_den())) return false;
    return true;
}

std::string RingElement::to_string() const {
    if (spec_->kind() == RingKind::Modular) return std::to_string(r_);
    std::string n = poly_to_string(num_, spec_->vars(), &spec_->order());
    if (den_.empty()) return n;
    std::string d;
    for (auto& [p, k] : den_) {
        if (!d.empty()) d += "*";
        std::string a = poly_to_string(p, spec_->vars(), &spec_->order());
        d += p.size() > 1 ? "(" + a + ")" : a;
        if (k > 1) d += "^" + std::to_string(k);
    }
    if (num_.size() > 1) n = "(" + n + ")";
    return n + "/" + (den_.size() > 1 || den_[0].second > 1 ? "(" + d + ")" : d);
}

std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars, const MonoOrder* ord) {
    if (p.is_zero()) return "0";
    std::vector<const Poly::Term*> ts;
    for (auto& t : p.terms()) ts.push_back(&t);
    MonoOrder def;
    def.nvars = (int)vars.size();
    const MonoOrder& o = ord ? *ord : def;
    std::sort(ts.begin(), ts.end(), [&](auto a, auto b) { return o.greater(a->m, b->m); });
    std::ostringstream os;
    bool first = true;
    for (auto t : ts) {
        mpq_class c = t->c;
        bool neg = c < 0;
        if (neg) c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool isconst = t->m == mono_zero();
        bool unitc = c == 1;
        if (!unitc || isconst) os << c.get_str();
        bool star = !unitc || isconst;
        for (int i = 0; i < kMaxVars; ++i) {
            if (!t->m[i]) continue;
            if (star) os << "*";
            os << (i < (int)vars.size() ? vars[i] : "x" + std::to_string(i));
            if (t->m[i] > 1) os << "^" << t->m[i];
            star = true;
        }
    }
    return os.str();
}

RingElement arith_pow(const RingElement& a, long n) {
    if (n < 0) throw RingError("negative exponent in arith pow");
    return a.pow(n);
}
RingElement normal_form(const RingElement& a) {
    // elements are kept reduced; re-reducing is a no-op but keeps the contract explicit
    if (a.kind() != RingKind::Quotient) return a;
    return RingElement::from_poly(a.spec(), a.spec()->reduce(a.numerator()));
}
RingElement invert(const RingElement& a) { return a.inverse(); }

// ---------------------------------------------------------------- substitution

namespace {
RingElement eval_poly(const Poly& p, const std::vector<std::optional<RingElement>>& vals, const SpecPtr& target,
                      const std::vector<std::string>& names) {
    RingElement acc = RingElement::zero(target);
    std::vector<std::vector<RingElement>> powers(vals.size());
    for (auto& t : p.terms()) {
        RingElement term = RingElement::constant(target, t.c);
        for (size_t i = 0; i < vals.size(); ++i) {
            int e = t.m[i];
            if (!e) continue;
            if (!vals[i]) throw RingError("unbound variable '" + names[i] + "'");
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(RingElement::one(target));
            while ((int)pw.size() <= e) pw.push_back(pw.back() * *vals[i]);
            term = term * pw[e];
        }
        acc = acc + term;
    }
    return acc;
}
}  // namespace

RingElement substitute(const RingElement& a, const std::map<std::string, RingElement>& bindings,
                       const SpecPtr& target) {
    const SpecPtr& s = a.spec();
    if (s->kind() == RingKind::Modular) {
        if (target->kind() != RingKind::Modular || target->modulus() != s->modulus())
            return RingElement::constant(target, a.residue_value());
        return RingElement::residue(target, a.residue_value());
    }
    std::vector<std::optional<RingElement>> vals(s->vars().size());
    for (size_t i = 0; i < vals.size(); ++i) {
        auto it = bindings.find(s->vars()[i]);
        if (it != bindings.end()) {
            if (it->second.spec() != target && !it->second.spec()->same_as(*target))
                throw SpecMismatch("binding for '" + s->vars()[i] + "' lives in another ring");
            vals[i] = it->second;
        }
    }
    RingElement n = eval_poly(a.numerator(), vals, target, s->vars());
    if (a.denominator_atoms().empty()) return n;
    RingElement d = eval_poly(a.denominator(), vals, target, s->vars());
    try {
        return n * d.inverse();
    } catch (const NotAUnit&) {
        throw DenominatorNotInvertible("denominator is not a unit after substitution");
    }
}

RingElement substitute(const RingElement& a, const std::map<std::string, RingElement>& bindings) {
    std::map<std::string, RingElement> full = bindings;
    for (auto& v : a.spec()->vars())
        if (!full.count(v)) full.emplace(v, RingElement::variable(a.spec(), v));
    return substitute(a, full, a.spec());
}

RingElement map_to_modular(const RingElement& a, long p, const std::map<std::string, long>& bindings) {
    if (p < 2) throw RingError("modulus must be >= 2");
    SpecPtr t = RingSpec::modular(p);
    std::map<std::string, RingElement> b;
    for (auto& [k, v] : bindings) b.emplace(k, RingElement::residue(t, v));
    for (auto& v : a.spec()->vars())
        if (!b.count(v)) throw RingError("variable '" + v + "' not bound for modular evaluation");
    return substitute(a, b, t);
}

// ---------------------------------------------------------------- parser

namespace {
class ExprParser {
public:
    ExprParser(const SpecPtr& s, const std::string& text) : s_(s), src_(text) {}
    RingElement parse() {
        RingElement r = sum();
        skip();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw RingError("parse error in '" + src_ + "' at " + std::to_string(pos_) + ": " + msg);
    }
    void skip() {
        while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    RingElement sum() {
        RingElement r = eat('-') ? -product() : (eat('+'), product());
        for (;;) {
            if (eat('+'))
                r = r + product();
            else if (eat('-'))
                r = r - product();
            else
                return r;
        }
    }
    RingElement product() {
        RingElement r = power();
        for (;;) {
            skip();
            if (eat('*'))
                r = r * power();
            else if (eat('/'))
                r = r * power().inverse();
            else if (pos_ < src_.size() && (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '('))
                r = r * power();  // implicit multiplication: 2b, 3(t+1)
            else
                return r;
        }
    }
    RingElement power() {
        RingElement b = atom();
        if (eat('^')) {
            bool neg = eat('-');
            skip();
            size_t st = pos_;
            while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) ++pos_;
            if (st == pos_) fail("expected integer exponent");
            long e = std::stol(src_.substr(st, pos_ - st));
            return b.pow(neg ? -e : e);
        }
        return b;
    }
    RingElement atom() {
        skip();
        if (eat('(')) {
            RingElement r = sum();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (eat('-')) return -power();
        if (pos_ >= src_.size()) fail("unexpected end");
        char c = src_[pos_];
        if (std::isdigit((unsigned char)c)) {
            size_t st = pos_;
            while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) ++pos_;
            return RingElement::constant(s_, mpq_class(mpz_class(src_.substr(st, pos_ - st))));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t st = pos_;
            while (pos_ < src_.size() && (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_')) ++pos_;
            std::string name = src_.substr(st, pos_ - st);
            if (s_->var_index(name) < 0) fail("unknown variable '" + name + "'");
            return RingElement::variable(s_, name);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    SpecPtr s_;
    std::string src_;
    size_t pos_ = 0;
};
}  // namespace

RingElement parse_element(const SpecPtr& s, const std::string& text) { return ExprParser(s, text).parse(); }

}  // namespace chev::exactring
