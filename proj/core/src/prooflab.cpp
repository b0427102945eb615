#include "chev/prooflab.hpp"

#include "chev/decomp.hpp"
#include "chev/shacheck.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

namespace chev::prooflab {

using chevgroup::evaluate_word;
using chevgroup::parse_word;
using chevgroup::Word;
using chevgroup::WordContext;
using exactring::Mono;
using exactring::Poly;
using exactring::RingKind;
using exactring::RingSpec;
using rootsys::Root;
using json = nlohmann::json;

namespace {

const char* kFormNames[] = {"equal", "projective", "trace", "entries", "ucoords",
                            "nilpower", "nonzero", "chain", "skipped"};

std::string entry_label(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

std::pair<int, int> parse_label(const std::string& s) {
    int i = 0, j = 0;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream in(s);
    if (!(in >> c1 >> i >> c2 >> j >> c3) || c1 != '(' || c2 != ',' || c3 != ')')
        throw chevgroup::GroupError("bad entry label '" + s + "'");
    return {i - 1, j - 1};
}

bool trivial_word(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    return b == std::string::npos || s.substr(b, s.find_last_not_of(" \t") - b + 1) == "1";
}

Matrix eval(const IdentityRecord& r, const std::string& text) {
    if (trivial_word(text))
        return Matrix::identity(r.ring, chevgroup::realization_dim(r.system, r.realization), r.realization);
    return evaluate_word(WordContext{r.system, r.defs}, r.realization, r.ring, text);
}

std::string first_nonzero(const Matrix& d) {
    for (int i = 0; i < d.n(); ++i)
        for (int j = 0; j < d.n(); ++j)
            if (!d(i, j).is_zero()) return entry_label(i, j) + ": " + d(i, j).to_string();
    return "0";
}

void nonzero(const IdentityRecord& r, Report& out, const std::string& witness) {
    // a quotient ring may simply lack a rule the identity needs
    bool quotient = r.ring->kind() == exactring::RingKind::Quotient || r.ring->has_rules();
    out.verdict = quotient ? Verdict::Inconclusive : Verdict::Fail;
    out.residual = witness;
}

Matrix minus_identity(const Matrix& m) { return m - Matrix::identity(m.spec(), m.n(), m.realization()); }

bool safe_pgl3_equal(const Matrix& a, const Matrix& b) {
    try {
        return pgl3_equal(a, b);
    } catch (const std::exception&) {
        return false;
    }
}

Report chain_report(const std::string& stage, const std::string& claim_override);
std::string stage_claim(const std::string& stage);

void evaluate(const IdentityRecord& r, Report& out) {
    auto pass = [&](std::string why = "0") {
        out.verdict = Verdict::Pass;
        out.residual = std::move(why);
    };
    auto value = [&](const std::string& t) { return exactring::parse_element(r.ring, t); };
    switch (r.form) {
        case Form::Skipped:
            out.verdict = Verdict::Skipped;
            out.residual = "not evaluated";
            return;
        case Form::Chain: {
            std::string ov;
            for (auto& e : r.expected)
                if (e.label == "claim") ov = e.value;
            Report c = chain_report(r.lhs, ov);
            out.verdict = c.verdict;
            out.residual = c.residual;
            if (out.note.empty()) out.note = c.note;
            return;
        }
        default: break;
    }
    Matrix L = eval(r, r.lhs);
    switch (r.form) {
        case Form::Equal: {
            Matrix R = eval(r, r.rhs);
            Matrix d = L - R;
            if (d.is_zero()) return pass();
            if (r.realization == Realization::Pgl3 && safe_pgl3_equal(L, R)) return pass("equal up to a scalar");
            return nonzero(r, out, "lhs - rhs " + first_nonzero(d));
        }
        case Form::Projective: {
            Matrix R = eval(r, r.rhs);
            if (safe_pgl3_equal(L, R)) return pass();
            return nonzero(r, out, "not proportional; lhs - rhs " + first_nonzero(L - R));
        }
        case Form::Trace: {
            if (r.expected.empty()) throw chevgroup::GroupError("trace record without expected value");
            RingElement d = L.trace() - value(r.expected[0].value);
            if (d.is_zero()) return pass();
            return nonzero(r, out, "trace - expected = " + d.to_string());
        }
        case Form::Entries: {
            Matrix M = r.power > 0 ? minus_identity(L).pow(r.power) : L;
            std::map<std::pair<int, int>, RingElement> want;
            for (auto& e : r.expected) want[parse_label(e.label)] = value(e.value);
            for (int i = 0; i < M.n(); ++i)
                for (int j = 0; j < M.n(); ++j) {
                    auto it = want.find({i, j});
                    if (it == want.end() && !r.others_zero) continue;
                    RingElement d = it == want.end() ? M(i, j) : M(i, j) - it->second;
                    if (!d.is_zero()) return nonzero(r, out, "entry " + entry_label(i, j) + " off by " + d.to_string());
                }
            return pass();
        }
        case Form::UCoords: {
            auto pos = rootsys::positive_roots(r.system);
            auto coords = chevgroup::peel_coordinates(r.system, L, pos);
            if (!coords) return nonzero(r, out, "lhs is not in U+");
            std::map<size_t, RingElement> want;
            for (auto& e : r.expected) {
                Root g = rootsys::parse_root(r.system, e.label);
                auto it = std::find(pos.begin(), pos.end(), g);
                if (it == pos.end()) throw chevgroup::GroupError("coordinate label is not a positive root");
                want[size_t(it - pos.begin())] = value(e.value);
            }
            for (size_t k = 0; k < pos.size(); ++k) {
                RingElement d = want.count(k) ? (*coords)[k] - want[k] : (*coords)[k];
                if (!d.is_zero())
                    return nonzero(r, out, "coordinate " + pos[k].to_string() + " off by " + d.to_string());
            }
            return pass();
        }
        case Form::NilPower: {
            Matrix M = minus_identity(L).pow(r.power);
            if (M.is_zero()) return pass();
            return nonzero(r, out, "(lhs - 1)^" + std::to_string(r.power) + " " + first_nonzero(M));
        }
        case Form::NonZero: {
            Matrix M = minus_identity(L).pow(r.power);
            if (!M.is_zero()) return pass(first_nonzero(M));
            out.verdict = Verdict::Fail;
            out.residual = "(lhs - 1)^" + std::to_string(r.power) + " vanishes";
            return;
        }
        default: break;
    }
    throw chevgroup::GroupError("unhandled form");
}

}  // namespace

const char* form_name(Form f) { return kFormNames[int(f)]; }

Form form_from_name(const std::string& s) {
    for (int i = 0; i < 9; ++i)
        if (s == kFormNames[i]) return Form(i);
    throw chevgroup::GroupError("unknown record form '" + s + "'");
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
        case Verdict::Skipped: return "SKIPPED";
    }
    return "?";
}

Report run_identity(const IdentityRecord& rec) {
    Report out;
    out.name = rec.name;
    out.note = rec.note;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (!rec.ring) throw chevgroup::GroupError("record has no ring");
        evaluate(rec, out);
    } catch (const std::exception& e) {
        out.verdict = Verdict::Fail;
        out.residual = std::string("error: ") + e.what();
    }
    out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::vector<Report> run_record(const IdentityRecord& rec) {
    std::vector<Report> out{run_identity(rec)};
    if (rec.erratum_rhs.empty() && rec.erratum_expected.empty()) return out;
    IdentityRecord e = rec;
    e.name += ".printed-refuted";
    if (!rec.erratum_rhs.empty()) e.rhs = rec.erratum_rhs;
    if (!rec.erratum_expected.empty()) e.expected = rec.erratum_expected;
    e.erratum_rhs.clear();
    e.erratum_expected.clear();
    Report r = run_identity(e);
    Report o;
    o.name = e.name;
    o.millis = r.millis;
    o.verdict = r.verdict == Verdict::Pass ? Verdict::Fail : Verdict::Pass;
    o.residual = r.verdict == Verdict::Pass ? "printed form holds" : r.residual;
    o.note = "printed form is false; " + (rec.erratum_rhs.empty() ? std::string("expected values differ")
                                                                 : "printed rhs " + rec.erratum_rhs);
    out.push_back(o);
    return out;
}

std::vector<IdentityRecord> full_catalog() {
    std::vector<IdentityRecord> out;
    for (auto t : rootsys::all_types()) {
        auto c = builtin_catalog(t);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

std::vector<IdentityRecord> mutants(const IdentityRecord& rec, size_t cap) {
    std::vector<IdentityRecord> out;
    auto bump = [](const std::string& p) { return "(" + p + ")+1"; };
    auto add = [&](IdentityRecord m) {
        if (out.size() >= cap) return;
        m.name = rec.name + "~" + std::to_string(out.size() + 1);
        m.erratum_rhs.clear();
        m.erratum_expected.clear();
        out.push_back(std::move(m));
    };
    WordContext ctx{rec.system, rec.defs};
    auto word_mutants = [&](bool rhs_side) {
        const std::string& text = rhs_side ? rec.rhs : rec.lhs;
        Word w = parse_word(ctx, text);
        int n = chevgroup::count_params(w);
        for (int k = 0; k < n && out.size() < cap; ++k) {
            IdentityRecord m = rec;
            (rhs_side ? m.rhs : m.lhs) = chevgroup::word_to_string(chevgroup::mutate_param(w, k, bump));
            add(m);
        }
    };
    switch (rec.form) {
        case Form::Equal:
        case Form::Projective: word_mutants(!trivial_word(rec.rhs)); break;
        case Form::Trace:
        case Form::Entries:
        case Form::UCoords:
            if (rec.expected.empty()) {
                word_mutants(false);
                break;
            }
            for (size_t k = 0; k < rec.expected.size(); ++k) {
                IdentityRecord m = rec;
                m.expected[k].value = bump(m.expected[k].value);
                add(m);
            }
            break;
        case Form::NilPower:
            if (rec.power > 1) {
                IdentityRecord m = rec;
                --m.power;
                add(m);
            }
            break;
        case Form::NonZero: {
            IdentityRecord m = rec;
            ++m.power;
            add(m);
            break;
        }
        case Form::Chain: {
            std::string claim = stage_claim(rec.lhs);
            if (claim.empty()) break;
            IdentityRecord m = rec;
            m.expected = {{"claim", bump(claim)}};
            add(m);
            break;
        }
        case Form::Skipped: break;
    }
    return out;
}

// ---------------------------------------------------------------- JSON

namespace {

json poly_json(const Poly& p, int nvars) {
    json a = json::array();
    for (auto& t : p.terms()) {
        json e = json::array();
        for (int i = 0; i < nvars; ++i) e.push_back(t.m[i]);
        a.push_back({t.c.get_str(), e});
    }
    return a;
}

Poly poly_from_json(const json& a) {
    std::vector<Poly::Term> ts;
    for (auto& t : a) {
        Mono m = exactring::mono_zero();
        auto& e = t.at(1);
        for (size_t i = 0; i < e.size(); ++i) m[i] = e[i].get<uint16_t>();
        mpq_class c(t.at(0).get<std::string>());
        c.canonicalize();
        ts.push_back({m, c});
    }
    return Poly::from_terms(std::move(ts));
}

json spec_json(const SpecPtr& s) {
    json j;
    j["kind"] = exactring::kind_name(s->kind());
    j["variables"] = s->vars();
    j["modulus"] = s->modulus();
    json rules = json::array();
    int nv = (int)s->vars().size();
    for (auto& r : s->rules()) {
        json lhs = json::array();
        for (int i = 0; i < nv; ++i) lhs.push_back(r.lhs[i]);
        rules.push_back({{"lhs_monomial", lhs}, {"rhs_poly", poly_json(r.rhs, nv)}});
    }
    j["rules"] = rules;
    if (s->kind() == RingKind::Quotient) j["weights"] = s->order().weights;
    return j;
}

SpecPtr spec_from(const json& j) {
    RingKind k = exactring::kind_from_name(j.at("kind").get<std::string>());
    auto vars = j.value("variables", std::vector<std::string>{});
    switch (k) {
        case RingKind::Poly: return RingSpec::poly(vars);
        case RingKind::Fraction: return RingSpec::fraction(vars);
        case RingKind::Modular: return RingSpec::modular(j.at("modulus").get<long>());
        case RingKind::Quotient: {
            std::vector<exactring::RewriteRule> rules;
            for (auto& r : j.at("rules")) {
                Mono m = exactring::mono_zero();
                auto& l = r.at("lhs_monomial");
                for (size_t i = 0; i < l.size(); ++i) m[i] = l[i].get<uint16_t>();
                rules.push_back({m, poly_from_json(r.at("rhs_poly"))});
            }
            return RingSpec::quotient(vars, rules, j.value("weights", std::vector<int>{}));
        }
    }
    throw exactring::RingError("bad ring kind");
}

json expect_json(const std::vector<Expectation>& v) {
    json a = json::array();
    for (auto& e : v) a.push_back({{"label", e.label}, {"value", e.value}});
    return a;
}

std::vector<Expectation> expect_from(const json& a) {
    std::vector<Expectation> v;
    for (auto& e : a) v.push_back({e.at("label").get<std::string>(), e.at("value").get<std::string>()});
    return v;
}

}  // namespace

std::string spec_to_json(const SpecPtr& s) { return spec_json(s).dump(); }
SpecPtr spec_from_json(const std::string& text) { return spec_from(json::parse(text)); }

std::string record_to_json(const IdentityRecord& r) {
    json j;
    j["name"] = r.name;
    j["system"] = rootsys::type_name(r.system);
    j["realization"] = chevgroup::realization_name(r.realization);
    j["ring"] = spec_json(r.ring);
    j["defs"] = r.defs;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["form"] = form_name(r.form);
    j["expected"] = expect_json(r.expected);
    j["power"] = r.power;
    j["others_zero"] = r.others_zero;
    j["erratum_rhs"] = r.erratum_rhs;
    j["erratum_expected"] = expect_json(r.erratum_expected);
    j["note"] = r.note;
    return j.dump();
}

IdentityRecord record_from_json(const std::string& line) {
    json j = json::parse(line);
    IdentityRecord r;
    r.name = j.at("name").get<std::string>();
    r.system = rootsys::type_from_name(j.at("system").get<std::string>());
    r.realization = chevgroup::realization_from_name(j.at("realization").get<std::string>());
    r.ring = spec_from(j.at("ring"));
    r.defs = j.value("defs", std::map<std::string, std::string>{});
    r.lhs = j.value("lhs", "");
    r.rhs = j.value("rhs", "");
    r.form = form_from_name(j.value("form", "equal"));
    r.expected = expect_from(j.value("expected", json::array()));
    r.power = j.value("power", 0);
    r.others_zero = j.value("others_zero", true);
    r.erratum_rhs = j.value("erratum_rhs", "");
    r.erratum_expected = expect_from(j.value("erratum_expected", json::array()));
    r.note = j.value("note", "");
    return r;
}

std::string report_to_json(const Report& r, bool timing) {
    json j;
    j["name"] = r.name;
    j["verdict"] = verdict_name(r.verdict);
    j["residual"] = r.residual;
    if (timing) j["millis"] = r.millis;
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump();
}

// ---------------------------------------------------------------- centralizers

std::vector<CentralizerFamily> builtin_families() {
    using S = SystemType;
    std::vector<CentralizerFamily> f;
    f.push_back({"A1-cent-xa", S::A1, Realization::A1Std, "x(a,1)", "mat(a,b,2*h; 0,a,0; 0,h,a)",
                 {"a", "b", "h"}, {}, {"a", "b", "h"}});
    f.push_back({"A1-cent-xma", S::A1, Realization::A1Std, "x(-a,-1)", "mat(a,0,0; b,a,2*c; c,0,a)",
                 {"a", "b", "c"}, {}, {"a", "b", "c"}});
    f.push_back({"A2-cent-X0", S::A2, Realization::Pgl3, "x(a1,1) x(a2,1)", "x(a1,b1) x(a2,b2) x(a1+a2,b3)",
                 {"b1", "b2", "b3"}, {{"b2", "b1"}}, {"b1", "b3"}});
    f.push_back({"B2-cent-X0", S::B2, Realization::Adjoint, "x(a,1) x(b,1)",
                 "x(a,b1) x(b,b2) x(a+b,b3) x(a+2b,b4)", {"b1", "b2", "b3", "b4"},
                 {{"b2", "b1"}, {"b3", "(b1^2-b1)/2"}}, {"b1", "b4"}});
    f.push_back({"G2-cent-X0", S::G2, Realization::Adjoint, "x(a,1) x(b,1)",
                 "x(a,b1) x(b,b2) x(a+b,b3) x(a+2b,b4) x(a+3b,b5) x(2a+3b,b6)",
                 {"b1", "b2", "b3", "b4", "b5", "b6"},
                 {{"b2", "b1"},
                  {"b3", "(b1-b1^2)/2"},
                  {"b4", "-2/3*b1^3+1/2*b1^2+1/6*b1"},
                  {"b5", "3/4*b1^4-1/2*b1^3-1/4*b1^2"}},
                 {"b1", "b6"}});
    return f;
}

namespace {

// generic word with the constraints substituted, over Q[free]
Matrix family_matrix(const CentralizerFamily& fam) {
    WordContext ctx{fam.system, {}};
    SpecPtr Pp = RingSpec::poly(fam.params), Pf = RingSpec::poly(fam.free);
    Matrix G = evaluate_word(ctx, fam.realization, Pp, fam.generic);
    std::map<std::string, RingElement> bind;
    for (auto& p : fam.params) {
        auto it = fam.constraints.find(p);
        if (it != fam.constraints.end())
            bind[p] = exactring::parse_element(Pf, it->second);
        else if (std::find(fam.free.begin(), fam.free.end(), p) != fam.free.end())
            bind[p] = RingElement::variable(Pf, p);
        else
            throw chevgroup::GroupError("parameter " + p + " is neither free nor constrained");
    }
    return G.map([&](const RingElement& e) { return exactring::substitute(e, bind, Pf); }, Pf);
}

template <class F>
void for_coords(int k, int p, F&& f) {
    std::vector<int> c(k, 0);
    for (;;) {
        f(c);
        int i = k - 1;
        while (i >= 0 && ++c[i] == p) c[i--] = 0;
        if (i < 0) return;
    }
}

}  // namespace

Report centralizer_check(const CentralizerFamily& fam) {
    Report out;
    out.name = fam.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        Matrix G = family_matrix(fam);
        Matrix X = evaluate_word(WordContext{fam.system, {}}, fam.realization, G.spec(), fam.x0);
        Matrix d = G * X - X * G;
        out.verdict = d.is_zero() ? Verdict::Pass : Verdict::Fail;
        out.residual = d.is_zero() ? "0" : "gX0 - X0g " + first_nonzero(d);
    } catch (const std::exception& e) {
        out.verdict = Verdict::Fail;
        out.residual = std::string("error: ") + e.what();
    }
    out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

BruteCentralizer centralizer_bruteforce(const CentralizerFamily& fam, int p, size_t cap) {
    if (p % 2 == 0 || (fam.system == SystemType::G2 && p % 3 == 0))
        throw exactring::RingError("centralizer brute force needs 2 (and 3 for G2) invertible mod p");
    finite::FpChevalley C(fam.system, fam.realization, p);
    const auto& F = C.field();
    finite::FpMat x0 = F.canon(C.eval(parse_word(WordContext{fam.system, {}}, fam.x0)));
    std::set<finite::FpMat> found;
    std::optional<shacheck::GroupTable> table;

    if (rootsys::rank(fam.system) == 1) {
        table = shacheck::generate_group(fam.system, p, fam.realization, cap);
        for (auto& g : table->elements)
            if (F.mul(g, x0) == F.mul(x0, g)) found.insert(g);
    } else {
        // g = (t u)(w u'); g x0 = x0 g  <=>  B x0 B^-1 = A^-1 x0 A, A = t u, B = w u'
        auto W = decomp::weyl_group(fam.system);
        auto simple = rootsys::simple_roots(fam.system);
        auto pos = rootsys::positive_roots(fam.system);
        std::unordered_map<finite::FpMat, std::vector<finite::FpMat>, finite::FpMatHash> bside;
        for (auto& w : W) {
            finite::FpMat wd = F.identity(C.dim());
            for (int i : w.word) wd = F.mul(wd, C.w(simple[i]));
            auto inv = decomp::inversion_set(fam.system, w);
            for_coords((int)inv.size(), p, [&](const std::vector<int>& c) {
                finite::FpMat B = wd;
                for (size_t i = 0; i < c.size(); ++i)
                    if (c[i]) B = F.mul(B, C.x(inv[i], c[i]));
                bside[F.mul(F.mul(B, x0), F.inverse(B))].push_back(B);
            });
        }
        std::vector<finite::FpMat> tori;
        for (int u1 = 1; u1 < p; ++u1)
            for (int u2 = 1; u2 < p; ++u2) {
                finite::FpMat h = F.mul(C.h(simple[0], u1), C.h(simple[1], u2));
                if (std::find(tori.begin(), tori.end(), h) == tori.end()) tori.push_back(h);
            }
        size_t half = tori.size();
        for (size_t k = 0; k < pos.size(); ++k) half *= size_t(p);
        if (half > cap)
            throw shacheck::CapExceeded("search half-size " + std::to_string(half) + " exceeds cap " +
                                        std::to_string(cap));
        for (auto& t : tori)
            for_coords((int)pos.size(), p, [&](const std::vector<int>& c) {
                finite::FpMat A = t;
                for (size_t i = 0; i < c.size(); ++i)
                    if (c[i]) A = F.mul(A, C.x(pos[i], c[i]));
                auto it = bside.find(F.mul(F.mul(F.inverse(A), x0), A));
                if (it == bside.end()) return;
                for (auto& B : it->second) found.insert(F.mul(A, B));
            });
    }

    // the family over F_p; rank-2 families are words in root elements, hence in the group
    Matrix G = family_matrix(fam);
    std::set<finite::FpMat> fam_set;
    for_coords((int)fam.free.size(), p, [&](const std::vector<int>& c) {
        std::map<std::string, long> bind;
        for (size_t i = 0; i < c.size(); ++i) bind[fam.free[i]] = c[i];
        finite::FpMat m(G.n());
        for (int i = 0; i < G.n(); ++i)
            for (int j = 0; j < G.n(); ++j)
                m(i, j) = uint8_t(exactring::map_to_modular(G(i, j), p, bind).residue_value());
        if (F.det(m) == 0) return;
        m = F.canon(m);
        if (table && table->id_of(m) < 0) return;
        fam_set.insert(m);
    });

    BruteCentralizer out;
    out.elements.assign(found.begin(), found.end());
    out.count = out.elements.size();
    out.family_count = fam_set.size();
    out.matches_family = found == fam_set;
    return out;
}

std::vector<Matrix> matrix_centralizer_a1(const Matrix& x) {
    if (x.n() != 3) throw chevgroup::GroupError("expects a 3x3 matrix");
    std::vector<mpq_class> xv(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto q = x(i, j).as_rational();
            if (!q) throw chevgroup::GroupError("matrix_centralizer_a1 needs rational entries");
            xv[i * 3 + j] = *q;
        }
    // row (i,j) of X x - x X, column (k,l) for unknown X_kl
    std::vector<std::vector<mpq_class>> A(9, std::vector<mpq_class>(9, 0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                A[i * 3 + j][i * 3 + k] += xv[k * 3 + j];
                A[i * 3 + j][k * 3 + j] -= xv[i * 3 + k];
            }
    std::vector<int> pivcol;
    int row = 0;
    for (int col = 0; col < 9 && row < 9; ++col) {
        int piv = -1;
        for (int r = row; r < 9; ++r)
            if (A[r][col] != 0) piv = r;
        if (piv < 0) continue;
        std::swap(A[row], A[piv]);
        mpq_class inv = 1 / A[row][col];
        for (auto& v : A[row]) v *= inv;
        for (int r = 0; r < 9; ++r)
            if (r != row && A[r][col] != 0) {
                mpq_class f = A[r][col];
                for (int c = 0; c < 9; ++c) A[r][c] -= f * A[row][c];
            }
        pivcol.push_back(col);
        ++row;
    }
    SpecPtr Q = RingSpec::poly({});
    std::vector<Matrix> out;
    for (int f = 0; f < 9; ++f) {
        if (std::find(pivcol.begin(), pivcol.end(), f) != pivcol.end()) continue;
        std::vector<mpq_class> v(9, 0);
        v[f] = 1;
        for (size_t r = 0; r < pivcol.size(); ++r) v[pivcol[r]] = -A[r][f];
        Matrix m(Q, 3, x.realization());
        for (int k = 0; k < 9; ++k) m(k / 3, k % 3) = RingElement::constant(Q, v[k]);
        out.push_back(m);
    }
    return out;
}

// ---------------------------------------------------------------- obstructions

namespace {

std::optional<RingElement> rational_cube_root(const RingElement& r) {
    auto q = r.as_rational();
    if (!q) return std::nullopt;
    mpz_class n = q->get_num(), d = q->get_den(), rn, rd;
    bool neg = n < 0;
    if (neg) n = -n;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3) || !mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3))
        return std::nullopt;
    mpq_class c(neg ? mpz_class(-rn) : rn, rd);
    c.canonicalize();
    return RingElement::constant(r.spec(), c);
}

}  // namespace

Obstruction scalar_conjugacy_obstruction(const Matrix& M, const Matrix& N) {
    const SpecPtr& s = M.spec();
    if (!s->is_field()) throw exactring::RingError("obstruction test needs a field");
    RingElement dM = M.det(), dN = N.det();
    if (dM.is_zero() || dN.is_zero()) throw exactring::NotAUnit("obstruction test needs invertible matrices");
    RingElement tM = M.trace(), tN = N.trace();
    RingElement iM = M.inverse().trace(), iN = N.inverse().trace();
    Obstruction out;
    auto impossible = [&](std::string w) {
        out.possible = false;
        out.witness = std::move(w);
        return out;
    };
    auto check = [&](const RingElement& lam) -> Obstruction {
        if (dM != lam.pow(3) * dN) return impossible("det(M) = lambda^3 det(N) fails for lambda = " + lam.to_string());
        if (lam * iM != iN) return impossible("tr(M^-1) = lambda^-1 tr(N^-1) fails for lambda = " + lam.to_string());
        if (tM != lam * tN) return impossible("tr(M) = lambda tr(N) fails for lambda = " + lam.to_string());
        out.possible = true;
        out.lambda = lam;
        return out;
    };
    if (!tN.is_zero()) return check(tM / tN);
    if (!tM.is_zero()) return impossible("tr(M) = lambda tr(N) with tr(N) = 0 != tr(M)");
    if (!iM.is_zero()) return check(iN / iM);
    if (!iN.is_zero()) return impossible("tr(M^-1) = lambda^-1 tr(N^-1) with tr(M^-1) = 0 != tr(N^-1)");
    RingElement r = dM / dN;
    if (s->kind() == RingKind::Modular) {
        for (long v = 1; v < s->modulus(); ++v) {
            RingElement lam = RingElement::residue(s, v);
            if (lam.pow(3) == r) return check(lam);
        }
        return impossible("lambda^3 = det(M)/det(N) has no solution");
    }
    if (auto c = rational_cube_root(r)) return check(*c);
    if (r.as_rational()) return impossible("lambda^3 = det(M)/det(N) has no rational solution");
    out.possible = true;  // traces carry no information and the cube root is not decidable here
    out.witness = "undetermined";
    return out;
}

RingElement symmetric_difference(const RingElement& F) {
    const auto& vars = F.spec()->vars();
    if (vars.size() != 1) throw exactring::RingError("symmetric_difference expects a ring in one variable");
    RingElement t = RingElement::variable(F.spec(), vars[0]);
    auto at = [&](const RingElement& v) { return exactring::substitute(F, {{vars[0], v}}); };
    return at(t + 1) + at(-t - 1) - at(t) - at(-t);
}

Matrix transvection_square(const RingElement& u1, const RingElement& u2, const RingElement& u3) {
    using rootsys::parse_root;
    auto x = [&](const char* g, const RingElement& u) {
        return chevgroup::root_element(SystemType::A2, Realization::Pgl3, parse_root(SystemType::A2, g), u);
    };
    Matrix u = x("a1", u1) * x("a2", u2) * x("a1+a2", u3);
    return minus_identity(u).pow(2);
}

bool transvection_criterion(const RingElement& u1, const RingElement& u2, const RingElement& u3) {
    return transvection_square(u1, u2, u3).is_zero();
}

ShortRootReport short_root_squares(SystemType t) {
    if (t != SystemType::B2 && t != SystemType::G2)
        throw chevgroup::GroupError("short_root_squares is defined for B2 and G2");
    ShortRootReport out;
    out.report.name = std::string("short-root-squares-") + rootsys::type_name(t);
    SpecPtr P = RingSpec::poly({"s"});
    Matrix M = evaluate_word(WordContext{t, {}}, Realization::Adjoint, P, "[x(a,1), x(b,s)]");
    auto pos = rootsys::positive_roots(t);
    auto c = chevgroup::peel_coordinates(t, M, pos);
    if (!c) {
        out.report.residual = "commutator is not in U+";
        return out;
    }
    for (size_t k = 0; k < pos.size(); ++k) out.coords.emplace(pos[k].to_string(), (*c)[k]);
    auto val = [&](const char* s) { return exactring::parse_element(P, s); };
    std::vector<std::pair<std::string, RingElement>> want;
    if (t == SystemType::B2)
        want = {{"a+b", val("-s")}, {"a+2b", val("-s^2")}};
    else
        want = {{"a+b", val("s")}, {"a+2b", val("-s^2")}, {"a+3b", val("-s^3")}, {"2a+3b", val("s^3")}};
    out.report.verdict = Verdict::Pass;
    out.report.residual = "0";
    for (auto& [k, v] : want)
        if (out.coords.at(k) != v) {
            out.report.verdict = Verdict::Fail;
            out.report.residual = k + " coordinate is " + out.coords.at(k).to_string();
            break;
        }
    return out;
}

// ---------------------------------------------------------------- G2 entry chain
//
// Residual g X6 - x_{2a+3b}(a) g over Q[a,b,c1..c5,d], g = x_{-a}(c1) x_{-a-b}(c2)
// x_{-a-2b}(c3) x_{-a-3b}(c4) x_{-2a-3b}(c5), X6 the centralizer family point with
// top coordinate d. Units: a, d. Stages either find the claim as a single reduced
// entry times a local unit, or check an explicit certificate u*claim = sum q_k E_k.

namespace {

const std::vector<std::string> kChainVars = {"a", "b", "c1", "c2", "c3", "c4", "c5", "d"};

struct GbRow {
    const char* poly;
    std::vector<const char*> cof;
};
const std::vector<std::vector<GbRow>>& gb_table() {
    static const std::vector<std::vector<GbRow>> t = {
#include "g2_chain_rules.inc"
    };
    return t;
}

struct CertTerm {
    int i, j;  // 1-based
    std::string cof;
};
struct Adjoin {
    std::string poly;
    std::string unit;                                 // unit * poly == stage claim
    std::vector<std::pair<std::string, int>> combo;  // or poly == sum cof * claims[k]
};
struct Stage {
    std::string name, claim;
    std::string unit;  // certificate stages only
    std::vector<CertTerm> cert;
    std::vector<Adjoin> adjoin;
};

std::string series_S() {
    // sum_{k=0}^{8} (-1)^k c2^k / 6^(k+1)
    std::string s;
    mpz_class six = 6;
    for (int k = 0; k <= 8; ++k) {
        mpz_class den;
        mpz_pow_ui(den.get_mpz_t(), six.get_mpz_t(), k + 1);
        s += (k % 2 ? "-" : (k ? "+" : "")) + std::string("1/") + den.get_str() + "*c2^" + std::to_string(k);
    }
    return "(" + s + ")";
}

const std::vector<Stage>& stages() {
    static const std::vector<Stage> s = [] {
        std::string S = series_S();
        std::vector<Stage> v;
        v.push_back({"b2c4", "b^2*c4", "", {}, {{"b^2*c4", "1", {}}}});
        v.push_back({"ac5", "a*c5", "", {}, {{"c5", "a", {}}}});
        v.push_back({"c3cubed", "c3^3", "", {}, {{"c3^3", "1", {}}}});
        v.push_back({"b-ac2sq", "b-a*c2^2", "1",
                     {{3, 1, "-1"}, {1, 3, "-(b+1)^2/4*2*a*c3"}, {3, 5, "(b+1)^2/4*b"}},
                     {{"b-a*c2^2", "1", {}}}});
        v.push_back({"c4-c2sq", "c4-c2^2", "a",
                     {{3, 2, "-1"}, {1, 3, "(b^2-1)/4*2*a*c3"}, {3, 5, "-(b^2-1)/4*b"}},
                     {{"c4-c2^2", "1", {}}}});
        v.push_back({"c3sq+c2cubed", "c3^2+c2^3", "a", {{4, 5, "1"}}, {{"c3^2+c2^3", "1", {}}}});
        v.push_back({"c2fourth", "c2^4", "a^2",
                     {{3, 2, "c2*" + S + "*b"}, {1, 3, "c2*" + S + "*2*a"}},
                     {{"c2^4", "1", {}}, {"b^2", "", {{"b+a*c2^2", 3}, {"a^2", 6}}}}});
        v.push_back({"bc1", "b*c1", "", {}, {{"b*c1", "1", {}}}});
        v.push_back({"final-2b", "2*b", "", {}, {{"b", "2", {}}}});
        return v;
    }();
    return s;
}

const SpecPtr& chain_poly_ring() {
    static const SpecPtr P = RingSpec::poly(kChainVars);
    return P;
}

Poly P_(const std::string& s) { return exactring::parse_element(chain_poly_ring(), s).numerator(); }

const Matrix& chain_residual() {
    static const Matrix R = [] {
        WordContext ctx{SystemType::G2, {}};
        const SpecPtr& P = chain_poly_ring();
        Matrix g = evaluate_word(ctx, Realization::Adjoint, P,
                                 "x(-a,c1) x(-a-b,c2) x(-a-2b,c3) x(-a-3b,c4) x(-2a-3b,c5)");
        Matrix X6 = evaluate_word(ctx, Realization::Adjoint, P,
                                  "x(a,b) x(b,b) x(a+b,(b-b^2)/2) x(a+2b,-2/3*b^3+1/2*b^2+1/6*b) "
                                  "x(a+3b,3/4*b^4-1/2*b^3-1/4*b^2) x(2a+3b,d)");
        Matrix xa = evaluate_word(ctx, Realization::Adjoint, P, "x(2a+3b,a)");
        return g * X6 - xa * g;
    }();
    return R;
}

// claims adjoined by stages 1..k, checked against each stage's claim
std::vector<Poly> claims_through(size_t k) {
    std::vector<Poly> out;
    for (size_t i = 0; i < k; ++i) {
        const Stage& st = stages()[i];
        Poly claim = P_(st.claim);
        for (auto& a : st.adjoin) {
            Poly p = P_(a.poly);
            if (!a.unit.empty()) {
                if (P_(a.unit) * p != claim) throw chevgroup::GroupError("adjoined claim " + a.poly + " not justified");
            } else {
                Poly sum;
                for (auto& [cof, idx] : a.combo) sum = sum + P_(cof) * out.at(idx);
                if (sum != p) throw chevgroup::GroupError("adjoined claim " + a.poly + " not justified");
            }
            out.push_back(p);
        }
    }
    return out;
}

// rules after `done` stages, each certified as a combination of the claims
SpecPtr rules_after(size_t done) {
    if (done == 0) return chain_poly_ring();
    static std::map<size_t, SpecPtr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(done); it != cache.end()) return it->second;
    auto claims = claims_through(done);
    const auto& block = gb_table().at(done - 1);
    exactring::MonoOrder ord;
    ord.weights.assign(kChainVars.size(), 1);
    ord.nvars = (int)kChainVars.size();
    std::vector<exactring::RewriteRule> rules;
    for (auto& row : block) {
        Poly p = P_(row.poly);
        if (row.cof.size() != claims.size())
            throw chevgroup::GroupError("rule " + std::string(row.poly) + " has the wrong cofactor count");
        Poly sum;
        for (size_t i = 0; i < claims.size(); ++i) sum = sum + P_(row.cof[i]) * claims[i];
        if (sum != p) throw chevgroup::GroupError("rule " + std::string(row.poly) + " is not in the claim ideal");
        rules.push_back(RingSpec::orient(p, ord));
    }
    SpecPtr s = RingSpec::quotient(kChainVars, rules);
    cache[done] = s;
    return s;
}

// unit of the local ring: dropping radical variables leaves one term in a, d
bool local_unit(const Poly& q, const SpecPtr& ring) {
    std::set<int> radical{1};  // b
    for (auto& r : ring->rules())
        if (r.rhs.is_zero()) {
            int nz = 0, v = -1;
            for (int i = 0; i < (int)kChainVars.size(); ++i)
                if (r.lhs[i]) ++nz, v = i;
            if (nz == 1) radical.insert(v);
        }
    std::vector<Poly::Term> keep;
    for (auto& t : q.terms()) {
        bool rad = false;
        for (int v : radical) rad = rad || t.m[v] > 0;
        if (!rad) keep.push_back(t);
    }
    if (keep.size() != 1) return false;
    for (int i = 0; i < (int)kChainVars.size(); ++i)
        if (keep[0].m[i] && i != 0 && i != 7) return false;
    return true;
}

std::string show(const Poly& p) { return exactring::poly_to_string(p, kChainVars); }

Report chain_report(const std::string& name, const std::string& claim_override) {
    Report out;
    out.name = name;
    auto t0 = std::chrono::steady_clock::now();
    auto finish = [&] {
        out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return out;
    };
    const auto& st = stages();
    auto it = std::find_if(st.begin(), st.end(), [&](const Stage& s) { return s.name == name; });
    if (it == st.end()) {
        out.residual = "unknown stage '" + name + "'";
        return finish();
    }
    size_t k = size_t(it - st.begin());
    try {
        SpecPtr ring = rules_after(k);
        const Matrix& R = chain_residual();
        std::string claim_text = claim_override.empty() ? it->claim : claim_override;
        Poly claim = P_(claim_text);
        if (it->cert.empty()) {
            for (int i = 0; i < R.n() && out.verdict != Verdict::Pass; ++i)
                for (int j = 0; j < R.n() && out.verdict != Verdict::Pass; ++j) {
                    Poly e = ring->reduce(R(i, j).numerator());
                    if (e.is_zero()) continue;
                    auto q = e.divide_exact(claim);
                    if (!q || !local_unit(*q, ring)) continue;
                    out.verdict = Verdict::Pass;
                    out.residual = "entry " + entry_label(i, j) + " = (" + show(*q) + ") * (" + show(claim) + ")";
                }
            if (out.verdict != Verdict::Pass) out.residual = show(claim) + " is not a unit multiple of any entry";
        } else {
            Poly u = P_(it->unit);
            if (!local_unit(u, ring)) throw chevgroup::GroupError("certificate multiplier is not a unit");
            Poly sum = u * claim;
            std::string used;
            for (auto& t : it->cert) {
                sum = sum - P_(t.cof) * R(t.i - 1, t.j - 1).numerator();
                used += (used.empty() ? "" : " ") + entry_label(t.i - 1, t.j - 1);
            }
            Poly r = ring->reduce(sum);
            out.verdict = r.is_zero() ? Verdict::Pass : Verdict::Fail;
            out.residual = r.is_zero() ? "certificate over entries " + used : "certificate residual " + show(r);
        }
        if (out.verdict == Verdict::Pass && k + 1 == st.size() && claim_override.empty()) {
            Poly b = chain_final_ring()->reduce(P_("b"));
            if (!b.is_zero()) {
                out.verdict = Verdict::Fail;
                out.residual = "b does not reduce to 0 in the final ring: " + show(b);
            }
        }
    } catch (const std::exception& e) {
        out.verdict = Verdict::Fail;
        out.residual = std::string("error: ") + e.what();
    }
    return finish();
}

std::string stage_claim(const std::string& stage) {
    for (auto& s : stages())
        if (s.name == stage) return s.claim;
    return "";
}

}  // namespace

const std::vector<std::string>& chain_stage_names() {
    static const std::vector<std::string> n = [] {
        std::vector<std::string> v;
        for (auto& s : stages()) v.push_back(s.name);
        return v;
    }();
    return n;
}

Report entry_chain_g2(const std::string& stage, const std::string& claim_override) {
    return chain_report(stage, claim_override);
}

SpecPtr chain_final_ring() { return rules_after(stages().size()); }

}  // namespace chev::prooflab
