#pragma once
// Catalog of concrete identities, centralizer families, the G2 entry chain and
// the small obstruction computations, with a uniform runner.

#include "chev/chevgroup.hpp"
#include "chev/finite.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chev::prooflab {

using chevgroup::Matrix;
using chevgroup::Realization;
using exactring::RingElement;
using exactring::SpecPtr;
using rootsys::SystemType;

enum class Form {
    Equal,       // lhs == rhs
    Projective,  // lhs == lambda * rhs (pgl3)
    Trace,       // tr(lhs) == expected[0]
    Entries,     // entries of lhs, or of (lhs - I)^power when power > 0
    UCoords,     // U+ coordinates of lhs, keyed by root name; unlisted roots are 0
    NilPower,    // (lhs - I)^power == 0
    NonZero,     // (lhs - I)^power != 0
    Chain,       // one stage of the G2 entry chain (stage name in lhs)
    Skipped,     // prose-only claim, reported, never evaluated
};
const char* form_name(Form f);
Form form_from_name(const std::string& s);

enum class Verdict { Pass, Fail, Inconclusive, Skipped };
const char* verdict_name(Verdict v);

struct Expectation {
    std::string label;  // "(i,j)" (1-based), root name, or "trace"
    std::string value;  // polynomial text in the record's ring
};

struct IdentityRecord {
    std::string name;
    SystemType system = SystemType::A1;
    Realization realization = Realization::Adjoint;
    SpecPtr ring;
    std::map<std::string, std::string> defs;  // named words usable in lhs/rhs
    std::string lhs, rhs;
    Form form = Form::Equal;
    std::vector<Expectation> expected;
    int power = 0;
    bool others_zero = true;  // Entries: unlisted entries must vanish
    // printed variant of a false displayed identity; reported as "<name>.printed-refuted"
    std::string erratum_rhs;
    std::vector<Expectation> erratum_expected;
    std::string note;
};

struct Report {
    std::string name;
    Verdict verdict = Verdict::Fail;
    std::string residual;  // normal-form witness when not PASS, or a summary
    double millis = 0;
    std::string note;
};

Report run_identity(const IdentityRecord& rec);
// run_identity plus, for records with an erratum, the printed-form report
std::vector<Report> run_record(const IdentityRecord& rec);
std::vector<IdentityRecord> builtin_catalog(SystemType t);
std::vector<IdentityRecord> full_catalog();
// one-coefficient perturbations; every one must fail
std::vector<IdentityRecord> mutants(const IdentityRecord& rec, size_t cap = 8);

// structured export, one JSON object per line
std::string record_to_json(const IdentityRecord& rec);
IdentityRecord record_from_json(const std::string& line);
std::string spec_to_json(const SpecPtr& s);
SpecPtr spec_from_json(const std::string& text);
std::string report_to_json(const Report& r, bool timing = true);

// ---------------------------------------------------------------- centralizers

struct CentralizerFamily {
    std::string name;
    SystemType system = SystemType::A1;
    Realization realization = Realization::Adjoint;
    std::string x0;       // word
    std::string generic;  // word in the parameters
    std::vector<std::string> params;                  // every parameter of `generic`
    std::map<std::string, std::string> constraints;  // parameter -> polynomial in the free ones
    std::vector<std::string> free;
};
std::vector<CentralizerFamily> builtin_families();
Report centralizer_check(const CentralizerFamily& fam);

struct BruteCentralizer {
    size_t count = 0;
    std::vector<finite::FpMat> elements;  // sorted
    size_t family_count = 0;              // family instantiated over F_p (inside the group)
    bool matches_family = false;
};
// exhaustive centralizer of x0 in E(system, F_p); compared with the family over F_p
BruteCentralizer centralizer_bruteforce(const CentralizerFamily& fam, int p, size_t cap = 10000);

// basis of {X : X x = x X} over Q; x must have rational entries
std::vector<Matrix> matrix_centralizer_a1(const Matrix& x);

// ---------------------------------------------------------------- obstructions

struct Obstruction {
    bool possible = false;
    std::optional<RingElement> lambda;  // when possible
    std::string witness;                // failed equation, when impossible
};
// necessary conditions for g M g^-1 = lambda N: det, trace, trace of the inverse
Obstruction scalar_conjugacy_obstruction(const Matrix& M, const Matrix& N);

// [F(t+1) + F(-t-1)] - [F(t) + F(-t)] for F in one variable
RingElement symmetric_difference(const RingElement& F);

// (u - I)^2 for u = x_a1(u1) x_a2(u2) x_{a1+a2}(u3) in pgl3
Matrix transvection_square(const RingElement& u1, const RingElement& u2, const RingElement& u3);
bool transvection_criterion(const RingElement& u1, const RingElement& u2, const RingElement& u3);

struct ShortRootReport {
    Report report;
    std::map<std::string, RingElement> coords;  // U+ coordinates of [x_a(1), x_b(s)]
};
ShortRootReport short_root_squares(SystemType t);

// ---------------------------------------------------------------- G2 entry chain

const std::vector<std::string>& chain_stage_names();
// `claim_override` replaces the claimed polynomial (for absence witnesses)
Report entry_chain_g2(const std::string& stage, const std::string& claim_override = "");
// ring after all nine stages (the final rule set); b reduces to 0 in it
SpecPtr chain_final_ring();

}  // namespace chev::prooflab
