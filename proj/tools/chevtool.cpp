// chevtool: batch front end for relation tables, catalogs, centralizers,
// Sha checks, decompositions and word evaluation.

#include "chev/decomp.hpp"
#include "chev/prooflab.hpp"
#include "chev/shacheck.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace chev;
using json = nlohmann::json;
using prooflab::Report;
using prooflab::Verdict;

namespace {

struct Config {
    std::string system;
    int prime = 0;
    std::string realization;
    std::string filter = "*";
    std::string output = "text";
    bool slow = false;
    size_t cap = 10000;
    bool no_timing = false;
    // per-command extras
    bool all_pairs = false;
    bool mutants = false;
    bool export_only = false;
    std::string import_file;
    int power = 1;
    std::string vars;
    bool fraction = false;
    std::string word;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<rootsys::SystemType> systems(const Config& c) {
    if (c.system.empty()) return rootsys::all_types();
    try {
        return {rootsys::type_from_name(c.system)};
    } catch (const rootsys::RootError& e) {
        throw UsageError(e.what());
    }
}

rootsys::SystemType one_system(const Config& c) {
    if (c.system.empty()) throw UsageError("--system is required");
    return systems(c)[0];
}

chevgroup::Realization realization(const Config& c, rootsys::SystemType t) {
    if (c.realization.empty()) return shacheck::default_realization(t);
    try {
        auto r = chevgroup::realization_from_name(c.realization);
        chevgroup::check_realization(t, r);
        return r;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

bool json_out(const Config& c) { return c.output == "json-lines"; }

// exit code from a report set: 1 on FAIL, 3 when only INCONCLUSIVE spoils it
int emit(const Config& c, std::vector<Report> reports) {
    std::sort(reports.begin(), reports.end(), [](const Report& a, const Report& b) { return a.name < b.name; });
    bool fail = false, inconclusive = false;
    for (auto& r : reports) {
        fail = fail || r.verdict == Verdict::Fail;
        inconclusive = inconclusive || r.verdict == Verdict::Inconclusive;
        if (json_out(c)) {
            std::cout << prooflab::report_to_json(r, !c.no_timing) << "\n";
            continue;
        }
        std::cout << std::left << std::setw(13) << prooflab::verdict_name(r.verdict) << std::setw(36) << r.name << " "
                  << r.residual;
        if (!c.no_timing) std::cout << "  (" << std::fixed << std::setprecision(2) << r.millis << " ms)";
        std::cout << "\n";
        if (!r.note.empty()) std::cout << std::setw(14) << "" << "note: " << r.note << "\n";
    }
    if (!json_out(c)) {
        size_t n[4] = {0, 0, 0, 0};
        for (auto& r : reports) ++n[int(r.verdict)];
        std::cout << n[0] << " pass, " << n[1] << " fail, " << n[2] << " inconclusive, " << n[3] << " skipped\n";
    }
    return fail ? 1 : inconclusive ? 3 : 0;
}

int cmd_relations(const Config& c) {
    for (auto t : systems(c)) {
        auto roots = c.all_pairs ? rootsys::all_roots(t) : rootsys::positive_roots(t);
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = c.all_pairs ? 0 : i + 1; j < roots.size(); ++j) {
                const auto &g = roots[i], &d = roots[j];
                if (g == d || g == -d) continue;
                std::array<int, 2> s{g.c[0] + d.c[0], g.c[1] + d.c[1]};
                if (!rootsys::is_root(t, {s[0], s[1]})) continue;
                auto rel = chevgroup::commutator_relation(t, g, d);
                if (json_out(c))
                    std::cout << json{{"system", rootsys::type_name(t)},
                                      {"g", g.to_string()},
                                      {"d", d.to_string()},
                                      {"relation", rel.text()}}
                                     .dump()
                              << "\n";
                else
                    std::cout << rootsys::type_name(t) << "  " << rel.text() << "\n";
            }
    }
    return 0;
}

int cmd_centralizer(const Config& c) {
    auto sys = systems(c);
    std::vector<Report> out;
    for (auto& f : prooflab::builtin_families()) {
        if (std::find(sys.begin(), sys.end(), f.system) == sys.end()) continue;
        out.push_back(prooflab::centralizer_check(f));
        if (c.prime) {
            Report r;
            r.name = f.name + "@F" + std::to_string(c.prime);
            auto t0 = std::chrono::steady_clock::now();
            bool degenerate = c.prime == 2 || (f.system == rootsys::SystemType::G2 && c.prime == 3);
            try {
                if (degenerate) throw std::domain_error("structure constants not invertible mod p");
                auto b = prooflab::centralizer_bruteforce(f, c.prime, c.cap);
                r.verdict = b.matches_family ? Verdict::Pass : Verdict::Fail;
                r.residual = "centralizer " + std::to_string(b.count) + ", family " + std::to_string(b.family_count);
            } catch (const std::domain_error& e) {
                r.verdict = Verdict::Skipped;
                r.residual = e.what();
            } catch (const std::exception& e) {
                r.verdict = Verdict::Fail;
                r.residual = std::string("error: ") + e.what();
            }
            r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            out.push_back(r);
        }
    }
    return emit(c, out);
}

bool glob_match(const std::string& pattern, const std::string& name) {
    return fnmatch(pattern.c_str(), name.c_str(), 0) == 0;
}

int cmd_prooflab(const Config& c) {
    std::vector<prooflab::IdentityRecord> recs;
    if (!c.import_file.empty()) {
        std::ifstream in(c.import_file);
        if (!in) throw UsageError("cannot open " + c.import_file);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) {
                try {
                    recs.push_back(prooflab::record_from_json(line));
                } catch (const std::exception& e) {
                    throw UsageError(std::string("bad record: ") + e.what());
                }
            }
    } else {
        for (auto t : systems(c)) {
            auto v = prooflab::builtin_catalog(t);
            recs.insert(recs.end(), v.begin(), v.end());
        }
    }
    recs.erase(std::remove_if(recs.begin(), recs.end(),
                              [&](const prooflab::IdentityRecord& r) { return !glob_match(c.filter, r.name); }),
               recs.end());
    if (c.export_only) {
        std::sort(recs.begin(), recs.end(), [](auto& a, auto& b) { return a.name < b.name; });
        for (auto& r : recs) std::cout << prooflab::record_to_json(r) << "\n";
        return 0;
    }
    std::vector<Report> out;
    for (auto& r : recs) {
        auto v = prooflab::run_record(r);
        out.insert(out.end(), v.begin(), v.end());
        if (!c.mutants) continue;
        // a mutant report passes when the perturbed record is rejected
        for (auto& m : prooflab::mutants(r)) {
            Report mr = prooflab::run_identity(m);
            mr.verdict = mr.verdict == Verdict::Pass ? Verdict::Fail : Verdict::Pass;
            mr.residual = mr.verdict == Verdict::Pass ? "rejected: " + mr.residual : "mutant accepted";
            mr.note.clear();
            out.push_back(mr);
        }
    }
    return emit(c, out);
}

int cmd_sha(const Config& c) {
    if (!c.prime) throw UsageError("sha needs --prime");
    std::vector<Report> out;
    for (auto t : systems(c)) {
        Report r;
        r.name = std::string("sha-") + rootsys::type_name(t) + "@F" + std::to_string(c.prime);
        try {
            auto s = shacheck::sha_report(t, c.prime, c.cap, c.slow);
            r.verdict = s.pass ? Verdict::Pass : Verdict::Fail;
            r.residual = s.verdict() + ": order " + std::to_string(s.group_order) + ", classes " +
                         std::to_string(s.class_count) + ", class-preserving " + std::to_string(s.cp_endo_count) +
                         ", inner " + std::to_string(s.inner_count);
            r.millis = s.seconds * 1000;
        } catch (const shacheck::SlowRequired& e) {
            r.verdict = Verdict::Skipped;
            r.residual = e.what();
        } catch (const std::exception& e) {
            r.verdict = Verdict::Fail;
            r.residual = std::string("error: ") + e.what();
        }
        out.push_back(r);
    }
    return emit(c, out);
}

chevgroup::Word parse_or_usage(rootsys::SystemType t, const std::string& text) {
    try {
        return chevgroup::parse_word(chevgroup::WordContext{t, {}}, text);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

int cmd_decompose(const Config& c) {
    auto t = one_system(c);
    if (!c.prime) throw UsageError("decompose needs --prime");
    auto r = realization(c, t);
    auto w = parse_or_usage(t, c.word);
    Report rep;
    rep.name = "decompose";
    auto t0 = std::chrono::steady_clock::now();
    if (t == rootsys::SystemType::A1 && r == chevgroup::Realization::A1Std && c.power > 1) {
        long n = 1;
        for (int i = 0; i < c.power; ++i) n *= c.prime;
        auto s = exactring::RingSpec::modular(n);
        auto f = decomp::gauss_decompose_a1(chevgroup::evaluate_word(t, r, s, w));
        rep.verdict = Verdict::Pass;
        rep.residual = chevgroup::word_to_string(f.word());
    } else {
        decomp::BruhatSearch B(t, r, c.prime);
        auto m = B.group().eval(w);
        auto f = B.decompose(m);
        rep.verdict = f ? Verdict::Pass : Verdict::Fail;
        rep.residual = f ? chevgroup::word_to_string(f->word()) : "not in the elementary group";
    }
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return emit(c, {rep});
}

int cmd_eval(const Config& c) {
    auto t = one_system(c);
    auto r = realization(c, t);
    auto w = parse_or_usage(t, c.word);
    exactring::SpecPtr s;
    std::vector<std::string> vars;
    std::stringstream ss(c.vars);
    for (std::string v; std::getline(ss, v, ',');)
        if (!v.empty()) vars.push_back(v);
    if (c.prime) {
        long n = 1;
        for (int i = 0; i < c.power; ++i) n *= c.prime;
        s = exactring::RingSpec::modular(n);
    } else {
        s = c.fraction ? exactring::RingSpec::fraction(vars) : exactring::RingSpec::poly(vars);
    }
    chevgroup::Matrix m;
    try {
        m = chevgroup::evaluate_word(t, r, s, w);
    } catch (const exactring::RingError& e) {
        // unknown variables and malformed parameters are argument errors
        throw UsageError(e.what());
    }
    if (json_out(c)) {
        json rows = json::array();
        for (int i = 0; i < m.n(); ++i) {
            json row = json::array();
            for (int j = 0; j < m.n(); ++j) row.push_back(m(i, j).to_string());
            rows.push_back(row);
        }
        std::cout << json{{"word", chevgroup::word_to_string(w)}, {"ring", s->describe()}, {"matrix", rows}}.dump()
                  << "\n";
    } else {
        std::cout << chevgroup::word_to_string(w) << "  over " << s->describe() << "\n" << m.to_string();
    }
    return 0;
}

void common(CLI::App* sub, Config& c) {
    sub->add_option("--system", c.system, "A1, A2, B2 or G2");
    sub->add_option("--prime", c.prime, "prime p for finite computations");
    sub->add_option("--realization", c.realization, "adjoint, pgl3 or a1std");
    sub->add_option("--output", c.output, "text or json-lines")->check(CLI::IsMember({"text", "json-lines"}));
    sub->add_option("--cap", c.cap, "element cap for exhaustive searches");
    sub->add_flag("--slow", c.slow, "allow long finite searches");
    sub->add_flag("--no-timing", c.no_timing, "omit timings (byte-stable output)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in Chevalley groups of rank <= 2"};
    app.require_subcommand(1);
    Config c;

    auto* rel = app.add_subcommand("relations", "print commutator relations");
    common(rel, c);
    rel->add_option("SYSTEM", c.system, "system (same as --system)");
    rel->add_flag("--all", c.all_pairs, "all root pairs, not only positive ones");

    auto* cen = app.add_subcommand("centralizer", "centralizer families; with --prime also brute force");
    common(cen, c);

    auto* pl = app.add_subcommand("prooflab", "run the identity catalog");
    common(pl, c);
    pl->add_option("--filter", c.filter, "name glob");
    pl->add_flag("--mutants", c.mutants, "also check that every perturbed record is rejected");
    pl->add_flag("--export", c.export_only, "print the records as JSON lines instead of running them");
    pl->add_option("--import", c.import_file, "run records from a JSON-lines file");

    auto* sha = app.add_subcommand("sha", "class-preserving endomorphisms over F_p");
    common(sha, c);

    auto* dec = app.add_subcommand("decompose", "Bruhat (F_p) or Gauss (A1, Z/p^k) decomposition");
    common(dec, c);
    dec->add_option("--power", c.power, "k for Z/p^k (A1 Gauss decomposition)");
    dec->add_option("word", c.word, "group word")->required();

    auto* ev = app.add_subcommand("eval", "evaluate a word to a matrix");
    common(ev, c);
    ev->add_option("--vars", c.vars, "comma-separated ring variables");
    ev->add_flag("--fraction", c.fraction, "use the fraction field of the variables");
    ev->add_option("--power", c.power, "with --prime: work over Z/p^k");
    ev->add_option("word", c.word, "group word")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*rel) return cmd_relations(c);
        if (*cen) return cmd_centralizer(c);
        if (*pl) return cmd_prooflab(c);
        if (*sha) return cmd_sha(c);
        if (*dec) return cmd_decompose(c);
        if (*ev) return cmd_eval(c);
    } catch (const UsageError& e) {
        std::cerr << "chevtool: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "chevtool: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
