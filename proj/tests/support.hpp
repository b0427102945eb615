#pragma once
// Shared helpers for the doctest suites.

#include "chev/chevgroup.hpp"
#include "chev/exactring.hpp"

#include <random>
#include <string>

namespace testing_support {

using namespace chev;
using exactring::RingElement;
using exactring::SpecPtr;

inline RingElement el(const SpecPtr& s, const std::string& text) { return exactring::parse_element(s, text); }

inline exactring::Mono mono(std::initializer_list<int> exps) {
    exactring::Mono m{};
    int i = 0;
    for (int e : exps) m[i++] = uint16_t(e);
    return m;
}

inline chevgroup::Matrix word(rootsys::SystemType t, chevgroup::Realization r, const SpecPtr& s,
                              const std::string& text) {
    return chevgroup::evaluate_word(chevgroup::WordContext{t, {}}, r, s, text);
}

inline std::vector<chevgroup::Realization> realizations(rootsys::SystemType t) {
    std::vector<chevgroup::Realization> out;
    for (auto r : {chevgroup::Realization::Adjoint, chevgroup::Realization::Pgl3, chevgroup::Realization::A1Std}) {
        try {
            chevgroup::check_realization(t, r);
            out.push_back(r);
        } catch (const std::exception&) {
        }
    }
    return out;
}

// random word in root elements over Z/p, as text
inline std::string random_word(rootsys::SystemType t, int p, int len, std::mt19937& rng) {
    auto roots = rootsys::all_roots(t);
    std::string w;
    for (int i = 0; i < len; ++i) {
        auto& g = roots[rng() % roots.size()];
        w += (i ? " x(" : "x(") + g.to_string() + "," + std::to_string(rng() % p) + ")";
    }
    return w;
}

}  // namespace testing_support
