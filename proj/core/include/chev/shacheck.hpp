#pragma once
// Finite elementary groups over F_p: closure, classes, class-preserving endomorphisms.

#include "chev/finite.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace chev::shacheck {

using chevgroup::Realization;
using finite::FpMat;
using rootsys::SystemType;

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SlowRequired : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Realization default_realization(SystemType t);

class GroupTable {
public:
    SystemType type = SystemType::A1;
    Realization realization = Realization::A1Std;
    int p = 0;
    std::vector<FpMat> elements;                          // id 0 is the identity
    std::vector<std::pair<std::string, int>> generators;  // search generators (word text, id)

    int size() const { return (int)elements.size(); }
    int mul(int a, int b) const;
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
    int id_of(const FpMat& m) const;                                  // -1 when absent
    const finite::FpField& field() const { return F_; }
    bool has_table() const { return !table_.empty(); }

private:
    friend GroupTable generate_group(SystemType, int, Realization, size_t, std::vector<FpMat>);
    finite::FpField F_{2, false};
    std::unordered_map<FpMat, int, finite::FpMatHash> index_;
    std::vector<uint16_t> table_;
    std::vector<int> inv_;
};

// Closure of {x_g(t) : t != 0}. `closure_generators` overrides that set (e.g. a
// shuffled copy); the element set does not depend on the order. Throws CapExceeded.
GroupTable generate_group(SystemType t, int p, Realization r, size_t cap = 10000,
                          std::vector<FpMat> closure_generators = {});

struct Classes {
    std::vector<int> class_of;             // per element id
    std::vector<std::vector<int>> members;  // class 0 holds the identity
};
Classes conjugacy_classes(const GroupTable& G);

struct EndoMap {
    std::vector<int> images;  // per search generator
    std::vector<int> table;   // id -> id
};
std::optional<EndoMap> extend_homomorphism(const GroupTable& G, const std::vector<int>& images);
std::vector<EndoMap> class_preserving_endos(const GroupTable& G, const Classes& C);
std::optional<int> is_inner(const GroupTable& G, const EndoMap& phi);
// number of distinct inner automorphism tables (= |G/Z(G)|)
int inner_count(const GroupTable& G);

struct ShaReport {
    std::string system;
    int p = 0;
    int group_order = 0, class_count = 0, cp_endo_count = 0, inner_count = 0;
    bool pass = false;
    bool hypothesis_violated = false;  // p = 2
    double seconds = 0;
    std::string verdict() const;
};
ShaReport sha_report(SystemType t, int p, size_t cap = 10000, bool slow = false);

}  // namespace chev::shacheck
