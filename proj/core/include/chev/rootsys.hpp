#pragma once
// Root systems A1, A2, B2, G2 in the simple-root basis.

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chev::rootsys {

enum class SystemType { A1, A2, B2, G2 };

struct RootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* type_name(SystemType t);
SystemType type_from_name(const std::string& s);  // throws RootError
int rank(SystemType t);
std::vector<SystemType> all_types();

enum class Length { Long, Short };

struct Root {
    SystemType type = SystemType::A1;
    std::array<int, 2> c{0, 0};  // second slot unused for A1
    Length length = Length::Long;

    Root operator-() const;
    bool operator==(const Root& o) const { return type == o.type && c == o.c; }
    bool operator!=(const Root& o) const { return !(*this == o); }
    bool operator<(const Root& o) const { return c < o.c; }
    bool positive() const;
    int height() const { return c[0] + c[1]; }
    std::string to_string() const;  // alias form: a, -a-b, a1+a2, 2a+3b
};

// Validates membership and attaches the length class.
Root make_root(SystemType t, std::array<int, 2> coords);
bool is_root(SystemType t, const std::vector<int>& coords);
std::vector<Root> positive_roots(SystemType t);  // canonical U+ order
std::vector<Root> all_roots(SystemType t);       // positives then negatives
std::vector<Root> simple_roots(SystemType t);
int inner(SystemType t, const std::array<int, 2>& a, const std::array<int, 2>& b);
int cartan_integer(const Root& beta, const Root& alpha);  // <beta, alpha^vee>
Root reflect(const Root& gamma, const Root& alpha);
// largest p, q with beta - p alpha, ..., beta + q alpha all roots
std::pair<int, int> root_string(const Root& beta, const Root& alpha);
// index of a root in positive_roots (>= 0) or -(1 + index of its negative)
int positive_index(const Root& r);
// Parses "a+2b", "-a1-a2", "[1,2]", "2a+3b". Throws RootError on non-roots.
Root parse_root(SystemType t, const std::string& text);

}  // namespace chev::rootsys
