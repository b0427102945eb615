#include "chev/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chev::rootsys {

const char* type_name(SystemType t) {
    switch (t) {
        case SystemType::A1: return "A1";
        case SystemType::A2: return "A2";
        case SystemType::B2: return "B2";
        case SystemType::G2: return "G2";
    }
    return "?";
}
SystemType type_from_name(const std::string& s) {
    for (auto t : all_types())
        if (s == type_name(t)) return t;
    throw RootError("unknown system '" + s + "'");
}
int rank(SystemType t) { return t == SystemType::A1 ? 1 : 2; }
std::vector<SystemType> all_types() { return {SystemType::A1, SystemType::A2, SystemType::B2, SystemType::G2}; }

namespace {
const std::vector<std::array<int, 2>>& pos_table(SystemType t) {
    static const std::vector<std::array<int, 2>> a1{{1, 0}};
    static const std::vector<std::array<int, 2>> a2{{1, 0}, {0, 1}, {1, 1}};
    static const std::vector<std::array<int, 2>> b2{{1, 0}, {0, 1}, {1, 1}, {1, 2}};
    static const std::vector<std::array<int, 2>> g2{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
    switch (t) {
        case SystemType::A1: return a1;
        case SystemType::A2: return a2;
        case SystemType::B2: return b2;
        case SystemType::G2: return g2;
    }
    return a1;
}
// Gram matrix of the simple roots, first simple root long
std::array<int, 4> gram(SystemType t) {
    switch (t) {
        case SystemType::A1: return {2, 0, 0, 0};
        case SystemType::A2: return {2, -1, -1, 2};
        case SystemType::B2: return {2, -1, -1, 1};
        case SystemType::G2: return {6, -3, -3, 2};
    }
    return {2, 0, 0, 0};
}
int find_pos(SystemType t, const std::array<int, 2>& c) {
    auto& p = pos_table(t);
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] == c) return (int)i;
    return -1;
}
}  // namespace

int inner(SystemType t, const std::array<int, 2>& a, const std::array<int, 2>& b) {
    auto g = gram(t);
    return a[0] * g[0] * b[0] + a[0] * g[1] * b[1] + a[1] * g[2] * b[0] + a[1] * g[3] * b[1];
}

Root Root::operator-() const {
    Root r = *this;
    r.c = {-c[0], -c[1]};
    return r;
}
bool Root::positive() const { return c[0] > 0 || (c[0] == 0 && c[1] > 0); }

std::string Root::to_string() const {
    const char* n1 = type == SystemType::A2 ? "a1" : "a";
    const char* n2 = type == SystemType::A2 ? "a2" : "b";
    std::ostringstream os;
    auto put = [&](int k, const char* n, bool first) {
        if (!k) return;
        if (k < 0) os << "-";
        else if (!first) os << "+";
        if (std::abs(k) != 1) os << std::abs(k);
        os << n;
    };
    put(c[0], n1, true);
    put(c[1], n2, c[0] == 0);
    return os.str();
}

Root make_root(SystemType t, std::array<int, 2> coords) {
    if (rank(t) == 1 && coords[1] != 0) throw RootError("rank-one root with two coordinates");
    std::array<int, 2> a = coords;
    if (find_pos(t, a) < 0 && find_pos(t, {-a[0], -a[1]}) < 0) {
        std::ostringstream os;
        os << "[" << a[0] << "," << a[1] << "] is not a root of " << type_name(t);
        throw RootError(os.str());
    }
    Root r;
    r.type = t;
    r.c = a;
    int n = inner(t, a, a);
    int maxn = inner(t, {1, 0}, {1, 0});
    r.length = n == maxn ? Length::Long : Length::Short;
    return r;
}

bool is_root(SystemType t, const std::vector<int>& coords) {
    if ((int)coords.size() != rank(t)) return false;
    std::array<int, 2> a{coords[0], rank(t) == 2 ? coords[1] : 0};
    return find_pos(t, a) >= 0 || find_pos(t, {-a[0], -a[1]}) >= 0;
}

std::vector<Root> positive_roots(SystemType t) {
    std::vector<Root> out;
    for (auto& c : pos_table(t)) out.push_back(make_root(t, c));
    return out;
}
std::vector<Root> all_roots(SystemType t) {
    auto out = positive_roots(t);
    size_t n = out.size();
    for (size_t i = 0; i < n; ++i) out.push_back(-out[i]);
    return out;
}
std::vector<Root> simple_roots(SystemType t) {
    std::vector<Root> s{make_root(t, {1, 0})};
    if (rank(t) == 2) s.push_back(make_root(t, {0, 1}));
    return s;
}

int cartan_integer(const Root& beta, const Root& alpha) {
    if (beta.type != alpha.type) throw RootError("system mismatch");
    return 2 * inner(alpha.type, beta.c, alpha.c) / inner(alpha.type, alpha.c, alpha.c);
}

Root reflect(const Root& gamma, const Root& alpha) {
    int k = cartan_integer(gamma, alpha);
    return make_root(gamma.type, {gamma.c[0] - k * alpha.c[0], gamma.c[1] - k * alpha.c[1]});
}

std::pair<int, int> root_string(const Root& beta, const Root& alpha) {
    if (beta.type != alpha.type) throw RootError("system mismatch");
    if (beta == alpha || beta == -alpha) throw RootError("root string along a proportional root");
    auto member = [&](int k) {
        std::array<int, 2> c{beta.c[0] + k * alpha.c[0], beta.c[1] + k * alpha.c[1]};
        return find_pos(beta.type, c) >= 0 || find_pos(beta.type, {-c[0], -c[1]}) >= 0;
    };
    int p = 0, q = 0;
    while (member(-(p + 1))) ++p;
    while (member(q + 1)) ++q;
    return {p, q};
}

int positive_index(const Root& r) {
    int i = find_pos(r.type, r.c);
    if (i >= 0) return i;
    return -(1 + find_pos(r.type, {-r.c[0], -r.c[1]}));
}

Root parse_root(SystemType t, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch)) s += ch;
    if (s.empty()) throw RootError("empty root");
    std::array<int, 2> c{0, 0};
    if (s.front() == '[') {
        if (s.back() != ']') throw RootError("malformed root '" + text + "'");
        std::string body = s.substr(1, s.size() - 2);
        std::vector<int> v;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                size_t used = 0;
                v.push_back(std::stoi(item, &used));
                if (used != item.size()) throw RootError("");
            } catch (...) {
                throw RootError("malformed root '" + text + "'");
            }
        }
        if ((int)v.size() != rank(t)) throw RootError("root '" + text + "' has wrong length");
        c[0] = v[0];
        if (rank(t) == 2) c[1] = v[1];
        return make_root(t, c);
    }
    // signed sum of k*name terms
    std::vector<std::string> names = t == SystemType::A2 ? std::vector<std::string>{"a1", "a2"}
                                                         : std::vector<std::string>{"a", "b"};
    size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            throw RootError("malformed root '" + text + "'");
        }
        int k = 0;
        bool digits = false;
        while (i < s.size() && std::isdigit((unsigned char)s[i]) && !(t == SystemType::A2 && i > 0 && s[i - 1] == 'a')) {
            k = k * 10 + (s[i] - '0');
            ++i;
            digits = true;
        }
        if (s.compare(i, 1, "*") == 0) ++i;
        if (!digits) k = 1;
        int which = -1;
        for (int n = rank(t) - 1; n >= 0; --n)
            if (s.compare(i, names[n].size(), names[n]) == 0) {
                which = n;
                i += names[n].size();
                break;
            }
        if (which < 0) throw RootError("malformed root '" + text + "' for " + type_name(t));
        c[which] += sign * k;
        any = true;
    }
    return make_root(t, c);
}

}  // namespace chev::rootsys
