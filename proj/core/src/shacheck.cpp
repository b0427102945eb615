#include "chev/shacheck.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>

namespace chev::shacheck {

Realization default_realization(SystemType t) {
    switch (t) {
        case SystemType::A1: return Realization::A1Std;
        case SystemType::A2: return Realization::Pgl3;
        default: return Realization::Adjoint;
    }
}

int GroupTable::mul(int a, int b) const {
    if (!table_.empty()) return table_[size_t(a) * elements.size() + b];
    int r = id_of(F_.mul(elements[a], elements[b]));
    if (r < 0) throw chevgroup::GroupError("product left the group table");
    return r;
}

int GroupTable::id_of(const FpMat& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

GroupTable generate_group(SystemType t, int p, Realization r, size_t cap, std::vector<FpMat> gens) {
    chevgroup::check_realization(t, r);
    finite::FpChevalley C(t, r, p);
    const auto& F = C.field();
    GroupTable G;
    G.type = t, G.realization = r, G.p = p, G.F_ = F;
    if (gens.empty())
        for (auto& g : rootsys::all_roots(t))
            for (int c = 1; c < p; ++c) gens.push_back(C.x(g, c));
    for (auto& g : gens) g = F.canon(g);

    // BFS closure; parent/edge bookkeeping lets the table fill reuse right multiplications
    std::vector<int> parent{-1}, via{-1};
    std::vector<std::vector<int>> right;
    G.elements.push_back(F.identity(C.dim()));
    G.index_.emplace(G.elements[0], 0);
    for (size_t i = 0; i < G.elements.size(); ++i) {
        right.emplace_back(gens.size());
        for (size_t k = 0; k < gens.size(); ++k) {
            FpMat m = F.mul(G.elements[i], gens[k]);
            auto [it, fresh] = G.index_.emplace(m, (int)G.elements.size());
            if (fresh) {
                if (G.elements.size() >= cap)
                    throw CapExceeded("group order exceeds cap " + std::to_string(cap));
                G.elements.push_back(std::move(m));
                parent.push_back((int)i);
                via.push_back((int)k);
            }
            right[i][k] = it->second;
        }
    }
    size_t n = G.elements.size();
    G.inv_.assign(n, -1);
    for (size_t i = 0; i < n; ++i)
        if (G.inv_[i] < 0) {
            int j = G.id_of(F.inverse(G.elements[i]));
            G.inv_[i] = j, G.inv_[j] = (int)i;
        }
    if (n <= 6000) {
        G.table_.assign(n * n, 0);
        for (size_t a = 0; a < n; ++a) {
            G.table_[a * n] = uint16_t(a);
            for (size_t b = 1; b < n; ++b)
                G.table_[a * n + b] = uint16_t(right[G.table_[a * n + parent[b]]][via[b]]);
        }
    }
    auto simple = rootsys::simple_roots(t);
    for (int sign : {1, -1})
        for (auto& a : simple) {
            rootsys::Root g = sign > 0 ? a : -a;
            G.generators.push_back({"x(" + g.to_string() + ",1)", G.id_of(C.x(g, 1))});
        }
    return G;
}

Classes conjugacy_classes(const GroupTable& G) {
    Classes C;
    C.class_of.assign(G.size(), -1);
    for (int x = 0; x < G.size(); ++x) {
        if (C.class_of[x] >= 0) continue;
        int c = (int)C.members.size();
        C.members.push_back({x});
        C.class_of[x] = c;
        // orbit under conjugation by the generators (they generate G)
        for (size_t i = 0; i < C.members[c].size(); ++i) {
            int y = C.members[c][i];
            for (auto& [_, g] : G.generators) {
                for (int z : {G.conj(g, y), G.conj(G.inv(g), y)}) {
                    if (C.class_of[z] >= 0) continue;
                    C.class_of[z] = c;
                    C.members[c].push_back(z);
                }
            }
        }
        std::sort(C.members[c].begin(), C.members[c].end());
    }
    return C;
}

std::optional<EndoMap> extend_homomorphism(const GroupTable& G, const std::vector<int>& images) {
    if (images.size() != G.generators.size()) return std::nullopt;
    EndoMap phi{images, std::vector<int>(G.size(), -1)};
    phi.table[0] = 0;
    std::deque<int> q{0};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (size_t k = 0; k < images.size(); ++k) {
            int y = G.mul(x, G.generators[k].second);
            int fy = G.mul(phi.table[x], images[k]);
            if (phi.table[y] < 0) {
                phi.table[y] = fy;
                q.push_back(y);
            } else if (phi.table[y] != fy) {
                return std::nullopt;
            }
        }
    }
    for (int v : phi.table)
        if (v < 0) return std::nullopt;  // generators do not reach everything
    return phi;
}

std::vector<EndoMap> class_preserving_endos(const GroupTable& G, const Classes& C) {
    const auto& gens = G.generators;
    size_t k = gens.size();
    // target classes of products and commutators of generator pairs
    std::vector<std::vector<int>> prod_cls(k, std::vector<int>(k)), comm_cls(k, std::vector<int>(k));
    auto comm = [&](int a, int b) { return G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))); };
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            prod_cls[i][j] = C.class_of[G.mul(gens[i].second, gens[j].second)];
            comm_cls[i][j] = C.class_of[comm(gens[i].second, gens[j].second)];
        }
    std::vector<EndoMap> out;
    std::vector<int> img(k);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == k) {
            auto phi = extend_homomorphism(G, img);
            if (!phi) return;
            for (int x = 0; x < G.size(); ++x)
                if (C.class_of[phi->table[x]] != C.class_of[x]) return;
            out.push_back(std::move(*phi));
            return;
        }
        for (int c : C.members[C.class_of[gens[i].second]]) {
            bool ok = true;
            for (size_t j = 0; j < i && ok; ++j)
                ok = C.class_of[G.mul(img[j], c)] == prod_cls[j][i] && C.class_of[comm(img[j], c)] == comm_cls[j][i];
            if (!ok) continue;
            img[i] = c;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const EndoMap& a, const EndoMap& b) { return a.images < b.images; });
    return out;
}

std::optional<int> is_inner(const GroupTable& G, const EndoMap& phi) {
    for (int c = 0; c < G.size(); ++c) {
        bool ok = true;
        for (size_t i = 0; i < G.generators.size() && ok; ++i)
            ok = phi.images[i] == G.conj(c, G.generators[i].second);
        if (ok) return c;
    }
    return std::nullopt;
}

int inner_count(const GroupTable& G) {
    std::set<std::vector<int>> seen;
    for (int c = 0; c < G.size(); ++c) {
        std::vector<int> v;
        for (auto& [_, g] : G.generators) v.push_back(G.conj(c, g));
        seen.insert(std::move(v));
    }
    return (int)seen.size();
}

std::string ShaReport::verdict() const {
    std::string v = pass ? "PASS" : "FAIL";
    return hypothesis_violated ? v + " (HYPOTHESIS-VIOLATED: 2 not invertible)" : v;
}

ShaReport sha_report(SystemType t, int p, size_t cap, bool slow) {
    if (t == SystemType::A2 && p >= 3 && !slow)
        throw SlowRequired("A2 over F_" + std::to_string(p) + " is only run with --slow");
    auto t0 = std::chrono::steady_clock::now();
    GroupTable G = generate_group(t, p, default_realization(t), cap);
    Classes C = conjugacy_classes(G);
    auto endos = class_preserving_endos(G, C);
    ShaReport r;
    r.system = rootsys::type_name(t);
    r.p = p;
    r.group_order = G.size();
    r.class_count = (int)C.members.size();
    r.cp_endo_count = (int)endos.size();
    r.inner_count = inner_count(G);
    r.pass = r.cp_endo_count == r.inner_count;
    for (auto& e : endos)
        if (!is_inner(G, e)) r.pass = false;
    r.hypothesis_violated = p == 2;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace chev::shacheck
