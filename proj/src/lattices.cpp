#include "admcube/lattices.hpp"

#include <algorithm>
#include <sstream>

namespace admcube {

std::optional<int> Lattice::top() {
    if (!top_) {
        std::optional<int> found;
        for (int t = 0; t < size(); ++t) {
            bool all = true;
            for (int a = 0; a < size(); ++a) {
                if (!leq(a, t)) {
                    all = false;
                    break;
                }
            }
            if (all) {
                found = t;
                break;
            }
        }
        top_ = found;
    }
    return *top_;
}

std::optional<int> Lattice::bottom() {
    if (!bottom_) {
        std::optional<int> found;
        for (int t = 0; t < size(); ++t) {
            bool all = true;
            for (int a = 0; a < size(); ++a) {
                if (!leq(t, a)) {
                    all = false;
                    break;
                }
            }
            if (all) {
                found = t;
                break;
            }
        }
        bottom_ = found;
    }
    return *bottom_;
}

FiniteLattice::FiniteLattice(std::vector<std::string> names,
                             std::vector<std::vector<bool>> leq_table)
    : names_(std::move(names)), leq_(std::move(leq_table)) {
    const int n = static_cast<int>(names_.size());
    if (static_cast<int>(leq_.size()) != n) throw Error("FiniteLattice: leq table shape");
    for (const auto& row : leq_) {
        if (static_cast<int>(row.size()) != n) throw Error("FiniteLattice: leq table shape");
    }
    for (int a = 0; a < n; ++a) {
        if (!leq_[a][a]) throw Error("FiniteLattice: not reflexive");
        for (int b = 0; b < n; ++b) {
            if (a != b && leq_[a][b] && leq_[b][a]) throw Error("FiniteLattice: not antisymmetric");
            for (int c = 0; c < n; ++c) {
                if (leq_[a][b] && leq_[b][c] && !leq_[a][c]) {
                    throw Error("FiniteLattice: not transitive");
                }
            }
        }
    }
    join_.assign(n, std::vector<int>(n, -1));
    meet_.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int jn = -1, mt = -1;
            for (int c = 0; c < n; ++c) {
                if (leq_[a][c] && leq_[b][c] && (jn < 0 || leq_[c][jn])) jn = c;
                if (leq_[c][a] && leq_[c][b] && (mt < 0 || leq_[mt][c])) mt = c;
            }
            if (jn >= 0) {
                for (int c = 0; c < n; ++c) {
                    if (leq_[a][c] && leq_[b][c] && !leq_[jn][c]) jn = -1;
                }
            }
            if (mt >= 0) {
                for (int c = 0; c < n; ++c) {
                    if (leq_[c][a] && leq_[c][b] && !leq_[c][mt]) mt = -1;
                }
            }
            if (jn < 0 || mt < 0) {
                throw Error("FiniteLattice: join or meet missing for (" + names_[a] + "," +
                            names_[b] + ")");
            }
            join_[a][b] = jn;
            meet_[a][b] = mt;
        }
    }
}

int FiniteLattice::id_of(const std::string& nm) const {
    for (int i = 0; i < size(); ++i) {
        if (names_[i] == nm) return i;
    }
    throw Error("FiniteLattice: unknown element " + nm);
}

FiniteLattice FiniteLattice::pentagon() {
    // 0 < a < c < 1 and 0 < b < 1 with b incomparable to a, c
    std::vector<std::string> names{"0", "a", "b", "c", "1"};
    auto le = [&](int x, int y) {
        if (x == y) return true;
        if (x == 0) return true;
        if (y == 4) return true;
        if (x == 1 && y == 3) return true;  // a < c
        return false;
    };
    std::vector<std::vector<bool>> t(5, std::vector<bool>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) t[i][j] = le(i, j);
    return FiniteLattice(names, t);
}

FiniteLattice FiniteLattice::diamond() {
    // 0 < a, b, c < 1 pairwise incomparable in the middle
    std::vector<std::string> names{"0", "a", "b", "c", "1"};
    std::vector<std::vector<bool>> t(5, std::vector<bool>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) t[i][j] = (i == j) || i == 0 || j == 4;
    return FiniteLattice(names, t);
}

FiniteLattice FiniteLattice::chain(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
    std::vector<std::vector<bool>> t(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = i <= j;
    return FiniteLattice(names, t);
}

SubobjectLattice::SubobjectLattice(FPModule ambient, std::vector<Subobject> generators,
                                   bool include_top, int cap)
    : ambient_(std::move(ambient)) {
    if (include_top) intern(Subobject::full(ambient_));
    for (const Subobject& g : generators) {
        if (!g.ambient().same_presentation(ambient_)) {
            throw Error("SubobjectLattice: generator ambient mismatch");
        }
        intern(g);
    }
    // close under join and meet
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            intern(sub_join(elems_[i], elems_[j]));
            intern(sub_meet(elems_[i], elems_[j]));
            if (static_cast<int>(elems_.size()) > cap) {
                throw Error("SubobjectLattice: closure exceeded cap of " + std::to_string(cap) +
                            " elements");
            }
        }
    }
}

int SubobjectLattice::intern(const Subobject& s) {
    auto it = by_key_.find(s.key());
    if (it != by_key_.end()) return it->second;
    int id = static_cast<int>(elems_.size());
    elems_.push_back(s);
    by_key_.emplace(s.key(), id);
    return id;
}

int SubobjectLattice::id_of(const Subobject& s) const {
    auto it = by_key_.find(s.key());
    if (it == by_key_.end()) throw Error("SubobjectLattice: element not in closure");
    return it->second;
}

bool SubobjectLattice::leq(int a, int b) { return sub_leq(elems_[a], elems_[b]); }

int SubobjectLattice::join(int a, int b) {
    auto key = std::minmax(a, b);
    auto it = join_memo_.find(key);
    if (it != join_memo_.end()) return it->second;
    int id = id_of(sub_join(elems_[a], elems_[b]));
    join_memo_.emplace(key, id);
    return id;
}

int SubobjectLattice::meet(int a, int b) {
    auto key = std::minmax(a, b);
    auto it = meet_memo_.find(key);
    if (it != meet_memo_.end()) return it->second;
    int id = id_of(sub_meet(elems_[a], elems_[b]));
    meet_memo_.emplace(key, id);
    return id;
}

std::string SubobjectLattice::name(int a) const { return "S" + std::to_string(a); }

ElementFamily make_family(Lattice& lat, std::vector<std::pair<std::string, int>> members) {
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        if (members[i].first == members[i + 1].first) {
            throw Error("make_family: duplicate label " + members[i].first);
        }
    }
    if (members.size() > 5) throw Error("make_family: at most 5 labels supported");
    ElementFamily f{&lat, {}, {}};
    for (auto& [label, id] : members) {
        f.labels.push_back(label);
        f.elems.push_back(id);
    }
    return f;
}

int join_over(const ElementFamily& f, uint32_t mask) {
    if (mask == 0) throw Error("join_over: empty join");
    int acc = -1;
    for (int i = 0; i < f.n(); ++i) {
        if (!(mask & (1u << i))) continue;
        acc = acc < 0 ? f.elems[i] : f.lat->join(acc, f.elems[i]);
    }
    return acc;
}

std::optional<int> meet_over_partial(const ElementFamily& f, uint32_t mask) {
    std::optional<int> acc;
    for (int i = 0; i < f.n(); ++i) {
        if (!(mask & (1u << i))) continue;
        acc = acc ? f.lat->meet(*acc, f.elems[i]) : f.elems[i];
    }
    return acc;
}

int meet_over(const ElementFamily& f, uint32_t mask) {
    auto m = meet_over_partial(f, mask);
    if (m) return *m;
    auto t = f.lat->top();
    if (!t) throw Error("meet_over: empty meet requires a maximum element");
    return *t;
}

int meet_with_partial(Lattice& lat, int x, const std::optional<int>& partial) {
    return partial ? lat.meet(x, *partial) : x;
}

ElementFamily family_meet_elem(const ElementFamily& f, int y) {
    ElementFamily out = f;
    for (int i = 0; i < f.n(); ++i) {
        out.elems[i] = f.lat->meet(f.elems[i], y);
    }
    return out;
}

bool distributive_pair(const ElementFamily& f, uint32_t u_mask, int y) {
    int lhs = f.lat->meet(join_over(f, u_mask), y);
    int acc = -1;
    for (int i = 0; i < f.n(); ++i) {
        if (!(u_mask & (1u << i))) continue;
        int m = f.lat->meet(f.elems[i], y);
        acc = acc < 0 ? m : f.lat->join(acc, m);
    }
    return lhs == acc;
}

namespace {

std::string mask_names(const ElementFamily& f, uint32_t mask) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < f.n(); ++i) {
        if (!(mask & (1u << i))) continue;
        if (!first) out += ",";
        out += f.labels[i];
        first = false;
    }
    return out + "}";
}

}  // namespace

FamilyReport family_class(const ElementFamily& f, FamilyMode mode,
                          const std::vector<int>& ordering) {
    const int n = f.n();
    switch (mode) {
        case FamilyMode::StrictlyDistributive: {
            if (n <= 1) return {true, ""};
            for (int t = 0; t < n; ++t) {
                uint32_t rest = f.full() & ~(1u << t);
                if (!distributive_pair(f, rest, f.elems[t])) {
                    return {false,
                            "pair (x_{S\\{" + f.labels[t] + "}}, " + f.labels[t] + ")"};
                }
            }
            return {true, ""};
        }
        case FamilyMode::Admissible: {
            if (n <= 1) return {true, ""};
            for (uint32_t t_mask = 1; t_mask < f.full(); ++t_mask) {
                for (int t = 0; t < n; ++t) {
                    if (t_mask & (1u << t)) continue;
                    if (!distributive_pair(f, t_mask, f.elems[t])) {
                        return {false,
                                "pair (x_" + mask_names(f, t_mask) + ", " + f.labels[t] + ")"};
                    }
                }
            }
            return {true, ""};
        }
        case FamilyMode::UniversallyAdmissible: {
            for (uint32_t u = 1; u <= f.full(); ++u) {
                for (uint32_t v = 1; v <= f.full(); ++v) {
                    if (u & v) continue;
                    int meet_v = *meet_over_partial(f, v);
                    if (!distributive_pair(f, u, meet_v)) {
                        return {false, "pair (x_" + mask_names(f, u) + ", meet over " +
                                           mask_names(f, v) + ")"};
                    }
                }
            }
            return {true, ""};
        }
        case FamilyMode::RegularSequence: {
            std::vector<int> order = ordering;
            if (order.empty()) {
                for (int i = 0; i < n; ++i) order.push_back(i);
            }
            if (static_cast<int>(order.size()) != n) {
                throw Error("family_class: ordering length mismatch");
            }
            for (int i = 1; i < n; ++i) {
                uint32_t prefix = 0;
                for (int j = 0; j < i; ++j) prefix |= (1u << order[j]);
                if (!distributive_pair(f, prefix, f.elems[order[i]])) {
                    return {false, "pair (prefix " + mask_names(f, prefix) + ", z_" +
                                       std::to_string(i + 1) + ")"};
                }
            }
            return {true, ""};
        }
    }
    throw Error("family_class: unreachable");
}

ModularReport is_modular(Lattice& lat) {
    for (int a = 0; a < lat.size(); ++a) {
        for (int c = 0; c < lat.size(); ++c) {
            if (!lat.leq(a, c)) continue;
            for (int b = 0; b < lat.size(); ++b) {
                if (lat.join(a, lat.meet(b, c)) != lat.meet(lat.join(a, b), c)) {
                    return {false,
                            "(" + lat.name(a) + "," + lat.name(b) + "," + lat.name(c) + ")"};
                }
            }
        }
    }
    return {true, ""};
}

ModularReport modular_cancellation(Lattice& lat) {
    for (int a = 0; a < lat.size(); ++a) {
        for (int b = 0; b < lat.size(); ++b) {
            if (!lat.leq(a, b) || a == b) continue;
            for (int c = 0; c < lat.size(); ++c) {
                if (lat.join(a, c) == lat.join(b, c) && lat.meet(a, c) == lat.meet(b, c)) {
                    return {false,
                            "(" + lat.name(a) + "," + lat.name(b) + "," + lat.name(c) + ")"};
                }
            }
        }
    }
    return {true, ""};
}

bool semi_modular_law_holds(Lattice& lat) {
    for (int a = 0; a < lat.size(); ++a) {
        for (int c = 0; c < lat.size(); ++c) {
            if (!lat.leq(a, c)) continue;
            for (int b = 0; b < lat.size(); ++b) {
                if (!lat.leq(lat.join(a, lat.meet(b, c)), lat.meet(lat.join(a, b), c))) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Up-closed subsets of P(S), encoded as bitmasks over subset indices. The
// empty ideal is excluded; every nonempty up-closed ideal contains S.
std::vector<uint64_t> up_closed_ideals(int n) {
    const int subsets = 1 << n;
    std::vector<uint64_t> out;
    for (uint64_t cand = 1; cand < (1ull << subsets); ++cand) {
        bool ok = true;
        for (int v = 0; v < subsets && ok; ++v) {
            if (!(cand & (1ull << v))) continue;
            uint32_t rest = static_cast<uint32_t>((subsets - 1) & ~v);
            for (uint32_t extra = rest;; extra = (extra - 1) & rest) {
                if (!(cand & (1ull << (v | extra)))) {
                    ok = false;
                    break;
                }
                if (extra == 0) break;
            }
        }
        if (ok) out.push_back(cand);
    }
    return out;
}

}  // namespace

IdealMapReport ideal_map_check(const ElementFamily& f) {
    const int n = f.n();
    if (n > 4) throw Error("ideal_map_check: |S| <= 4 required");
    if (!f.lat->top()) {
        throw Error("ideal_map_check: lattice has no maximum element (needed for the empty meet)");
    }
    Lattice& lat = *f.lat;

    // (1) the sublattice generated by the family is distributive
    std::vector<int> closure = f.elems;
    std::sort(closure.begin(), closure.end());
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
    for (std::size_t i = 0; i < closure.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            for (int cand : {lat.join(closure[i], closure[j]), lat.meet(closure[i], closure[j])}) {
                if (std::find(closure.begin(), closure.end(), cand) == closure.end()) {
                    closure.push_back(cand);
                }
            }
            if (closure.size() > 4096) throw Error("ideal_map_check: closure blow-up");
        }
    }
    bool distributive = true;
    for (int a : closure) {
        for (int b : closure) {
            for (int c : closure) {
                if (lat.meet(a, lat.join(b, c)) != lat.join(lat.meet(a, b), lat.meet(a, c))) {
                    distributive = false;
                }
            }
        }
    }

    // (2) I |-> join over V in I of meet(x_V) preserves intersections
    const int subsets = 1 << n;
    std::vector<int> meet_of(subsets);
    for (int v = 0; v < subsets; ++v) meet_of[v] = meet_over(f, static_cast<uint32_t>(v));
    auto ideal_image = [&](uint64_t ideal) {
        int acc = -1;
        for (int v = 0; v < subsets; ++v) {
            if (!(ideal & (1ull << v))) continue;
            acc = acc < 0 ? meet_of[v] : lat.join(acc, meet_of[v]);
        }
        return acc;
    };
    std::vector<uint64_t> ideals = up_closed_ideals(n);
    bool preserves = true;
    for (std::size_t i = 0; i < ideals.size() && preserves; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            uint64_t cap = ideals[i] & ideals[j];
            if (cap == 0) continue;  // nonempty up-sets always share {S}
            if (ideal_image(cap) != lat.meet(ideal_image(ideals[i]), ideal_image(ideals[j]))) {
                preserves = false;
                break;
            }
        }
    }

    // (3) the family of all meets {x^{∧V}} is admissible
    bool meets_admissible = true;
    {
        std::vector<int> mems(meet_of.begin(), meet_of.end());
        const int k = static_cast<int>(mems.size());
        const uint32_t fullmask = (1u << k) - 1;
        for (uint32_t t_mask = 1; t_mask < fullmask && meets_admissible; ++t_mask) {
            int jn = -1;
            for (int i = 0; i < k; ++i) {
                if (t_mask & (1u << i)) jn = jn < 0 ? mems[i] : lat.join(jn, mems[i]);
            }
            for (int t = 0; t < k; ++t) {
                if (t_mask & (1u << t)) continue;
                int y = mems[t];
                int lhs = lat.meet(jn, y);
                int acc = -1;
                for (int i = 0; i < k; ++i) {
                    if (!(t_mask & (1u << i))) continue;
                    int m = lat.meet(mems[i], y);
                    acc = acc < 0 ? m : lat.join(acc, m);
                }
                if (lhs != acc) {
                    meets_admissible = false;
                    break;
                }
            }
        }
    }

    bool univ = family_class(f, FamilyMode::UniversallyAdmissible).holds;
    bool impl = (distributive == preserves) && (!preserves || meets_admissible) &&
                (!meets_admissible || univ);
    return IdealMapReport{distributive, preserves, meets_admissible, univ, impl};
}

TransferReport transfer_check_prop(const ElementFamily& f, int y) {
    Lattice& lat = *f.lat;
    const int n = f.n();
    TransferReport rep{};
    rep.domination = true;

    rep.adm.hyp1 = family_class(f, FamilyMode::Admissible).holds;
    rep.adm.hyp2 = true;
    if (n >= 2) {
        for (int s = 0; s < n && rep.adm.hyp2; ++s) {
            uint32_t rest = f.full() & ~(1u << s);
            ElementFamily fu = family_meet_elem(f, f.elems[s]);
            for (uint32_t u = 1; u <= rest; ++u) {
                if ((u & rest) != u) continue;
                if (!distributive_pair(fu, u, y)) {
                    rep.adm.hyp2 = false;
                    break;
                }
            }
        }
    }
    rep.adm.conclusion = family_class(family_meet_elem(f, y), FamilyMode::Admissible).holds;
    rep.adm.implication_ok = !(rep.adm.hyp1 && rep.adm.hyp2) || rep.adm.conclusion;

    rep.univ.hyp1 = family_class(f, FamilyMode::UniversallyAdmissible).holds;
    rep.univ.hyp2 = true;
    for (uint32_t u = 1; u <= f.full() && rep.univ.hyp2; ++u) {
        for (uint32_t v = 1; v <= f.full(); ++v) {
            if ((u & v) || __builtin_popcount(v) < 2) continue;
            int meet_v = *meet_over_partial(f, v);
            ElementFamily fu = family_meet_elem(f, meet_v);
            for (int vv = 0; vv < n; ++vv) {
                if (!(v & (1u << vv))) continue;
                int rhs = lat.meet(*meet_over_partial(f, v & ~(1u << vv)), y);
                if (!distributive_pair(fu, u, rhs)) {
                    rep.univ.hyp2 = false;
                    break;
                }
            }
            if (!rep.univ.hyp2) break;
        }
    }
    rep.univ.conclusion =
        family_class(family_meet_elem(f, y), FamilyMode::UniversallyAdmissible).holds;
    rep.univ.implication_ok = !(rep.univ.hyp1 && rep.univ.hyp2) || rep.univ.conclusion;
    return rep;
}

TransferReport transfer_check_cor(const ElementFamily& fa, const ElementFamily& fb,
                                  TransferVariant variant) {
    if (variant == TransferVariant::PropAdmSeqLem) {
        throw Error("transfer_check_cor: use transfer_check_prop for the Prop variant");
    }
    if (fa.labels != fb.labels || fa.lat != fb.lat) {
        throw Error("transfer_check_cor: arity/label mismatch");
    }
    Lattice& lat = *fa.lat;
    const int n = fa.n();
    const bool relaxed = variant == TransferVariant::CorWithRemark;
    const bool modular = relaxed && is_modular(lat).modular;

    TransferReport rep{};
    rep.domination = true;
    for (int s = 0; s < n; ++s) {
        if (!lat.leq(fb.elems[s], fa.elems[s])) rep.domination = false;
    }

    rep.adm.hyp1 = family_class(fb, FamilyMode::Admissible).holds;
    rep.adm.hyp2 = true;
    if (n >= 2) {
        for (uint32_t w = 0; w < fa.full() && rep.adm.hyp2; ++w) {  // proper W
            auto aw = meet_over_partial(fa, w);
            for (uint32_t u = 1; u <= fb.full() && rep.adm.hyp2; ++u) {
                if (__builtin_popcount(u) < 2) continue;
                for (int uu = 0; uu < n && rep.adm.hyp2; ++uu) {
                    if (!(u & (1u << uu))) continue;
                    int bu_aw = meet_with_partial(lat, fb.elems[uu], aw);
                    ElementFamily fam = family_meet_elem(fb, bu_aw);
                    for (int s = 0; s < n; ++s) {
                        if (w & (1u << s)) continue;       // s in S\W
                        if (relaxed && s == uu) continue;  // remark (1)
                        if (!distributive_pair(fam, u & ~(1u << uu), fa.elems[s])) {
                            rep.adm.hyp2 = false;
                            break;
                        }
                    }
                }
            }
        }
    }
    {
        int as = meet_over(fa, fa.full());
        rep.adm.conclusion = family_class(family_meet_elem(fb, as), FamilyMode::Admissible).holds;
    }
    rep.adm.implication_ok =
        !(rep.domination && rep.adm.hyp1 && rep.adm.hyp2) || rep.adm.conclusion;

    rep.univ.hyp1 = family_class(fb, FamilyMode::UniversallyAdmissible).holds;
    rep.univ.hyp2 = true;
    if (n >= 2) {
        for (uint32_t w = 0; w < fa.full() && rep.univ.hyp2; ++w) {
            auto aw = meet_over_partial(fa, w);
            for (uint32_t u = 1; u <= fb.full() && rep.univ.hyp2; ++u) {
                for (uint32_t v = 1; v <= fb.full() && rep.univ.hyp2; ++v) {
                    if ((u & v) || __builtin_popcount(v) < 2) continue;
                    if (modular && ((w | u) == fa.full())) continue;  // remark (2)
                    int bv = *meet_over_partial(fb, v);
                    ElementFamily fam = family_meet_elem(fb, meet_with_partial(lat, bv, aw));
                    for (int s = 0; s < n && rep.univ.hyp2; ++s) {
                        if (w & (1u << s)) continue;
                        if (modular && (u & (1u << s))) continue;  // remark (2)
                        int aws = meet_with_partial(lat, fa.elems[s], aw);  // a^{∧ W∪{s}}
                        for (int vv = 0; vv < n; ++vv) {
                            if (!(v & (1u << vv))) continue;
                            if (relaxed && s == vv) continue;  // remark (1)
                            int rhs = lat.meet(*meet_over_partial(fb, v & ~(1u << vv)), aws);
                            if (!distributive_pair(fam, u, rhs)) {
                                rep.univ.hyp2 = false;
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
    {
        int as = meet_over(fa, fa.full());
        rep.univ.conclusion =
            family_class(family_meet_elem(fb, as), FamilyMode::UniversallyAdmissible).holds;
    }
    rep.univ.implication_ok =
        !(rep.domination && rep.univ.hyp1 && rep.univ.hyp2) || rep.univ.conclusion;
    return rep;
}

}  // namespace admcube
