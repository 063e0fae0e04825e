#include "admcube/cubes.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace admcube {

CubeIndex::CubeIndex(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t i = 0; i + 1 < labels_.size(); ++i) {
        if (labels_[i] == labels_[i + 1]) throw Error("CubeIndex: duplicate label " + labels_[i]);
    }
    for (const std::string& l : labels_) {
        if (l.empty() || l.find(',') != std::string::npos || l.find('|') != std::string::npos ||
            l.find('=') != std::string::npos) {
            throw Error("CubeIndex: malformed label '" + l + "'");
        }
    }
    if (labels_.size() > 5) throw Error("CubeIndex: at most 5 labels supported");
}

int CubeIndex::pos(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) throw Error("CubeIndex: unknown label " + label);
    return static_cast<int>(it - labels_.begin());
}

std::string CubeIndex::subset_key(uint32_t mask) const {
    std::string out;
    for (int i = 0; i < n(); ++i) {
        if (mask & (1u << i)) {
            if (!out.empty()) out += ",";
            out += labels_[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

uint32_t CubeIndex::subset_from_key(const std::string& key) const {
    uint32_t mask = 0;
    std::size_t start = 0;
    if (key.empty()) return 0;
    for (;;) {
        std::size_t comma = key.find(',', start);
        std::string tok = key.substr(start, comma == std::string::npos ? comma : comma - start);
        mask |= (1u << pos(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return mask;
}

CubeIndex CubeIndex::sub_index(uint32_t mask, std::vector<int>* old_positions) const {
    std::vector<std::string> sub;
    if (old_positions) old_positions->clear();
    for (int i = 0; i < n(); ++i) {
        if (mask & (1u << i)) {
            sub.push_back(labels_[static_cast<std::size_t>(i)]);
            if (old_positions) old_positions->push_back(i);
        }
    }
    return CubeIndex(std::move(sub));
}

std::vector<uint32_t> subsets_of_size(uint32_t within, int k) {
    std::vector<int> bits;
    for (int i = 0; i < 32; ++i) {
        if (within & (1u << i)) bits.push_back(i);
    }
    std::vector<uint32_t> out;
    for (const auto& idx : subsets_lex(static_cast<int>(bits.size()), k)) {
        uint32_t m = 0;
        for (int b : idx) m |= (1u << bits[static_cast<std::size_t>(b)]);
        out.push_back(m);
    }
    return out;
}

std::vector<uint32_t> subsets_of(uint32_t within) {
    std::vector<uint32_t> out;
    int total = __builtin_popcount(within);
    for (int k = 0; k <= total; ++k) {
        for (uint32_t m : subsets_of_size(within, k)) out.push_back(m);
    }
    return out;
}

Cube::Cube(CubeIndex idx, Ring ring, std::vector<FPModule> vertices,
           std::map<std::pair<uint32_t, int>, Morphism> boundaries)
    : idx_(std::move(idx)), ring_(std::move(ring)), vertex_(std::move(vertices)),
      bnd_(std::move(boundaries)) {
    const uint32_t count = 1u << idx_.n();
    if (vertex_.size() != count) throw Error("Cube: expected 2^n vertices");
    for (const FPModule& v : vertex_) {
        if (v.ring() != ring_) throw Error("Cube: vertex ring mismatch");
    }
    for (uint32_t t = 1; t < count; ++t) {
        for (int p = 0; p < idx_.n(); ++p) {
            if (!(t & (1u << p))) continue;
            auto it = bnd_.find({t, p});
            if (it == bnd_.end()) {
                throw Error("Cube: missing boundary " + idx_.subset_key(t) + "|" + idx_.label(p));
            }
            const Morphism& d = it->second;
            if (!d.src().same_presentation(vertex_[t]) ||
                !d.tgt().same_presentation(vertex_[t & ~(1u << p)])) {
                throw Error("Cube: boundary endpoints mismatch at " + idx_.subset_key(t) + "|" +
                            idx_.label(p));
            }
        }
    }
    if (bnd_.size() != static_cast<std::size_t>([&] {
            int c = 0;
            for (uint32_t t = 1; t < count; ++t) c += __builtin_popcount(t);
            return c;
        }())) {
        throw Error("Cube: unexpected extra boundary keys");
    }
}

const FPModule& Cube::vertex(uint32_t mask) const {
    if (mask >= vertex_.size()) throw Error("Cube: vertex mask out of range");
    return vertex_[mask];
}

const Morphism& Cube::boundary(uint32_t t_mask, int t_pos) const {
    auto it = bnd_.find({t_mask, t_pos});
    if (it == bnd_.end()) {
        throw Error("Cube: missing boundary " + idx_.subset_key(t_mask) + "|" + idx_.label(t_pos));
    }
    return it->second;
}

Morphism Cube::morphism_of(uint32_t from_mask, uint32_t to_sub) const {
    if ((to_sub & from_mask) != to_sub) throw Error("morphism_of: not a subset");
    Morphism r = Morphism::identity(vertex(from_mask));
    uint32_t m = from_mask;
    while (m != to_sub) {
        uint32_t diff = m & ~to_sub;
        int t = __builtin_ctz(diff);
        r = boundary(m, t).after(r);
        m &= ~(1u << t);
    }
    return r;
}

bool cube_equal(const Cube& a, const Cube& b) {
    if (!(a.index() == b.index()) || a.ring() != b.ring()) return false;
    const uint32_t count = 1u << a.n();
    for (uint32_t t = 0; t < count; ++t) {
        if (!a.vertex(t).same_presentation(b.vertex(t))) return false;
    }
    for (uint32_t t = 1; t < count; ++t) {
        for (int p = 0; p < a.n(); ++p) {
            if (!(t & (1u << p))) continue;
            if (a.boundary(t, p).mat() != b.boundary(t, p).mat()) return false;
        }
    }
    return true;
}

CubeReport validate(const Cube& x) {
    const CubeIndex& idx = x.index();
    const uint32_t count = 1u << x.n();
    for (uint32_t t = 1; t < count; ++t) {
        for (int p = 0; p < x.n(); ++p) {
            if (!(t & (1u << p))) continue;
            if (!x.boundary(t, p).well_defined()) {
                return {false, false,
                        "ill-defined boundary " + idx.subset_key(t) + "|" + idx.label(p)};
            }
        }
    }
    for (uint32_t t = 0; t < count; ++t) {
        if (__builtin_popcount(t) < 2) continue;
        for (int p = 0; p < x.n(); ++p) {
            if (!(t & (1u << p))) continue;
            for (int q = p + 1; q < x.n(); ++q) {
                if (!(t & (1u << q))) continue;
                Morphism lhs = x.boundary(t & ~(1u << p), q).after(x.boundary(t, p));
                Morphism rhs = x.boundary(t & ~(1u << q), p).after(x.boundary(t, q));
                if (!lhs.equals(rhs)) {
                    return {false, false,
                            "square " + idx.subset_key(t) + " in directions " + idx.label(p) +
                                "," + idx.label(q) + " does not commute"};
                }
            }
        }
    }
    bool monic = true;
    std::string witness;
    for (uint32_t t = 1; t < count && monic; ++t) {
        for (int p = 0; p < x.n(); ++p) {
            if (!(t & (1u << p))) continue;
            if (!morphism_class(x.boundary(t, p)).mono) {
                monic = false;
                witness = "boundary " + idx.subset_key(t) + "|" + idx.label(p) + " is not mono";
                break;
            }
        }
    }
    return {true, monic, monic ? "" : witness};
}

bool is_monic(const Cube& x) {
    const uint32_t count = 1u << x.n();
    for (uint32_t t = 1; t < count; ++t) {
        for (int p = 0; p < x.n(); ++p) {
            if (!(t & (1u << p))) continue;
            if (!morphism_class(x.boundary(t, p)).mono) return false;
        }
    }
    return true;
}

Cube restrict_cube(const Cube& x, uint32_t u_mask, uint32_t v_mask) {
    if (u_mask & v_mask) throw Error("restrict_cube: U and V overlap");
    if ((u_mask | v_mask) & ~x.index().full()) throw Error("restrict_cube: labels out of range");
    std::vector<int> oldpos;
    CubeIndex sub = x.index().sub_index(u_mask, &oldpos);
    auto expand = [&](uint32_t a) {
        uint32_t m = 0;
        for (int i = 0; i < sub.n(); ++i) {
            if (a & (1u << i)) m |= (1u << oldpos[static_cast<std::size_t>(i)]);
        }
        return m;
    };
    const uint32_t count = 1u << sub.n();
    std::vector<FPModule> verts;
    verts.reserve(count);
    for (uint32_t a = 0; a < count; ++a) verts.push_back(x.vertex(expand(a) | v_mask));
    std::map<std::pair<uint32_t, int>, Morphism> bnds;
    for (uint32_t a = 1; a < count; ++a) {
        for (int i = 0; i < sub.n(); ++i) {
            if (!(a & (1u << i))) continue;
            bnds.emplace(std::make_pair(a, i),
                         x.boundary(expand(a) | v_mask, oldpos[static_cast<std::size_t>(i)]));
        }
    }
    return Cube(sub, x.ring(), std::move(verts), std::move(bnds));
}

Cube frontside_face(const Cube& x, int k_pos) {
    return restrict_cube(x, x.index().full() & ~(1u << k_pos), 0);
}

Cube backside_face(const Cube& x, int k_pos) {
    return restrict_cube(x, x.index().full() & ~(1u << k_pos), 1u << k_pos);
}

namespace {

int sign_exponent(uint32_t t_mask, int j_pos) {
    uint32_t above = t_mask & ~((1u << (j_pos + 1)) - 1);
    return __builtin_popcount(above);
}

struct TotLayout {
    std::vector<std::vector<uint32_t>> by_degree;  // lex-ordered masks per degree
    std::vector<std::map<uint32_t, int>> offset;   // generator offsets per degree
    std::vector<FPModule> mods;
};

TotLayout tot_layout(const Cube& x) {
    TotLayout lay;
    for (int k = 0; k <= x.n(); ++k) {
        std::vector<uint32_t> masks = subsets_of_size(x.index().full(), k);
        std::vector<FPModule> parts;
        std::map<uint32_t, int> off;
        int acc = 0;
        for (uint32_t m : masks) {
            off[m] = acc;
            acc += x.vertex(m).gens();
            parts.push_back(x.vertex(m));
        }
        lay.by_degree.push_back(std::move(masks));
        lay.offset.push_back(std::move(off));
        lay.mods.push_back(direct_sum(parts).module);
    }
    return lay;
}

}  // namespace

ChainComplex total_complex(const Cube& x) {
    if (x.n() < 1) throw Error("total_complex: needs a non-empty label set");
    TotLayout lay = tot_layout(x);
    std::vector<Morphism> bnds;
    for (int k = 1; k <= x.n(); ++k) {
        Matrix m(x.ring(), lay.mods[static_cast<std::size_t>(k - 1)].gens(),
                 lay.mods[static_cast<std::size_t>(k)].gens());
        for (uint32_t t : lay.by_degree[static_cast<std::size_t>(k)]) {
            int coff = lay.offset[static_cast<std::size_t>(k)].at(t);
            for (int p = 0; p < x.n(); ++p) {
                if (!(t & (1u << p))) continue;
                uint32_t t2 = t & ~(1u << p);
                int roff = lay.offset[static_cast<std::size_t>(k - 1)].at(t2);
                const Matrix& dm = x.boundary(t, p).mat();
                bool negate = sign_exponent(t, p) % 2 == 1;
                for (int i = 0; i < dm.rows(); ++i) {
                    for (int j = 0; j < dm.cols(); ++j) {
                        m.set(roff + i, coff + j, negate ? neg(dm.at(i, j)) : dm.at(i, j));
                    }
                }
            }
        }
        bnds.emplace_back(lay.mods[static_cast<std::size_t>(k)],
                          lay.mods[static_cast<std::size_t>(k - 1)], m);
    }
    return ChainComplex(0, std::move(lay.mods), std::move(bnds));
}

void validate_cube_morphism(const CubeMorphism& f) {
    if (!(f.src.index() == f.tgt.index())) throw Error("CubeMorphism: index mismatch");
    const uint32_t count = 1u << f.src.n();
    for (uint32_t t = 0; t < count; ++t) {
        auto it = f.comp.find(t);
        if (it == f.comp.end()) throw Error("CubeMorphism: missing component");
        if (!it->second.src().same_presentation(f.src.vertex(t)) ||
            !it->second.tgt().same_presentation(f.tgt.vertex(t))) {
            throw Error("CubeMorphism: component endpoints mismatch");
        }
        it->second.require_well_defined("CubeMorphism");
    }
    for (uint32_t t = 1; t < count; ++t) {
        for (int p = 0; p < f.src.n(); ++p) {
            if (!(t & (1u << p))) continue;
            Morphism lhs = f.comp.at(t & ~(1u << p)).after(f.src.boundary(t, p));
            Morphism rhs = f.tgt.boundary(t, p).after(f.comp.at(t));
            if (!lhs.equals(rhs)) {
                throw Error("CubeMorphism: naturality fails at " + f.src.index().subset_key(t) +
                            "|" + f.src.index().label(p));
            }
        }
    }
}

ChainMap total_chainmap(const CubeMorphism& f) {
    ChainComplex a = total_complex(f.src);
    ChainComplex b = total_complex(f.tgt);
    TotLayout la = tot_layout(f.src);
    TotLayout lb = tot_layout(f.tgt);
    std::map<int, Morphism> comps;
    for (int k = 0; k <= f.src.n(); ++k) {
        Matrix m(f.src.ring(), lb.mods[static_cast<std::size_t>(k)].gens(),
                 la.mods[static_cast<std::size_t>(k)].gens());
        for (uint32_t t : la.by_degree[static_cast<std::size_t>(k)]) {
            int coff = la.offset[static_cast<std::size_t>(k)].at(t);
            int roff = lb.offset[static_cast<std::size_t>(k)].at(t);
            const Matrix& fm = f.comp.at(t).mat();
            for (int i = 0; i < fm.rows(); ++i) {
                for (int j = 0; j < fm.cols(); ++j) m.set(roff + i, coff + j, fm.at(i, j));
            }
        }
        comps.emplace(k, Morphism(la.mods[static_cast<std::size_t>(k)],
                                  lb.mods[static_cast<std::size_t>(k)], m));
    }
    return ChainMap(a, b, std::move(comps));
}

CubeMorphism face_transformation(const Cube& x, int s_pos) {
    Cube back = backside_face(x, s_pos);
    Cube front = frontside_face(x, s_pos);
    std::vector<int> oldpos;
    CubeIndex sub = x.index().sub_index(x.index().full() & ~(1u << s_pos), &oldpos);
    auto expand = [&](uint32_t a) {
        uint32_t m = 0;
        for (int i = 0; i < sub.n(); ++i) {
            if (a & (1u << i)) m |= (1u << oldpos[static_cast<std::size_t>(i)]);
        }
        return m;
    };
    std::map<uint32_t, Morphism> comp;
    const uint32_t count = 1u << sub.n();
    for (uint32_t a = 0; a < count; ++a) {
        comp.emplace(a, x.boundary(expand(a) | (1u << s_pos), s_pos));
    }
    return CubeMorphism{std::move(back), std::move(front), std::move(comp)};
}

Morphism h0_tot_face(const Cube& x, int s_pos) {
    if (x.n() == 1) return x.boundary(1u << s_pos, s_pos);
    return induced_on_homology(total_chainmap(face_transformation(x, s_pos)), 0);
}

H0Step h0_direction_step(const Cube& x, int k_pos) {
    std::vector<int> oldpos;
    CubeIndex sub = x.index().sub_index(x.index().full() & ~(1u << k_pos), &oldpos);
    auto expand = [&](uint32_t a) {
        uint32_t m = 0;
        for (int i = 0; i < sub.n(); ++i) {
            if (a & (1u << i)) m |= (1u << oldpos[static_cast<std::size_t>(i)]);
        }
        return m;
    };
    const uint32_t count = 1u << sub.n();
    std::vector<FPModule> verts;
    std::map<uint32_t, Morphism> projections;
    for (uint32_t a = 0; a < count; ++a) {
        uint32_t t = expand(a);
        const FPModule& xt = x.vertex(t);
        const Morphism& dk = x.boundary(t | (1u << k_pos), k_pos);
        FPModule cok(x.ring(), xt.gens(), xt.relations().hcat(dk.mat()));
        projections.emplace(a, Morphism(xt, cok, Matrix::identity(x.ring(), xt.gens())));
        verts.push_back(std::move(cok));
    }
    std::map<std::pair<uint32_t, int>, Morphism> bnds;
    for (uint32_t a = 1; a < count; ++a) {
        for (int i = 0; i < sub.n(); ++i) {
            if (!(a & (1u << i))) continue;
            uint32_t t = expand(a);
            const Morphism& d = x.boundary(t, oldpos[static_cast<std::size_t>(i)]);
            bnds.emplace(std::make_pair(a, i),
                         Morphism(verts[a], verts[a & ~(1u << i)], d.mat()));
        }
    }
    Cube cube(sub, x.ring(), std::move(verts), std::move(bnds));
    return H0Step{std::move(cube), std::move(projections)};
}

Cube h0_direction(const Cube& x, const std::vector<int>& k_positions) {
    // positions refer to the original index; fold while remapping
    Cube cur = x;
    std::vector<std::string> names;
    names.reserve(k_positions.size());
    for (int p : k_positions) names.push_back(x.index().label(p));
    for (const std::string& name : names) {
        cur = h0_direction_step(cur, cur.index().pos(name)).cube;
    }
    return cur;
}

namespace {

AdmReport adm_recursive_inner(const Cube& x) {
    if (x.n() == 0) return {true, ""};
    const uint32_t count = 1u << x.n();
    for (uint32_t t = 1; t < count; ++t) {
        for (int p = 0; p < x.n(); ++p) {
            if (!(t & (1u << p))) continue;
            if (!morphism_class(x.boundary(t, p)).mono) {
                return {false, "boundary " + x.index().subset_key(t) + "|" + x.index().label(p) +
                                   " is not mono"};
            }
        }
    }
    if (x.n() == 1) return {true, ""};
    for (int k = 0; k < x.n(); ++k) {
        AdmReport r = adm_recursive_inner(h0_direction_step(x, k).cube);
        if (!r.admissible) {
            return {false, "H0^" + x.index().label(k) + ": " + r.witness};
        }
    }
    return {true, ""};
}

AdmReport adm_faces_spherical(const Cube& x) {
    if (x.n() == 0) return {true, ""};
    for (int k = 0; k < x.n(); ++k) {
        if (x.n() >= 2) {
            AdmReport r = adm_recursive_inner(frontside_face(x, k));
            if (!r.admissible) {
                return {false, "frontside " + x.index().label(k) + "-face: " + r.witness};
            }
        }
    }
    SphericalReport s = is_spherical(total_complex(x), 0);
    if (!s.spherical) {
        return {false, "not 0-spherical: H_" + std::to_string(s.witness_degree) + " = " +
                           s.witness_invariants};
    }
    return {true, ""};
}

AdmReport adm_all_restrictions(const Cube& x) {
    if (x.n() == 0) return {true, ""};
    const uint32_t count = 1u << x.n();
    for (uint32_t t = 1; t < count; ++t) {
        for (int p = 0; p < x.n(); ++p) {
            if (!(t & (1u << p))) continue;
            if (!morphism_class(x.boundary(t, p)).mono) {
                return {false, "boundary " + x.index().subset_key(t) + "|" + x.index().label(p) +
                                   " is not mono"};
            }
        }
    }
    for (uint32_t t : subsets_of(x.index().full())) {
        if (t == 0) continue;
        Cube rest = restrict_cube(x, t, 0);
        SphericalReport s = is_spherical(total_complex(rest), 0);
        if (!s.spherical) {
            return {false, "restriction to {" + x.index().subset_key(t) + "} not 0-spherical: H_" +
                               std::to_string(s.witness_degree) + " = " + s.witness_invariants};
        }
    }
    return {true, ""};
}

}  // namespace

AdmReport is_admissible(const Cube& x, AdmMethod method) {
    CubeReport v = validate(x);
    if (!v.valid) throw Error("is_admissible: invalid cube: " + v.witness);
    switch (method) {
        case AdmMethod::Recursive: return adm_recursive_inner(x);
        case AdmMethod::Faces0Spherical: return adm_faces_spherical(x);
        case AdmMethod::AllRestrictions: return adm_all_restrictions(x);
    }
    throw Error("is_admissible: unreachable");
}

FiberedReport is_fibered(const Cube& x) {
    if (x.n() <= 1) return {true, ""};
    const CubeIndex& idx = x.index();
    for (int s = 0; s < x.n(); ++s) {
        for (int t = s + 1; t < x.n(); ++t) {
            uint32_t rest = idx.full() & ~(1u << s) & ~(1u << t);
            for (uint32_t base : subsets_of(rest)) {
                uint32_t corner = base | (1u << s) | (1u << t);
                Morphism f = x.boundary(base | (1u << s), s);   // x_{T∪s} -> x_T
                Morphism g = x.boundary(base | (1u << t), t);   // x_{T∪t} -> x_T
                Morphism u = x.boundary(corner, t);             // corner -> x_{T∪s}
                Morphism v = x.boundary(corner, s);             // corner -> x_{T∪t}
                PullbackData pb = pullback(f, g);
                auto w = mediate(pb, u, v);
                std::string where = "square at T={" + idx.subset_key(base) + "}, s=" +
                                    idx.label(s) + ", t=" + idx.label(t);
                if (!w) return {false, where + ": mediating map does not exist"};
                if (!morphism_class(*w).iso) return {false, where + " is not Cartesian"};
            }
        }
    }
    return {true, ""};
}

FibCube fib_of_family(const CubeIndex& idx, const std::vector<Morphism>& fx) {
    if (static_cast<int>(fx.size()) != idx.n() || idx.n() < 1) {
        throw Error("fib_of_family: need one morphism per label");
    }
    const FPModule& z = fx[0].tgt();
    for (const Morphism& f : fx) {
        if (!f.tgt().same_presentation(z)) throw Error("fib_of_family: target mismatch");
    }
    const Ring& ring = z.ring();
    const uint32_t count = 1u << idx.n();

    std::vector<FPModule> verts;
    std::map<uint32_t, Morphism> embed;
    std::map<uint32_t, DirectSum> sums;
    for (uint32_t t = 0; t < count; ++t) {
        int k = __builtin_popcount(t);
        if (k == 0) {
            verts.push_back(z);
            continue;
        }
        if (k == 1) {
            verts.push_back(fx[static_cast<std::size_t>(__builtin_ctz(t))].src());
            continue;
        }
        std::vector<FPModule> parts;
        std::vector<int> members;
        for (int i = 0; i < idx.n(); ++i) {
            if (t & (1u << i)) {
                parts.push_back(fx[static_cast<std::size_t>(i)].src());
                members.push_back(i);
            }
        }
        DirectSum ds = direct_sum(parts);
        std::vector<FPModule> zs(static_cast<std::size_t>(k - 1), z);
        DirectSum zsum = direct_sum(zs);
        Matrix diff(ring, zsum.module.gens(), ds.module.gens());
        for (int j = 0; j + 1 < k; ++j) {
            Morphism a = zsum.inject[static_cast<std::size_t>(j)]
                             .after(fx[static_cast<std::size_t>(members[static_cast<std::size_t>(j)])])
                             .after(ds.project[static_cast<std::size_t>(j)]);
            Morphism b = zsum.inject[static_cast<std::size_t>(j)]
                             .after(fx[static_cast<std::size_t>(members[static_cast<std::size_t>(j + 1)])])
                             .after(ds.project[static_cast<std::size_t>(j + 1)]);
            diff = diff.add(a.mat().sub(b.mat()));
        }
        Subquotient ker = kernel(Morphism(ds.module, zsum.module, diff));
        verts.push_back(ker.module);
        embed.emplace(t, ker.map);
        sums.emplace(t, std::move(ds));
    }

    std::map<std::pair<uint32_t, int>, Morphism> bnds;
    for (uint32_t t = 1; t < count; ++t) {
        int k = __builtin_popcount(t);
        for (int p = 0; p < idx.n(); ++p) {
            if (!(t & (1u << p))) continue;
            uint32_t t2 = t & ~(1u << p);
            if (k == 1) {
                bnds.emplace(std::make_pair(t, p), fx[static_cast<std::size_t>(p)]);
                continue;
            }
            // position of each member within the sorted list of t
            std::vector<int> members;
            for (int i = 0; i < idx.n(); ++i) {
                if (t & (1u << i)) members.push_back(i);
            }
            const DirectSum& ds = sums.at(t);
            if (k == 2) {
                int keep = (members[0] == p) ? 1 : 0;
                bnds.emplace(std::make_pair(t, p),
                             ds.project[static_cast<std::size_t>(keep)].after(embed.at(t)));
                continue;
            }
            // drop coordinate p, then factor through the smaller kernel
            const DirectSum& ds2 = sums.at(t2);
            Matrix drop(ring, ds2.module.gens(), ds.module.gens());
            int srcblock = 0;
            for (std::size_t m = 0; m < members.size(); ++m) {
                if (members[m] == p) continue;
                Morphism block = ds2.inject[static_cast<std::size_t>(srcblock)].after(
                    ds.project[m]);
                drop = drop.add(block.mat());
                ++srcblock;
            }
            Morphism dropped(verts[t], ds2.module, drop.mul(embed.at(t).mat()));
            auto lifted = lift_through_mono(embed.at(t2), dropped);
            if (!lifted) throw Error("fib_of_family: internal lift failure");
            bnds.emplace(std::make_pair(t, p), *lifted);
        }
    }
    Cube cube(idx, ring, std::move(verts), std::move(bnds));
    return FibCube{std::move(cube), fx, std::move(embed)};
}

Cube typical_cube(const CubeIndex& idx, const std::vector<Elem>& fs, const FPModule& x) {
    if (static_cast<int>(fs.size()) != idx.n()) {
        throw Error("typical_cube: need one scalar per label");
    }
    const uint32_t count = 1u << idx.n();
    std::vector<FPModule> verts(count, x);
    std::map<std::pair<uint32_t, int>, Morphism> bnds;
    for (uint32_t t = 1; t < count; ++t) {
        for (int p = 0; p < idx.n(); ++p) {
            if (!(t & (1u << p))) continue;
            bnds.emplace(std::make_pair(t, p),
                         Morphism::scalar(x, fs[static_cast<std::size_t>(p)]));
        }
    }
    return Cube(idx, x.ring(), std::move(verts), std::move(bnds));
}

bool sequence_check(const std::vector<Elem>& fs, const FPModule& x, SeqMode mode) {
    const int n = static_cast<int>(fs.size());
    for (const Elem& f : fs) {
        if (classify(f).cls == ElemClass::Unit) return false;
    }
    if (n == 0) return true;
    if (mode == SeqMode::RegularOrdered) {
        FPModule cur = x;
        for (const Elem& f : fs) {
            if (!kernel(Morphism::scalar(cur, f)).module.is_zero_module()) return false;
            cur = quotient_by_scalars(cur, {f});
        }
        return true;
    }
    // XSequence: f_j must act injectively on x/(f_i : i in mask) for every
    // mask not containing j; this covers every ordering
    const uint32_t count = 1u << n;
    for (uint32_t mask = 0; mask < count; ++mask) {
        std::vector<Elem> chosen;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) chosen.push_back(fs[static_cast<std::size_t>(i)]);
        }
        FPModule q = quotient_by_scalars(x, chosen);
        for (int j = 0; j < n; ++j) {
            if (mask & (1u << j)) continue;
            if (!kernel(Morphism::scalar(q, fs[static_cast<std::size_t>(j)])).module
                     .is_zero_module()) {
                return false;
            }
        }
    }
    return true;
}

Cube compose_cubes(const Cube& x, const Cube& y, int s_pos,
                   const std::map<uint32_t, Morphism>& alpha) {
    if (!(x.index() == y.index())) throw Error("compose_cubes: index mismatch");
    const CubeIndex& idx = x.index();
    const uint32_t sbit = 1u << s_pos;
    const uint32_t count = 1u << x.n();
    // naturality of alpha: x|^∅_{S\{s}} -> y|^{{s}}_{S\{s}}
    for (uint32_t a = 0; a < count; ++a) {
        if (a & sbit) continue;
        auto it = alpha.find(a);
        if (it == alpha.end()) throw Error("compose_cubes: missing alpha component");
        const Morphism& f = it->second;
        if (!f.src().same_presentation(x.vertex(a)) ||
            !f.tgt().same_presentation(y.vertex(a | sbit))) {
            throw Error("compose_cubes: alpha endpoints mismatch");
        }
        f.require_well_defined("compose_cubes");
        for (int t = 0; t < x.n(); ++t) {
            if (t == s_pos || !(a & (1u << t))) continue;
            Morphism lhs = alpha.at(a & ~(1u << t)).after(x.boundary(a, t));
            Morphism rhs = y.boundary(a | sbit, t).after(f);
            if (!lhs.equals(rhs)) {
                throw Error("compose_cubes: alpha naturality fails at " + idx.subset_key(a) +
                            "|" + idx.label(t));
            }
        }
    }
    std::vector<FPModule> verts;
    verts.reserve(count);
    for (uint32_t t = 0; t < count; ++t) {
        verts.push_back((t & sbit) ? x.vertex(t) : y.vertex(t));
    }
    std::map<std::pair<uint32_t, int>, Morphism> bnds;
    for (uint32_t t = 1; t < count; ++t) {
        for (int p = 0; p < x.n(); ++p) {
            if (!(t & (1u << p))) continue;
            if (p == s_pos) {
                uint32_t t2 = t & ~sbit;
                Morphism comp = y.boundary(t, s_pos).after(alpha.at(t2)).after(x.boundary(t, s_pos));
                bnds.emplace(std::make_pair(t, p), comp);
            } else if (t & sbit) {
                bnds.emplace(std::make_pair(t, p), x.boundary(t, p));
            } else {
                bnds.emplace(std::make_pair(t, p), y.boundary(t, p));
            }
        }
    }
    return Cube(idx, x.ring(), std::move(verts), std::move(bnds));
}

Cube attach(const Cube& x, const Morphism& f) {
    if (!f.src().same_presentation(x.vertex(0))) throw Error("attach: source mismatch");
    if (x.n() < 1) throw Error("attach: needs a non-empty label set");
    const uint32_t count = 1u << x.n();
    std::vector<FPModule> verts;
    verts.reserve(count);
    verts.push_back(f.tgt());
    for (uint32_t t = 1; t < count; ++t) verts.push_back(x.vertex(t));
    std::map<std::pair<uint32_t, int>, Morphism> bnds;
    for (uint32_t t = 1; t < count; ++t) {
        for (int p = 0; p < x.n(); ++p) {
            if (!(t & (1u << p))) continue;
            if ((t & ~(1u << p)) == 0) {
                bnds.emplace(std::make_pair(t, p), f.after(x.boundary(t, p)));
            } else {
                bnds.emplace(std::make_pair(t, p), x.boundary(t, p));
            }
        }
    }
    return Cube(x.index(), x.ring(), std::move(verts), std::move(bnds));
}

Cocube dual_of_cube(const Cube& x) {
    const uint32_t full = x.index().full();
    const uint32_t count = 1u << x.n();
    std::vector<FPModule> verts;
    verts.reserve(count);
    for (uint32_t t = 0; t < count; ++t) verts.push_back(x.vertex(full & ~t));
    std::map<std::pair<uint32_t, int>, Morphism> ups;
    for (uint32_t t = 1; t < count; ++t) {
        for (int p = 0; p < x.n(); ++p) {
            if (!(t & (1u << p))) continue;
            // x̂_{T\{t}} -> x̂_T  is  d^{t,x} at (S\T) ∪ {t}
            ups.emplace(std::make_pair(t, p), x.boundary((full & ~t) | (1u << p), p));
        }
    }
    return Cocube{x.index(), x.ring(), std::move(verts), std::move(ups)};
}

Cube dual_of_cocube(const Cocube& c) {
    const uint32_t full = c.idx.full();
    const uint32_t count = 1u << c.idx.n();
    std::vector<FPModule> verts;
    verts.reserve(count);
    for (uint32_t t = 0; t < count; ++t) verts.push_back(c.vertex[full & ~t]);
    std::map<std::pair<uint32_t, int>, Morphism> bnds;
    for (uint32_t t = 1; t < count; ++t) {
        for (int p = 0; p < c.idx.n(); ++p) {
            if (!(t & (1u << p))) continue;
            bnds.emplace(std::make_pair(t, p), c.up.at({(full & ~t) | (1u << p), p}));
        }
    }
    return Cube(c.idx, c.ring, std::move(verts), std::move(bnds));
}

Cube cocube_as_cube(const Cocube& c) {
    const uint32_t count = 1u << c.idx.n();
    std::map<std::pair<uint32_t, int>, Morphism> bnds;
    for (uint32_t t = 1; t < count; ++t) {
        for (int p = 0; p < c.idx.n(); ++p) {
            if (!(t & (1u << p))) continue;
            const Morphism& u = c.up.at({t, p});
            if (!c.vertex[t].same_presentation(c.vertex[t & ~(1u << p)])) {
                throw Error("cocube_as_cube: vertex shapes do not allow reinterpretation");
            }
            (void)u;
            bnds.emplace(std::make_pair(t, p),
                         Morphism(c.vertex[t], c.vertex[t & ~(1u << p)], u.mat()));
        }
    }
    return Cube(c.idx, c.ring, c.vertex, std::move(bnds));
}

ChainComplex koszul_complex(const Ring& ring, const std::vector<Elem>& fs) {
    static const char* names[] = {"a", "b", "c", "d", "e"};
    if (fs.size() > 5) throw Error("koszul_complex: at most 5 elements");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < fs.size(); ++i) labels.emplace_back(names[i]);
    CubeIndex idx(labels);
    return total_complex(typical_cube(idx, fs, FPModule::free_module(ring, 1)));
}

}  // namespace admcube
