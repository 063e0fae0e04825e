#include "admcube/complexes.hpp"

#include <algorithm>

namespace admcube {

ChainComplex::ChainComplex(int lo, std::vector<FPModule> modules,
                           std::vector<Morphism> boundaries)
    : lo_(lo), ring_(modules.empty() ? Ring::integers() : modules[0].ring()),
      mods_(std::move(modules)), bnd_(std::move(boundaries)) {
    if (mods_.empty()) throw Error("ChainComplex: empty module list");
    if (bnd_.size() + 1 != mods_.size()) {
        throw Error("ChainComplex: need exactly one boundary per adjacent pair");
    }
    for (const FPModule& m : mods_) {
        if (m.ring() != ring_) throw Error("ChainComplex: ring mismatch");
    }
    for (std::size_t i = 0; i < bnd_.size(); ++i) {
        const Morphism& d = bnd_[i];
        if (!d.src().same_presentation(mods_[i + 1]) || !d.tgt().same_presentation(mods_[i])) {
            throw Error("ChainComplex: boundary endpoints do not match modules");
        }
        d.require_well_defined("ChainComplex");
    }
    for (std::size_t i = 0; i + 1 < bnd_.size(); ++i) {
        if (!bnd_[i].after(bnd_[i + 1]).is_zero_morphism()) {
            throw Error("ChainComplex: d o d != 0 at degree " +
                        std::to_string(lo_ + static_cast<int>(i) + 2));
        }
    }
}

FPModule ChainComplex::module_at(int k) const {
    if (k < lo_ || k > hi()) return FPModule::zero(ring_);
    return mods_[static_cast<std::size_t>(k - lo_)];
}

Morphism ChainComplex::boundary_at(int k) const {
    if (k >= lo_ + 1 && k <= hi()) return bnd_[static_cast<std::size_t>(k - lo_ - 1)];
    return Morphism::zero_map(module_at(k), module_at(k - 1));
}

HomologyData homology_data(const ChainComplex& c, int k) {
    FPModule ck = c.module_at(k);
    Morphism dk = c.boundary_at(k);
    Morphism dk1 = c.boundary_at(k + 1);

    Subquotient ker = kernel(dk);
    const Matrix& incl = ker.map.mat();  // gens(C_k) x gens(K)

    // relations of the homology module: cycles that are boundaries modulo
    // the relations of C_k
    Matrix bound = dk1.mat().hcat(ck.relations());
    Matrix syz = kernel_basis(incl.hcat(bound));
    std::vector<int> top(ker.module.gens());
    for (int i = 0; i < ker.module.gens(); ++i) top[i] = i;
    FPModule h0(ck.ring(), ker.module.gens(), syz.rows_subset(top));
    Pruned p = prune(h0);

    Matrix reps = incl.mul(p.to_orig.mat());
    Matrix reducer = reps.hcat(bound);
    return HomologyData{p.module, reps, reducer};
}

FPModule homology(const ChainComplex& c, int k) { return homology_data(c, k).h; }

Matrix reduce_cycles(const HomologyData& hd, const Matrix& cycles) {
    auto sol = solve(hd.reducer, cycles);
    if (!sol) throw Error("reduce_cycles: input columns are not cycles");
    std::vector<int> top(hd.h.gens());
    for (int i = 0; i < hd.h.gens(); ++i) top[i] = i;
    return sol->rows_subset(top);
}

SphericalReport is_spherical(const ChainComplex& c, int n) {
    for (int k = c.lo(); k <= c.hi(); ++k) {
        if (k == n) continue;
        FPModule h = homology(c, k);
        if (!h.is_zero_module()) {
            return SphericalReport{false, k, h.invariants_string()};
        }
    }
    return SphericalReport{true, 0, ""};
}

ChainMap::ChainMap(ChainComplex src, ChainComplex tgt, std::map<int, Morphism> components)
    : src_(std::move(src)), tgt_(std::move(tgt)), comp_(std::move(components)) {
    int lo = std::min(src_.lo(), tgt_.lo());
    int hi = std::max(src_.hi(), tgt_.hi());
    for (int k = lo; k <= hi; ++k) {
        Morphism fk = component_at(k);
        if (!fk.src().same_presentation(src_.module_at(k)) ||
            !fk.tgt().same_presentation(tgt_.module_at(k))) {
            throw Error("ChainMap: component endpoints mismatch at degree " + std::to_string(k));
        }
        fk.require_well_defined("ChainMap");
    }
    for (int k = lo; k <= hi + 1; ++k) {
        Morphism lhs = component_at(k - 1).after(src_.boundary_at(k));
        Morphism rhs = tgt_.boundary_at(k).after(component_at(k));
        if (!lhs.equals(rhs)) {
            throw Error("ChainMap: does not commute with boundaries at degree " +
                        std::to_string(k));
        }
    }
}

Morphism ChainMap::component_at(int k) const {
    auto it = comp_.find(k);
    if (it != comp_.end()) return it->second;
    return Morphism::zero_map(src_.module_at(k), tgt_.module_at(k));
}

Morphism induced_on_homology(const ChainMap& f, int k) {
    HomologyData a = homology_data(f.src(), k);
    HomologyData b = homology_data(f.tgt(), k);
    Matrix mapped = f.component_at(k).mat().mul(a.cycle_reps);
    Matrix coords = reduce_cycles(b, mapped);
    Morphism out(a.h, b.h, coords);
    out.require_well_defined("induced_on_homology");
    return out;
}

ChainComplex mapping_cone(const ChainMap& f) {
    const ChainComplex& a = f.src();
    const ChainComplex& b = f.tgt();
    const Ring& ring = a.ring();
    int lo = std::min(a.lo() + 1, b.lo());
    int hi = std::max(a.hi() + 1, b.hi());

    std::vector<FPModule> mods;
    for (int n = lo; n <= hi; ++n) {
        mods.push_back(direct_sum({a.module_at(n - 1), b.module_at(n)}).module);
    }
    std::vector<Morphism> bnds;
    for (int n = lo + 1; n <= hi; ++n) {
        FPModule srcm = mods[static_cast<std::size_t>(n - lo)];
        FPModule tgtm = mods[static_cast<std::size_t>(n - 1 - lo)];
        int ga = a.module_at(n - 1).gens(), gb = b.module_at(n).gens();
        int ha = a.module_at(n - 2).gens(), hb = b.module_at(n - 1).gens();
        Matrix da = a.boundary_at(n - 1).mat();
        Matrix fm = f.component_at(n - 1).mat();
        Matrix db = b.boundary_at(n).mat();
        Matrix m(ring, ha + hb, ga + gb);
        for (int i = 0; i < ha; ++i)
            for (int j = 0; j < ga; ++j) m.set(i, j, neg(da.at(i, j)));
        for (int i = 0; i < hb; ++i)
            for (int j = 0; j < ga; ++j) m.set(ha + i, j, neg(fm.at(i, j)));
        for (int i = 0; i < hb; ++i)
            for (int j = 0; j < gb; ++j) m.set(ha + i, ga + j, db.at(i, j));
        bnds.emplace_back(srcm, tgtm, m);
    }
    return ChainComplex(lo, std::move(mods), std::move(bnds));
}

ChainComplex direct_sum_complexes(const ChainComplex& a, const ChainComplex& b) {
    int lo = std::min(a.lo(), b.lo());
    int hi = std::max(a.hi(), b.hi());
    std::vector<FPModule> mods;
    std::vector<Morphism> bnds;
    for (int n = lo; n <= hi; ++n) {
        mods.push_back(direct_sum({a.module_at(n), b.module_at(n)}).module);
    }
    for (int n = lo + 1; n <= hi; ++n) {
        Matrix da = a.boundary_at(n).mat();
        Matrix db = b.boundary_at(n).mat();
        int ga = a.module_at(n).gens(), gb = b.module_at(n).gens();
        int ha = a.module_at(n - 1).gens(), hb = b.module_at(n - 1).gens();
        Matrix m(a.ring(), ha + hb, ga + gb);
        for (int i = 0; i < ha; ++i)
            for (int j = 0; j < ga; ++j) m.set(i, j, da.at(i, j));
        for (int i = 0; i < hb; ++i)
            for (int j = 0; j < gb; ++j) m.set(ha + i, ga + j, db.at(i, j));
        bnds.emplace_back(mods[static_cast<std::size_t>(n - lo)],
                          mods[static_cast<std::size_t>(n - 1 - lo)], m);
    }
    return ChainComplex(lo, std::move(mods), std::move(bnds));
}

}  // namespace admcube
