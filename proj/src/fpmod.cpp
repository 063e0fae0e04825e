#include "admcube/fpmod.hpp"

#include <algorithm>
#include <sstream>

namespace admcube {

FPModule::FPModule(Ring ring, int gens, Matrix relations)
    : ring_(std::move(ring)), gens_(gens), rel_(std::move(relations)) {
    if (gens_ < 0) throw Error("FPModule: negative generator count");
    if (rel_.rows() != gens_) throw Error("FPModule: relation matrix must have gens rows");
    if (rel_.ring() != ring_) throw Error("FPModule: relation ring mismatch");
}

FPModule FPModule::free_module(const Ring& ring, int rank) {
    return FPModule(ring, rank, Matrix(ring, rank, 0));
}

FPModule FPModule::zero(const Ring& ring) { return FPModule(ring, 0, Matrix(ring, 0, 0)); }

FPModule FPModule::cyclic(const Ring& ring, const Int& n) {
    Matrix rel(ring, 1, 1);
    rel.set(0, 0, Elem(ring, n));
    return FPModule(ring, 1, rel);
}

const std::vector<Elem>& FPModule::invariants() const {
    if (!inv_) {
        std::vector<Elem> out;
        std::vector<Elem> diag = snf_diagonal(rel_);
        for (const Elem& d : diag) {
            if (!d.is_zero() && is_unit(d)) continue;
            out.push_back(d);
        }
        // generators beyond the diagonal are free
        for (int i = static_cast<int>(diag.size()); i < gens_; ++i) {
            out.push_back(Elem(ring_, 0));
        }
        // zeros (free factors) sort last; nonzero factors keep SNF order
        std::stable_partition(out.begin(), out.end(),
                              [](const Elem& e) { return !e.is_zero(); });
        inv_ = std::move(out);
    }
    return *inv_;
}

std::string FPModule::invariants_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const Elem& e : invariants()) {
        if (!first) os << ",";
        os << to_string(e);
        first = false;
    }
    os << ")";
    return os.str();
}

Morphism::Morphism(FPModule src, FPModule tgt, Matrix mat)
    : src_(std::move(src)), tgt_(std::move(tgt)), mat_(std::move(mat)) {
    if (mat_.rows() != tgt_.gens() || mat_.cols() != src_.gens()) {
        throw Error("Morphism: matrix shape does not match modules");
    }
    if (mat_.ring() != src_.ring() || src_.ring() != tgt_.ring()) {
        throw Error("Morphism: ring mismatch");
    }
}

Morphism Morphism::identity(const FPModule& m) {
    return Morphism(m, m, Matrix::identity(m.ring(), m.gens()));
}

Morphism Morphism::zero_map(const FPModule& src, const FPModule& tgt) {
    return Morphism(src, tgt, Matrix(src.ring(), tgt.gens(), src.gens()));
}

Morphism Morphism::scalar(const FPModule& m, const Elem& a) {
    return Morphism(m, m, Matrix::scalar(m.ring(), m.gens(), a));
}

bool Morphism::well_defined() const {
    Matrix moved = mat_.mul(src_.relations());
    return solve(tgt_.relations(), moved).has_value();
}

void Morphism::require_well_defined(const char* what) const {
    if (!well_defined()) throw Error(std::string(what) + ": ill-defined morphism");
}

Morphism Morphism::after(const Morphism& g) const {
    if (!src_.same_presentation(g.tgt_)) throw Error("after: composition mismatch");
    return Morphism(g.src_, tgt_, mat_.mul(g.mat_));
}

Morphism Morphism::plus(const Morphism& o) const {
    if (!src_.same_presentation(o.src_) || !tgt_.same_presentation(o.tgt_)) {
        throw Error("plus: hom-set mismatch");
    }
    return Morphism(src_, tgt_, mat_.add(o.mat_));
}

Morphism Morphism::minus(const Morphism& o) const { return plus(o.negated()); }

Morphism Morphism::negated() const { return Morphism(src_, tgt_, mat_.negate()); }

bool Morphism::equals(const Morphism& o) const {
    if (!src_.same_presentation(o.src_) || !tgt_.same_presentation(o.tgt_)) return false;
    return solve(tgt_.relations(), mat_.sub(o.mat_)).has_value();
}

bool Morphism::is_zero_morphism() const {
    return solve(tgt_.relations(), mat_).has_value();
}

Pruned prune(const FPModule& m) {
    SnfResult s = smith_normal_form(m.relations());
    const int g = m.gens();
    const int dl = std::min(m.relations().rows(), m.relations().cols());
    std::vector<int> keep;
    std::vector<Elem> factors;
    for (int i = 0; i < g; ++i) {
        if (i < dl) {
            const Elem& d = s.d.at(i, i);
            if (!d.is_zero() && is_unit(d)) continue;
            keep.push_back(i);
            factors.push_back(d);
        } else {
            keep.push_back(i);
            factors.push_back(Elem(m.ring(), 0));
        }
    }
    int k = static_cast<int>(keep.size());
    int relcols = 0;
    for (const Elem& f : factors) {
        if (!f.is_zero()) ++relcols;
    }
    Matrix rel(m.ring(), k, relcols);
    int col = 0;
    for (int i = 0; i < k; ++i) {
        if (!factors[i].is_zero()) rel.set(i, col++, factors[i]);
    }
    FPModule small(m.ring(), k, rel);
    Matrix to = s.uinv.cols_subset(keep);
    Matrix from = s.u.rows_subset(keep);
    return Pruned{small, Morphism(small, m, to), Morphism(m, small, from)};
}

Subquotient kernel(const Morphism& f) {
    const Ring& ring = f.src().ring();
    const Matrix& fmat = f.mat();
    const Matrix& q = f.tgt().relations();
    const Matrix& r = f.src().relations();
    const int g = f.src().gens();

    Matrix preimage = kernel_basis(fmat.hcat(q));
    std::vector<int> topg(g);
    for (int i = 0; i < g; ++i) topg[i] = i;
    Matrix w = preimage.rows_subset(topg);

    Matrix syz = kernel_basis(w.hcat(r));
    std::vector<int> topk(w.cols());
    for (int i = 0; i < w.cols(); ++i) topk[i] = i;
    Matrix s = syz.rows_subset(topk);

    FPModule k0(ring, w.cols(), s);
    Morphism incl(k0, f.src(), w);
    Pruned p = prune(k0);
    return Subquotient{p.module, incl.after(p.to_orig)};
}

Subquotient image(const Morphism& f) {
    const Ring& ring = f.src().ring();
    const Matrix& fmat = f.mat();
    const Matrix& q = f.tgt().relations();
    const int g = f.src().gens();

    Matrix preimage = kernel_basis(fmat.hcat(q));
    std::vector<int> topg(g);
    for (int i = 0; i < g; ++i) topg[i] = i;
    Matrix rel = preimage.rows_subset(topg);

    FPModule i0(ring, g, rel);
    Morphism incl(i0, f.tgt(), fmat);
    Pruned p = prune(i0);
    return Subquotient{p.module, incl.after(p.to_orig)};
}

Subquotient cokernel(const Morphism& f) {
    const Ring& ring = f.src().ring();
    FPModule c0(ring, f.tgt().gens(), f.tgt().relations().hcat(f.mat()));
    Pruned p = prune(c0);
    Morphism epi(f.tgt(), p.module, p.from_orig.mat());
    return Subquotient{p.module, epi};
}

MorphismFlags morphism_class(const Morphism& f) {
    f.require_well_defined("morphism_class");
    bool mono = kernel(f).module.is_zero_module();
    bool epi = cokernel(f).module.is_zero_module();
    return MorphismFlags{mono, epi, mono && epi};
}

DirectSum direct_sum(const std::vector<FPModule>& parts) {
    if (parts.empty()) throw Error("direct_sum: empty list");
    const Ring& ring = parts[0].ring();
    int gens = 0, rels = 0;
    for (const FPModule& p : parts) {
        if (p.ring() != ring) throw Error("direct_sum: ring mismatch");
        gens += p.gens();
        rels += p.relations().cols();
    }
    Matrix rel(ring, gens, rels);
    int roff = 0, coff = 0;
    for (const FPModule& p : parts) {
        for (int i = 0; i < p.gens(); ++i) {
            for (int j = 0; j < p.relations().cols(); ++j) {
                rel.set(roff + i, coff + j, p.relations().at(i, j));
            }
        }
        roff += p.gens();
        coff += p.relations().cols();
    }
    FPModule total(ring, gens, rel);
    DirectSum out{total, {}, {}};
    roff = 0;
    for (const FPModule& p : parts) {
        Matrix in(ring, gens, p.gens());
        Matrix pr(ring, p.gens(), gens);
        for (int i = 0; i < p.gens(); ++i) {
            in.set(roff + i, i, Elem(ring, 1));
            pr.set(i, roff + i, Elem(ring, 1));
        }
        out.inject.emplace_back(p, total, in);
        out.project.emplace_back(total, p, pr);
        roff += p.gens();
    }
    return out;
}

PullbackData pullback(const Morphism& f, const Morphism& g) {
    if (!f.tgt().same_presentation(g.tgt())) throw Error("pullback: target mismatch");
    DirectSum ds = direct_sum({f.src(), g.src()});
    Matrix h = f.mat().hcat(g.mat().negate());
    Morphism diff(ds.module, f.tgt(), h);
    Subquotient k = kernel(diff);
    return PullbackData{k.module, ds.project[0].after(k.map), ds.project[1].after(k.map),
                        k.map};
}

std::optional<Morphism> lift_through_mono(const Morphism& mono, const Morphism& q) {
    if (!mono.tgt().same_presentation(q.tgt())) throw Error("lift_through_mono: target mismatch");
    Matrix big = mono.mat().hcat(mono.tgt().relations());
    auto sol = solve(big, q.mat());
    if (!sol) return std::nullopt;
    std::vector<int> top(mono.src().gens());
    for (int i = 0; i < mono.src().gens(); ++i) top[i] = i;
    return Morphism(q.src(), mono.src(), sol->rows_subset(top));
}

std::optional<Morphism> mediate(const PullbackData& pb, const Morphism& u, const Morphism& v) {
    if (!u.src().same_presentation(v.src())) throw Error("mediate: cone apex mismatch");
    Matrix stacked = u.mat().vcat(v.mat());
    Morphism cone(u.src(), pb.embed.tgt(), stacked);
    return lift_through_mono(pb.embed, cone);
}

FPModule quotient_by_scalars(const FPModule& x, const std::vector<Elem>& fs) {
    Matrix rel = x.relations();
    for (const Elem& f : fs) {
        rel = rel.hcat(Matrix::scalar(x.ring(), x.gens(), f));
    }
    return prune(FPModule(x.ring(), x.gens(), rel)).module;
}

namespace {

Matrix lift_to_int(const Matrix& a) {
    Ring z = Ring::integers();
    Matrix m(z, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.set(i, j, Elem(z, a.at(i, j).num()));
    return m;
}

Matrix subobject_canonical(const FPModule& amb, const Matrix& gens) {
    Matrix all = gens.hcat(amb.relations());
    switch (amb.ring().kind()) {
        case RingKind::Integers:
        case RingKind::Rationals:
        case RingKind::PrimeField:
            return row_hermite(all.transpose());
        case RingKind::IntegersMod: {
            // lift the lattice and include m*e_i so equality matches Z/m spans
            Matrix lifted = lift_to_int(all.transpose());
            Matrix mid = Matrix::scalar(Ring::integers(), amb.gens(),
                                        Elem(Ring::integers(), amb.ring().modulus()));
            return row_hermite(lifted.vcat(mid));
        }
    }
    throw Error("subobject_canonical: unreachable");
}

}  // namespace

Subobject::Subobject(FPModule ambient, Matrix generators)
    : ambient_(std::move(ambient)),
      gens_(std::move(generators)),
      canon_(subobject_canonical(ambient_, gens_)) {
    if (gens_.rows() != ambient_.gens()) {
        throw Error("Subobject: generators do not live in the ambient module");
    }
    if (gens_.ring() != ambient_.ring()) throw Error("Subobject: ring mismatch");
}

Subobject Subobject::zero(const FPModule& ambient) {
    return Subobject(ambient, Matrix(ambient.ring(), ambient.gens(), 0));
}

Subobject Subobject::full(const FPModule& ambient) {
    return Subobject(ambient, Matrix::identity(ambient.ring(), ambient.gens()));
}

std::string Subobject::key() const {
    return ambient_.ring().to_string() + "#" + std::to_string(ambient_.gens()) + "#" +
           canon_.to_string();
}

namespace {

void require_same_ambient(const Subobject& a, const Subobject& b, const char* op) {
    if (!a.ambient().same_presentation(b.ambient())) {
        throw Error(std::string(op) + ": ambient mismatch");
    }
}

}  // namespace

Subobject sub_join(const Subobject& a, const Subobject& b) {
    require_same_ambient(a, b, "sub_join");
    return Subobject(a.ambient(), a.generators().hcat(b.generators()));
}

Subobject sub_meet(const Subobject& a, const Subobject& b) {
    require_same_ambient(a, b, "sub_meet");
    const Matrix& r = a.ambient().relations();
    Matrix ga = a.generators().hcat(r);
    Matrix gb = b.generators().hcat(r);
    Matrix big = ga.hcat(gb.negate());
    Matrix ker = kernel_basis(big);
    std::vector<int> top(ga.cols());
    for (int i = 0; i < ga.cols(); ++i) top[i] = i;
    Matrix meet_gens = ga.mul(ker.rows_subset(top));
    return Subobject(a.ambient(), meet_gens);
}

bool sub_eq(const Subobject& a, const Subobject& b) {
    require_same_ambient(a, b, "sub_eq");
    return a.canonical() == b.canonical();
}

bool sub_leq(const Subobject& a, const Subobject& b) {
    require_same_ambient(a, b, "sub_leq");
    Matrix span = b.generators().hcat(b.ambient().relations());
    return solve(span, a.generators()).has_value();
}

Subobject image_subobject(const Morphism& f) { return Subobject(f.tgt(), f.mat()); }

FPModule sub_quotient(const Subobject& b, const Subobject& a) {
    require_same_ambient(a, b, "sub_quotient");
    const Matrix& gb = b.generators();
    Matrix span = gb.hcat(a.generators()).hcat(b.ambient().relations());
    Matrix ker = kernel_basis(span);
    std::vector<int> top(gb.cols());
    for (int i = 0; i < gb.cols(); ++i) top[i] = i;
    FPModule q(b.ambient().ring(), gb.cols(), ker.rows_subset(top));
    return prune(q).module;
}

}  // namespace admcube
