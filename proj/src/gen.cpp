#include "admcube/gen.hpp"

namespace admcube {

CubeIndex standard_labels(int n) {
    static const char* names[] = {"a", "b", "c", "d", "e"};
    if (n > 5) throw Error("standard_labels: at most 5");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.emplace_back(names[i]);
    return CubeIndex(labels);
}

long Gen::uniform(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(eng_);
}

std::vector<Elem> Gen::nonunit_family(const Ring& ring, int n, long bound) {
    std::vector<Elem> out;
    while (static_cast<int>(out.size()) < n) {
        Elem e(ring, uniform(-bound, bound));
        if (classify(e).cls == ElemClass::Unit) continue;
        out.push_back(e);
    }
    return out;
}

std::vector<Elem> Gen::nonzero_nonunit_family(const Ring& ring, int n, long bound) {
    std::vector<Elem> out;
    while (static_cast<int>(out.size()) < n) {
        Elem e(ring, uniform(-bound, bound));
        if (e.is_zero() || classify(e).cls == ElemClass::Unit) continue;
        out.push_back(e);
    }
    return out;
}

Matrix Gen::matrix(const Ring& ring, int rows, int cols, long bound) {
    Matrix m(ring, rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m.set(i, j, Elem(ring, uniform(-bound, bound)));
    }
    return m;
}

std::vector<Morphism> Gen::subgroup_family(int rank, int n, long bound) {
    Ring z = Ring::integers();
    FPModule amb = FPModule::free_module(z, rank);
    std::vector<Morphism> out;
    while (static_cast<int>(out.size()) < n) {
        Matrix g = matrix(z, rank, rank, bound);
        Subquotient im = image(Morphism(FPModule::free_module(z, rank), amb, g));
        out.push_back(im.map);
    }
    return out;
}

Cube Gen::typical(const Ring& ring, int n, long bound) {
    return typical_cube(standard_labels(n), nonunit_family(ring, n, bound),
                        FPModule::free_module(ring, 1));
}

Cube Gen::admissible_cube(int n, long bound, bool closure_ops) {
    Ring z = Ring::integers();
    FPModule free1 = FPModule::free_module(z, 1);
    for (;;) {
        std::vector<Elem> fs = nonzero_nonunit_family(z, n, bound);
        if (!sequence_check(fs, free1, SeqMode::XSequence)) continue;
        Cube x = typical_cube(standard_labels(n), fs, free1);
        if (!closure_ops) return x;
        switch (uniform(0, 2)) {
            case 0: return x;
            case 1: {
                // compose with a second admissible typical cube along a
                // random direction through the identity
                std::vector<Elem> gs = fs;
                int s = static_cast<int>(uniform(0, n - 1));
                gs[static_cast<std::size_t>(s)] =
                    nonzero_nonunit_family(z, 1, bound)[0];
                if (!sequence_check(gs, free1, SeqMode::XSequence)) return x;
                Cube y = typical_cube(standard_labels(n), gs, free1);
                std::map<uint32_t, Morphism> alpha;
                for (uint32_t a = 0; a < (1u << n); ++a) {
                    if (a & (1u << s)) continue;
                    alpha.emplace(a, Morphism::identity(free1));
                }
                Cube comp = compose_cubes(x, y, s, alpha);
                if (is_admissible(comp, AdmMethod::Recursive).admissible) return comp;
                return x;
            }
            default: {
                // attach a monic scalar at the base vertex
                Elem m = nonzero_nonunit_family(z, 1, bound)[0];
                return attach(x, Morphism::scalar(free1, m));
            }
        }
    }
}

Cube Gen::monic_nonadmissible(int n, long bound) {
    Ring z = Ring::integers();
    FPModule free1 = FPModule::free_module(z, 1);
    for (;;) {
        std::vector<Elem> fs = nonzero_nonunit_family(z, n, bound);
        // force a shared factor between two positions
        long d = uniform(2, 5);
        int i = static_cast<int>(uniform(0, n - 1));
        int j = static_cast<int>(uniform(0, n - 1));
        if (i == j) continue;
        fs[static_cast<std::size_t>(i)] = Elem(z, d * uniform(1, bound / 2 + 1));
        fs[static_cast<std::size_t>(j)] = Elem(z, d * uniform(1, bound / 2 + 1));
        if (sequence_check(fs, free1, SeqMode::XSequence)) continue;
        return typical_cube(standard_labels(n), fs, free1);
    }
}

Cube Gen::nonmonic(int n, long bound) {
    Ring z = Ring::integers();
    std::vector<Elem> fs = nonzero_nonunit_family(z, n, bound);
    fs[static_cast<std::size_t>(uniform(0, n - 1))] = Elem(z, 0);
    return typical_cube(standard_labels(n), fs, FPModule::free_module(z, 1));
}

Gen::AdjPair Gen::regular_scalar_adjugate(int n, long bound) {
    Ring z = Ring::integers();
    FPModule free1 = FPModule::free_module(z, 1);
    for (;;) {
        std::vector<Elem> fs = nonzero_nonunit_family(z, n, bound);
        std::vector<Elem> gs = nonzero_nonunit_family(z, n, bound);
        std::vector<Elem> hs;
        for (int i = 0; i < n; ++i) {
            hs.push_back(mul(fs[static_cast<std::size_t>(i)], gs[static_cast<std::size_t>(i)]));
        }
        if (!sequence_check(hs, free1, SeqMode::XSequence)) continue;
        Cube x = typical_cube(standard_labels(n), fs, free1);
        CubeAdjugate a = typical_adjugate(standard_labels(n), fs, gs, free1);
        return AdjPair{std::move(x), std::move(a)};
    }
}

Gen::AdjPair Gen::cofactor_pair(int n, int rank, long bound) {
    Ring z = Ring::integers();
    FPModule fm = FPModule::free_module(z, rank);
    for (;;) {
        // commuting direction matrices: polynomials in one random matrix
        Matrix base = matrix(z, rank, rank, bound);
        std::vector<Matrix> dirs;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            Matrix d = base.mul(base).scaled(Elem(z, uniform(0, 1)))
                           .add(base.scaled(Elem(z, uniform(0, 2))))
                           .add(Matrix::scalar(z, rank, Elem(z, uniform(1, bound))));
            if (det(d).is_zero()) ok = false;
            dirs.push_back(d);
        }
        if (!ok) continue;
        std::vector<FPModule> verts(1u << n, fm);
        std::map<std::pair<uint32_t, int>, Morphism> bnds;
        for (uint32_t t = 1; t < (1u << n); ++t) {
            for (int p = 0; p < n; ++p) {
                if (!(t & (1u << p))) continue;
                bnds.emplace(std::make_pair(t, p),
                             Morphism(fm, fm, dirs[static_cast<std::size_t>(p)]));
            }
        }
        Cube x(standard_labels(n), z, std::move(verts), std::move(bnds));
        CubeAdjugate a = cofactor_adjugate(x);
        AdjugateReport rep = verify_adjugate(x, a, true);
        if (!rep.ok) continue;
        return AdjPair{std::move(x), std::move(a)};
    }
}

DoubleCube Gen::patched_double(int n, long bound) {
    AdjPair p = regular_scalar_adjugate(n, bound);
    return patching_family_of(p.cube, p.adj).dbl;
}

ChainComplex Gen::be_instance(int flavor_hint) {
    Ring z = Ring::integers();
    FPModule free1 = FPModule::free_module(z, 1);
    int flavor = flavor_hint % 5;
    switch (flavor) {
        case 0: {  // Koszul of a sequence
            for (;;) {
                std::vector<Elem> fs = nonzero_nonunit_family(z, 2 + static_cast<int>(uniform(0, 1)), 30);
                if (!sequence_check(fs, free1, SeqMode::XSequence)) continue;
                return koszul_complex(z, fs);
            }
        }
        case 1: {  // Koszul of a non-sequence (zeros and shared factors allowed)
            std::vector<Elem> fs = nonunit_family(z, 2 + static_cast<int>(uniform(0, 1)), 30);
            return koszul_complex(z, fs);
        }
        case 2: {  // total complex of an admissible cube
            Cube x = admissible_cube(2 + static_cast<int>(uniform(0, 1)), 20, true);
            return total_complex(x);
        }
        case 3: {  // direct sum
            ChainComplex a = be_instance(static_cast<int>(uniform(0, 2)));
            ChainComplex b = be_instance(static_cast<int>(uniform(0, 2)));
            return direct_sum_complexes(a, b);
        }
        default: {  // single-entry mutation that retains d o d = 0
            ChainComplex base = be_instance(static_cast<int>(uniform(0, 2)));
            for (int attempt = 0; attempt < 40; ++attempt) {
                int k = base.lo() + 1 + static_cast<int>(uniform(0, base.hi() - base.lo() - 1));
                Matrix m = base.boundary_at(k).mat();
                if (m.rows() == 0 || m.cols() == 0) break;
                int i = static_cast<int>(uniform(0, m.rows() - 1));
                int j = static_cast<int>(uniform(0, m.cols() - 1));
                m.set(i, j, Elem(z, uniform(-9, 9)));
                std::vector<FPModule> mods;
                std::vector<Morphism> bnds;
                for (int d = base.lo(); d <= base.hi(); ++d) mods.push_back(base.module_at(d));
                bool shape_ok = true;
                for (int d = base.lo() + 1; d <= base.hi(); ++d) {
                    Matrix dm = (d == k) ? m : base.boundary_at(d).mat();
                    bnds.emplace_back(mods[static_cast<std::size_t>(d - base.lo())],
                                      mods[static_cast<std::size_t>(d - 1 - base.lo())], dm);
                }
                if (!shape_ok) break;
                try {
                    return ChainComplex(base.lo(), std::move(mods), std::move(bnds));
                } catch (const Error&) {
                    continue;  // mutation broke d o d = 0; retry
                }
            }
            return base;
        }
    }
}

}  // namespace admcube
