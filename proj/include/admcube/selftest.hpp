#pragma once

#include "admcube/gen.hpp"
#include "admcube/lattices.hpp"

namespace admcube {

struct SuiteResult {
    std::string name;
    int instances;
    bool passed;
    std::string witness;
    double seconds;
};

struct SuiteBudget {
    int xseq_families;
    int adm_cubes;
    int totisom_cubes;
    int fibered_families;
    int lattice_instances;
    int main_theorem_pairs;
    int dct_doubles;
    int be_complexes;
    int app1_pairs;
    int linalg_matrices;
};

SuiteBudget small_budget();
SuiteBudget medium_budget();
SuiteBudget acceptance_budget();  // the stated acceptance counts

SuiteResult suite_xseq_equivalence(uint64_t seed, int count);
SuiteResult suite_admissibility_methods(uint64_t seed, int count);
SuiteResult suite_totisom(uint64_t seed, int count);
SuiteResult suite_fibered(uint64_t seed, int count);
SuiteResult suite_lattice(uint64_t seed, int count);
SuiteResult suite_main_theorem(uint64_t seed, int count);
SuiteResult suite_dct(uint64_t seed, int count);
SuiteResult suite_be(uint64_t seed, int count);
SuiteResult suite_app1(uint64_t seed, int count);
SuiteResult suite_linalg(uint64_t seed, int count);

std::vector<SuiteResult> run_all_suites(uint64_t seed, const SuiteBudget& budget);

}  // namespace admcube
