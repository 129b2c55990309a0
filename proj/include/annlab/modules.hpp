#ifndef ANNLAB_MODULES_HPP
#define ANNLAB_MODULES_HPP

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>

#include "annlab/ideals.hpp"

namespace annlab {

/* ------------------------------------------------------------------ */
/* Finitely presented graded R-modules: generator degrees plus a       */
/* homogeneous relation matrix over the ambient ring. The columns      */
/* I*e_j are implicit; every submodule computation adjoins them.       */
/* ------------------------------------------------------------------ */

struct FPModule {
    RingPtr ring;
    std::vector<int64_t> gens;  // generator degrees
    std::vector<Vec> rels;      // relation columns in the free module on gens

    bool is_zero() const { return gens.empty(); }
    int rank() const { return static_cast<int>(gens.size()); }
};

FPModule make_module(RingPtr ring, std::vector<int64_t> gen_shifts, std::vector<Vec> columns);
FPModule free_module(RingPtr ring, std::vector<int64_t> shifts);
FPModule zero_module(RingPtr ring);
FPModule residue_field(RingPtr ring);  // k = R/m
/* The ideal J regarded as an R-module on its generators. */
FPModule ideal_as_module(const Ideal& J);
FPModule direct_sum(const FPModule& A, const FPModule& B);
uint64_t module_hash(const FPModule& M);

/* Minimal presentations: prune unit pivots, then keep a minimal set of
 * relation columns. kept_gens maps surviving generators to input indices. */
struct MinPres {
    FPModule module;
    std::vector<int> kept_gens;
};
MinPres minimal_presentation_tracked(const FPModule& M);
FPModule minimal_presentation(const FPModule& M);
bool is_minimal_presentation(const FPModule& M);

/* Generators over R of { v : sum v_c columns_c  in  I * F(dst_shifts) }. */
std::vector<Vec> kernel_over_ring(const RingPtr& ring, std::span<const int64_t> dst_shifts,
                                  std::span<const Vec> columns,
                                  std::span<const Vec> extra_aux = {});

/* Select a minimal generating set among homogeneous candidates for a
 * submodule of F(ambient_shifts) over R; candidates are reduced against
 * the span kept so far and returned in canonical monic form, sorted by
 * ascending degree. */
std::vector<Vec> minimal_generators(const RingPtr& ring, std::span<const int64_t> ambient_shifts,
                                    std::vector<Vec> candidates);

/* Normal form of v modulo span(cols) + I*F over R (cols need not be a GB). */
Vec submodule_reduce(const RingPtr& ring, std::span<const int64_t> shifts,
                     std::span<const Vec> cols, const Vec& v);
bool submodule_contains(const RingPtr& ring, std::span<const int64_t> shifts,
                        std::span<const Vec> cols, const Vec& v);

/* ------------------------------------------------------------------ */
/* Minimal graded free resolutions.                                    */
/* ------------------------------------------------------------------ */

struct Resolution {
    RingPtr ring;
    bool over_quotient = true;
    bool complete = false;  // a zero kernel was reached
    std::vector<std::vector<int64_t>> frees;  // frees[i] = generator degrees of F_i
    std::vector<std::vector<Vec>> diffs;      // diffs[i] = columns of d_{i+1} : F_{i+1} -> F_i

    int length() const { return static_cast<int>(frees.size()) - 1; }
    int betti(int i) const {
        return i <= length() ? static_cast<int>(frees[i].size()) : 0;
    }
};

/* Resolve to homological degree `length` (sooner if the resolution stops).
 * M is minimalized internally; F_0 is the minimal generator set. */
Resolution free_resolution(const FPModule& M, int length, bool over_quotient);

/* First verbatim recurrence d_i == d_{i+p} (1 <= i, i+p <= computed length,
 * uniform degree translation on both sides); returns (i-1, p). */
std::optional<std::pair<int, int>> find_periodicity(const Resolution& res, int search_bound);

/* Process-wide resolution store: in-memory memo plus an optional on-disk
 * layer (one file per content key, canonical polynomial strings).
 * Writes are idempotent; concurrent fills of one key produce identical
 * artifacts. */
class ResolutionStore {
public:
    static ResolutionStore& instance();

    void set_directory(std::optional<std::filesystem::path> dir);
    void clear_memory();

    /* M need not be minimal; it is minimalized before hashing. */
    Resolution ensure(const FPModule& M, int length, bool over_quotient = true);

private:
    std::mutex mu_;
    std::map<uint64_t, Resolution> mem_;
    std::optional<std::filesystem::path> dir_;
};

/* ------------------------------------------------------------------ */
/* Hom modules.                                                        */
/* ------------------------------------------------------------------ */

/* A homomorphism generator as an evaluation matrix: entry(a, b) is the
 * coefficient of N's generator a in the image of M's generator b. */
struct EvalMatrix {
    int rows = 0;  // = N.rank()
    int cols = 0;  // = M.rank()
    std::vector<Poly> e;  // row-major

    const Poly& at(int a, int b) const { return e[static_cast<size_t>(a) * cols + b]; }
};

struct HomResult {
    FPModule module;
    std::vector<EvalMatrix> evals;  // one per generator of `module`
};

/* Hom_R(M, N), presented as a minimal FPModule. extra_quotient adds
 * further maps to divide out (used for the stable Hom). */
HomResult hom_module(const FPModule& M, const FPModule& N,
                     std::span<const Vec> extra_quotient = {});

/* Present span(Z)/span(U) inside F(shifts) as a minimal FPModule;
 * kept_gens maps the result's generators to indices into Z. */
struct SubquotientResult {
    FPModule module;
    std::vector<int> kept_gens;
    std::vector<Vec> reduced_gens;  // representatives in F(shifts), aligned with kept_gens
};
SubquotientResult present_subquotient(const RingPtr& ring, std::span<const int64_t> shifts,
                                      std::span<const Vec> Z, std::span<const Vec> U);

Ideal annihilator(const FPModule& M);

}  // namespace annlab

#endif
