#ifndef ANNLAB_GROEBNER_HPP
#define ANNLAB_GROEBNER_HPP

#include <span>
#include <vector>

#include "annlab/poly.hpp"

namespace annlab {

/* ------------------------------------------------------------------ */
/* Buchberger engine for submodules of free modules. Ideals are the    */
/* rank-one case.                                                      */
/* ------------------------------------------------------------------ */

struct GBOptions {
    /* Autoreduce, make monic and sort the basis (canonical reduced GB). */
    bool reduced = true;

    /* Track the first `source_count` inputs with identity tags and harvest
     * the tag of every zero reduction. With tracking on, both Buchberger
     * criteria are disabled and every same-component pair is processed so
     * the harvested tags generate the full syzygy module of the inputs
     * (auxiliary inputs carry zero tags and are projected away). */
    bool track = false;
    int source_count = 0;

    /* Degrees of the ambient free-module generators; used only by the
     * selection strategy (minimal lcm degree first, ties by input index). */
    const std::vector<int64_t>* shifts = nullptr;
};

struct GBResult {
    std::vector<Vec> gb;
    std::vector<Vec> syz;  // tags, components < source_count, POT-normalized
};

GBResult buchberger_run(const PolyRing& R, const ModOrder& mo, std::vector<Vec> inputs,
                        const GBOptions& opt = {});

/* Full division remainder of f by G (no term of the remainder is divisible
 * by any lead term of G). Unique when G is a Groebner basis. */
Vec normal_form(const PolyRing& R, const ModOrder& mo, Vec f, std::span<const Vec> G);
Poly normal_form(const PolyRing& R, const Poly& f, std::span<const Poly> G);

std::vector<Poly> buchberger(const PolyRing& R, std::vector<Poly> gens);

/* Generators of { v in R^source : sum v_c * source_c  in  span(aux) }.
 * The returned vectors live in the free module on the source columns. */
std::vector<Vec> kernel_of_columns(const PolyRing& R, const ModOrder& mo,
                                   std::span<const Vec> source, std::span<const Vec> aux);

/* Schreyer syzygies of a Groebner basis G: one generator per reducible
 * S-pair, expressed in the Schreyer order induced by the lead terms of G.
 * Throws hypothesis_error if G is not a Groebner basis. */
Submodule syzygy_basis(const PolyRing& R, const ModOrder& mo, std::span<const Vec> G,
                       std::span<const int64_t> ambient_shifts);

/* A Groebner basis that accepts elements one at a time. Seed it with a
 * known basis, then add() candidates; add() returns the reduced monic
 * form of the candidate, zero when it was already in the span. */
class IncrementalBasis {
public:
    IncrementalBasis(PolyRing R, ModOrder mo) : R_(std::move(R)), mo_(std::move(mo)) {}

    void seed_groebner(std::vector<Vec> gb);
    Vec reduce(Vec v) const;
    Vec add(Vec v);
    const std::vector<Vec>& elements() const { return basis_; }

private:
    void insert_and_close(Vec v);

    PolyRing R_;
    ModOrder mo_;
    std::vector<Vec> basis_;
};

}  // namespace annlab

#endif
