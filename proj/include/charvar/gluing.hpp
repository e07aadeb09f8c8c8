#ifndef CHARVAR_GLUING_HPP
#define CHARVAR_GLUING_HPP

#include "charvar/repring.hpp"
#include "charvar/sector.hpp"

namespace charvar {

/* The shared tensor data of one glue call: the components of
 * R4(left) (x) R4(right) on (T,S2,Sm2,S0), plain and with the right
 * factor twisted. Sectors 0-3 and the monodromy glue all read from one
 * instance, so the two tensor products are computed once. */
struct GlueCoefficients {
    MonodromyRep4 plain;    // A, B, C, D
    MonodromyRep4 twisted;  // A', B', C', D'
};

GlueCoefficients glue_coefficients(const SectorVector& left, const SectorVector& right);

/* Everything genus addition produces from genus-k and genus-h data: the
 * four sector E-polynomials at genus k+h, and the order-2 Hodge monodromy
 * of the diagonal sector over C-{0,1,-1}. The (a,b,c,d) refinement of the
 * latter is not determined by gluing; the recursion module supplies it. */
struct GluedData {
    int genus = 0;
    IntPoly e0, e1, e2, e3;
    MonodromyRep2 r4;
};

/* Requires left.genus >= 1 and right.genus >= 1. */
GluedData glue(const SectorVector& left, const SectorVector& right);

/* E-polynomial of sector i (0..3) at genus left.genus + right.genus. */
IntPoly glue_sector(int sector, const SectorVector& left, const SectorVector& right);

/* The (T,N) Hodge monodromy of the diagonal sector at genus k+h. */
MonodromyRep2 glue_r4(const SectorVector& left, const SectorVector& right);

}  // namespace charvar

#endif
