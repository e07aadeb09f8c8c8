#ifndef CHARVAR_SECTOR_HPP
#define CHARVAR_SECTOR_HPP

#include "charvar/intpoly.hpp"
#include "charvar/repring.hpp"

namespace charvar {

/* All genus-g data the recursion carries: the E-polynomials e0..e3 of the
 * four representation spaces with central/Jordan boundary holonomy, and
 * the coefficients (a,b,c,d) of the Hodge monodromy of the diagonal sector
 * on the basis (T, S2, Sm2, S0). */
struct SectorVector {
    int genus = 0;
    IntPoly e0, e1, e2, e3;
    IntPoly a, b, c, d;

    MonodromyRep4 rep4() const { return {a, b, c, d}; }

    bool operator==(const SectorVector&) const = default;
};

/* Structural invariants of genus-g sector data:
 *   - g >= 1: e0..e3 and a are monic of degree 6g-3;
 *   - total mass: e0+e1+(q^2-1)(e2+e3)+(q^3-2q^2-q)a-(q^2+q)(b+c)-2qd
 *     equals (q^3-q)^{2g}.
 * Returns an empty string when all hold; otherwise a description of the
 * first violated invariant. */
std::string validate(const SectorVector& v);

/* Left side of the total-mass identity, as a polynomial. */
IntPoly total_mass(const SectorVector& v);

}  // namespace charvar

#endif
