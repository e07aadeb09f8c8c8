#ifndef CHARVAR_REPRING_HPP
#define CHARVAR_REPRING_HPP

#include <string>
#include <string_view>

#include "charvar/intpoly.hpp"

namespace charvar {

/* Element of R(Z2 x Z2)[q], the representation ring of the Klein four-group
 * with polynomial coefficients. The basis order is fixed globally as
 * (T, S2, Sm2, S0) with multiplication table
 *   S2*S2 = Sm2*Sm2 = S0*S0 = T,  S2*Sm2 = S0,  S2*S0 = Sm2,  Sm2*S0 = S2.
 * These are the Hodge monodromy representations of fibrations over the
 * twice-punctured line C - {+2,-2}. */
struct MonodromyRep4 {
    IntPoly a;  // coefficient of T
    IntPoly b;  // coefficient of S2
    IntPoly c;  // coefficient of Sm2
    IntPoly d;  // coefficient of S0

    bool operator==(const MonodromyRep4&) const = default;

    std::string to_json() const;
    static MonodromyRep4 from_json(std::string_view json_text);
};

/* Element of R(Z2)[q], with basis (T, N), N*N = T. Hodge monodromy over
 * the thrice-punctured line C - {0,+1,-1}. */
struct MonodromyRep2 {
    IntPoly t;  // coefficient of T
    IntPoly n;  // coefficient of N

    bool operator==(const MonodromyRep2&) const = default;

    std::string to_json() const;
    static MonodromyRep2 from_json(std::string_view json_text);
};

MonodromyRep4 operator+(const MonodromyRep4& r, const MonodromyRep4& s);
MonodromyRep4 operator-(const MonodromyRep4& r, const MonodromyRep4& s);
MonodromyRep2 operator+(const MonodromyRep2& r, const MonodromyRep2& s);
MonodromyRep2 operator-(const MonodromyRep2& r, const MonodromyRep2& s);
/* scalar (polynomial) action */
MonodromyRep4 operator*(const IntPoly& s, const MonodromyRep4& r);
MonodromyRep2 operator*(const IntPoly& s, const MonodromyRep2& r);

/* Product in R(Z2 x Z2)[q]. Commutative, associative, unit T. */
MonodromyRep4 tensor(const MonodromyRep4& r, const MonodromyRep4& s);
/* Product in R(Z2)[q]: (t,n)(t',n') = (tt'+nn', tn'+nt'). */
MonodromyRep2 tensor(const MonodromyRep2& r, const MonodromyRep2& s);

/* Pullback of the base involution lambda -> -lambda: swaps the S2 and Sm2
 * coefficients (positionally, to avoid sign/label drift). An involutive
 * ring automorphism. */
MonodromyRep4 twist(const MonodromyRep4& r);

/* Restriction along the double cover C-{0,+1,-1} -> C-{+2,-2}:
 * aT + bS2 + cSm2 + dS0  |->  (a+d)T + (b+c)N. A ring homomorphism. */
MonodromyRep2 push_to_rep2(const MonodromyRep4& r);

/* E-polynomial of the total space of a fibration over C-{+2,-2} (two
 * punctures) with Hodge monodromy r:  (q-2)a - (b+c+d). */
IntPoly epoly(const MonodromyRep4& r);

/* Same over C-{0,+1,-1} (three punctures):  (q-3)t - 2n. */
IntPoly epoly(const MonodromyRep2& r);

/* E-polynomial of the fiber itself: a+b+c+d. */
IntPoly fiber_epoly(const MonodromyRep4& r);

/* E-polynomial of the stratum W4 = (PGL(2,C)/D x W4bar)/Z2 built from
 * Hodge monodromy r:  (q^3-2q^2-q)a - (q^2+q)(b+c) - 2qd. */
IntPoly w4_epoly(const MonodromyRep4& r);

}  // namespace charvar

#endif
