#ifndef CHARVAR_MODULI_HPP
#define CHARVAR_MODULI_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charvar/recursion.hpp"
#include "charvar/repring.hpp"

namespace charvar {

/* Boundary holonomy type of the once-punctured surface. Jplus is the
 * unipotent Jordan block [[1,1],[0,1]], Jminus its negative counterpart
 * [[-1,1],[0,-1]], XiLambda the diagonal diag(lambda, 1/lambda) with
 * lambda != 0, +1, -1 (the E-polynomial is lambda-independent, so lambda
 * is not a parameter here). */
enum class Holonomy { Id, MinusId, JPlus, JMinus, XiLambda };

constexpr const char* kHolonomyTags[] = {"id", "minus-id", "jplus", "jminus", "xi"};

std::string_view holonomy_tag(Holonomy c);
std::optional<Holonomy> holonomy_from_tag(std::string_view tag);

/* E-polynomial of the character variety with boundary holonomy c at genus
 * g >= 1, by the stabilizer-division route:
 *   MinusId: e1/(q^3-q),  JPlus: e2/q,  JMinus: e3/q,
 *   XiLambda: (a+b+c+d)/(q-1),
 *   Id: irreducible/reducible assembly (see reducible_breakdown).
 * All divisions are exact; NonExactDivision propagates if not. */
IntPoly moduli_epoly(Holonomy c, int g);
/* Same, from already-computed sector data (avoids re-running the recursion). */
IntPoly moduli_epoly(Holonomy c, const SectorVector& v);

/* Same quantity from the closed formulas, expanded independently of the
 * recursion; used as a cross-check of moduli_epoly. */
IntPoly moduli_epoly_closed_form(Holonomy c, int g);

/* Strata of the reducible locus for trivial boundary holonomy, and the
 * assembled reducible/irreducible split of e(M_Id). */
struct ReducibleBreakdown {
    IntPoly r1, r2, r3, r4;  // strata of the reducible representation locus
    IntPoly total_r;         // r1+r2+r3+r4
    IntPoly red;             // e of the reducible part of the quotient
    IntPoly irr;             // (e0 - total_r)/(q^3-q), exactly
};

ReducibleBreakdown reducible_breakdown(int g);
ReducibleBreakdown reducible_breakdown(const SectorVector& v);

/* The (T,N) Hodge monodromy of the parabolic character variety as lambda
 * moves, computed by exact division of the pushed sector data by the
 * stabilizer E-polynomial q-1. */
MonodromyRep2 parabolic_hodge_monodromy(int g);
MonodromyRep2 parabolic_hodge_monodromy(const SectorVector& v);
/* Closed formulas for the same, expanded independently. */
MonodromyRep2 parabolic_hodge_monodromy_closed_form(int g);

/* One verified identity at one genus. `residual` is zero iff the check
 * passed; for non-subtraction checks it is the natural difference (e.g.
 * actual minus expected trailing monomial). */
struct IdentityCheck {
    std::string name;
    int genus = 0;
    bool passed = false;
    IntPoly residual;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_passed() const;
    std::vector<const IdentityCheck*> failures() const;
    std::string to_json() const;
};

/* Runs, for 1 <= g <= g_max:
 *   - the Hausel relation e(M_{J-}) + (q+1) e(M_{-Id}) = e(M_xi);
 *   - the total-mass identity against (q^3-q)^{2g};
 *   - palindromicity of e(M_{-Id}) at degree 6g-6 and of e(M_xi) and both
 *     parts of the parabolic monodromy at degree 6g-4;
 *   - division route == closed form, all five holonomies, plus the
 *     parabolic monodromy routes;
 * and, for 2 <= g <= g_max (their domain of validity):
 *   - Euler characteristics at q=1:
 *     (2^{4g-3}-3*2^{2g-2}, -2^{4g-3}, -2^{4g-2}, 2^{4g-2}, 0);
 *   - degrees 6g-6 (Id, -Id) / 6g-4 (J+, J-, xi) with leading coefficient 1;
 *   - trailing monomials: constant 1 for Id, -Id, xi;
 *     (1-2^{2g}) q^{2g-2} for J+;  (2g-1)(2^{2g}-1) q^{2g-1} for J-.
 */
IdentityReport check_identities(int g_max);

}  // namespace charvar

#endif
