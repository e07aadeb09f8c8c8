#ifndef CHARVAR_RECURSION_HPP
#define CHARVAR_RECURSION_HPP

#include <array>
#include <vector>

#include "charvar/sector.hpp"

namespace charvar {

/* The 8x8 genus-step matrix over Z[q]: v_g = M v_{g-1} in the ordering
 * (e0, e1, e2, e3, a, b, c, d).
 *
 * The printed source for the entries contains transcription slips; the
 * constructor therefore cross-validates every row against independently
 * known data and throws std::logic_error naming the offending row or
 * column if anything is off:
 *   - M v0 == v1, M v1 == v2, M v2 == closed_form_vector(3)   (per row)
 *   - the mass functional L satisfies L(M e_j) == (q^3-q)^2 L(e_j) for
 *     each standard basis vector e_j                           (per column)
 */
class TransferMatrix {
  public:
    TransferMatrix();

    const IntPoly& entry(int row, int col) const { return entries_.at(row).at(col); }

    SectorVector apply(const SectorVector& v) const;

    /* Diagonal of M = Q D Q^{-1}, exposed for documentation and the
     * annihilation property test; nothing here depends on Q. */
    static std::array<IntPoly, 8> eigenvalues();

  private:
    std::array<std::array<IntPoly, 8>, 8> entries_;
};

/* Shared validated instance. */
const TransferMatrix& transfer_matrix();

/* Literal base data for g = 0, 1, 2. */
SectorVector base_vector(int g);

/* v_g = M^g v0 by iterated matrix-vector products (exact arithmetic). */
SectorVector sector_vector(int g);

/* All of v_0 .. v_gmax in one sweep (one matvec per step). */
std::vector<SectorVector> sector_vectors_up_to(int gmax);

/* The closed formulas for the eight components, g >= 1. Halved terms are
 * computed as exact division of the doubled expression by 2 and throw
 * NonExactDivision if a transcription bug ever makes them non-integral. */
SectorVector closed_form_vector(int g);

}  // namespace charvar

#endif
