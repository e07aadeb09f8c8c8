#include "charvar/recursion.hpp"

#include <stdexcept>
#include <string>

namespace charvar {

namespace {

std::array<std::array<const char*, 8>, 8> matrix_text() {
    /* Rows give (e0,e1,e2,e3,a,b,c,d) at genus g from the same data at
     * genus g-1. Two printed entries are corrected (row 6 col 3, row 6
     * col 8); both corrections are forced by the constructor checks. */
    return {{
        {"q^4+4q^3-q^2-4q", "q^3-q", "q^5-2q^4-4q^3+2q^2+3q", "q^5+3q^4-q^3-3q^2",
         "q^6-2q^5-4q^4+3q^2+2q", "-q^5-4q^4+4q^2+q", "2q^5-7q^4-3q^3+7q^2+q",
         "-5q^4-q^3+5q^2+q"},
        {"q^3-q", "q^4+4q^3-q^2-4q", "q^5+3q^4-q^3-3q^2", "q^5-2q^4-4q^3+2q^2+3q",
         "q^6-2q^5-4q^4+3q^2+2q", "2q^5-7q^4-3q^3+7q^2+q", "-q^5-4q^4+4q^2+q",
         "-5q^4-q^3+5q^2+q"},
        {"q^3-2q^2-3q", "q^3+3q^2", "q^5+q^4+3q^2+3q", "q^5-3q^3-6q^2",
         "q^6-2q^5-3q^4+q^3+3q^2", "-q^5+2q^4-4q^3+3q^2", "-q^5-q^4-4q^3+6q^2",
         "-2q^4-q^3+3q^2"},
        {"q^3+3q^2", "q^3-2q^2-3q", "q^5-3q^3-6q^2", "q^5+q^4+3q^2+3q",
         "q^6-2q^5-3q^4+q^3+3q^2", "-q^5-q^4-4q^3+6q^2", "-q^5+2q^4-4q^3+3q^2",
         "-2q^4-q^3+3q^2"},
        {"q^3", "q^3", "q^5-3q^3", "q^5-3q^3",
         "q^6-2q^5-2q^4+4q^3+q^2", "-q^5-q^4+2q^3", "-q^5-q^4+2q^3", "-2q^4"},
        {"-3q", "3q^2", "3q^3+3q", "-6q^2",
         "-3q^3+3q^2", "4q^4-6q^3+4q^2", "-8q^3+6q^2", "-3q^3+3q^2"},
        {"3q^2", "-3q", "-6q^2", "3q^3+3q",
         "-3q^3+3q^2", "-8q^3+6q^2", "4q^4-6q^3+4q^2", "-3q^3+3q^2"},
        {"-1", "-1", "2q^2", "2q^2",
         "-4q^2+2", "-2q^2+q+1", "-2q^2+q+1", "q^4-2q^2+2q+1"},
    }};
}

SectorVector make_vector(int genus, std::array<const char*, 8> texts) {
    SectorVector v;
    v.genus = genus;
    IntPoly* slots[] = {&v.e0, &v.e1, &v.e2, &v.e3, &v.a, &v.b, &v.c, &v.d};
    for (int i = 0; i < 8; ++i) *slots[i] = IntPoly::parse(texts[i]);
    return v;
}

std::array<IntPoly, 8> components(const SectorVector& v) {
    return {v.e0, v.e1, v.e2, v.e3, v.a, v.b, v.c, v.d};
}

SectorVector from_components(int genus, std::array<IntPoly, 8> comps) {
    return {genus, std::move(comps[0]), std::move(comps[1]), std::move(comps[2]),
            std::move(comps[3]), std::move(comps[4]), std::move(comps[5]),
            std::move(comps[6]), std::move(comps[7])};
}

/* the mass functional: weights of (e0..e3, a..d) in the total-mass identity */
std::array<IntPoly, 8> mass_weights() {
    const IntPoly q = IntPoly::q();
    const IntPoly q2 = q.pow(2);
    return {IntPoly::one(), IntPoly::one(), q2 - IntPoly(1), q2 - IntPoly(1),
            q.pow(3) - IntPoly(2) * q2 - q, -(q2 + q), -(q2 + q), -(IntPoly(2) * q)};
}

}  // namespace

SectorVector base_vector(int g) {
    switch (g) {
        case 0:
            return make_vector(0, {"1", "0", "0", "0", "0", "0", "0", "0"});
        case 1:
            return make_vector(1, {"q^4+4q^3-q^2-4q", "q^3-q", "q^3-2q^2-3q", "q^3+3q^2",
                                   "q^3", "-3q", "3q^2", "-1"});
        case 2:
            return make_vector(2, {"q^9+q^8+12q^7+2q^6-3q^4-12q^3-q",
                                   "q^9-3q^7-30q^6+30q^4+3q^3-q",
                                   "q^9-3q^7-4q^6-39q^5-4q^4-15q^3",
                                   "q^9-3q^7+15q^6+6q^5+45q^4",
                                   "q^9-3q^7+6q^5", "-45q^5-15q^3", "15q^6+45q^4",
                                   "-6q^4+3q^2-1"});
        default:
            throw std::invalid_argument("base_vector: only g = 0, 1, 2 are tabulated");
    }
}

SectorVector TransferMatrix::apply(const SectorVector& v) const {
    const auto in = components(v);
    std::array<IntPoly, 8> out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) out[i] += entries_[i][j] * in[j];
    return from_components(v.genus + 1, std::move(out));
}

TransferMatrix::TransferMatrix() {
    const auto text = matrix_text();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) entries_[i][j] = IntPoly::parse(text[i][j]);

    /* column check: the mass functional scales by (q^3-q)^2 under M */
    const auto w = mass_weights();
    const IntPoly scale = (IntPoly::q().pow(3) - IntPoly::q()).pow(2);
    for (int j = 0; j < 8; ++j) {
        IntPoly lhs;
        for (int i = 0; i < 8; ++i) lhs += w[i] * entries_[i][j];
        if (lhs != scale * w[j])
            throw std::logic_error("transfer matrix: mass functional broken in column " +
                                   std::to_string(j + 1));
    }

    /* row checks against independently tabulated data */
    const SectorVector targets[] = {base_vector(1), base_vector(2), closed_form_vector(3)};
    SectorVector v = base_vector(0);
    for (const SectorVector& want : targets) {
        v = apply(v);
        const auto got = components(v);
        const auto expected = components(want);
        for (int i = 0; i < 8; ++i)
            if (got[i] != expected[i])
                throw std::logic_error("transfer matrix: row " + std::to_string(i + 1) +
                                       " disagrees with genus-" + std::to_string(v.genus) +
                                       " data");
    }
}

const TransferMatrix& transfer_matrix() {
    static const TransferMatrix m;
    return m;
}

std::array<IntPoly, 8> TransferMatrix::eigenvalues() {
    const IntPoly q = IntPoly::q();
    const IntPoly qm = q.pow(2) - q, qp = q.pow(2) + q;
    const IntPoly four(4);
    return {qm.pow(2),        qp.pow(2),
            four * qm.pow(2), four * qp.pow(2),
            (q.pow(2) - IntPoly(1)).pow(2), (q.pow(3) - q).pow(2),
            qm.pow(2),        qp.pow(2)};
}

SectorVector sector_vector(int g) {
    if (g < 0) throw std::invalid_argument("sector_vector: genus must be >= 0");
    SectorVector v = base_vector(0);
    const TransferMatrix& m = transfer_matrix();
    for (int i = 0; i < g; ++i) v = m.apply(v);
    return v;
}

std::vector<SectorVector> sector_vectors_up_to(int gmax) {
    if (gmax < 0) throw std::invalid_argument("sector_vectors_up_to: genus must be >= 0");
    std::vector<SectorVector> out;
    out.reserve(static_cast<size_t>(gmax) + 1);
    out.push_back(base_vector(0));
    const TransferMatrix& m = transfer_matrix();
    for (int g = 1; g <= gmax; ++g) out.push_back(m.apply(out.back()));
    return out;
}

SectorVector closed_form_vector(int g) {
    if (g < 1) throw std::invalid_argument("closed_form_vector: genus must be >= 1");
    const IntPoly q = IntPoly::q();
    const IntPoly one = IntPoly::one();
    const IntPoly q3q = q.pow(3) - q;      // q^3-q
    const IntPoly q2m = q.pow(2) - q;      // q^2-q
    const IntPoly q2p = q.pow(2) + q;      // q^2+q
    const IntPoly q21 = q.pow(2) - one;    // q^2-1
    const unsigned long gg = static_cast<unsigned long>(g);

    const IntPoly A = q3q.pow(2 * gg - 2);
    const IntPoly B = q21.pow(2 * gg - 2);
    const IntPoly Cm = q2m.pow(2 * gg - 2);
    const IntPoly A1 = q3q.pow(2 * gg - 1);
    const IntPoly B1 = q21.pow(2 * gg - 1);
    const IntPoly Cm1 = q2m.pow(2 * gg - 1);
    const IntPoly Cp1 = q2p.pow(2 * gg - 1);
    const IntPoly qg2 = q.pow(2 * gg - 2);   // q^{2g-2}
    const IntPoly qg1 = q.pow(2 * gg - 1);   // q^{2g-1}
    const IntPoly sp = (q + one).pow(2 * gg - 2) + (q - one).pow(2 * gg - 2);
    const IntPoly sp1 = (q + one).pow(2 * gg - 1) + (q - one).pow(2 * gg - 1);
    const IntPoly dm1 = (q + one).pow(2 * gg - 1) - (q - one).pow(2 * gg - 1);

    mpz_class p2g, p2g1;  // 2^{2g}, 2^{2g-1}
    mpz_ui_pow_ui(p2g.get_mpz_t(), 2, 2 * gg);
    mpz_ui_pow_ui(p2g1.get_mpz_t(), 2, 2 * gg - 1);
    const IntPoly two_2g(p2g), two_2g1(p2g1);
    const mpz_class two = 2;

    /* halved terms: double the whole expression, then divide exactly by 2 */
    auto halved = [&](const IntPoly& doubled_part, const IntPoly& plain_part) {
        return (doubled_part + IntPoly(2) * plain_part).divide_scalar_exact(two);
    };

    SectorVector v;
    v.genus = g;
    v.e0 = q3q * halved(qg2 * (q + two_2g - one) * sp, A + B - Cm);
    v.e1 = q3q * (A + B - two_2g1 * q2p.pow(2 * gg - 2) + (two_2g1 - one) * Cm);
    v.e2 = halved(qg1 * (q - one) * ((q - one).pow(2 * gg - 1) - (q + one).pow(2 * gg - 1)),
                  A1 + (two_2g1 - one) * Cm1 - two_2g1 * Cp1);
    v.e3 = A1 + (two_2g1 - one) * Cm1 + two_2g1 * Cp1;
    v.a = halved(qg1 * dm1, A1);
    v.b = halved(qg1 * dm1, two_2g1 * Cm1 - two_2g1 * Cp1);
    v.c = halved(-(qg1 * sp1), two_2g1 * Cm1 + two_2g1 * Cp1);
    v.d = halved(-(qg1 * sp1), B1);
    return v;
}

}  // namespace charvar
