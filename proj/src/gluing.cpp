#include "charvar/gluing.hpp"

#include <stdexcept>

namespace charvar {

GlueCoefficients glue_coefficients(const SectorVector& left, const SectorVector& right) {
    const MonodromyRep4 rl = left.rep4();
    const MonodromyRep4 rr = right.rep4();
    return {tensor(rl, rr), tensor(rl, twist(rr))};
}

namespace {

struct GlueContext {
    const SectorVector& L;
    const SectorVector& R;
    GlueCoefficients co;
    IntPoly e4l, e4r;  // e(X4bar/Z2) for each side

    GlueContext(const SectorVector& left, const SectorVector& right)
        : L(left), R(right), co(glue_coefficients(left, right)),
          e4l(epoly(left.rep4())), e4r(epoly(right.rep4())) {
        if (left.genus < 1 || right.genus < 1)
            throw std::invalid_argument("glue: both genera must be >= 1");
    }

    IntPoly sector(int i) const {
        const IntPoly q = IntPoly::q();
        const IntPoly q2m1 = q.pow(2) - IntPoly(1);
        const IntPoly two(2);
        switch (i) {
            case 0:
                return L.e0 * R.e0 + L.e1 * R.e1 + q2m1 * (L.e2 * R.e2 + L.e3 * R.e3) +
                       w4_epoly(co.plain);
            case 1:
                return L.e0 * R.e1 + L.e1 * R.e0 + q2m1 * (L.e2 * R.e3 + L.e3 * R.e2) +
                       w4_epoly(co.twisted);
            case 2: {
                /* e(Z5bar) = epoly of the pushed rep2; e(Z5bar/Z2) = epoly of
                 * the rep4 itself */
                const IntPoly jordan = q * (L.e2 + L.e3 + e4l) * (R.e2 + R.e3 + e4r);
                const IntPoly z5corr = q * (epoly(push_to_rep2(co.plain)) - epoly(co.plain));
                return L.e2 * R.e0 + L.e0 * R.e2 - two * L.e2 * R.e2 + L.e3 * R.e1 +
                       L.e1 * R.e3 - two * L.e3 * R.e3 + jordan + z5corr;
            }
            case 3: {
                const IntPoly jordan = q * (L.e2 + L.e3 + e4l) * (R.e2 + R.e3 + e4r);
                const IntPoly z5corr = q * (epoly(push_to_rep2(co.twisted)) - epoly(co.twisted));
                return L.e2 * R.e1 + L.e1 * R.e2 + L.e0 * R.e3 + L.e3 * R.e0 -
                       two * L.e3 * R.e2 - two * L.e2 * R.e3 + jordan + z5corr;
            }
            default:
                throw std::invalid_argument("glue_sector: sector index must be 0..3");
        }
    }

    MonodromyRep2 r4() const {
        const IntPoly q = IntPoly::q();
        const IntPoly qm1 = q - IntPoly(1);
        const IntPoly two(2);
        const MonodromyRep2 pl = push_to_rep2(L.rep4());
        const MonodromyRep2 pr = push_to_rep2(R.rep4());
        const IntPoly fl = fiber_epoly(L.rep4());
        const IntPoly fr = fiber_epoly(R.rep4());
        const IntPoly wl = L.e0 + L.e1 + qm1 * (L.e2 + L.e3);
        const IntPoly wr = R.e0 + R.e1 + qm1 * (R.e2 + R.e3);
        /* R(Z6bar): the (q-1)-spread diagonal family minus the four
         * special fibers, componentwise on (T,N) */
        const MonodromyRep2 z6{qm1 * pl.t * pr.t - two * (fl * pr.t + fr * pl.t),
                               qm1 * pl.n * pr.n - two * (fl * pr.n + fr * pl.n)};
        MonodromyRep2 out = wl * pr + wr * pl + q * z6;
        out.t += qm1 * (L.e2 + L.e3 + e4l) * (R.e2 + R.e3 + e4r);
        return out;
    }
};

}  // namespace

GluedData glue(const SectorVector& left, const SectorVector& right) {
    const GlueContext ctx(left, right);
    return {left.genus + right.genus, ctx.sector(0), ctx.sector(1),
            ctx.sector(2), ctx.sector(3), ctx.r4()};
}

IntPoly glue_sector(int sector, const SectorVector& left, const SectorVector& right) {
    return GlueContext(left, right).sector(sector);
}

MonodromyRep2 glue_r4(const SectorVector& left, const SectorVector& right) {
    return GlueContext(left, right).r4();
}

}  // namespace charvar
