#include "charvar/sector.hpp"

#include <string>

namespace charvar {

IntPoly total_mass(const SectorVector& v) {
    const IntPoly q = IntPoly::q();
    const IntPoly q2 = q.pow(2), q3 = q.pow(3);
    return v.e0 + v.e1 + (q2 - IntPoly(1)) * (v.e2 + v.e3) +
           (q3 - IntPoly(2) * q2 - q) * v.a - (q2 + q) * (v.b + v.c) - IntPoly(2) * q * v.d;
}

std::string validate(const SectorVector& v) {
    if (v.genus < 0) return "genus must be >= 0";
    if (v.genus >= 1) {
        const int want = 6 * v.genus - 3;
        const IntPoly* polys[] = {&v.e0, &v.e1, &v.e2, &v.e3, &v.a};
        const char* names[] = {"e0", "e1", "e2", "e3", "a"};
        for (int i = 0; i < 5; ++i) {
            if (polys[i]->degree() != want)
                return std::string(names[i]) + " has degree " + std::to_string(polys[i]->degree()) +
                       ", expected " + std::to_string(want);
            if (polys[i]->leading_coeff() != 1)
                return std::string(names[i]) + " is not monic";
        }
    }
    const IntPoly q = IntPoly::q();
    const IntPoly want = (q.pow(3) - q).pow(static_cast<unsigned long>(2 * v.genus));
    if (total_mass(v) != want)
        return "total-mass identity fails: residual " + (total_mass(v) - want).str();
    return {};
}

}  // namespace charvar
