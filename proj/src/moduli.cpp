#include "charvar/moduli.hpp"

#include <stdexcept>

#include "json.hpp"

namespace charvar {

namespace {

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

/* (x + 2y)/2, exactly */
IntPoly halved(const IntPoly& doubled_part, const IntPoly& plain_part) {
    return (doubled_part + IntPoly(2) * plain_part).divide_scalar_exact(2);
}

struct ClosedPieces {
    IntPoly q, one;
    IntPoly q3q, q2m, q2p, q21;
    IntPoly A, B, Cm, Cp;      // (..)^{2g-2}
    IntPoly qg2, qg1;          // q^{2g-2}, q^{2g-1}
    IntPoly sp2, sp1, dm1;     // (q+1)^e +- (q-1)^e for e = 2g-2, 2g-1
    IntPoly t2g, t2g1;         // 2^{2g}, 2^{2g-1} as constants

    explicit ClosedPieces(int g) {
        const unsigned long gg = static_cast<unsigned long>(g);
        q = IntPoly::q();
        one = IntPoly::one();
        q3q = q.pow(3) - q;
        q2m = q.pow(2) - q;
        q2p = q.pow(2) + q;
        q21 = q.pow(2) - one;
        A = q3q.pow(2 * gg - 2);
        B = q21.pow(2 * gg - 2);
        Cm = q2m.pow(2 * gg - 2);
        Cp = q2p.pow(2 * gg - 2);
        qg2 = q.pow(2 * gg - 2);
        qg1 = q.pow(2 * gg - 1);
        sp2 = (q + one).pow(2 * gg - 2) + (q - one).pow(2 * gg - 2);
        sp1 = (q + one).pow(2 * gg - 1) + (q - one).pow(2 * gg - 1);
        dm1 = (q + one).pow(2 * gg - 1) - (q - one).pow(2 * gg - 1);
        t2g = IntPoly(pow2(2 * gg));
        t2g1 = IntPoly(pow2(2 * gg - 1));
    }
};

}  // namespace

std::string_view holonomy_tag(Holonomy c) { return kHolonomyTags[static_cast<int>(c)]; }

std::optional<Holonomy> holonomy_from_tag(std::string_view tag) {
    for (int i = 0; i < 5; ++i)
        if (tag == kHolonomyTags[i]) return static_cast<Holonomy>(i);
    return std::nullopt;
}

ReducibleBreakdown reducible_breakdown(const SectorVector& v) {
    if (v.genus < 1) throw std::invalid_argument("reducible_breakdown: genus must be >= 1");
    const unsigned long gg = static_cast<unsigned long>(v.genus);
    const IntPoly q = IntPoly::q();
    const IntPoly one = IntPoly::one();
    const IntPoly qp1 = q + one, qm1 = q - one;
    const IntPoly t2g(pow2(2 * gg));

    ReducibleBreakdown out;
    /* common-eigenvector strata */
    out.r1 = halved((q.pow(3) - q) * (qm1.pow(2 * gg - 1) + qp1.pow(2 * gg - 1)), IntPoly())
             - t2g * q.pow(2);
    out.r2 = qp1 * (q.pow(2 * gg - 1) - q) * (qm1.pow(2 * gg) - t2g);
    out.r3 = t2g;
    out.r4 = t2g * (q.pow(2 * gg) - one) * qp1;
    out.total_r = out.r1 + out.r2 + out.r3 + out.r4;
    out.red = halved(qm1.pow(2 * gg) + qp1.pow(2 * gg), IntPoly());
    out.irr = IntPoly::divide_exact(v.e0 - out.total_r, q.pow(3) - q);
    return out;
}

ReducibleBreakdown reducible_breakdown(int g) {
    if (g < 1) throw std::invalid_argument("reducible_breakdown: genus must be >= 1");
    return reducible_breakdown(sector_vector(g));
}

IntPoly moduli_epoly(Holonomy c, const SectorVector& v) {
    if (v.genus < 1) throw std::invalid_argument("moduli_epoly: genus must be >= 1");
    const IntPoly q = IntPoly::q();
    switch (c) {
        case Holonomy::MinusId:
            return IntPoly::divide_exact(v.e1, q.pow(3) - q);
        case Holonomy::JPlus:
            return IntPoly::divide_exact(v.e2, q);
        case Holonomy::JMinus:
            return IntPoly::divide_exact(v.e3, q);
        case Holonomy::XiLambda:
            return IntPoly::divide_exact(v.a + v.b + v.c + v.d, q - IntPoly::one());
        case Holonomy::Id: {
            const ReducibleBreakdown rb = reducible_breakdown(v);
            return rb.irr + rb.red;
        }
    }
    throw std::logic_error("moduli_epoly: unreachable");
}

IntPoly moduli_epoly(Holonomy c, int g) {
    if (g < 1) throw std::invalid_argument("moduli_epoly: genus must be >= 1");
    return moduli_epoly(c, sector_vector(g));
}

IntPoly moduli_epoly_closed_form(Holonomy c, int g) {
    if (g < 1) throw std::invalid_argument("moduli_epoly_closed_form: genus must be >= 1");
    const ClosedPieces p(g);
    switch (c) {
        case Holonomy::Id:
            return p.A + p.B - p.q * p.Cm - p.t2g * p.qg2 +
                   halved(p.qg2 * (p.q + p.t2g - p.one) * p.sp2 + p.q * p.sp1, IntPoly());
        case Holonomy::MinusId:
            return p.A + p.B - p.t2g1 * p.Cp + (p.t2g1 - p.one) * p.Cm;
        case Holonomy::JPlus:
            return p.A * p.q21 + (p.t2g1 - p.one) * (p.q - p.one) * p.Cm -
                   p.t2g1 * (p.q + p.one) * p.Cp +
                   halved(p.qg2 * (p.q - p.one) *
                              ((p.q - p.one).pow(2 * static_cast<unsigned long>(g) - 1) -
                               (p.q + p.one).pow(2 * static_cast<unsigned long>(g) - 1)),
                          IntPoly());
        case Holonomy::JMinus:
            return p.A * p.q21 + (p.t2g1 - p.one) * (p.q - p.one) * p.Cm +
                   p.t2g1 * (p.q + p.one) * p.Cp;
        case Holonomy::XiLambda:
            return p.A * p.q2p + p.B * (p.q + p.one) + (p.t2g - IntPoly(2)) * p.Cm * p.q;
    }
    throw std::logic_error("moduli_epoly_closed_form: unreachable");
}

MonodromyRep2 parabolic_hodge_monodromy(const SectorVector& v) {
    if (v.genus < 1) throw std::invalid_argument("parabolic_hodge_monodromy: genus must be >= 1");
    const IntPoly qm1 = IntPoly::q() - IntPoly::one();
    return {IntPoly::divide_exact(v.a + v.d, qm1), IntPoly::divide_exact(v.b + v.c, qm1)};
}

MonodromyRep2 parabolic_hodge_monodromy(int g) {
    if (g < 1) throw std::invalid_argument("parabolic_hodge_monodromy: genus must be >= 1");
    return parabolic_hodge_monodromy(sector_vector(g));
}

MonodromyRep2 parabolic_hodge_monodromy_closed_form(int g) {
    if (g < 1) throw std::invalid_argument("parabolic_hodge_monodromy_closed_form: genus >= 1");
    const ClosedPieces p(g);
    return {p.A * p.q2p + (p.q + p.one) * p.B - p.q * p.Cm,
            (p.t2g - p.one) * p.q * p.Cm};
}

bool IdentityReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::vector<const IdentityCheck*> IdentityReport::failures() const {
    std::vector<const IdentityCheck*> out;
    for (const auto& c : checks)
        if (!c.passed) out.push_back(&c);
    return out;
}

std::string IdentityReport::to_json() const {
    nlohmann::json j;
    j["all_passed"] = all_passed();
    auto arr = nlohmann::json::array();
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name},
                       {"genus", c.genus},
                       {"passed", c.passed},
                       {"residual", nlohmann::json::parse(c.residual.to_json())}});
    }
    j["checks"] = arr;
    return j.dump();
}

IdentityReport check_identities(int g_max) {
    if (g_max < 1) throw std::invalid_argument("check_identities: g_max must be >= 1");
    IdentityReport report;
    auto add = [&](std::string name, int g, IntPoly residual) {
        report.checks.push_back({std::move(name), g, residual.is_zero(), std::move(residual)});
    };
    auto add_flag = [&](std::string name, int g, bool ok, IntPoly residual) {
        report.checks.push_back({std::move(name), g, ok, std::move(residual)});
    };

    const IntPoly q = IntPoly::q();
    const IntPoly one = IntPoly::one();
    const auto vs = sector_vectors_up_to(g_max);

    for (int g = 1; g <= g_max; ++g) {
        const SectorVector& v = vs[static_cast<size_t>(g)];
        const unsigned long gg = static_cast<unsigned long>(g);

        IntPoly m[5];
        for (int c = 0; c < 5; ++c) m[c] = moduli_epoly(static_cast<Holonomy>(c), v);
        const IntPoly& mId = m[0];
        const IntPoly& mMinus = m[1];
        const IntPoly& mJp = m[2];
        const IntPoly& mJm = m[3];
        const IntPoly& mXi = m[4];

        /* route cross-checks */
        for (int c = 0; c < 5; ++c)
            add(std::string("closed_form_") + std::string(holonomy_tag(static_cast<Holonomy>(c))),
                g, m[c] - moduli_epoly_closed_form(static_cast<Holonomy>(c), g));
        const MonodromyRep2 par = parabolic_hodge_monodromy(v);
        const MonodromyRep2 parc = parabolic_hodge_monodromy_closed_form(g);
        add("parabolic_T_closed_form", g, par.t - parc.t);
        add("parabolic_N_closed_form", g, par.n - parc.n);
        add("parabolic_sum_is_xi", g, par.t + par.n - mXi);

        add("hausel", g, mJm + (q + one) * mMinus - mXi);
        add("total_mass", g, total_mass(v) - (q.pow(3) - q).pow(2 * gg));

        /* palindromicity (residual: p - q^d p(1/q) restricted to [0,d]) */
        auto palin = [&](const std::string& name, const IntPoly& p, int d) {
            IntPoly reversed;
            for (int i = 0; i <= d; ++i)
                if (p.coeff(d - i) != 0) reversed += IntPoly::monomial(i, p.coeff(d - i));
            add_flag(name, g, p.is_palindromic(d), p - reversed);
        };
        palin("palindrome_minus-id", mMinus, 6 * g - 6);
        palin("palindrome_xi", mXi, 6 * g - 4);
        palin("palindrome_parabolic_T", par.t, 6 * g - 4);
        palin("palindrome_parabolic_N", par.n, 6 * g - 4);

        if (g < 2) continue;  // the remaining statements hold for genus >= 2 only

        /* Euler characteristics at q = 1 */
        const mpz_class chi_expected[5] = {pow2(4 * gg - 3) - 3 * pow2(2 * gg - 2),
                                           -pow2(4 * gg - 3), -pow2(4 * gg - 2),
                                           pow2(4 * gg - 2), 0};
        for (int c = 0; c < 5; ++c)
            add(std::string("euler_") + std::string(holonomy_tag(static_cast<Holonomy>(c))), g,
                IntPoly(m[c].eval(1) - chi_expected[c]));

        /* dimension and component count: degree with leading coefficient 1 */
        const int dims[5] = {6 * g - 6, 6 * g - 6, 6 * g - 4, 6 * g - 4, 6 * g - 4};
        for (int c = 0; c < 5; ++c) {
            IntPoly lead = IntPoly::monomial(m[c].degree(), m[c].leading_coeff());
            add(std::string("degree_") + std::string(holonomy_tag(static_cast<Holonomy>(c))), g,
                lead - IntPoly::monomial(dims[c], 1));
        }

        /* trailing monomials */
        auto trailing = [](const IntPoly& p) {
            return IntPoly::monomial(p.trailing_degree(), p.coeff(p.trailing_degree()));
        };
        add("trailing_id", g, trailing(mId) - one);
        add("trailing_minus-id", g, trailing(mMinus) - one);
        add("trailing_xi", g, trailing(mXi) - one);
        add("trailing_jplus", g,
            trailing(mJp) - IntPoly::monomial(2 * g - 2, 1 - pow2(2 * gg)));
        add("trailing_jminus", g,
            trailing(mJm) - IntPoly::monomial(2 * g - 1, (2 * g - 1) * (pow2(2 * gg) - 1)));
    }
    return report;
}

}  // namespace charvar
