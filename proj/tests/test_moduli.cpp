#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "charvar/moduli.hpp"

using namespace charvar;

namespace {
IntPoly P(const char* s) { return IntPoly::parse(s); }
}

TEST_CASE("holonomy tags") {
    CHECK(holonomy_tag(Holonomy::MinusId) == "minus-id");
    CHECK(holonomy_from_tag("xi") == Holonomy::XiLambda);
    CHECK(holonomy_from_tag("jplus") == Holonomy::JPlus);
    CHECK_FALSE(holonomy_from_tag("bogus").has_value());
}

TEST_CASE("headline E-polynomials") {
    CHECK(moduli_epoly(Holonomy::Id, 2) == P("q^6+17q^4+q^2+1"));
    CHECK(moduli_epoly(Holonomy::MinusId, 2) == P("q^6-2q^4-30q^3-2q^2+1"));
    CHECK(moduli_epoly(Holonomy::XiLambda, 1) == P("q^2+4q+1"));
    CHECK(moduli_epoly(Holonomy::JPlus, 1) == P("q^2-2q-3"));
    CHECK(moduli_epoly(Holonomy::JMinus, 1) == P("q^2+3q"));
    CHECK(moduli_epoly(Holonomy::Id, 1) == P("q^2+1"));
}

TEST_CASE("division route equals the closed formulas, g <= 10") {
    for (int g = 1; g <= 10; ++g)
        for (int c = 0; c < 5; ++c) {
            INFO("g=" << g << " holonomy=" << holonomy_tag(static_cast<Holonomy>(c)));
            CHECK(moduli_epoly(static_cast<Holonomy>(c), g) ==
                  moduli_epoly_closed_form(static_cast<Holonomy>(c), g));
        }
}

TEST_CASE("reducible breakdown at genus 1") {
    const ReducibleBreakdown rb = reducible_breakdown(1);
    CHECK(rb.r3 == P("4"));
    CHECK(rb.red == P("q^2+1"));
    CHECK(rb.r4 == IntPoly(4) * P("q^2-1") * P("q+1"));
    /* at genus 1 every representation is reducible */
    CHECK(rb.irr.is_zero());
    CHECK(rb.irr + rb.red == moduli_epoly(Holonomy::Id, 1));
}

TEST_CASE("reducible breakdown assembles e(M_Id)") {
    for (int g = 1; g <= 8; ++g) {
        const ReducibleBreakdown rb = reducible_breakdown(g);
        CHECK(rb.total_r == rb.r1 + rb.r2 + rb.r3 + rb.r4);
        CHECK(rb.irr + rb.red == moduli_epoly(Holonomy::Id, g));
    }
}

TEST_CASE("parabolic Hodge monodromy") {
    const MonodromyRep2 g1 = parabolic_hodge_monodromy(1);
    CHECK(g1.t == P("q^2+q+1"));
    CHECK(g1.n == P("3q"));
    CHECK(parabolic_hodge_monodromy(2).n == P("15q^5-30q^4+15q^3"));
    for (int g = 1; g <= 8; ++g) {
        const MonodromyRep2 par = parabolic_hodge_monodromy(g);
        CHECK(par == parabolic_hodge_monodromy_closed_form(g));
        CHECK(par.t + par.n == moduli_epoly(Holonomy::XiLambda, g));
    }
}

TEST_CASE("palindromicity and the negative control at genus 2") {
    CHECK(moduli_epoly(Holonomy::MinusId, 2).is_palindromic(6));
    CHECK(moduli_epoly(Holonomy::XiLambda, 2).is_palindromic(8));
    CHECK_FALSE(moduli_epoly(Holonomy::JPlus, 2).is_palindromic(8));
    CHECK_FALSE(moduli_epoly(Holonomy::JMinus, 2).is_palindromic(8));
}

TEST_CASE("trailing coefficients at genus 2") {
    /* lowest monomials: (1-2^{2g}) q^{2g-2} and (2g-1)(2^{2g}-1) q^{2g-1} */
    const IntPoly jp = moduli_epoly(Holonomy::JPlus, 2);
    CHECK(jp.trailing_degree() == 2);
    CHECK(jp.coeff(2) == -15);
    const IntPoly jm = moduli_epoly(Holonomy::JMinus, 2);
    CHECK(jm.trailing_degree() == 3);
    CHECK(jm.coeff(3) == 45);
}

TEST_CASE("identity suite passes through genus 8") {
    const IdentityReport report = check_identities(8);
    for (const auto& c : report.checks) {
        INFO(c.name << " at g=" << c.genus << ", residual " << c.residual.str());
        CHECK(c.passed);
    }
    CHECK(report.all_passed());
    CHECK(report.failures().empty());
}

TEST_CASE("identity report serializes") {
    const IdentityReport report = check_identities(2);
    const std::string json = report.to_json();
    CHECK(json.find("\"all_passed\":true") != std::string::npos);
    CHECK(json.find("hausel") != std::string::npos);
}

TEST_CASE("euler characteristics at small genus") {
    CHECK(moduli_epoly(Holonomy::Id, 2).eval(1) == 20);
    CHECK(moduli_epoly(Holonomy::MinusId, 2).eval(1) == -32);
    CHECK(moduli_epoly(Holonomy::JPlus, 2).eval(1) == -64);
    CHECK(moduli_epoly(Holonomy::JMinus, 2).eval(1) == 64);
    CHECK(moduli_epoly(Holonomy::XiLambda, 2).eval(1) == 0);
    CHECK(moduli_epoly(Holonomy::XiLambda, 4).eval(1) == 0);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS((void)moduli_epoly(Holonomy::Id, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)reducible_breakdown(0), std::invalid_argument);
    CHECK_THROWS_AS((void)check_identities(0), std::invalid_argument);
}
