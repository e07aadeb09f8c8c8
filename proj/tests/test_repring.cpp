#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "charvar/repring.hpp"

using namespace charvar;

namespace {

IntPoly P(const char* s) { return IntPoly::parse(s); }

const MonodromyRep4 kT{IntPoly::one(), {}, {}, {}};
const MonodromyRep4 kS2{{}, IntPoly::one(), {}, {}};
const MonodromyRep4 kSm2{{}, {}, IntPoly::one(), {}};
const MonodromyRep4 kS0{{}, {}, {}, IntPoly::one()};

/* genus-1 Hodge monodromy of the diagonal sector */
const MonodromyRep4 kR1{P("q^3"), P("-3q"), P("3q^2"), P("-1")};

MonodromyRep4 random_rep(std::mt19937& rng) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, 3);
    auto poly = [&] {
        IntPoly p;
        const int d = deg(rng);
        for (int e = 0; e <= d; ++e) p += IntPoly::monomial(e, coeff(rng));
        return p;
    };
    return {poly(), poly(), poly(), poly()};
}

}  // namespace

TEST_CASE("multiplication table of the Klein four-group") {
    CHECK(tensor(kS2, kSm2) == kS0);
    CHECK(tensor(kS2, kS2) == kT);
    CHECK(tensor(kSm2, kSm2) == kT);
    CHECK(tensor(kS0, kS0) == kT);
    CHECK(tensor(kS2, kS0) == kSm2);
    CHECK(tensor(kSm2, kS0) == kS2);
}

TEST_CASE("tensor examples") {
    CHECK(tensor(kT, kR1) == kR1);
    const MonodromyRep4 sq = tensor(kR1, kR1);
    CHECK(sq.a == P("q^6+9q^4+9q^2+1"));
    CHECK(sq.b == P("-6q^4-6q^2"));
    CHECK(sq.c == P("6q^5+6q"));
    CHECK(sq.d == P("-20q^3"));
}

TEST_CASE("tensor is commutative and associative with unit T") {
    std::mt19937 rng(314159);
    for (int it = 0; it < 150; ++it) {
        const MonodromyRep4 r = random_rep(rng), s = random_rep(rng), u = random_rep(rng);
        CHECK(tensor(r, s) == tensor(s, r));
        CHECK(tensor(tensor(r, s), u) == tensor(r, tensor(s, u)));
        CHECK(tensor(kT, r) == r);
    }
}

TEST_CASE("twist") {
    const MonodromyRep4 tw = twist(kR1);
    CHECK(tw.a == P("q^3"));
    CHECK(tw.b == P("3q^2"));
    CHECK(tw.c == P("-3q"));
    CHECK(tw.d == P("-1"));
    CHECK(twist(tw) == kR1);
    CHECK(twist(kT) == kT);
}

TEST_CASE("twist is a ring automorphism") {
    std::mt19937 rng(2718);
    for (int it = 0; it < 150; ++it) {
        const MonodromyRep4 r = random_rep(rng), s = random_rep(rng);
        CHECK(twist(tensor(r, s)) == tensor(twist(r), twist(s)));
    }
}

TEST_CASE("push to the double cover") {
    const MonodromyRep2 pushed = push_to_rep2(kR1);
    CHECK(pushed.t == P("q^3-1"));
    CHECK(pushed.n == P("3q^2-3q"));
    CHECK(push_to_rep2(kT) == MonodromyRep2{IntPoly::one(), {}});
    CHECK(push_to_rep2(kS0) == MonodromyRep2{IntPoly::one(), {}});
}

TEST_CASE("push is a ring homomorphism") {
    std::mt19937 rng(1618);
    for (int it = 0; it < 150; ++it) {
        const MonodromyRep4 r = random_rep(rng), s = random_rep(rng);
        CHECK(push_to_rep2(tensor(r, s)) == tensor(push_to_rep2(r), push_to_rep2(s)));
    }
}

TEST_CASE("E-polynomial over the twice-punctured line") {
    CHECK(epoly(kT) == P("q-2"));
    CHECK(epoly(kS2) == P("-1"));
    CHECK(epoly(kR1) == P("q^4-2q^3-3q^2+3q+1"));
}

TEST_CASE("E-polynomial over the thrice-punctured line") {
    CHECK(epoly(MonodromyRep2{IntPoly::one(), {}}) == P("q-3"));
    CHECK(epoly(MonodromyRep2{{}, IntPoly::one()}) == P("-2"));
    CHECK(epoly(MonodromyRep2{P("q^3-1"), P("3q^2-3q")}) == P("q^4-3q^3-6q^2+5q+3"));
}

TEST_CASE("pushforward consistency") {
    /* e over the triple-punctured base of the pushed rep must be
     * (q-3)(a+d) - 2(b+c) */
    std::mt19937 rng(5);
    for (int it = 0; it < 150; ++it) {
        const MonodromyRep4 r = random_rep(rng);
        const IntPoly want =
            (IntPoly::q() - IntPoly(3)) * (r.a + r.d) - IntPoly(2) * (r.b + r.c);
        CHECK(epoly(push_to_rep2(r)) == want);
    }
}

TEST_CASE("fiber E-polynomial") {
    CHECK(fiber_epoly(kR1) == P("q^3+3q^2-3q-1"));
    CHECK(fiber_epoly(kT) == IntPoly::one());
    const MonodromyRep4 r2{P("q^9-3q^7+6q^5"), P("-45q^5-15q^3"), P("15q^6+45q^4"),
                           P("-6q^4+3q^2-1")};
    CHECK(fiber_epoly(r2) ==
          P("q^9-3q^7+6q^5") + P("-45q^5-15q^3") + P("15q^6+45q^4") + P("-6q^4+3q^2-1"));
}

TEST_CASE("W4 stratum E-polynomial") {
    CHECK(w4_epoly(kT) == P("q^3-2q^2-q"));
    CHECK(w4_epoly(kS0) == P("-2q"));
    CHECK(w4_epoly(kR1) == P("q^6-2q^5-4q^4+3q^2+2q"));
}

TEST_CASE("json round trip") {
    const MonodromyRep4 r = kR1;
    CHECK(MonodromyRep4::from_json(r.to_json()) == r);
    const MonodromyRep2 s{P("q^2+q+1"), P("3q")};
    CHECK(MonodromyRep2::from_json(s.to_json()) == s);
}
