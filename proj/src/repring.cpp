#include "charvar/repring.hpp"

#include "json.hpp"

namespace charvar {

MonodromyRep4 operator+(const MonodromyRep4& r, const MonodromyRep4& s) {
    return {r.a + s.a, r.b + s.b, r.c + s.c, r.d + s.d};
}

MonodromyRep4 operator-(const MonodromyRep4& r, const MonodromyRep4& s) {
    return {r.a - s.a, r.b - s.b, r.c - s.c, r.d - s.d};
}

MonodromyRep2 operator+(const MonodromyRep2& r, const MonodromyRep2& s) {
    return {r.t + s.t, r.n + s.n};
}

MonodromyRep2 operator-(const MonodromyRep2& r, const MonodromyRep2& s) {
    return {r.t - s.t, r.n - s.n};
}

MonodromyRep4 operator*(const IntPoly& s, const MonodromyRep4& r) {
    return {s * r.a, s * r.b, s * r.c, s * r.d};
}

MonodromyRep2 operator*(const IntPoly& s, const MonodromyRep2& r) {
    return {s * r.t, s * r.n};
}

MonodromyRep4 tensor(const MonodromyRep4& r, const MonodromyRep4& s) {
    return {
        r.a * s.a + r.b * s.b + r.c * s.c + r.d * s.d,
        r.a * s.b + r.b * s.a + r.c * s.d + r.d * s.c,
        r.a * s.c + r.b * s.d + r.c * s.a + r.d * s.b,
        r.a * s.d + r.b * s.c + r.c * s.b + r.d * s.a,
    };
}

MonodromyRep2 tensor(const MonodromyRep2& r, const MonodromyRep2& s) {
    return {r.t * s.t + r.n * s.n, r.t * s.n + r.n * s.t};
}

MonodromyRep4 twist(const MonodromyRep4& r) { return {r.a, r.c, r.b, r.d}; }

MonodromyRep2 push_to_rep2(const MonodromyRep4& r) { return {r.a + r.d, r.b + r.c}; }

IntPoly epoly(const MonodromyRep4& r) {
    return (IntPoly::q() - IntPoly(2)) * r.a - (r.b + r.c + r.d);
}

IntPoly epoly(const MonodromyRep2& r) {
    return (IntPoly::q() - IntPoly(3)) * r.t - IntPoly(2) * r.n;
}

IntPoly fiber_epoly(const MonodromyRep4& r) { return r.a + r.b + r.c + r.d; }

IntPoly w4_epoly(const MonodromyRep4& r) {
    const IntPoly q = IntPoly::q();
    return (q.pow(3) - IntPoly(2) * q.pow(2) - q) * r.a -
           (q.pow(2) + q) * (r.b + r.c) - IntPoly(2) * q * r.d;
}

std::string MonodromyRep4::to_json() const {
    nlohmann::json j;
    j["T"] = nlohmann::json::parse(a.to_json());
    j["S2"] = nlohmann::json::parse(b.to_json());
    j["Sm2"] = nlohmann::json::parse(c.to_json());
    j["S0"] = nlohmann::json::parse(d.to_json());
    return j.dump();
}

MonodromyRep4 MonodromyRep4::from_json(std::string_view json_text) {
    const auto j = nlohmann::json::parse(json_text);
    return {IntPoly::from_json(j.at("T").dump()), IntPoly::from_json(j.at("S2").dump()),
            IntPoly::from_json(j.at("Sm2").dump()), IntPoly::from_json(j.at("S0").dump())};
}

std::string MonodromyRep2::to_json() const {
    nlohmann::json j;
    j["T"] = nlohmann::json::parse(t.to_json());
    j["N"] = nlohmann::json::parse(n.to_json());
    return j.dump();
}

MonodromyRep2 MonodromyRep2::from_json(std::string_view json_text) {
    const auto j = nlohmann::json::parse(json_text);
    return {IntPoly::from_json(j.at("T").dump()), IntPoly::from_json(j.at("N").dump())};
}

}  // namespace charvar
