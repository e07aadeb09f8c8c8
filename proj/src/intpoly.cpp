#include "charvar/intpoly.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace charvar {

namespace {
const mpz_class kZero = 0;
}

void IntPoly::set_coeff(int e, const mpz_class& v) {
    if (v == 0)
        coeffs_.erase(e);
    else
        coeffs_[e] = v;
}

IntPoly IntPoly::monomial(int degree, const mpz_class& coeff) {
    if (degree < 0) throw std::invalid_argument("monomial: negative exponent");
    IntPoly p;
    p.set_coeff(degree, coeff);
    return p;
}

const mpz_class& IntPoly::coeff(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? kZero : it->second;
}

const mpz_class& IntPoly::leading_coeff() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.rbegin()->second;
}

IntPoly IntPoly::operator-() const {
    IntPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    IntPoly r = *this;
    for (const auto& [e, c] : rhs.coeffs_) {
        auto it = r.coeffs_.find(e);
        if (it == r.coeffs_.end()) {
            r.coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) r.coeffs_.erase(it);
        }
    }
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
    IntPoly r = *this;
    for (const auto& [e, c] : rhs.coeffs_) {
        auto it = r.coeffs_.find(e);
        if (it == r.coeffs_.end()) {
            r.coeffs_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) r.coeffs_.erase(it);
        }
    }
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (coeffs_.empty() || rhs.coeffs_.empty()) return {};
    /* dense accumulation buffer: these polynomials are dense in low degree */
    const int dl = degree(), dr = rhs.degree();
    std::vector<mpz_class> acc(static_cast<size_t>(dl + dr + 1));
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : rhs.coeffs_)
            acc[static_cast<size_t>(e1 + e2)] += c1 * c2;
    IntPoly r;
    for (size_t e = 0; e < acc.size(); ++e)
        if (acc[e] != 0) r.coeffs_.emplace(static_cast<int>(e), std::move(acc[e]));
    return r;
}

IntPoly IntPoly::pow(unsigned long n) const {
    IntPoly result = one();
    IntPoly base = *this;
    while (n > 0) {
        if (n & 1UL) result *= base;
        n >>= 1UL;
        if (n > 0) base *= base;
    }
    return result;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    /* Horner over the sparse exponent gaps, highest degree first */
    mpz_class result = 0;
    int prev_e = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (prev_e >= 0) {
            mpz_class gap;
            mpz_pow_ui(gap.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(prev_e - it->first));
            result *= gap;
        }
        result += it->second;
        prev_e = it->first;
    }
    if (prev_e > 0) {
        mpz_class gap;
        mpz_pow_ui(gap.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(prev_e));
        result *= gap;
    }
    return result;
}

IntPoly IntPoly::divide_exact(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
    IntPoly r = num;
    IntPoly quot;
    const int dd = den.degree();
    const mpz_class& lead = den.leading_coeff();
    while (!r.is_zero() && r.degree() >= dd) {
        const int shift = r.degree() - dd;
        mpz_class c, rem;
        mpz_fdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r.leading_coeff().get_mpz_t(), lead.get_mpz_t());
        if (rem != 0)
            throw NonExactDivision("leading coefficient " + r.leading_coeff().get_str() +
                                   " not divisible by " + lead.get_str());
        quot.set_coeff(shift, c);
        r -= monomial(shift, c) * den;
    }
    if (!r.is_zero())
        throw NonExactDivision("nonzero remainder " + r.str());
    return quot;
}

IntPoly IntPoly::divide_scalar_exact(const mpz_class& s) const {
    if (s == 0) throw std::invalid_argument("divide_scalar_exact: zero divisor");
    IntPoly r;
    for (const auto& [e, c] : coeffs_) {
        mpz_class quo, rem;
        mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
        if (rem != 0)
            throw NonExactDivision("coefficient " + c.get_str() + " not divisible by " + s.get_str());
        r.coeffs_.emplace(e, quo);
    }
    return r;
}

bool IntPoly::is_palindromic(int d) const {
    if (d < degree())
        throw std::invalid_argument("is_palindromic: d < degree");
    for (int i = 0; 2 * i <= d; ++i)
        if (coeff(i) != coeff(d - i)) return false;
    return true;
}

std::string IntPoly::str(std::string_view var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const int e = it->first;
        const mpz_class& c = it->second;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str();
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::string IntPoly::latex(std::string_view var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const int e = it->first;
        const mpz_class& c = it->second;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (e == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str();
            os << var;
            if (e != 1) os << "^{" << e << "}";
        }
    }
    return os.str();
}

IntPoly IntPoly::parse(std::string_view text, char var) {
    IntPoly result;
    size_t i = 0;
    const size_t n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == n) throw std::invalid_argument("parse: empty polynomial");
    while (i < n) {
        int sign = 1;
        skip_ws();
        if (i < n && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        }
        if (i >= n) throw std::invalid_argument("parse: dangling sign");
        std::string digits;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        skip_ws();
        if (i < n && text[i] == '*') { ++i; skip_ws(); }
        mpz_class coeff = digits.empty() ? mpz_class(1) : mpz_class(digits);
        if (sign < 0) coeff = -coeff;
        int expo = 0;
        if (i < n && text[i] == var) {
            ++i;
            expo = 1;
            if (i < n && text[i] == '^') {
                ++i;
                std::string ed;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ed += text[i++];
                if (ed.empty()) throw std::invalid_argument("parse: missing exponent");
                expo = std::stoi(ed);
            }
        } else if (digits.empty()) {
            throw std::invalid_argument("parse: expected coefficient or variable at position " +
                                        std::to_string(i));
        }
        result += monomial(expo, coeff);
        skip_ws();
    }
    return result;
}

std::string IntPoly::to_json() const {
    nlohmann::json j;
    j["var"] = "q";
    auto coeffs = nlohmann::json::array();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        coeffs.push_back({it->first, it->second.get_str()});
    j["coeffs"] = coeffs;
    return j.dump();
}

IntPoly IntPoly::from_json(std::string_view json_text) {
    const auto j = nlohmann::json::parse(json_text);
    if (!j.contains("var") || j.at("var") != "q")
        throw std::invalid_argument("polynomial JSON: expected \"var\":\"q\"");
    IntPoly p;
    for (const auto& entry : j.at("coeffs")) {
        const int e = entry.at(0).get<int>();
        const mpz_class c(entry.at(1).get<std::string>());
        if (e < 0) throw std::invalid_argument("polynomial JSON: negative exponent");
        if (p.coeffs_.count(e)) throw std::invalid_argument("polynomial JSON: duplicate exponent");
        p.set_coeff(e, c);
    }
    return p;
}

}  // namespace charvar
