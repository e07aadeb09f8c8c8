#ifndef CHARVAR_INTPOLY_HPP
#define CHARVAR_INTPOLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace charvar {

/* Thrown by divide_exact when the divisor does not divide the numerand in
 * Z[q]. Every stabilizer division in the theory is exact, so seeing this
 * exception means a structural bug upstream, not bad user input. */
struct NonExactDivision : std::runtime_error {
    explicit NonExactDivision(const std::string& what) : std::runtime_error(what) {}
};

/* Univariate polynomial in q over arbitrary-precision integers.
 *
 * Sparse exponent -> coefficient storage in canonical form: no zero
 * coefficients are ever stored, so equality is plain map equality. The
 * zero polynomial has an empty map and degree() reports the sentinel -1,
 * which can never collide with a stored exponent (exponents are >= 0).
 *
 * Values are immutable in spirit: all operations return new polynomials,
 * and there is no mutating public interface beyond assignment. Safe to
 * share across threads.
 */
class IntPoly {
  public:
    IntPoly() = default;
    /* constant polynomial */
    explicit IntPoly(const mpz_class& constant) { set_coeff(0, constant); }
    explicit IntPoly(long constant) : IntPoly(mpz_class(constant)) {}

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly(1); }
    /* the variable q */
    static IntPoly q() { return monomial(1, 1); }
    static IntPoly monomial(int degree, const mpz_class& coeff);

    /* Parse expressions like "q^9 - 3q^7 + 6q^5", "-1", "2*q^2+q+1".
     * Accepts optional '*' between coefficient and variable and arbitrary
     * whitespace. Throws std::invalid_argument on malformed input. */
    static IntPoly parse(std::string_view text, char var = 'q');

    static constexpr int kZeroDegree = -1;

    int degree() const { return coeffs_.empty() ? kZeroDegree : coeffs_.rbegin()->first; }
    bool is_zero() const { return coeffs_.empty(); }
    /* coefficient of q^e (zero if absent) */
    const mpz_class& coeff(int e) const;
    const mpz_class& leading_coeff() const;
    /* smallest exponent with nonzero coefficient; kZeroDegree for 0 */
    int trailing_degree() const { return coeffs_.empty() ? kZeroDegree : coeffs_.begin()->first; }

    const std::map<int, mpz_class>& terms() const { return coeffs_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;
    IntPoly& operator+=(const IntPoly& rhs) { return *this = *this + rhs; }
    IntPoly& operator-=(const IntPoly& rhs) { return *this = *this - rhs; }
    IntPoly& operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

    bool operator==(const IntPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const IntPoly& rhs) const { return !(*this == rhs); }

    IntPoly pow(unsigned long n) const;

    /* exact value p(x) */
    mpz_class eval(const mpz_class& x) const;

    /* Quotient of num/den in Z[q]; throws NonExactDivision unless den
     * divides num exactly. den must be nonzero (std::invalid_argument). */
    static IntPoly divide_exact(const IntPoly& num, const IntPoly& den);

    /* Divide every coefficient by s exactly; NonExactDivision otherwise. */
    IntPoly divide_scalar_exact(const mpz_class& s) const;

    /* true iff coeff(q^i) == coeff(q^{d-i}) for 0 <= i <= d, i.e.
     * q^d p(1/q) == p. Requires d >= degree() (std::invalid_argument). */
    bool is_palindromic(int d) const;

    /* "q^6 - 2q^4 - 30q^3 - 2q^2 + 1"; "0" for the zero polynomial */
    std::string str(std::string_view var = "q") const;
    /* LaTeX flavour: "q^{6}-2q^{4}-30q^{3}-2q^{2}+1" */
    std::string latex(std::string_view var = "q") const;

    /* JSON object {"var":"q","coeffs":[[degree,"decimal"],...]} sorted by
     * descending degree; coefficients serialized as decimal strings. */
    std::string to_json() const;
    static IntPoly from_json(std::string_view json_text);

  private:
    void set_coeff(int e, const mpz_class& v);

    std::map<int, mpz_class> coeffs_;
};

inline IntPoly operator*(const mpz_class& s, const IntPoly& p) { return IntPoly(s) * p; }
inline IntPoly operator*(long s, const IntPoly& p) { return IntPoly(s) * p; }

}  // namespace charvar

#endif
