#ifndef CHARVAR_FFORACLE_HPP
#define CHARVAR_FFORACLE_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace charvar {

/* Fully enumerated SL(2,F_p) for an odd prime p, with O(1) multiplication
 * (on-the-fly matrix product plus a packed index lookup), inverses, and
 * conjugacy classes computed by orbit sweep. Immutable after construction;
 * shared read-only across threads. */
class GroupTable {
  public:
    using Mat = std::array<uint8_t, 4>;  // row-major [[a,b],[c,d]], entries in [0,p)

    /* Throws std::invalid_argument unless p is an odd prime in [3, 61].
     * (The packed lookup is p^4 ints; 61 keeps it under 60 MB, and the
     * |G|^2 commutator loop is far beyond desk scale above that anyway.) */
    static GroupTable build(int p);

    int p() const { return p_; }
    int32_t size() const { return static_cast<int32_t>(elements_.size()); }
    int class_count() const { return static_cast<int>(class_reps_.size()); }

    const Mat& element(int32_t i) const { return elements_[static_cast<size_t>(i)]; }
    int32_t index_of(const Mat& m) const;
    int32_t mul(int32_t i, int32_t j) const;
    int32_t inverse(int32_t i) const { return inverse_[static_cast<size_t>(i)]; }
    int32_t class_of(int32_t i) const { return class_of_[static_cast<size_t>(i)]; }
    int32_t class_rep(int32_t cls) const { return class_reps_[static_cast<size_t>(cls)]; }
    int64_t class_size(int32_t cls) const { return class_sizes_[static_cast<size_t>(cls)]; }

    int32_t identity() const { return identity_; }
    int32_t minus_identity() const;
    int32_t jordan_plus() const;   // [[1,1],[0,1]]
    int32_t jordan_minus() const;  // [[-1,1],[0,-1]]
    int32_t diagonal(int lambda) const;  // diag(lambda, lambda^{-1}), lambda != 0,±1

  private:
    GroupTable() = default;

    int p_ = 0;
    std::vector<Mat> elements_;
    std::vector<int32_t> lookup_;  // packed (a,b,c,d) -> index, -1 outside SL2
    std::vector<int32_t> inverse_;
    std::vector<int32_t> class_of_;
    std::vector<int32_t> class_reps_;
    std::vector<int64_t> class_sizes_;
    int32_t identity_ = 0;
};

/* Integer-valued conjugation-invariant function, stored per class. */
struct ClassFunction {
    std::vector<mpz_class> values;  // indexed by class id

    /* sum over group elements: Sum_cls |cls| * value[cls] */
    mpz_class total_mass(const GroupTable& t) const;
};

/* f(x) = #{(A,B) : A B A^{-1} B^{-1} = x}, exact, by the |G|^2 double
 * loop (data-parallel over A; `threads` <= 0 means hardware concurrency).
 * Conjugation-invariance is enforced, not assumed: the per-class totals
 * must be divisible by the class sizes or std::logic_error is thrown. */
ClassFunction commutator_distribution(const GroupTable& t, int threads = 0);

/* (f*h)(z) = Sum_x f(x) h(x^{-1} z), as a class function. */
ClassFunction convolve(const GroupTable& t, const ClassFunction& f, const ClassFunction& h);

/* #{(A_1,B_1,...,A_g,B_g) : prod [A_i,B_i] = element rep} via (g-1)
 * convolutions of the commutator distribution. */
mpz_class count_solutions(const GroupTable& t, int g, int32_t rep, int threads = 0);

/* One count comparison in the verification report. For the diagonal
 * holonomies the expected value is the lambda-independent fiber
 * E-polynomial a+b+c+d at q=p; `twisted_expected` carries the
 * monodromy-aware prediction (a+d) + chi(lambda) (b+c) at q=p, which is
 * what the counts actually follow (chi = Legendre symbol). */
struct CountCheck {
    std::string label;
    int genus = 0;
    int prime = 0;
    mpz_class expected;
    mpz_class actual;
    bool passed = false;
    bool has_twisted = false;
    mpz_class twisted_expected;
    bool twisted_passed = false;
};

struct VerifyReport {
    int prime = 0;
    int g_max = 0;
    std::vector<CountCheck> checks;
    bool all_passed() const;          // every spec comparison matched
    bool all_twisted_passed() const;  // ... with the twisted law for diagonals
    std::string to_json() const;
};

/* For 1 <= g <= g_max, compares count_solutions against the sector
 * E-polynomials at q=p: Id vs e0, -Id vs e1, J+ vs e2, J- vs e3, and
 * diag(lambda,1/lambda) vs a+b+c+d for every lambda != 0,±1, plus
 * pairwise lambda-independence and the |G|^{2g} total-mass check.
 * Requires p an odd prime >= 5. Mismatches are reported, never
 * suppressed; the twisted-law columns record the refined comparison. */
VerifyReport verify_counts(int p, int g_max, int threads = 0);

}  // namespace charvar

#endif
