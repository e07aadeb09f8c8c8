#include "charvar/fforacle.hpp"

#include <stdexcept>
#include <thread>

#include "charvar/recursion.hpp"
#include "json.hpp"

namespace charvar {

namespace {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline int32_t pack(int p, int a, int b, int c, int d) {
    return static_cast<int32_t>(((a * p + b) * p + c) * p + d);
}

}  // namespace

int32_t GroupTable::index_of(const Mat& m) const {
    return lookup_[static_cast<size_t>(pack(p_, m[0], m[1], m[2], m[3]))];
}

int32_t GroupTable::mul(int32_t i, int32_t j) const {
    const Mat& x = elements_[static_cast<size_t>(i)];
    const Mat& y = elements_[static_cast<size_t>(j)];
    const int p = p_;
    const int a = (x[0] * y[0] + x[1] * y[2]) % p;
    const int b = (x[0] * y[1] + x[1] * y[3]) % p;
    const int c = (x[2] * y[0] + x[3] * y[2]) % p;
    const int d = (x[2] * y[1] + x[3] * y[3]) % p;
    return lookup_[static_cast<size_t>(pack(p, a, b, c, d))];
}

GroupTable GroupTable::build(int p) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("GroupTable: p must be an odd prime, got " + std::to_string(p));
    if (p > 61)
        throw std::invalid_argument("GroupTable: p > 61 is beyond the enumeration bound");

    GroupTable t;
    t.p_ = p;
    const size_t p4 = static_cast<size_t>(p) * p * p * p;
    t.lookup_.assign(p4, -1);
    t.elements_.reserve(static_cast<size_t>(p) * (p * p - 1));
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d)
                    if ((a * d - b * c) % p == 1 || (a * d - b * c) % p == 1 - p) {
                        t.lookup_[static_cast<size_t>(pack(p, a, b, c, d))] =
                            static_cast<int32_t>(t.elements_.size());
                        t.elements_.push_back(
                            {static_cast<uint8_t>(a), static_cast<uint8_t>(b),
                             static_cast<uint8_t>(c), static_cast<uint8_t>(d)});
                    }
    const int32_t n = t.size();
    t.identity_ = t.index_of({1, 0, 0, 1});

    t.inverse_.resize(static_cast<size_t>(n));
    for (int32_t i = 0; i < n; ++i) {
        const Mat& m = t.elements_[static_cast<size_t>(i)];
        /* [[a,b],[c,d]]^{-1} = [[d,-b],[-c,a]] for determinant 1 */
        t.inverse_[static_cast<size_t>(i)] = t.index_of(
            {m[3], static_cast<uint8_t>((p - m[1]) % p), static_cast<uint8_t>((p - m[2]) % p),
             m[0]});
    }

    /* conjugacy classes by orbit sweep */
    t.class_of_.assign(static_cast<size_t>(n), -1);
    for (int32_t i = 0; i < n; ++i) {
        if (t.class_of_[static_cast<size_t>(i)] != -1) continue;
        const int32_t cls = static_cast<int32_t>(t.class_reps_.size());
        t.class_reps_.push_back(i);
        for (int32_t g = 0; g < n; ++g) {
            const int32_t conj = t.mul(t.mul(g, i), t.inverse_[static_cast<size_t>(g)]);
            t.class_of_[static_cast<size_t>(conj)] = cls;
        }
    }
    t.class_sizes_.assign(t.class_reps_.size(), 0);
    for (int32_t i = 0; i < n; ++i) ++t.class_sizes_[static_cast<size_t>(t.class_of_[static_cast<size_t>(i)])];
    return t;
}

int32_t GroupTable::minus_identity() const {
    const uint8_t m = static_cast<uint8_t>(p_ - 1);
    return index_of({m, 0, 0, m});
}

int32_t GroupTable::jordan_plus() const { return index_of({1, 1, 0, 1}); }

int32_t GroupTable::jordan_minus() const {
    const uint8_t m = static_cast<uint8_t>(p_ - 1);
    return index_of({m, 1, 0, m});
}

int32_t GroupTable::diagonal(int lambda) const {
    lambda %= p_;
    if (lambda < 0) lambda += p_;
    if (lambda == 0 || lambda == 1 || lambda == p_ - 1)
        throw std::invalid_argument("diagonal: lambda must differ from 0, 1, -1");
    int inv = 1;
    for (int e = p_ - 2, base = lambda; e > 0; e >>= 1) {  // lambda^{p-2} mod p
        if (e & 1) inv = inv * base % p_;
        base = base * base % p_;
    }
    return index_of({static_cast<uint8_t>(lambda), 0, 0, static_cast<uint8_t>(inv)});
}

mpz_class ClassFunction::total_mass(const GroupTable& t) const {
    mpz_class total = 0;
    for (int32_t c = 0; c < t.class_count(); ++c)
        total += values[static_cast<size_t>(c)] * t.class_size(c);
    return total;
}

ClassFunction commutator_distribution(const GroupTable& t, int threads) {
    const int32_t n = t.size();
    const int k = t.class_count();
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    std::vector<std::vector<int64_t>> partial(static_cast<size_t>(threads),
                                              std::vector<int64_t>(static_cast<size_t>(k), 0));
    auto worker = [&](int id) {
        std::vector<int64_t>& agg = partial[static_cast<size_t>(id)];
        for (int32_t i = id; i < n; i += threads) {
            const int32_t ai = t.inverse(i);
            for (int32_t j = 0; j < n; ++j) {
                const int32_t comm = t.mul(t.mul(i, j), t.mul(ai, t.inverse(j)));
                ++agg[static_cast<size_t>(t.class_of(comm))];
            }
        }
    };
    std::vector<std::thread> pool;
    for (int id = 1; id < threads; ++id) pool.emplace_back(worker, id);
    worker(0);
    for (auto& th : pool) th.join();

    ClassFunction f;
    f.values.resize(static_cast<size_t>(k));
    for (int c = 0; c < k; ++c) {
        int64_t total = 0;
        for (int id = 0; id < threads; ++id) total += partial[static_cast<size_t>(id)][static_cast<size_t>(c)];
        const int64_t size = t.class_size(c);
        if (total % size != 0)
            throw std::logic_error("commutator distribution is not constant on class " +
                                   std::to_string(c));
        f.values[static_cast<size_t>(c)] = total / size;
    }
    return f;
}

ClassFunction convolve(const GroupTable& t, const ClassFunction& f, const ClassFunction& h) {
    const int k = t.class_count();
    const int32_t n = t.size();
    ClassFunction out;
    out.values.assign(static_cast<size_t>(k), mpz_class(0));
    /* tabulate S[c1][c2] = #{x in class c1 : x^{-1} z in class c2} per
     * target z, then combine: k^2 bigint operations instead of |G| */
    std::vector<int64_t> pairs(static_cast<size_t>(k) * static_cast<size_t>(k));
    for (int c = 0; c < k; ++c) {
        const int32_t z = t.class_rep(c);
        std::fill(pairs.begin(), pairs.end(), 0);
        for (int32_t x = 0; x < n; ++x) {
            const int32_t c1 = t.class_of(x);
            const int32_t c2 = t.class_of(t.mul(t.inverse(x), z));
            ++pairs[static_cast<size_t>(c1) * static_cast<size_t>(k) + static_cast<size_t>(c2)];
        }
        mpz_class acc = 0;
        for (int c1 = 0; c1 < k; ++c1)
            for (int c2 = 0; c2 < k; ++c2) {
                const int64_t m = pairs[static_cast<size_t>(c1) * static_cast<size_t>(k) + static_cast<size_t>(c2)];
                if (m != 0)
                    acc += f.values[static_cast<size_t>(c1)] * h.values[static_cast<size_t>(c2)] * m;
            }
        out.values[static_cast<size_t>(c)] = acc;
    }
    return out;
}

mpz_class count_solutions(const GroupTable& t, int g, int32_t rep, int threads) {
    if (g < 1) throw std::invalid_argument("count_solutions: g must be >= 1");
    const ClassFunction f = commutator_distribution(t, threads);
    ClassFunction cur = f;
    for (int i = 1; i < g; ++i) cur = convolve(t, f, cur);
    return cur.values[static_cast<size_t>(t.class_of(rep))];
}

bool VerifyReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

bool VerifyReport::all_twisted_passed() const {
    for (const auto& c : checks)
        if (!(c.has_twisted ? c.twisted_passed : c.passed)) return false;
    return true;
}

std::string VerifyReport::to_json() const {
    nlohmann::json j;
    j["prime"] = prime;
    j["max_genus"] = g_max;
    j["all_passed"] = all_passed();
    j["all_twisted_passed"] = all_twisted_passed();
    auto arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json e = {{"label", c.label},     {"genus", c.genus},
                            {"prime", c.prime},     {"expected", c.expected.get_str()},
                            {"actual", c.actual.get_str()}, {"passed", c.passed}};
        if (c.has_twisted) {
            e["twisted_expected"] = c.twisted_expected.get_str();
            e["twisted_passed"] = c.twisted_passed;
        }
        arr.push_back(e);
    }
    j["checks"] = arr;
    return j.dump();
}

VerifyReport verify_counts(int p, int g_max, int threads) {
    if (p < 5) throw std::invalid_argument("verify_counts: p must be an odd prime >= 5");
    if (g_max < 1) throw std::invalid_argument("verify_counts: g_max must be >= 1");

    const GroupTable t = GroupTable::build(p);
    const ClassFunction f = commutator_distribution(t, threads);
    const auto sectors = sector_vectors_up_to(g_max);

    VerifyReport report;
    report.prime = p;
    report.g_max = g_max;

    auto add = [&](std::string label, int g, const mpz_class& expected, const mpz_class& actual) {
        CountCheck c;
        c.label = std::move(label);
        c.genus = g;
        c.prime = p;
        c.expected = expected;
        c.actual = actual;
        c.passed = expected == actual;
        report.checks.push_back(std::move(c));
        return report.checks.size() - 1;
    };

    mpz_class group_order = t.size();
    ClassFunction cur = f;
    for (int g = 1; g <= g_max; ++g) {
        if (g > 1) cur = convolve(t, f, cur);
        const SectorVector& v = sectors[static_cast<size_t>(g)];
        const mpz_class pz = p;
        auto value_at = [&](int32_t rep) { return cur.values[static_cast<size_t>(t.class_of(rep))]; };

        add("id", g, v.e0.eval(pz), value_at(t.identity()));
        add("minus-id", g, v.e1.eval(pz), value_at(t.minus_identity()));
        add("jplus", g, v.e2.eval(pz), value_at(t.jordan_plus()));
        add("jminus", g, v.e3.eval(pz), value_at(t.jordan_minus()));

        const mpz_class fiber = (v.a + v.b + v.c + v.d).eval(pz);
        const mpz_class tpart = (v.a + v.d).eval(pz);
        const mpz_class npart = (v.b + v.c).eval(pz);
        mpz_class first_count;
        bool lambda_independent = true;
        for (int lam = 2; lam <= p - 2; ++lam) {
            const mpz_class count = value_at(t.diagonal(lam));
            if (lam == 2)
                first_count = count;
            else if (count != first_count)
                lambda_independent = false;
            const size_t idx = add("xi(lambda=" + std::to_string(lam) + ")", g, fiber, count);
            /* Legendre symbol of lambda */
            const int chi = [&] {
                int r = 1;
                for (int e = (p - 1) / 2, base = lam; e > 0; e >>= 1) {
                    if (e & 1) r = r * base % p;
                    base = base * base % p;
                }
                return r == 1 ? 1 : -1;
            }();
            CountCheck& entry = report.checks[idx];
            entry.has_twisted = true;
            entry.twisted_expected = chi == 1 ? tpart + npart : tpart - npart;
            entry.twisted_passed = entry.twisted_expected == entry.actual;
        }
        add("xi lambda-independence", g, mpz_class(1), mpz_class(lambda_independent ? 1 : 0));

        /* |G|^{2g} mass check, which also equals the stratification
         * decomposition evaluated at p */
        mpz_class mass_expected;
        mpz_pow_ui(mass_expected.get_mpz_t(), group_order.get_mpz_t(),
                   static_cast<unsigned long>(2 * g));
        add("mass |G|^2g", g, mass_expected, cur.total_mass(t));
        add("mass decomposition", g, total_mass(v).eval(pz), cur.total_mass(t));
    }
    return report;
}

}  // namespace charvar
