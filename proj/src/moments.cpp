#include "lexcount/moments.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>

#include <mpfr.h>

#include "lexcount/partition.hpp"

namespace lexcount {

mpz_class moment_product(MomentQuery q) {
    if (q.m < 0 || q.n < 0)
        throw std::invalid_argument("moment parameters must be nonnegative");
    mpz_class num = 1, den = 1;
    for (int i = 0; i < q.m; ++i) {
        for (int t = 1; t <= q.m; ++t) {
            num *= q.n + i + t;
            den *= i + t;
        }
    }
    mpz_class quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0)
        throw std::logic_error("moment_product: division left a remainder");
    return quot;
}

mpz_class moment_partition_sum(MomentQuery q) {
    if (q.m < 0 || q.n < 0)
        throw std::invalid_argument("moment parameters must be nonnegative");
    mpz_class sum = 0;
    const long long max_weight = static_cast<long long>(q.m) * q.n;
    for (long long k = 0; k <= max_weight; ++k) {
        for (const auto& lambda :
             enumerate_partitions(static_cast<int>(k), {q.m, q.n})) {
            mpz_class d = d_lambda(lambda, q.m);
            sum += d * d;
        }
    }
    return sum;
}

namespace {

/* Minimal RAII shell over an mpfr_t at a fixed precision. */
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
    ~BigFloat() { mpfr_clear(x_); }
    BigFloat(const BigFloat&) = delete;
    BigFloat& operator=(const BigFloat&) = delete;
    mpfr_ptr get() { return x_; }

private:
    mpfr_t x_;
};

std::vector<long> primes_up_to(long limit) {
    std::vector<long> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(limit + 1, false);
    for (long p = 2; p <= limit; ++p) {
        if (composite[p])
            continue;
        primes.push_back(p);
        for (long q = p * p; q <= limit; q += p)
            composite[q] = true;
    }
    return primes;
}

} // namespace

ZetaFactorEstimate a_factor(int m, long prime_cutoff, int series_cutoff,
                            int precision_bits) {
    if (m < 0)
        throw std::invalid_argument("a_factor: m must be nonnegative");
    if (prime_cutoff < 2)
        throw std::invalid_argument("a_factor: prime cutoff must be at least 2");
    if (series_cutoff < 1)
        throw std::invalid_argument("a_factor: series cutoff must be at least 1");
    if (precision_bits < 64)
        throw std::invalid_argument("a_factor: precision must be at least 64 bits");

    ZetaFactorEstimate est;
    est.prime_cutoff = prime_cutoff;
    est.series_cutoff = series_cutoff;
    est.precision_bits = precision_bits;

    const mpfr_prec_t prec = precision_bits;
    BigFloat product(prec);
    mpfr_set_ui(product.get(), 1, MPFR_RNDN);

    if (m > 0) {
        // series coefficients binom(k+m-1, k)^2 are exact integers
        std::vector<mpz_class> coeff(series_cutoff + 1);
        for (int k = 0; k <= series_cutoff; ++k) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), k + m - 1, k);
            coeff[k] = b * b;
        }

        BigFloat inv_p(prec), pk(prec), term(prec), inner(prec), factor(prec);
        for (long p : primes_up_to(prime_cutoff)) {
            mpfr_set_ui(inv_p.get(), 1, MPFR_RNDN);
            mpfr_div_ui(inv_p.get(), inv_p.get(), p, MPFR_RNDN);
            mpfr_set_ui(pk.get(), 1, MPFR_RNDN);
            mpfr_set_ui(inner.get(), 0, MPFR_RNDN);
            for (int k = 0; k <= series_cutoff; ++k) {
                mpfr_mul_z(term.get(), pk.get(), coeff[k].get_mpz_t(), MPFR_RNDN);
                mpfr_add(inner.get(), inner.get(), term.get(), MPFR_RNDN);
                if (k < series_cutoff) {
                    mpfr_mul(pk.get(), pk.get(), inv_p.get(), MPFR_RNDN);
                    // drop the tail once it can no longer move the sum
                    if (mpfr_get_exp(term.get()) + precision_bits + 16 <
                        mpfr_get_exp(inner.get()))
                        break;
                }
            }
            mpfr_ui_sub(factor.get(), 1, inv_p.get(), MPFR_RNDN);
            mpfr_pow_ui(factor.get(), factor.get(),
                        static_cast<unsigned long>(m) * m, MPFR_RNDN);
            mpfr_mul(factor.get(), factor.get(), inner.get(), MPFR_RNDN);
            mpfr_mul(product.get(), product.get(), factor.get(), MPFR_RNDN);
        }
    }

    const int digits = std::max(8, static_cast<int>(precision_bits * 0.30103));
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*RNg", digits, product.get());
    est.value = buf.data();
    est.value_approx = mpfr_get_d(product.get(), MPFR_RNDN);
    return est;
}

namespace {

LimitDiagnostic build_diagnostic(std::string label, bool conditional, int m,
                                 std::span<const int> n_list) {
    if (m < 1)
        throw std::invalid_argument("limit diagnostics need m >= 1");
    LimitDiagnostic diag;
    diag.label = std::move(label);
    diag.conditional_on_keating_snaith = conditional;
    for (int n : n_list) {
        if (n < 1)
            throw std::invalid_argument("limit diagnostics need positive n");
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), n, static_cast<unsigned long>(m) * m);
        mpq_class value(moment_product({m, n}), den);
        value.canonicalize();
        diag.entries.push_back({n, value});
    }
    for (std::size_t i = 1; i < diag.entries.size(); ++i)
        diag.successive_differences.push_back(diag.entries[i].value -
                                              diag.entries[i - 1].value);
    if (diag.entries.empty()) {
        diag.trend = "empty";
    } else if (diag.entries.size() == 1) {
        diag.trend = "single-point";
    } else {
        bool any_up = false, any_down = false;
        for (const auto& d : diag.successive_differences) {
            if (d > 0)
                any_up = true;
            if (d < 0)
                any_down = true;
        }
        diag.trend = (any_up && any_down) ? "mixed"
                     : any_up             ? "increasing"
                     : any_down           ? "decreasing"
                                          : "constant";
    }
    return diag;
}

} // namespace

LimitDiagnostic f_estimate(int m, std::span<const int> n_list) {
    return build_diagnostic("f-estimate", false, m, n_list);
}

LimitDiagnostic ratio_estimate(int m, std::span<const int> n_list) {
    return build_diagnostic("ratio", true, m, n_list);
}

} // namespace lexcount
