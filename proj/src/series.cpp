#include "invenum/series.hpp"

#include <sstream>
#include <stdexcept>

namespace invenum {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

long long tri(long long i) { return i * (i + 1) / 2; } // i-th triangular number

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t precision) : coeffs_(precision, mpz_class(0)) {
    if (precision == 0)
        throw std::invalid_argument("series precision must be >= 1");
}

const mpz_class& TruncatedSeries::coefficient(std::size_t k) const {
    if (k >= coeffs_.size())
        throw std::out_of_range("coefficient index " + std::to_string(k) +
                                " >= precision " + std::to_string(coeffs_.size()));
    return coeffs_[k];
}

void TruncatedSeries::set(std::size_t k, mpz_class value) {
    if (k >= coeffs_.size())
        throw std::out_of_range("coefficient index " + std::to_string(k) +
                                " >= precision " + std::to_string(coeffs_.size()));
    coeffs_[k] = std::move(value);
}

void TruncatedSeries::add_term(std::size_t exponent, const mpz_class& value) {
    if (exponent < coeffs_.size())
        coeffs_[exponent] += value;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t exponent, std::size_t precision) {
    TruncatedSeries s(precision);
    s.add_term(exponent, 1);
    return s;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.precision(), b.precision()));
    for (std::size_t k = 0; k < out.precision(); ++k)
        out.set(k, a.coefficient(k) + b.coefficient(k));
    return out;
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.precision(), b.precision()));
    const std::size_t K = out.precision();
    for (std::size_t i = 0; i < std::min(a.precision(), K); ++i) {
        if (a.coefficient(i) == 0)
            continue;
        for (std::size_t j = 0; i + j < K; ++j)
            out.add_term(i + j, a.coefficient(i) * b.coefficient(j));
    }
    return out;
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
    if (a.coefficient(0) != 1)
        throw std::invalid_argument("reciprocal needs constant term 1");
    const std::size_t K = a.precision();
    TruncatedSeries r(K);
    r.set(0, 1);
    for (std::size_t k = 1; k < K; ++k) {
        mpz_class acc = 0;
        for (std::size_t j = 1; j <= k; ++j)
            acc += a.coefficient(j) * r.coefficient(k - j);
        r.set(k, -acc);
    }
    return r;
}

TruncatedSeries triangular_series_squared(std::size_t precision) {
    TruncatedSeries t(precision);
    for (long long i = 0; tri(i) < static_cast<long long>(precision); ++i)
        t.add_term(static_cast<std::size_t>(tri(i)), 1);
    return multiply(t, t);
}

TruncatedSeries gf_123_231(std::size_t precision) {
    TruncatedSeries s(precision);
    const long long K = static_cast<long long>(precision);
    // single family: exponents C(i,2)
    for (long long i = 1; tri(i - 1) < K; ++i)
        s.add_term(static_cast<std::size_t>(tri(i - 1)), 1);
    // triple family: exponent tri(i) + tri(j) - tri(l) with 0 <= l < min(i,j);
    // since tri(l) < min(tri(i), tri(j)), every exponent strictly exceeds
    // both tri(i) and tri(j), so the loop guards are exhaustive
    for (long long i = 1; tri(i) < K; ++i)
        for (long long j = 1; tri(j) < K; ++j)
            for (long long l = 0; l < std::min(i, j); ++l)
                s.add_term(static_cast<std::size_t>(tri(i) + tri(j) - tri(l)), 1);
    return s;
}

TruncatedSeries gf_123_132(std::size_t precision) {
    // sum_{n>=0} x^{n(n+3)/2} ((x+1)^{n+2} - x^{n+2})
    TruncatedSeries s(precision);
    const long long K = static_cast<long long>(precision);
    for (long long n = 0; n * (n + 3) / 2 < K; ++n) {
        const long long base = n * (n + 3) / 2;
        // (x+1)^{n+2} - x^{n+2}: binomial coefficients, top term removed
        for (long long j = 0; j <= n + 1 && base + j < K; ++j)
            s.add_term(static_cast<std::size_t>(base + j),
                       binom(static_cast<unsigned long>(n + 2), static_cast<unsigned long>(j)));
    }
    return s;
}

TruncatedSeries gf_132_213(std::size_t precision) {
    // finite sequences of positive integers with length != 1, tallied by the
    // second elementary symmetric function of their values.  Appending part
    // m to a sequence of sum s adds m*s to e2, so DFS with exact pruning:
    // any extension of a length >= 1 prefix adds at least (current sum).
    TruncatedSeries out(precision);
    const long long K = static_cast<long long>(precision);
    out.add_term(0, 1); // the empty sequence
    auto rec = [&](auto&& self, long long sum, long long e2, int length) -> void {
        for (long long m = 1;; ++m) {
            const long long ne2 = e2 + m * sum;
            if (length >= 1 && ne2 >= K)
                break;                 // larger m only increases e2
            if (length == 0 && m >= K)
                break;                 // first part: any extension adds >= m
            if (length + 1 >= 2)
                out.add_term(static_cast<std::size_t>(ne2), 1);
            self(self, sum + m, ne2, length + 1);
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

TruncatedSeries gf_123_132_213(std::size_t precision) {
    // 1 + sum_{d>=3} x^{C(d-1,2)} sum_{n=2}^{d} C(n, d-n) x^{n-2}
    TruncatedSeries s(precision);
    const long long K = static_cast<long long>(precision);
    s.add_term(0, 1);
    for (long long d = 3; tri(d - 2) < K; ++d) {
        const long long base = tri(d - 2); // C(d-1, 2)
        for (long long n = 2; n <= d; ++n) {
            if (base + n - 2 >= K)
                break;
            s.add_term(static_cast<std::size_t>(base + n - 2),
                       binom(static_cast<unsigned long>(n), static_cast<unsigned long>(d - n)));
        }
    }
    return s;
}

TruncatedSeries gf_123_132_213_231(std::size_t precision) {
    // sum_{i>=0} x^{i(i+1)/2} + x^{(i+1)(i+4)/2}
    TruncatedSeries s(precision);
    const long long K = static_cast<long long>(precision);
    for (long long i = 0; tri(i) < K; ++i)
        s.add_term(static_cast<std::size_t>(tri(i)), 1);
    for (long long i = 0; (i + 1) * (i + 4) / 2 < K; ++i)
        s.add_term(static_cast<std::size_t>((i + 1) * (i + 4) / 2), 1);
    return s;
}

TruncatedSeries gf_fountain(std::size_t precision) {
    const long long K = static_cast<long long>(precision);
    // evaluate 1/(1 - x^d * H) from d = K-1 down to 1; x^d vanishes at d >= K
    TruncatedSeries h(precision);
    h.set(0, 1);
    for (long long d = K - 1; d >= 1; --d) {
        TruncatedSeries denom(precision);
        denom.set(0, 1);
        for (long long j = 0; j + d < K; ++j)
            denom.add_term(static_cast<std::size_t>(j + d), -h.coefficient(static_cast<std::size_t>(j)));
        h = reciprocal(denom);
    }
    return h;
}

OffsetReport pin_offset(const TruncatedSeries& series, std::span<const mpz_class> reference) {
    OffsetReport report;
    if (reference.size() < 4) {
        report.diff = "reference has fewer than 4 terms";
        return report;
    }
    std::vector<int> viable;
    for (int o = -2; o <= 2; ++o) {
        long long lo = std::max<long long>(0, -static_cast<long long>(o));
        long long hi = std::min<long long>(static_cast<long long>(series.precision()) - 1,
                                           static_cast<long long>(reference.size()) - 1 - o);
        if (hi - lo + 1 < 4)
            continue;
        bool all = true;
        for (long long k = lo; k <= hi; ++k) {
            if (series.coefficient(static_cast<std::size_t>(k)) !=
                reference[static_cast<std::size_t>(k + o)]) {
                all = false;
                break;
            }
        }
        if (all)
            viable.push_back(o);
    }
    if (viable.size() == 1) {
        const int o = viable.front();
        report.offset = o;
        report.matched_range = {std::max<long long>(0, -o),
                                std::min<long long>(static_cast<long long>(series.precision()) - 1,
                                                    static_cast<long long>(reference.size()) - 1 - o)};
        return report;
    }
    std::ostringstream diff;
    if (viable.empty()) {
        diff << "no shift in [-2,2] matches; series prefix:";
        for (std::size_t k = 0; k < std::min<std::size_t>(8, series.precision()); ++k)
            diff << ' ' << series.coefficient(k).get_str();
        diff << " vs reference prefix:";
        for (std::size_t k = 0; k < std::min<std::size_t>(8, reference.size()); ++k)
            diff << ' ' << reference[k].get_str();
    } else {
        diff << "ambiguous: " << viable.size() << " shifts match";
    }
    report.diff = diff.str();
    return report;
}

} // namespace invenum
