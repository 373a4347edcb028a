#include "polyweight/counting.hpp"

namespace polyweight {

BigInt binomial_exact(std::uint64_t a, std::uint64_t b) {
    if (b > a) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

BigInt integer_power(std::uint64_t q, std::uint64_t e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
    return r;
}

BigInt m_w(std::uint64_t q, std::uint64_t k, std::uint64_t w) {
    if (q < 2) throw std::invalid_argument("q must be a prime power");
    if (k < 1) throw std::domain_error("multiplicity k must be positive");
    if (w < 1) throw std::domain_error("weight w must be positive");
    BigInt sum(0);
    if (w < 1 + k) return sum;  // empty sum: vanishes for w <= k
    for (std::uint64_t v = k; v <= w - 1; ++v) {
        BigInt term = binomial_exact(w - 1, v) * integer_power(q, v - k);
        if ((w - v - 1) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

BigInt WeightDistribution::count(std::size_t w) const {
    auto it = counts.find(w);
    return it == counts.end() ? BigInt(0) : it->second;
}

BigInt WeightDistribution::total() const {
    BigInt t(0);
    for (const auto& [w, c] : counts) t += c;
    return t;
}

WeightDistribution weight_distribution(std::uint64_t q, std::size_t n, std::uint64_t k) {
    PrimePower pp = factor_prime_power(q);
    if (n >= pp.p) {
        throw UnsupportedRegimeError("requires n < p (got n = " + std::to_string(n) + ", p = " + std::to_string(pp.p) +
                                     ")");
    }
    if (k < 1 || k > n) throw std::domain_error("multiplicity k must satisfy 1 <= k <= n");
    WeightDistribution dist;
    dist.q = q;
    dist.n = n;
    dist.k = k;
    dist.source = CountSource::formula;
    for (std::size_t w = static_cast<std::size_t>(k) + 1; w <= n + 1; ++w) {
        BigInt c = binomial_exact(n, w - 1) * m_w(q, k, w);
        if (c < 0) throw std::logic_error("negative count in the weight distribution");
        if (c > 0) dist.counts.emplace(w, std::move(c));
    }
    return dist;
}

bool total_identity_check(std::uint64_t q, std::size_t n, std::uint64_t k) {
    return weight_distribution(q, n, k).total() == integer_power(q, static_cast<std::uint64_t>(n) - k);
}

}  // namespace polyweight
