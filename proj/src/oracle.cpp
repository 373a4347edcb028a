#include "polyweight/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <thread>

namespace polyweight {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t checked_pow_u64(std::uint64_t base, std::uint64_t e, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

FieldPtr validate(const SweepConfig& cfg, std::uint64_t* stream_size) {
    if (cfg.k < 1 || cfg.k > cfg.n) throw std::domain_error("multiplicity k must satisfy 1 <= k <= n");
    FieldPtr field = Field::of_cardinality(cfg.q);
    const std::uint64_t cap = std::min(cfg.budget, std::uint64_t{1} << 62);
    const std::uint64_t size = checked_pow_u64(cfg.q, cfg.n - cfg.k, cap);
    if (size > cap) {
        throw CapacityError("sweep size q^(n-k) exceeds the budget of " + std::to_string(cfg.budget));
    }
    *stream_size = size;
    return field;
}

// Coefficients of (x+1)^k as packed element indices, ascending degree.
std::vector<std::uint64_t> x_plus_1_pow_indices(const FieldPtr& field, std::uint64_t k) {
    const Polynomial f = Polynomial::from_integers(field, {1, 1}).pow(k);
    std::vector<std::uint64_t> out;
    out.reserve(f.coeffs().size());
    for (const FieldElement& c : f.coeffs()) out.push_back(c.index());
    return out;
}

// Enumerates the cofactor digit vectors (g_0, ..., g_{free-1}) whose stream
// indices lie in [begin, end), computing f = (x+1)^k g on packed indices and
// invoking fn(f_indices) for each.  Stream index digits are base q with g_0
// least significant, so consecutive indices advance g_0 first.
template <typename Fn>
void sweep_range(const Field& field, const std::vector<std::uint64_t>& xk1, std::size_t free_count,
                 std::uint64_t begin, std::uint64_t end, Fn&& fn) {
    const std::uint64_t q = field.cardinality();
    std::vector<std::uint64_t> g(free_count + 1, 0);
    g[free_count] = 1;  // monic
    std::uint64_t rest = begin;
    for (std::size_t j = 0; j < free_count; ++j) {
        g[j] = rest % q;
        rest /= q;
    }
    const std::size_t fsize = xk1.size() + free_count;  // n + 1 coefficients
    std::vector<std::uint64_t> f(fsize);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::fill(f.begin(), f.end(), 0);
        for (std::size_t i = 0; i < xk1.size(); ++i) {
            if (xk1[i] == 0) continue;
            for (std::size_t j = 0; j <= free_count; ++j) {
                if (g[j] == 0) continue;
                f[i + j] = field.add_index(f[i + j], field.mul_index(xk1[i], g[j]));
            }
        }
        fn(f, g);
        // odometer step
        for (std::size_t j = 0; j < free_count; ++j) {
            if (++g[j] < q) break;
            g[j] = 0;
        }
    }
}

// Worker chunks over the top digit: worker w covers top-digit values
// [w*q/W, (w+1)*q/W), i.e. a contiguous block of stream indices.
struct Chunk {
    std::uint64_t begin;
    std::uint64_t end;
};

std::vector<Chunk> top_digit_chunks(std::uint64_t q, std::size_t free_count, std::uint64_t total, unsigned workers) {
    std::vector<Chunk> chunks;
    if (workers <= 1 || free_count == 0) {
        chunks.push_back({0, total});
        return chunks;
    }
    const std::uint64_t step = total / q;  // q^(free_count - 1)
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = q * w / workers;
        const std::uint64_t hi = q * (w + 1) / workers;
        if (lo < hi) chunks.push_back({lo * step, hi * step});
    }
    return chunks;
}

template <typename State, typename Body>
std::vector<State> run_partitioned(const std::vector<Chunk>& chunks, const Body& body) {
    std::vector<State> states(chunks.size());
    if (chunks.size() == 1) {
        body(chunks[0], states[0]);
        return states;
    }
    std::vector<std::thread> threads;
    threads.reserve(chunks.size());
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        threads.emplace_back([&, i] { body(chunks[i], states[i]); });
    }
    for (std::thread& t : threads) t.join();
    return states;
}

}  // namespace

void enumerate_multiples(const SweepConfig& cfg, const std::function<void(const Polynomial&)>& fn) {
    std::uint64_t total = 0;
    FieldPtr field = validate(cfg, &total);
    const std::vector<std::uint64_t> xk1 = x_plus_1_pow_indices(field, cfg.k);
    const std::size_t free_count = cfg.n - static_cast<std::size_t>(cfg.k);
    sweep_range(*field, xk1, free_count, 0, total,
                [&](const std::vector<std::uint64_t>& f, const std::vector<std::uint64_t>&) {
                    std::vector<FieldElement> coeffs;
                    coeffs.reserve(f.size());
                    for (std::uint64_t idx : f) coeffs.push_back(field->element_at(idx));
                    fn(Polynomial(field, std::move(coeffs)));
                });
}

std::vector<Polynomial> collect_multiples(const SweepConfig& cfg) {
    std::vector<Polynomial> out;
    enumerate_multiples(cfg, [&](const Polynomial& f) { out.push_back(f); });
    return out;
}

WeightDistribution empirical_weight_distribution(const SweepConfig& cfg) {
    std::uint64_t total = 0;
    FieldPtr field = validate(cfg, &total);
    const std::vector<std::uint64_t> xk1 = x_plus_1_pow_indices(field, cfg.k);
    const std::size_t free_count = cfg.n - static_cast<std::size_t>(cfg.k);

    using Tally = std::map<std::size_t, std::uint64_t>;
    const auto chunks = top_digit_chunks(cfg.q, free_count, total, cfg.workers);
    const auto tallies = run_partitioned<Tally>(chunks, [&](const Chunk& chunk, Tally& tally) {
        sweep_range(*field, xk1, free_count, chunk.begin, chunk.end,
                    [&](const std::vector<std::uint64_t>& f, const std::vector<std::uint64_t>&) {
                        std::size_t w = 0;
                        for (std::uint64_t c : f) {
                            if (c != 0) ++w;
                        }
                        ++tally[w];
                    });
    });

    WeightDistribution dist;
    dist.q = cfg.q;
    dist.n = cfg.n;
    dist.k = cfg.k;
    dist.source = CountSource::enumeration;
    for (const Tally& tally : tallies) {
        for (const auto& [w, c] : tally) dist.counts[w] += static_cast<unsigned long>(c);
    }
    return dist;
}

BigInt empirical_fixed_support_count(const SweepConfig& cfg, const std::vector<std::size_t>& support) {
    std::uint64_t total = 0;
    FieldPtr field = validate(cfg, &total);
    for (std::size_t j : support) {
        if (j >= cfg.n) throw std::invalid_argument("support index out of range [0, n)");
    }
    const std::vector<std::uint64_t> xk1 = x_plus_1_pow_indices(field, cfg.k);
    const std::size_t free_count = cfg.n - static_cast<std::size_t>(cfg.k);
    std::vector<bool> required(cfg.n, false);
    for (std::size_t j : support) required[j] = true;

    const auto chunks = top_digit_chunks(cfg.q, free_count, total, cfg.workers);
    const auto counts = run_partitioned<std::uint64_t>(chunks, [&](const Chunk& chunk, std::uint64_t& count) {
        count = 0;
        sweep_range(*field, xk1, free_count, chunk.begin, chunk.end,
                    [&](const std::vector<std::uint64_t>& f, const std::vector<std::uint64_t>&) {
                        for (std::size_t i = 0; i < cfg.n; ++i) {
                            if ((f[i] != 0) != required[i]) return;
                        }
                        ++count;
                    });
    });

    BigInt sum(0);
    for (std::uint64_t c : counts) sum += static_cast<unsigned long>(c);
    return sum;
}

DistributionSweepReport run_distribution_sweep(const SweepConfig& cfg) {
    const auto start = Clock::now();
    DistributionSweepReport report;
    report.config = cfg;
    report.distribution = empirical_weight_distribution(cfg);
    report.wall_time_ms = elapsed_ms(start);
    return report;
}

// ---------------------------------------------------------------------------
// bound sweep

namespace {

// Multiplicity of the root 1 via repeated synthetic division, on packed
// indices over F_p (m = 1).
std::uint64_t multiplicity_at_one(const Field& field, std::vector<std::uint64_t> f) {
    std::uint64_t k = 0;
    while (true) {
        // Horner pass: remainder = f(1), quotient coefficients in place.
        std::uint64_t acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) {
            acc = field.add_index(acc, f[i]);
            f[i] = acc;
        }
        if (acc != 0) return k;
        // f was (x-1)*quotient; quotient now sits in f[1..], shifted down.
        f.erase(f.begin());
        ++k;
        if (f.empty()) return k;  // unreachable for monic input
    }
}

struct PerDegreeState {
    std::vector<BoundViolation> violations;
    std::map<std::uint64_t, std::pair<std::size_t, std::vector<std::uint64_t>>> best;  // k -> (weight, coeffs)
};

}  // namespace

BoundSweepReport bound_sweep(const BoundSweepConfig& cfg) {
    const auto start = Clock::now();
    FieldPtr field = Field::finite(cfg.p, 1);
    if (cfg.max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");
    std::uint64_t enumerated = 0;
    for (std::size_t d = 1; d <= cfg.max_degree; ++d) {
        const std::uint64_t count = checked_pow_u64(cfg.p, d, cfg.budget);
        if (count > cfg.budget || enumerated + count > cfg.budget) {
            throw CapacityError("bound sweep over degree <= " + std::to_string(cfg.max_degree) +
                                " exceeds the budget of " + std::to_string(cfg.budget));
        }
        enumerated += count;
    }

    BoundSweepReport report;
    report.config = cfg;
    std::map<std::uint64_t, BigInt> bound_cache;
    auto bound_of = [&](std::uint64_t k) -> const BigInt& {
        auto it = bound_cache.find(k);
        if (it == bound_cache.end()) it = bound_cache.emplace(k, weight_lower_bound(k, cfg.p)).first;
        return it->second;
    };
    std::map<std::uint64_t, MinWeightRow> rows;

    for (std::size_t d = 1; d <= cfg.max_degree; ++d) {
        const std::uint64_t total = checked_pow_u64(cfg.p, d, cfg.budget);
        // Free coefficients (f_0, ..., f_{d-1}); the stream index digit of
        // weight p^j is f_j, so index order is lexicographic over
        // (f_{d-1}, ..., f_0) and chunking the top digit preserves it.
        const auto chunks = top_digit_chunks(cfg.p, d, total, cfg.workers);
        const auto states = run_partitioned<PerDegreeState>(chunks, [&](const Chunk& chunk, PerDegreeState& state) {
            std::vector<std::uint64_t> f(d + 1, 0);
            f[d] = 1;
            std::uint64_t rest = chunk.begin;
            for (std::size_t j = 0; j < d; ++j) {
                f[j] = rest % cfg.p;
                rest /= cfg.p;
            }
            for (std::uint64_t idx = chunk.begin; idx < chunk.end; ++idx) {
                const std::uint64_t k = multiplicity_at_one(*field, f);
                if (k >= 1) {
                    std::size_t w = 0;
                    for (std::uint64_t c : f) {
                        if (c != 0) ++w;
                    }
                    const BigInt& bound = bound_of(k);
                    if (BigInt(static_cast<unsigned long>(w)) < bound) {
                        std::vector<FieldElement> coeffs;
                        for (std::uint64_t c : f) coeffs.push_back(field->element_at(c));
                        state.violations.push_back(BoundViolation{Polynomial(field, coeffs), k, bound, w});
                    }
                    auto it = state.best.find(k);
                    if (it == state.best.end() || w < it->second.first) {
                        state.best[k] = {w, f};
                    }
                    // equal weight keeps the earlier (lexicographically first) witness
                }
                for (std::size_t j = 0; j < d; ++j) {
                    if (++f[j] < cfg.p) break;
                    f[j] = 0;
                }
            }
        });
        // Merge in worker order: chunks are lexicographically ordered, so the
        // first state winning a tie keeps the lexicographically first witness.
        for (const PerDegreeState& state : states) {
            for (const BoundViolation& v : state.violations) report.violations.push_back(v);
            for (const auto& [k, best] : state.best) {
                auto it = rows.find(k);
                if (it != rows.end() && it->second.min_weight <= best.first) continue;
                std::vector<FieldElement> coeffs;
                for (std::uint64_t c : best.second) coeffs.push_back(field->element_at(c));
                MinWeightRow row;
                row.multiplicity = k;
                row.min_weight = best.first;
                row.bound = bound_of(k);
                row.witness = Polynomial(field, std::move(coeffs));
                row.tight = BigInt(static_cast<unsigned long>(row.min_weight)) == row.bound;
                rows.insert_or_assign(k, std::move(row));
            }
        }
    }

    for (auto& [k, row] : rows) report.rows.push_back(std::move(row));
    report.wall_time_ms = elapsed_ms(start);
    return report;
}

}  // namespace polyweight
