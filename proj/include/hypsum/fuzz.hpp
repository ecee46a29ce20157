#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hypsum/kampe.hpp"
#include "hypsum/record.hpp"
#include "hypsum/theorems.hpp"

namespace hypsum {

/// Small deterministic generator. Every fuzz instance owns its own stream,
/// derived from (seed, instance index), so results are identical regardless
/// of thread count or schedule.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Rational with |numerator| <= max_num and 1 <= denominator <= max_den.
    Rational rational(long long max_num = 12, long long max_den = 12) {
        return make_rational(uniform(-max_num, max_num), uniform(1, max_den));
    }

    Rational nonzero_rational(long long max_num = 12, long long max_den = 12) {
        while (true) {
            Rational r = rational(max_num, max_den);
            if (r != 0) return r;
        }
    }

    std::vector<Rational> rational_list(std::size_t count) {
        std::vector<Rational> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(rational());
        return out;
    }

private:
    std::uint64_t state_;
};

struct FuzzConfig {
    std::string identity;
    std::uint64_t seed = 0;
    unsigned trials = 100;
    unsigned threads = 1;
    std::size_t order = 0;  // 0 = per-identity default (20 single series, 16 KdF, 12 rearrangement)
    int fixed_p = -1;       // ramanujan-extension only; -1 samples p from {0, 1}
    unsigned max_total_shift = 9;
    unsigned resample_cap = 1000;
};

namespace detail {

inline std::size_t default_order(const std::string& identity) {
    if (identity == "kdf-rearrangement") return 12;
    if (identity == "kdf-first-reduction" || identity == "kdf-second-reduction" ||
        identity == "euler-transformation")
        return 16;
    return 20;
}

/// Shift pattern with r <= max_r pairs, each m_j <= max_m_j, total <= cap.
inline void sample_shifts(SplitMix64& rng, unsigned max_r, unsigned max_m_j, unsigned cap,
                          std::vector<Rational>& f, std::vector<unsigned>& m) {
    f.clear();
    m.clear();
    const auto r = static_cast<unsigned>(rng.uniform(0, max_r));
    unsigned total = 0;
    for (unsigned j = 0; j < r; ++j) {
        auto m_j = static_cast<unsigned>(rng.uniform(1, max_m_j));
        if (total + m_j > cap) break;
        total += m_j;
        m.push_back(m_j);
        f.push_back(rng.rational());
    }
}

inline const std::vector<Rational>& ramanujan_n_samples() {
    static const std::vector<Rational> values{make_rational(5, 7), make_rational(-3, 2),
                                              make_rational(1, 3), make_rational(4, 1)};
    return values;
}

/// One sampling attempt; degenerate draws raise and are resampled by the caller.
inline VerificationRecord fuzz_attempt(const FuzzConfig& cfg, SplitMix64& rng, std::size_t order) {
    const std::string& id = cfg.identity;
    if (id == "classical-saalschutz") {
        return verify_saalschutz_classical(rng.rational(), rng.rational(), rng.rational(),
                                           static_cast<unsigned>(rng.uniform(0, 12)));
    }
    if (id == "contiguous-saalschutz") {
        return verify_saalschutz_contiguous(rng.rational(), rng.rational(), rng.rational(),
                                            static_cast<unsigned>(rng.uniform(0, 12)),
                                            static_cast<unsigned>(rng.uniform(0, 4)));
    }
    if (id == "extended-saalschutz") {
        std::vector<Rational> f;
        std::vector<unsigned> m;
        sample_shifts(rng, 3, 3, cfg.max_total_shift, f, m);
        const ParametricContext ctx(rng.rational(), rng.rational(), rng.rational(), f, m);
        return verify_extended_saalschutz(ctx, static_cast<unsigned>(rng.uniform(0, 12)));
    }
    if (id == "extended-vandermonde-chu") {
        std::vector<Rational> f;
        std::vector<unsigned> m;
        sample_shifts(rng, 3, 3, cfg.max_total_shift, f, m);
        return verify_extended_vandermonde_chu(rng.rational(), rng.rational(), f, m,
                                               static_cast<unsigned>(rng.uniform(0, 12)));
    }
    if (id == "ramanujan-extension") {
        const int p = cfg.fixed_p >= 0 ? cfg.fixed_p : static_cast<int>(rng.uniform(0, 1));
        const auto& samples = ramanujan_n_samples();
        const Rational n = samples[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(samples.size()) - 1))];
        std::vector<Rational> f;
        std::vector<unsigned> m;
        sample_shifts(rng, 2, 2, cfg.max_total_shift, f, m);
        return verify_ramanujan_extension(p, n, f, m, order);
    }
    if (id == "known-4f3") {
        return verify_known_4f3_specialization(rng.rational(), rng.rational(),
                                               static_cast<unsigned>(rng.uniform(0, 12)));
    }
    if (id == "kdf-rearrangement") {
        KdFParams params;
        params.alpha = rng.rational_list(static_cast<std::size_t>(rng.uniform(0, 2)));
        params.beta = rng.rational_list(static_cast<std::size_t>(rng.uniform(0, 2)));
        params.a = rng.rational_list(static_cast<std::size_t>(rng.uniform(0, 2)));
        params.b = rng.rational_list(static_cast<std::size_t>(rng.uniform(0, 2)));
        params.c = rng.rational_list(static_cast<std::size_t>(rng.uniform(0, 2)));
        params.d = rng.rational_list(static_cast<std::size_t>(rng.uniform(0, 2)));
        return verify_kdf_rearrangement(params, order);
    }
    if (id == "kdf-first-reduction") {
        const auto alpha = rng.rational_list(static_cast<std::size_t>(rng.uniform(0, 2)));
        const auto beta = rng.rational_list(static_cast<std::size_t>(rng.uniform(0, 2)));
        std::vector<Rational> f;
        std::vector<unsigned> m;
        sample_shifts(rng, 2, 2, cfg.max_total_shift, f, m);
        const ParametricContext ctx(rng.rational(), rng.rational(), rng.rational(), f, m);
        return verify_first_reduction(alpha, beta, ctx, order);
    }
    if (id == "kdf-second-reduction") {
        std::vector<Rational> f;
        std::vector<unsigned> m;
        sample_shifts(rng, 2, 2, cfg.max_total_shift, f, m);
        return verify_second_reduction(rng.rational(), rng.rational(), rng.rational(),
                                       rng.rational(), rng.rational(), f, m, order);
    }
    if (id == "euler-transformation") {
        return verify_euler_transformation(rng.rational(), rng.rational(), rng.rational(), order);
    }
    throw Error("unknown identity: " + id);
}

}  // namespace detail

/// Generates and verifies one instance: rejection-samples degenerate
/// parameter draws up to the resample cap, which is a reported error when
/// exceeded.
inline VerificationRecord fuzz_instance(const FuzzConfig& cfg, std::size_t index) {
    SplitMix64 rng(cfg.seed + 0x9E3779B97F4A7C15ULL * (index + 1));
    const std::size_t order = cfg.order != 0 ? cfg.order : detail::default_order(cfg.identity);
    for (unsigned attempt = 0; attempt < cfg.resample_cap; ++attempt) {
        try {
            return detail::fuzz_attempt(cfg, rng, order);
        } catch (const DegenerateParameter&) {
        } catch (const ProvisoViolated&) {
        }
    }
    throw ResampleCapExceeded(index, cfg.resample_cap);
}

/// Runs the whole campaign. Records are returned in instance-index order
/// regardless of completion order, so output is identical for any thread
/// count.
inline std::vector<VerificationRecord> run_fuzz(const FuzzConfig& cfg) {
    std::vector<std::optional<VerificationRecord>> slots(cfg.trials);
    std::atomic<unsigned> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_guard;

    const auto worker = [&] {
        while (true) {
            const unsigned index = cursor.fetch_add(1);
            if (index >= cfg.trials) return;
            try {
                slots[index] = fuzz_instance(cfg, index);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_guard);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const unsigned thread_count = std::max(1u, cfg.threads);
    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<VerificationRecord> out;
    out.reserve(cfg.trials);
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

/// JSON-lines rendering: one record per line, parseable even if truncated.
inline std::string records_to_json_lines(const std::vector<VerificationRecord>& records) {
    std::string out;
    for (const VerificationRecord& record : records) {
        out += record.to_json().dump();
        out += '\n';
    }
    return out;
}

inline bool all_passed(const std::vector<VerificationRecord>& records) {
    for (const VerificationRecord& record : records)
        if (!record.passed) return false;
    return true;
}

}  // namespace hypsum
