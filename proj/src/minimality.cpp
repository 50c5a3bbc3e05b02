#include "ternmin/minimality.hpp"

#include "ternmin/errors.hpp"
#include "ternmin/parallel.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ternmin {

std::string_view method_name(Method m) noexcept {
    return m == Method::cover_oracle ? "cover-oracle" : "theorem2";
}

std::string_view condition_name(Condition c) noexcept {
    switch (c) {
    case Condition::one_first: return "(1)-first";
    case Condition::one_second: return "(1)-second";
    case Condition::two: return "(2)";
    }
    return "?";
}

namespace {

void require_equal_length(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) throw std::invalid_argument("covers: word lengths differ");
}

std::int64_t word_weight(std::span<const std::uint8_t> a) {
    return std::count_if(a.begin(), a.end(), [](std::uint8_t x) { return x != 0; });
}

} // namespace

bool covers_by_support(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    require_equal_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0 && a[i] == 0) return false;
    return true;
}

bool covers_by_weights(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    require_equal_length(a, b);
    std::int64_t lhs = 0;
    for (int c = 1; c <= 2; ++c)
        for (std::size_t i = 0; i < a.size(); ++i) lhs += (a[i] + c * b[i]) % 3 != 0;
    return lhs == 2 * word_weight(a) - word_weight(b);
}

bool covers(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    const bool direct = covers_by_support(a, b);
    if (direct != covers_by_weights(a, b)) throw ConsistencyError("support inclusion disagrees with weight identity");
    return direct;
}

namespace {

std::uint32_t param_id(const CodewordParams& p, int m) {
    return static_cast<std::uint32_t>((p.u.value() * 3 + p.r.value()) * pow3(m) + p.v);
}

CodewordParams params_from_id(std::uint32_t id, int m) {
    const std::uint32_t n = static_cast<std::uint32_t>(pow3(m));
    return {Trit(static_cast<int>(id / n / 3)), Trit(static_cast<int>(id / n % 3)), id % n};
}

} // namespace

MinimalityVerdict is_minimal_bruteforce(const CodeSpec& spec, const BruteForceOptions& options) {
    const int m = spec.m();
    if (m > kMaxBruteForceDimension)
        throw CapacityError("brute-force minimality: m above " + std::to_string(kMaxBruteForceDimension));

    // Supports as bitsets over the 3^m - 1 coordinates.
    const std::size_t words = (spec.length() + 63) / 64;
    const auto params = all_params(m);
    const std::size_t count = params.size();
    std::vector<std::uint64_t> support(count * words, 0);
    std::vector<std::uint32_t> doubled(count);
    for (std::size_t id = 0; id < count; ++id) {
        const auto cw = materialize(spec, params[id]);
        for (std::size_t i = 0; i < cw.word.size(); ++i)
            if (cw.word[i] != 0) support[id * words + i / 64] |= std::uint64_t{1} << (i % 64);
        const CodewordParams twice{params[id].u * Trit(2), params[id].r * Trit(2), spec.arithmetic().neg(params[id].v)};
        doubled[id] = param_id(twice, m);
    }

    const unsigned threads = resolve_threads(options.threads);
    std::vector<std::vector<CoverWitness>> found(threads);
    parallel_for(count, threads, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
        auto& out = found[worker];
        for (std::uint64_t a = std::max<std::uint64_t>(begin, 1); a < end; ++a) {
            const std::uint64_t* sa = &support[a * words];
            for (std::uint64_t b = 1; b < count; ++b) {
                if (b == a || b == doubled[a]) continue;
                const std::uint64_t* sb = &support[b * words];
                bool inside = true;
                for (std::size_t k = 0; k < words && inside; ++k) inside = (sb[k] & ~sa[k]) == 0;
                if (!inside) continue;
                out.push_back({params_from_id(static_cast<std::uint32_t>(a), m), params_from_id(static_cast<std::uint32_t>(b), m)});
                if (options.max_witnesses != 0 && out.size() >= options.max_witnesses) return;
            }
        }
    });

    MinimalityVerdict verdict{true, Method::cover_oracle, {}};
    for (const auto& part : found)
        for (const auto& w : part) {
            if (options.max_witnesses != 0 && verdict.witnesses.size() >= options.max_witnesses) break;
            verdict.witnesses.emplace_back(w);
        }
    verdict.minimal = verdict.witnesses.empty();
    return verdict;
}

namespace {

using Clock = std::chrono::steady_clock;

// Doubled real spectra of all eight nonzero u f + r g, indexed by 3u + r.
std::array<std::vector<std::int32_t>, 9> doubled_spectra(const CodeSpec& spec) {
    std::array<std::vector<std::int32_t>, 9> d;
    const std::uint32_t n = static_cast<std::uint32_t>(pow3(spec.m()));
    for (int u = 0; u < 3; ++u)
        for (int r = 0; r < 3; ++r) {
            if (u == 0 && r == 0) continue;
            auto& arr = d[3 * u + r];
            arr.resize(n);
            for (std::uint32_t w = 0; w < n; ++w) arr[w] = static_cast<std::int32_t>(spec.doubled_real(Trit(u), Trit(r), w));
        }
    return d;
}

int slot(Trit u, Trit r) { return 3 * u.value() + r.value(); }
int slot(Member m) { return slot(coefficients(m).u, coefficients(m).r); }

// Visits every b in [b_begin, n) for a fixed a, handing over
// (b, a + b, a - b). The low five digits go through the chunk tables.
class PairWalker {
public:
    explicit PairWalker(const IndexArithmetic& arith)
        : arith_(arith),
          n_(arith.size()),
          lo_size_(std::min<std::uint32_t>(n_, IndexArithmetic::kChunkSize)),
          hi_count_(n_ / lo_size_) {}

    template <typename Body>
    void walk(std::uint32_t a, std::uint32_t b_begin, Body&& body) const {
        const std::uint32_t a_lo = a % lo_size_;
        const std::uint32_t a_hi = a - a_lo;
        const std::uint8_t* add_row = arith_.chunk_add_row(a_lo);
        const std::uint8_t* sub_row = arith_.chunk_sub_row(a_lo);
        for (std::uint32_t hb = b_begin / lo_size_; hb < hi_count_; ++hb) {
            const std::uint32_t b_hi = hb * lo_size_;
            const std::uint32_t sum_hi = arith_.add(a_hi, b_hi);
            const std::uint32_t diff_hi = arith_.sub(a_hi, b_hi);
            const std::uint32_t lo_begin = hb == b_begin / lo_size_ ? b_begin % lo_size_ : 0;
            body(b_hi, lo_begin, lo_size_, sum_hi, diff_hi, add_row, sub_row);
        }
    }

private:
    const IndexArithmetic& arith_;
    std::uint32_t n_;
    std::uint32_t lo_size_;
    std::uint32_t hi_count_;
};

struct Quota {
    std::size_t max;
    bool full(std::size_t have) const { return max != 0 && have >= max; }
};

class Deadline {
public:
    explicit Deadline(const std::optional<std::chrono::duration<double>>& budget)
        : start_(Clock::now()), budget_(budget) {}

    void check(double fraction) const {
        if (budget_ && Clock::now() - start_ > *budget_)
            throw CapacityError("theorem2 sweep exceeded its time budget", fraction);
    }

private:
    Clock::time_point start_;
    std::optional<std::chrono::duration<double>> budget_;
};

// Per worker: witnesses of each condition in ascending v1 order.
struct ShardResult {
    std::vector<ConditionWitness> first, second, two;
    std::uint64_t evaluations = 0;
};

} // namespace

SweepReport theorem2_check(const CodeSpec& spec, const SweepOptions& options) {
    const auto& arith = spec.arithmetic();
    const std::uint32_t n = arith.size();
    const std::int32_t full = 2 * static_cast<std::int32_t>(n);
    const auto d = doubled_spectra(spec);
    const PairWalker walker(arith);
    const Quota quota{options.max_witnesses};
    const Deadline deadline(options.budget);

    struct Pair {
        Member f1, f2;
        const std::int32_t *d1, *d2, *dsum, *ddiff;
    };
    std::vector<Pair> pairs;
    for (Member f1 : kMembers)
        for (Member f2 : kMembers) {
            if (f1 == f2) continue;
            const auto c1 = coefficients(f1), c2 = coefficients(f2);
            const int diff_slot = options.swapped_difference ? slot(c2.u - c1.u, c2.r - c1.r) : slot(c1.u - c2.u, c1.r - c2.r);
            pairs.push_back({f1, f2, d[slot(f1)].data(), d[slot(f2)].data(), d[slot(c1.u + c2.u, c1.r + c2.r)].data(),
                             d[diff_slot].data()});
        }

    const unsigned threads = resolve_threads(options.threads);
    std::vector<ShardResult> shards(threads);
    parallel_for(n, threads, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
        ShardResult& out = shards[worker];
        for (std::uint64_t v1_64 = begin; v1_64 < end; ++v1_64) {
            const std::uint32_t v1 = static_cast<std::uint32_t>(v1_64);
            deadline.check(static_cast<double>(v1 - begin) / static_cast<double>(end - begin));

            // Condition (1): unordered {v1, v2}, v2 > v1, v3 = -v1 - v2 = (-v1) - v2.
            // Distinctness of v1, v2, v3 reduces to v1 != v2 in characteristic 3.
            const bool need_first = !quota.full(out.first.size());
            const bool need_second = !quota.full(out.second.size());
            if ((need_first || need_second) && v1 + 1 < n) {
                const std::uint32_t neg_v1 = arith.neg(v1);
                for (Member member : kMembers) {
                    const std::int32_t* dm = d[slot(member)].data();
                    const std::int32_t d1 = dm[v1];
                    walker.walk(neg_v1, v1 + 1, [&](std::uint32_t b_hi, std::uint32_t lo_begin, std::uint32_t lo_end, std::uint32_t,
                                                    std::uint32_t diff_hi, const std::uint8_t*, const std::uint8_t* sub_row) {
                        bool hit = false;
                        for (std::uint32_t lo = lo_begin; lo < lo_end; ++lo) {
                            const std::int32_t s = d1 + dm[b_hi + lo];
                            const std::int32_t d3 = dm[diff_hi + sub_row[lo]];
                            hit |= (s - 2 * d3 == full) | (s + d3 == full);
                        }
                        out.evaluations += 2 * (lo_end - lo_begin);
                        if (!hit) return;
                        for (std::uint32_t lo = lo_begin; lo < lo_end; ++lo) {
                            const std::uint32_t v2 = b_hi + lo, v3 = diff_hi + sub_row[lo];
                            const std::int32_t s = d1 + dm[v2];
                            if (s - 2 * dm[v3] == full && !quota.full(out.first.size()))
                                out.first.push_back({Condition::one_first, member, member, v1, v2, v3});
                            if (s + dm[v3] == full && !quota.full(out.second.size()))
                                out.second.push_back({Condition::one_second, member, member, v1, v2, v3});
                        }
                    });
                }
            }

            // Condition (2): ordered distinct members, all v2.
            if (quota.full(out.two.size())) continue;
            for (const Pair& p : pairs) {
                const std::int32_t base = full + 2 * p.d1[v1];  // hit when dsum + ddiff + d2 == full + 2 d1
                walker.walk(v1, 0, [&](std::uint32_t b_hi, std::uint32_t lo_begin, std::uint32_t lo_end, std::uint32_t sum_hi,
                                       std::uint32_t diff_hi, const std::uint8_t* add_row, const std::uint8_t* sub_row) {
                    const std::int32_t* dsum = p.dsum + sum_hi;
                    const std::int32_t* ddiff = p.ddiff + diff_hi;
                    const std::int32_t* d2 = p.d2 + b_hi;
                    bool hit = false;
                    for (std::uint32_t lo = lo_begin; lo < lo_end; ++lo)
                        hit |= dsum[add_row[lo]] + ddiff[sub_row[lo]] + d2[lo] == base;
                    out.evaluations += lo_end - lo_begin;
                    if (!hit) return;
                    for (std::uint32_t lo = lo_begin; lo < lo_end; ++lo)
                        if (dsum[add_row[lo]] + ddiff[sub_row[lo]] + d2[lo] == base && !quota.full(out.two.size()))
                            out.two.push_back({Condition::two, p.f1, p.f2, v1, b_hi + lo, 0});
                });
                if (quota.full(out.two.size())) break;
            }
        }
    });

    SweepReport report;
    report.verdict.method = Method::theorem2;
    auto gather = [&](std::vector<ConditionWitness> ShardResult::*field) {
        std::size_t taken = 0;
        for (const auto& s : shards)
            for (const auto& w : s.*field) {
                if (quota.full(taken)) return taken;
                report.verdict.witnesses.emplace_back(w);
                ++taken;
            }
        return taken;
    };
    report.condition1_first_holds = gather(&ShardResult::first) == 0;
    report.condition1_second_holds = gather(&ShardResult::second) == 0;
    report.condition2_holds = gather(&ShardResult::two) == 0;
    for (const auto& s : shards) report.evaluations += s.evaluations;
    report.verdict.minimal = report.verdict.witnesses.empty();
    return report;
}

CoverWitness witness_to_cover_pair(const CodeSpec& spec, const ConditionWitness& w) {
    const auto& arith = spec.arithmetic();
    const auto c1 = coefficients(w.first);
    const auto c2 = coefficients(w.second);
    switch (w.condition) {
    case Condition::one_first:
        // (v1, v2, v3) = (a + b, -b, -a): F + s_b is covered by F + s_a.
        return {{c1.u, c1.r, arith.neg(w.v3)}, {c1.u, c1.r, arith.neg(w.v2)}};
    case Condition::one_second:
        // (v1, v2, v3) = (-a - b, a - b, -b): F + s_b is covered by s_a.
        return {{Trit(0), Trit(0), arith.sub(w.v1, w.v2)}, {c1.u, c1.r, arith.neg(w.v3)}};
    case Condition::two:
        // (v1, v2) = (-a, -b): F2 + s_b is covered by F1 + s_a.
        return {{c1.u, c1.r, arith.neg(w.v1)}, {c2.u, c2.r, arith.neg(w.v2)}};
    }
    throw std::invalid_argument("unknown condition");
}

bool ashikhmin_barg(std::int64_t wmin, std::int64_t wmax) {
    if (wmin <= 0 || wmin > wmax) throw std::invalid_argument("ashikhmin_barg: need 0 < wmin <= wmax");
    return 3 * wmin > 2 * wmax;
}

} // namespace ternmin
