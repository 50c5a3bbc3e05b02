#include "ternmin/code.hpp"

#include "ternmin/errors.hpp"
#include "ternmin/parallel.hpp"


namespace ternmin {

std::string_view member_name(Member member) noexcept {
    switch (member) {
    case Member::f: return "f";
    case Member::g: return "g";
    case Member::f_plus_g: return "f+g";
    case Member::f_minus_g: return "f-g";
    }
    return "?";
}

std::optional<Member> parse_member(std::string_view name) noexcept {
    for (Member m : kMembers)
        if (member_name(m) == name) return m;
    return std::nullopt;
}

Coefficients coefficients(Member member) noexcept {
    switch (member) {
    case Member::f: return {Trit(1), Trit(0)};
    case Member::g: return {Trit(0), Trit(1)};
    case Member::f_plus_g: return {Trit(1), Trit(1)};
    case Member::f_minus_g: return {Trit(1), Trit(2)};
    }
    return {};
}

std::optional<SignedMember> resolve(Trit u, Trit r) noexcept {
    if (u.is_zero() && r.is_zero()) return std::nullopt;
    for (Member m : kMembers) {
        const auto c = coefficients(m);
        if (c.u == u && c.r == r) return SignedMember{m, false};
        if (-c.u == u && -c.r == r) return SignedMember{m, true};
    }
    return std::nullopt;  // unreachable: the eight nonzero pairs are +/- the four members
}

std::string_view hypothesis_name(Hypothesis h) noexcept {
    switch (h) {
    case Hypothesis::zero_function: return "zero-function";
    case Hypothesis::nonzero_at_origin: return "nonzero-at-origin";
    case Hypothesis::linear_functional: return "linear-functional";
    }
    return "?";
}

namespace {

std::string describe(Hypothesis hypothesis, Member member, std::optional<std::uint32_t> witness) {
    std::string s = std::string(member_name(member)) + " violates " + std::string(hypothesis_name(hypothesis));
    if (witness) s += " (w index " + std::to_string(*witness) + ")";
    return s;
}

} // namespace

ValidationError::ValidationError(Hypothesis hypothesis, Member member, std::optional<std::uint32_t> witness)
    : std::invalid_argument(describe(hypothesis, member, witness)),
      hypothesis_(hypothesis),
      member_(member),
      witness_(witness) {}

CodeSpec::CodeSpec(int m, std::array<TernaryFunction, 4> functions, std::array<CountSpectrum, 4> spectra)
    : m_(m), functions_(std::move(functions)), spectra_(std::move(spectra)), arith_(m) {}

CodeSpec CodeSpec::validate(TernaryFunction f, TernaryFunction g, unsigned threads) {
    if (f.dimension() != g.dimension()) throw std::invalid_argument("f and g have different dimensions");
    const int m = f.dimension();
    TernaryFunction sum = f + g;
    TernaryFunction diff = f - g;
    std::array<TernaryFunction, 4> functions{std::move(f), std::move(g), std::move(sum), std::move(diff)};

    const std::int64_t full = 2 * static_cast<std::int64_t>(pow3(m));
    std::vector<CountSpectrum> spectra;
    spectra.reserve(4);
    for (Member member : kMembers) {
        const auto& fn = functions[static_cast<int>(member)];
        if (fn.is_zero()) throw ValidationError(Hypothesis::zero_function, member, std::nullopt);
        if (!fn.at(0).is_zero()) throw ValidationError(Hypothesis::nonzero_at_origin, member, std::nullopt);
        spectra.push_back(transform(fn, threads));
        for (std::uint32_t w = 0; w < spectra.back().size(); ++w)
            if (real_doubled(spectra.back(), w) == full) throw ValidationError(Hypothesis::linear_functional, member, w);
    }
    return CodeSpec(m, std::move(functions),
                    {std::move(spectra[0]), std::move(spectra[1]), std::move(spectra[2]), std::move(spectra[3])});
}

std::int64_t CodeSpec::doubled_real(Trit u, Trit r, std::uint32_t w) const {
    const auto sm = resolve(u, r);
    if (!sm) return w == 0 ? 2 * static_cast<std::int64_t>(pow3(m_)) : 0;
    // Re (-F)^(w) = Re F^(-w)
    return real_doubled(spectrum(sm->member), sm->negated ? arith_.neg(w) : w);
}

CountTriple CodeSpec::coordinate_counts(const CodewordParams& p) const {
    const std::uint32_t third = static_cast<std::uint32_t>(pow3(m_ - 1));
    const auto sm = resolve(p.u, p.r);
    if (!sm) {
        if (p.v == 0) return {static_cast<std::uint32_t>(pow3(m_) - 1), 0, 0};
        return {third - 1, third, third};
    }
    // G(x) + v.x = G(x) - (-v).x; for G = -F the values of F(x) - v.x are negated.
    const auto& s = spectrum(sm->member);
    if (!sm->negated) {
        const auto& c = s.at(arith_.neg(p.v));
        return {c.n0 - 1, c.n1, c.n2};
    }
    const auto& c = s.at(p.v);
    return {c.n0 - 1, c.n2, c.n1};
}

std::uint64_t WeightDistribution::total() const noexcept {
    std::uint64_t t = 0;
    for (const auto& [w, c] : entries) t += c;
    return t;
}

std::int64_t WeightDistribution::min_nonzero() const noexcept {
    for (const auto& [w, c] : entries)
        if (w != 0 && c != 0) return w;
    return 0;
}

std::int64_t WeightDistribution::max_weight() const noexcept { return entries.empty() ? 0 : entries.rbegin()->first; }

std::uint64_t CompleteWeightEnumerator::total() const noexcept {
    std::uint64_t t = 0;
    for (const auto& [e, c] : terms) t += c;
    return t;
}

WeightDistribution CompleteWeightEnumerator::weights() const {
    WeightDistribution d;
    for (const auto& [e, c] : terms) d.entries[e[1] + e[2]] += c;
    return d;
}

std::int64_t weight_of(const CodeSpec& spec, const CodewordParams& p) {
    const std::int64_t two_thirds = 2 * static_cast<std::int64_t>(pow3(spec.m() - 1));
    if (p.u.is_zero() && p.r.is_zero()) return p.v == 0 ? 0 : two_thirds;
    const std::int64_t d = spec.doubled_real(p.u, p.r, spec.arithmetic().neg(p.v));
    if (d % 3 != 0) throw ConsistencyError("2 Re not divisible by 3 in weight formula");
    return two_thirds - d / 3;
}

namespace {

constexpr std::array<std::pair<int, int>, 8> kNonzeroPairs{
    {{1, 0}, {2, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 2}, {1, 2}, {2, 1}}};

// Runs visit(params) for every codeword with (u, r) != (0, 0), sharded over v,
// and merges per-worker maps.
template <typename Map, typename Visit>
Map aggregate_nonzero_pairs(const CodeSpec& spec, unsigned threads, Visit visit) {
    threads = resolve_threads(threads);
    std::vector<Map> partial(threads);
    parallel_for(pow3(spec.m()), threads, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
        Map& local = partial[worker];
        for (const auto& [u, r] : kNonzeroPairs)
            for (std::uint64_t v = begin; v < end; ++v)
                visit(local, CodewordParams{Trit(u), Trit(r), static_cast<std::uint32_t>(v)});
    });
    Map merged;
    for (const auto& part : partial)
        for (const auto& [k, c] : part) merged[k] += c;
    return merged;
}

} // namespace

WeightDistribution weight_distribution(const CodeSpec& spec, unsigned threads) {
    WeightDistribution d;
    d.entries = aggregate_nonzero_pairs<std::map<std::int64_t, std::uint64_t>>(
        spec, threads, [&](auto& map, const CodewordParams& p) { ++map[weight_of(spec, p)]; });
    d.entries[0] += 1;
    d.entries[2 * static_cast<std::int64_t>(pow3(spec.m() - 1))] += pow3(spec.m()) - 1;
    return d;
}

CompleteWeightEnumerator cwe(const CodeSpec& spec, unsigned threads) {
    CompleteWeightEnumerator e;
    e.terms = aggregate_nonzero_pairs<std::map<ExponentTriple, std::uint64_t>>(
        spec, threads, [&](auto& map, const CodewordParams& p) {
            const auto c = spec.coordinate_counts(p);
            ++map[{c.n0, c.n1, c.n2}];
        });
    const std::int64_t n = static_cast<std::int64_t>(pow3(spec.m()));
    const std::int64_t third = n / 3;
    e.terms[{n - 1, 0, 0}] += 1;
    e.terms[{third - 1, third, third}] += static_cast<std::uint64_t>(n - 1);
    return e;
}

std::uint64_t zero_word_count(const CodeSpec& spec) {
    std::uint64_t zeros = 1;  // (0, 0, 0)
    for (const auto& [u, r] : kNonzeroPairs)
        for (std::uint32_t v = 0; v < pow3(spec.m()); ++v)
            if (weight_of(spec, {Trit(u), Trit(r), v}) == 0) ++zeros;
    return zeros;
}

int code_dimension(const CodeSpec& spec) {
    std::uint64_t zeros = zero_word_count(spec);
    int kernel = 0;
    for (; zeros > 1; zeros /= 3) {
        if (zeros % 3 != 0) throw ConsistencyError("zero-word count is not a power of 3");
        ++kernel;
    }
    return spec.m() + 2 - kernel;
}

Codeword materialize(const CodeSpec& spec, const CodewordParams& p) {
    const int m = spec.m();
    if (m > kMaxMaterializeDimension) throw CapacityError("materialize: m above " + std::to_string(kMaxMaterializeDimension));
    if (p.v >= pow3(m)) throw std::out_of_range("materialize: v outside F_3^m");
    const TritVector v(p.v, m);
    const auto f = spec.f().table();
    const auto g = spec.g().table();
    Codeword cw{p, std::vector<std::uint8_t>(spec.length())};
    for (std::uint32_t x = 1; x < pow3(m); ++x) {
        const int value = p.u.value() * f[x] + p.r.value() * g[x] + dot(v, TritVector(x, m)).value();
        cw.word[x - 1] = static_cast<std::uint8_t>(value % 3);
    }
    return cw;
}

std::vector<CodewordParams> all_params(int m) {
    std::vector<CodewordParams> out;
    out.reserve(9 * pow3(m));
    for (int u = 0; u < 3; ++u)
        for (int r = 0; r < 3; ++r)
            for (std::uint32_t v = 0; v < pow3(m); ++v) out.push_back({Trit(u), Trit(r), v});
    return out;
}

} // namespace ternmin
