#include "latpath/census.hpp"

#include "latpath/bijection.hpp"
#include "latpath/errors.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace latpath {

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        throw RangeError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                         ") requires 0 <= k <= n");
    }
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n - k + i, i) here
    }
    return r;
}

std::vector<BigInt> central_binomials(std::size_t n) {
    std::vector<BigInt> c;
    c.reserve(n + 1);
    c.emplace_back(1);
    for (std::size_t i = 0; i < n; ++i) {
        // C(2i+2, i+1) = C(2i, i) * 2(2i+1) / (i+1)
        BigInt next = c.back() * (2 * (2 * i + 1));
        next /= i + 1;
        c.push_back(std::move(next));
    }
    return c;
}

std::size_t last_zero_touch(const LatticePath& p) noexcept {
    const auto h = p.heights();
    for (std::size_t j = h.size(); j-- > 0;) {
        if (h[j] == 0) return j;
    }
    return 0;
}

ZeroSplit split_at_last_zero(const LatticePath& p) {
    if (p.length() % 2 != 0) {
        throw DomainError(DomainErrorKind::OddLength,
                          "split_at_last_zero expects even length, got " +
                              std::to_string(p.length()));
    }
    const std::size_t cut = last_zero_touch(p);
    return {p.slice(0, cut), p.slice(cut, p.length())};
}

bool matches(ClassFilter filter, PathClass c) noexcept {
    switch (filter) {
        case ClassFilter::Any: return true;
        case ClassFilter::Balanced: return c == PathClass::Balanced;
        case ClassFilter::UpUnbalanced: return c == PathClass::UpUnbalanced;
        case ClassFilter::DownUnbalanced: return c == PathClass::DownUnbalanced;
        case ClassFilter::Unbalanced:
            return c == PathClass::UpUnbalanced || c == PathClass::DownUnbalanced;
        case ClassFilter::Other: return c == PathClass::Other;
    }
    return false;
}

ClassEnumeration::ClassEnumeration(std::size_t length, ClassFilter filter)
    : length_(length), filter_(filter), limit_(std::uint64_t{1} << length) {
    if (length > kMaxEnumerationLength) {
        throw RangeError("enumeration length " + std::to_string(length) + " exceeds " +
                         std::to_string(kMaxEnumerationLength));
    }
}

ClassEnumeration::iterator::iterator(const ClassEnumeration* owner, std::uint64_t code)
    : owner_(owner), code_(code) {
    settle();
}

ClassEnumeration::iterator& ClassEnumeration::iterator::operator++() {
    ++code_;
    settle();
    return *this;
}

void ClassEnumeration::iterator::settle() {
    for (; code_ < owner_->limit_; ++code_) {
        LatticePath p = unrank(owner_->length_, code_);
        if (matches(owner_->filter_, classify(p))) {
            current_ = std::move(p);
            return;
        }
    }
}

ClassEnumeration enumerate_class(std::size_t length, ClassFilter filter) {
    return ClassEnumeration(length, filter);
}

std::string_view to_string(CensusCheck c) noexcept {
    switch (c) {
        case CensusCheck::Bijection: return "bijection";
        case CensusCheck::IdentityArithmetic: return "identity-arithmetic";
        case CensusCheck::IdentityStructural: return "identity-structural";
    }
    return "unknown";
}

bool CensusReport::ok() const {
    switch (check) {
        case CensusCheck::Bijection:
            return bijection_ok.value_or(false);
        case CensusCheck::IdentityArithmetic:
            return identity_lhs && identity_rhs && *identity_lhs == *identity_rhs;
        case CensusCheck::IdentityStructural:
            return identity_lhs && identity_rhs && *identity_lhs == *identity_rhs &&
                   prefix_tallies == expected_tallies;
    }
    return false;
}

BijectionKernel BijectionKernel::standard() {
    return {[](const LatticePath& p) { return phi(p).path; },
            [](const LatticePath& p) { return phi_inverse(p).path; }};
}

namespace {

// Occupancy bitset over ranks, safe for concurrent marking.
class RankBitset {
public:
    explicit RankBitset(std::uint64_t bits) : words_((bits + 63) / 64) {}

    // Returns true if the bit was already set.
    bool mark(std::uint64_t bit) {
        const std::uint64_t mask = std::uint64_t{1} << (bit % 64);
        return (words_[bit / 64].fetch_or(mask, std::memory_order_relaxed) & mask) != 0;
    }
    bool test(std::uint64_t bit) const {
        return (words_[bit / 64].load(std::memory_order_relaxed) >> (bit % 64) & 1U) != 0;
    }
    bool any() const {
        return std::any_of(words_.begin(), words_.end(),
                           [](const auto& w) { return w.load(std::memory_order_relaxed) != 0; });
    }

private:
    std::vector<std::atomic<std::uint64_t>> words_;
};

struct PartitionTally {
    std::uint64_t balanced = 0;
    std::uint64_t unbalanced = 0;
    std::vector<std::uint64_t> failures;
};

// Runs `work(partition_index)` for every partition on a bounded pool.
template <typename Work>
void run_partitions(unsigned partitions, Work&& work) {
    const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    const unsigned workers = std::min(partitions, hw);
    std::atomic<unsigned> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (unsigned k = next.fetch_add(1); k < partitions; k = next.fetch_add(1)) work(k);
        });
    }
}

BigInt power_of_two(unsigned bits) {
    BigInt r = 1;
    r <<= bits;
    return r;
}

}  // namespace

CensusReport verify_bijection(unsigned n, unsigned partitions) {
    return verify_bijection(n, partitions, BijectionKernel::standard());
}

CensusReport verify_bijection(unsigned n, unsigned partitions, const BijectionKernel& kernel) {
    if (n < 1 || n > kMaxBijectionHalfLength) {
        throw RangeError("verify_bijection supports 1 <= n <= " +
                         std::to_string(kMaxBijectionHalfLength) + ", got " + std::to_string(n));
    }
    if (partitions == 0) throw RangeError("partitions must be positive");

    const auto started = std::chrono::steady_clock::now();
    const std::size_t length = 2 * n;
    const std::uint64_t total = std::uint64_t{1} << length;
    partitions = static_cast<unsigned>(std::min<std::uint64_t>(partitions, total));

    RankBitset seen(total);
    RankBitset collided(total);
    std::vector<PartitionTally> tallies(partitions);

    run_partitions(partitions, [&](unsigned k) {
        const std::uint64_t lo = total * k / partitions;
        const std::uint64_t hi = total * (k + 1) / partitions;
        PartitionTally& tally = tallies[k];
        for (std::uint64_t code = lo; code < hi; ++code) {
            const LatticePath p = unrank(length, code);
            const PathClass c = classify(p);
            try {
                if (c == PathClass::Balanced) {
                    ++tally.balanced;
                    const LatticePath image = kernel.forward(p);
                    if (image.length() != length || !is_unbalanced(image)) {
                        tally.failures.push_back(code);
                        continue;
                    }
                    const std::uint64_t target = rank(image);
                    if (seen.mark(target)) collided.mark(target);
                    if (!(kernel.inverse(image) == p)) tally.failures.push_back(code);
                } else if (c != PathClass::Other) {
                    ++tally.unbalanced;
                    const LatticePath pre = kernel.inverse(p);
                    if (!is_balanced(pre) || !(kernel.forward(pre) == p)) {
                        tally.failures.push_back(code);
                    }
                }
            } catch (const Error&) {
                tally.failures.push_back(code);
            }
        }
    });

    CensusReport r;
    r.check = CensusCheck::Bijection;
    r.n = n;
    r.total_paths = power_of_two(static_cast<unsigned>(length));

    std::uint64_t balanced = 0;
    std::uint64_t unbalanced = 0;
    std::vector<std::uint64_t> failures;
    for (const auto& t : tallies) {
        balanced += t.balanced;
        unbalanced += t.unbalanced;
        failures.insert(failures.end(), t.failures.begin(), t.failures.end());
    }

    // Sources whose image is shared, and unbalanced paths never hit. Both
    // passes are sequential so the failure list is scheduling independent.
    const bool injective = !collided.any();
    bool surjective = true;
    for (std::uint64_t code = 0; code < total; ++code) {
        const LatticePath p = unrank(length, code);
        const PathClass c = classify(p);
        if ((c == PathClass::UpUnbalanced || c == PathClass::DownUnbalanced) && !seen.test(code)) {
            surjective = false;
            failures.push_back(code);
        }
        if (!injective && c == PathClass::Balanced) {
            try {
                const LatticePath image = kernel.forward(p);
                if (image.length() == length && collided.test(rank(image))) {
                    failures.push_back(code);
                }
            } catch (const Error&) {
                // already recorded by the sweep
            }
        }
    }
    std::sort(failures.begin(), failures.end());
    failures.erase(std::unique(failures.begin(), failures.end()), failures.end());

    const BigInt expected = binomial(static_cast<long>(length), static_cast<long>(n));
    r.balanced_count = BigInt(balanced);
    r.unbalanced_count = BigInt(unbalanced);
    r.expected_count = expected;
    r.injective = injective;
    r.surjective = surjective;
    r.roundtrip_failures = std::move(failures);
    r.bijection_ok = injective && surjective && r.roundtrip_failures.empty() &&
                     *r.balanced_count == expected && *r.unbalanced_count == expected;
    r.elapsed = std::chrono::steady_clock::now() - started;
    return r;
}

CensusReport verify_identity(unsigned n, IdentityMode mode) {
    const auto started = std::chrono::steady_clock::now();
    CensusReport r;
    r.n = n;
    r.total_paths = power_of_two(2 * n);

    if (mode == IdentityMode::Arithmetic) {
        if (n > kMaxArithmeticHalfLength) {
            throw RangeError("arithmetic identity supports n <= " +
                             std::to_string(kMaxArithmeticHalfLength));
        }
        r.check = CensusCheck::IdentityArithmetic;
        const auto c = central_binomials(n);
        BigInt lhs = 0;
        for (unsigned i = 0; i <= n; ++i) lhs += c[i] * c[n - i];
        r.identity_lhs = std::move(lhs);
        r.identity_rhs = r.total_paths;
    } else {
        if (n > kMaxStructuralHalfLength) {
            throw RangeError("structural identity supports n <= " +
                             std::to_string(kMaxStructuralHalfLength));
        }
        r.check = CensusCheck::IdentityStructural;
        const std::size_t length = 2 * n;
        std::vector<std::uint64_t> tally(n + 1, 0);
        for (const LatticePath& p : enumerate_class(length, ClassFilter::Any)) {
            const ZeroSplit s = split_at_last_zero(p);
            const PathClass suffix = classify(s.unbalanced_suffix);
            const bool suffix_ok = s.unbalanced_suffix.empty() ||
                                   suffix == PathClass::UpUnbalanced ||
                                   suffix == PathClass::DownUnbalanced;
            if (!is_balanced(s.balanced_prefix) || !suffix_ok ||
                !(concat(s.balanced_prefix, s.unbalanced_suffix) == p)) {
                continue;  // leaves the tally sum short of 4^n
            }
            ++tally[s.balanced_prefix.length() / 2];
        }

        const auto c = central_binomials(n);
        BigInt lhs = 0;
        for (unsigned i = 0; i <= n; ++i) {
            r.prefix_tallies.emplace_back(tally[i]);
            r.expected_tallies.push_back(c[i] * c[n - i]);
            lhs += tally[i];
        }
        r.identity_lhs = std::move(lhs);
        r.identity_rhs = r.total_paths;
    }
    r.elapsed = std::chrono::steady_clock::now() - started;
    return r;
}

namespace {

std::string join(const std::vector<BigInt>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += values[i].str();
    }
    return out;
}

std::string join(const std::vector<std::uint64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

const char* boolean(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_key_value(const CensusReport& r, bool include_timing) {
    std::ostringstream out;
    out << "check=" << to_string(r.check) << '\n';
    out << "n=" << r.n << '\n';
    out << "total_paths=" << r.total_paths.str() << '\n';
    if (r.check == CensusCheck::Bijection) {
        out << "balanced_count=" << r.balanced_count.value_or(0).str() << '\n';
        out << "unbalanced_count=" << r.unbalanced_count.value_or(0).str() << '\n';
        out << "expected_count=" << r.expected_count.value_or(0).str() << '\n';
        out << "injective=" << boolean(r.injective.value_or(false)) << '\n';
        out << "surjective=" << boolean(r.surjective.value_or(false)) << '\n';
        out << "bijection_ok=" << boolean(r.bijection_ok.value_or(false)) << '\n';
        out << "roundtrip_failures=" << join(r.roundtrip_failures) << '\n';
    } else {
        out << "identity_lhs=" << r.identity_lhs.value_or(0).str() << '\n';
        out << "identity_rhs=" << r.identity_rhs.value_or(0).str() << '\n';
        if (r.check == CensusCheck::IdentityStructural) {
            out << "prefix_tallies=" << join(r.prefix_tallies) << '\n';
            out << "expected_tallies=" << join(r.expected_tallies) << '\n';
        }
    }
    out << "ok=" << boolean(r.ok()) << '\n';
    if (include_timing) {
        out << "elapsed_ms="
            << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count() << '\n';
    }
    return out.str();
}

nlohmann::ordered_json to_json(const CensusReport& r, bool include_timing) {
    // Big integers are emitted as decimal strings to stay exact.
    nlohmann::ordered_json j;
    j["check"] = to_string(r.check);
    j["n"] = r.n;
    j["total_paths"] = r.total_paths.str();
    if (r.check == CensusCheck::Bijection) {
        j["balanced_count"] = r.balanced_count.value_or(0).str();
        j["unbalanced_count"] = r.unbalanced_count.value_or(0).str();
        j["expected_count"] = r.expected_count.value_or(0).str();
        j["injective"] = r.injective.value_or(false);
        j["surjective"] = r.surjective.value_or(false);
        j["bijection_ok"] = r.bijection_ok.value_or(false);
        j["roundtrip_failures"] = r.roundtrip_failures;
    } else {
        j["identity_lhs"] = r.identity_lhs.value_or(0).str();
        j["identity_rhs"] = r.identity_rhs.value_or(0).str();
        if (r.check == CensusCheck::IdentityStructural) {
            auto& tallies = j["prefix_tallies"] = nlohmann::ordered_json::array();
            for (const auto& t : r.prefix_tallies) tallies.push_back(t.str());
            auto& expected = j["expected_tallies"] = nlohmann::ordered_json::array();
            for (const auto& t : r.expected_tallies) expected.push_back(t.str());
        }
    }
    j["ok"] = r.ok();
    if (include_timing) {
        j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count();
    }
    return j;
}

}  // namespace latpath
