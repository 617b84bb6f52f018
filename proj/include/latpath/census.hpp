#ifndef LATPATH_CENSUS_HPP
#define LATPATH_CENSUS_HPP

#include "latpath/path.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace latpath {

using BigInt = boost::multiprecision::cpp_int;

// Exact C(n, k). Throws RangeError unless 0 <= k <= n.
BigInt binomial(long n, long k);

// C(2i, i) for i = 0..n.
std::vector<BigInt> central_binomials(std::size_t n);

// ---------------------------------------------------------------------------
// Splitting at the last return to height 0.

std::size_t last_zero_touch(const LatticePath& p) noexcept;

struct ZeroSplit {
    LatticePath balanced_prefix;
    LatticePath unbalanced_suffix;  // empty, UpUnbalanced or DownUnbalanced
};

// Throws DomainError(OddLength).
ZeroSplit split_at_last_zero(const LatticePath& p);

// ---------------------------------------------------------------------------
// Enumeration in rank order.

enum class ClassFilter { Any, Balanced, UpUnbalanced, DownUnbalanced, Unbalanced, Other };

bool matches(ClassFilter filter, PathClass c) noexcept;

inline constexpr std::size_t kMaxEnumerationLength = 30;

class ClassEnumeration {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = LatticePath;
        using difference_type = std::ptrdiff_t;
        using pointer = const LatticePath*;
        using reference = const LatticePath&;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) noexcept {
            return a.code_ == b.code_;
        }

    private:
        friend class ClassEnumeration;
        iterator(const ClassEnumeration* owner, std::uint64_t code);
        void settle();

        const ClassEnumeration* owner_ = nullptr;
        std::uint64_t code_ = 0;
        LatticePath current_;
    };

    ClassEnumeration(std::size_t length, ClassFilter filter);

    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, limit_); }

    std::size_t length() const noexcept { return length_; }

private:
    std::size_t length_;
    ClassFilter filter_;
    std::uint64_t limit_;
};

// Throws RangeError for length > kMaxEnumerationLength.
ClassEnumeration enumerate_class(std::size_t length, ClassFilter filter);

// ---------------------------------------------------------------------------
// Exhaustive verification.

enum class CensusCheck { Bijection, IdentityArithmetic, IdentityStructural };
enum class IdentityMode { Arithmetic, Structural };

std::string_view to_string(CensusCheck c) noexcept;

struct CensusReport {
    CensusCheck check = CensusCheck::Bijection;
    unsigned n = 0;
    BigInt total_paths;  // 2^{2n}

    // Bijection check.
    std::optional<BigInt> balanced_count;
    std::optional<BigInt> unbalanced_count;
    std::optional<BigInt> expected_count;  // C(2n, n)
    std::optional<bool> injective;
    std::optional<bool> surjective;
    std::optional<bool> bijection_ok;
    std::vector<std::uint64_t> roundtrip_failures;  // ranks, ascending

    // Identity checks.
    std::optional<BigInt> identity_lhs;
    std::optional<BigInt> identity_rhs;
    std::vector<BigInt> prefix_tallies;   // structural: paths whose last zero is at 2i
    std::vector<BigInt> expected_tallies; // C(2i,i) * C(2n-2i,n-i)

    std::chrono::nanoseconds elapsed{0};

    bool ok() const;
};

// The pair of maps under test. verify_bijection defaults to phi/phi_inverse;
// tests substitute faulty kernels.
struct BijectionKernel {
    std::function<LatticePath(const LatticePath&)> forward;
    std::function<LatticePath(const LatticePath&)> inverse;

    static BijectionKernel standard();
};

inline constexpr unsigned kMaxBijectionHalfLength = 10;
inline constexpr unsigned kMaxArithmeticHalfLength = 10000;
inline constexpr unsigned kMaxStructuralHalfLength = 12;

// Sweeps all 2^{2n} paths split into `partitions` rank intervals, run
// concurrently. The report does not depend on `partitions` or scheduling.
// Throws RangeError for n outside [1, 10] or partitions == 0.
CensusReport verify_bijection(unsigned n, unsigned partitions = 1);
CensusReport verify_bijection(unsigned n, unsigned partitions, const BijectionKernel& kernel);

// Throws RangeError for n above the mode's cap.
CensusReport verify_identity(unsigned n, IdentityMode mode);

// Serialization. Field names are stable; `elapsed` is only emitted on request.
std::string to_key_value(const CensusReport& r, bool include_timing = false);
nlohmann::ordered_json to_json(const CensusReport& r, bool include_timing = false);

}  // namespace latpath

#endif  // LATPATH_CENSUS_HPP
