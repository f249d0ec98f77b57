#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace symineq {

/// A partition of a nonnegative integer: a weakly decreasing sequence of
/// positive parts (canonical form stores no zeros). Immutable.
class Partition {
public:
    Partition() = default;  // the empty partition, degree 0

    /// Validates weak decrease and strips trailing zeros.
    /// Throws std::invalid_argument if the sequence increases anywhere.
    explicit Partition(std::vector<unsigned> parts);

    /// Accepts comma-separated parts with optional caret blocks and
    /// whitespace: "3,1,1", "3,1^2" and "2^4" all parse.
    static Partition parse(const std::string& text);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned degree() const { return degree_; }
    std::size_t length() const { return parts_.size(); }
    unsigned max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    /// Plain comma list: "3,1,1,1". Empty partition prints as "0".
    std::string str() const;
    /// Caret blocks for runs of length >= 2: "3,1^3".
    std::string block_str() const;

    bool operator==(const Partition&) const = default;
    /// Lexicographic on the parts list; enumerate_partitions emits in
    /// decreasing order of this comparison (reverse-lexicographic).
    std::strong_ordering operator<=>(const Partition& other) const {
        return parts_ <=> other.parts_;
    }

private:
    std::vector<unsigned> parts_;
    unsigned degree_ = 0;
};

/// All partitions of d in reverse-lexicographic order, (d) first and (1^d)
/// last. Throws std::domain_error for d = 0.
std::vector<Partition> enumerate_partitions(unsigned d);

/// Dominance order: every prefix sum of mu is >= the matching prefix sum of
/// lambda (parts lists padded with zeros internally). Requires equal
/// degrees; throws std::domain_error otherwise.
bool majorizes(const Partition& mu, const Partition& lambda);

/// The pair (mu, lambda) = ((2^floor(d/2), 1^(d mod 2)), (3, 1^(d-3)))
/// with mu not majorizing lambda. Defined for d >= 8 only; throws
/// std::domain_error below that.
std::pair<Partition, Partition> counterexample_pair(unsigned d);

}  // namespace symineq
