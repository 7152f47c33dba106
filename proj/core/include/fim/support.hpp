#ifndef FIM_SUPPORT_HPP
#define FIM_SUPPORT_HPP

#include <cstdint>
#include <span>

#include "fim/database.hpp"
#include "fim/itemset.hpp"

namespace fim {

// Minimum support cutoff, inclusive: an itemset is frequent when its
// absolute support count is >= the resolved threshold.
class SupportThreshold {
public:
  enum class Kind { absolute, relative };

  // count must be >= 1.
  static SupportThreshold absolute(std::uint64_t count);
  // fraction must lie in (0, 1].
  static SupportThreshold relative(double fraction);

  Kind kind() const { return kind_; }
  std::uint64_t count() const { return count_; }
  double fraction() const { return fraction_; }

  // Absolute threshold for a database of n baskets: the count itself, or
  // ceil(fraction * n) for relative thresholds. May be 0 only when n == 0.
  std::uint64_t resolve(std::size_t n) const;

private:
  SupportThreshold() = default;
  Kind kind_ = Kind::absolute;
  std::uint64_t count_ = 1;
  double fraction_ = 0.0;
};

// Number of baskets that contain x as a subset. Throws UnknownItemError if
// any member of x is not in the database dictionary.
std::uint64_t support_of(const TransactionDatabase& db,
                         std::span<const ItemId> x);

// count / n. Throws ThresholdError when n == 0.
double relative_support(std::uint64_t count, std::uint64_t n);

}  // namespace fim

#endif  // FIM_SUPPORT_HPP
