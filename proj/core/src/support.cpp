#include "fim/support.hpp"

#include <cmath>

#include "fim/error.hpp"

namespace fim {

SupportThreshold SupportThreshold::absolute(std::uint64_t count) {
  if (count < 1) {
    throw ConfigError("absolute support threshold must be >= 1");
  }
  SupportThreshold t;
  t.kind_ = Kind::absolute;
  t.count_ = count;
  return t;
}

SupportThreshold SupportThreshold::relative(double fraction) {
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw ConfigError("relative support threshold must lie in (0, 1]");
  }
  SupportThreshold t;
  t.kind_ = Kind::relative;
  t.fraction_ = fraction;
  return t;
}

std::uint64_t SupportThreshold::resolve(std::size_t n) const {
  if (kind_ == Kind::absolute) {
    return count_;
  }
  const double exact = fraction_ * static_cast<double>(n);
  const double nearest = std::round(exact);
  // Decimal fractions rarely have exact binary forms; treat products within
  // 1e-9 of an integer as that integer before taking the ceiling.
  if (std::abs(exact - nearest) < 1e-9) {
    return static_cast<std::uint64_t>(nearest);
  }
  return static_cast<std::uint64_t>(std::ceil(exact));
}

std::uint64_t support_of(const TransactionDatabase& db,
                         std::span<const ItemId> x) {
  for (ItemId id : x) {
    if (id >= db.item_count()) {
      throw UnknownItemError("item id out of range: " + std::to_string(id));
    }
  }
  std::uint64_t count = 0;
  for (const Basket& basket : db.baskets()) {
    if (is_subset_of(x, basket)) {
      ++count;
    }
  }
  return count;
}

double relative_support(std::uint64_t count, std::uint64_t n) {
  if (n == 0) {
    throw ThresholdError("relative support undefined for an empty database");
  }
  return static_cast<double>(count) / static_cast<double>(n);
}

}  // namespace fim
