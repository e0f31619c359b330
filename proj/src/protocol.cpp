#include "parkstat/protocol.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace parkstat::protocol {

void validate(const PreferenceVector& alpha) {
  const Street& street = alpha.street;
  if (street.spots < 1)
    throw std::invalid_argument("street needs at least one spot");
  const int m = static_cast<int>(alpha.prefs.size());
  const int cap =
      street.kind == StreetKind::Linear ? street.spots : street.spots - 1;
  if (m < 1 || m > cap)
    throw std::invalid_argument("car count " + std::to_string(m) +
                                " out of range 1.." + std::to_string(cap));
  for (int a : alpha.prefs)
    if (a < 1 || a > street.spots)
      throw std::invalid_argument("preference " + std::to_string(a) +
                                  " outside 1.." +
                                  std::to_string(street.spots));
}

ParkingResult park_deterministic(const PreferenceVector& alpha,
                                 const CoinSequence& coins) {
  std::size_t used = 0;
  return park(alpha, [&]() {
    if (used == coins.size())
      throw CoinsExhaustedError("coin sequence exhausted after " +
                                std::to_string(coins.size()) + " flips");
    return coins[used++];
  });
}

bool classical_is_pf(const PreferenceVector& alpha) {
  validate(alpha);
  const int m = static_cast<int>(alpha.prefs.size());
  std::vector<int> sorted = alpha.prefs;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < m; ++i)
    if (sorted[i] > i + 1) return false;
  return true;
}

}  // namespace parkstat::protocol
