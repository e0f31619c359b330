#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "parkstat/errors.hpp"

namespace parkstat::protocol {

// Heads commits the car forward (clockwise); Tails commits it backward.
enum class Coin : std::uint8_t { Heads, Tails };

enum class StreetKind : std::uint8_t { Linear, Circular };

struct Street {
  StreetKind kind = StreetKind::Linear;
  int spots = 0;
};

inline Street linear_street(int spots) { return {StreetKind::Linear, spots}; }
inline Street circular_street(int spots) { return {StreetKind::Circular, spots}; }

using CoinSequence = std::vector<Coin>;

struct PreferenceVector {
  std::vector<int> prefs;  // 1-based spot indices, car order
  Street street;
};

// Every preference must lie in 1..spots; the car count may not exceed spots
// on a line, or spots-1 on a circle (so at least one spot stays vacant).
// Throws std::invalid_argument.
void validate(const PreferenceVector& alpha);

// Marker for a car that drove off the street.
inline constexpr int kExited = 0;

struct ParkingResult {
  std::vector<int> assignment;  // spot per car, kExited for cars that left
  std::vector<int> occupied;    // ascending spot list
  std::vector<int> vacant;      // ascending spot list
  std::vector<int> unlucky;     // 1-based indices of cars that had to flip
  int flips_used = 0;
  bool success = true;
};

// First vacant spot strictly beyond `from` in the coin's direction, or
// kExited when the search runs off the end of a linear street. Circular
// streets wrap; the search covers every other spot once.
inline int next_vacant(const Street& street, const std::vector<char>& occupied,
                       int from, Coin coin) {
  const int last = street.spots;
  if (street.kind == StreetKind::Linear) {
    if (coin == Coin::Heads) {
      for (int s = from + 1; s <= last; ++s)
        if (!occupied[s]) return s;
    } else {
      for (int s = from - 1; s >= 1; --s)
        if (!occupied[s]) return s;
    }
    return kExited;
  }
  const int step = coin == Coin::Heads ? 1 : -1;
  int s = from;
  for (int i = 1; i < last; ++i) {
    s += step;
    if (s == 0) s = last;
    if (s == last + 1) s = 1;
    if (!occupied[s]) return s;
  }
  return kExited;
}

// Runs every car through the one-flip protocol. A car parks at its
// preference when vacant (no flip); otherwise it consumes one coin,
// commits to that direction, and takes the first vacant spot it reaches.
// A car that runs off a linear street is recorded as kExited and the
// remaining cars still run; only the success flag is final.
template <typename CoinFn>
ParkingResult park(const PreferenceVector& alpha, CoinFn&& next_coin) {
  validate(alpha);
  const Street& street = alpha.street;
  const int m = static_cast<int>(alpha.prefs.size());
  std::vector<char> occ(static_cast<std::size_t>(street.spots) + 1, 0);
  ParkingResult r;
  r.assignment.assign(m, kExited);
  for (int car = 0; car < m; ++car) {
    const int want = alpha.prefs[car];
    if (!occ[want]) {
      occ[want] = 1;
      r.assignment[car] = want;
      continue;
    }
    r.unlucky.push_back(car + 1);
    ++r.flips_used;
    const Coin coin = next_coin();
    const int spot = next_vacant(street, occ, want, coin);
    if (spot == kExited) {
      r.success = false;
      continue;
    }
    occ[spot] = 1;
    r.assignment[car] = spot;
  }
  for (int s = 1; s <= street.spots; ++s)
    (occ[s] ? r.occupied : r.vacant).push_back(s);
  return r;
}

// Same protocol with a pre-committed coin sequence. Throws
// CoinsExhaustedError when an unlucky car finds no remaining flip;
// surplus coins are ignored.
ParkingResult park_deterministic(const PreferenceVector& alpha,
                                 const CoinSequence& coins);

// Classical parking-function criterion: at least i of the preferences are
// <= i for every i. Equivalent to success under all-Heads coins on a
// linear street with spots == cars.
bool classical_is_pf(const PreferenceVector& alpha);

// State handed to walk_branches visitors at every leaf. `occupied` is the
// 1-based occupancy at that leaf and is only valid during the visit.
struct BranchLeaf {
  bool success;
  int heads;
  int tails;
  int unlucky;
  const std::vector<char>& occupied;
};

// Enumerates every coin branch of the protocol for one preference vector.
// A branch carries weight p^heads * (1-p)^tails. With stop_on_exit the
// walk truncates a branch at the first exit (its success flag is already
// final); otherwise remaining cars keep running, which keeps per-branch
// unlucky counts meaningful on streets where nobody exits.
template <typename Visitor>
void walk_branches(const Street& street, std::span<const int> prefs,
                   bool stop_on_exit, Visitor&& visit) {
  const int m = static_cast<int>(prefs.size());
  std::vector<char> occ(static_cast<std::size_t>(street.spots) + 1, 0);
  auto rec = [&](auto&& self, int car, int heads, int tails, int unlucky,
                 bool success) -> void {
    if (car == m) {
      visit(BranchLeaf{success, heads, tails, unlucky, occ});
      return;
    }
    const int want = prefs[car];
    if (!occ[want]) {
      occ[want] = 1;
      self(self, car + 1, heads, tails, unlucky, success);
      occ[want] = 0;
      return;
    }
    for (const Coin coin : {Coin::Heads, Coin::Tails}) {
      const int h = heads + (coin == Coin::Heads);
      const int t = tails + (coin == Coin::Tails);
      const int spot = next_vacant(street, occ, want, coin);
      if (spot == kExited) {
        if (stop_on_exit)
          visit(BranchLeaf{false, h, t, unlucky + 1, occ});
        else
          self(self, car + 1, h, t, unlucky + 1, false);
      } else {
        occ[spot] = 1;
        self(self, car + 1, h, t, unlucky + 1, success);
        occ[spot] = 0;
      }
    }
  };
  rec(rec, 0, 0, 0, 0, true);
}

}  // namespace parkstat::protocol
