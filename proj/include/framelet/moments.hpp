#pragma once

#include "framelet/lattice.hpp"

namespace framelet {

// An order is exact below the cap; at_least_cap means the defining condition
// still held at the cap (reported as ">= cap").
struct Order {
    unsigned value = 0;
    bool at_least_cap = false;
    bool operator>=(unsigned m) const { return at_least_cap || value >= m; }
};

inline constexpr unsigned kDefaultMomentCap = 16;

// largest m <= cap with sum_k u(k) k^mu == 0 for all |mu| < m
Order vanishing_moment_order(const Filter& u, unsigned cap = kDefaultMomentCap);

// largest m <= cap with sum u(k) == 1 and sum_k u(k) k^mu == 0 for 1 <= |mu| < m
Order linear_phase_moment_order(const Filter& u, unsigned cap = kDefaultMomentCap);

// largest m <= cap such that the coset moments S_mu(gamma) =
// sum_k a(gamma + M k)(gamma + M k)^mu agree across all gamma for |mu| < m
Order sum_rule_order(const Filter& a, const DilationContext& ctx,
                     unsigned cap = kDefaultMomentCap);

// u_{a,ta} = delta - star(a) * ta
Filter mixing_filter(const Filter& a, const Filter& ta);

struct MomentReport {
    Order sr, vmo, lpm;
    unsigned cap;
};

MomentReport moment_report(const Filter& u, const DilationContext& ctx,
                           unsigned cap = kDefaultMomentCap);

std::string order_to_string(const Order& o);

}  // namespace framelet
