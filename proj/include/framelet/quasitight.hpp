#pragma once

#include "framelet/bank.hpp"
#include "framelet/dual.hpp"

namespace framelet {

struct NotHermitian : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OddSumRuleOrder : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// signed sum-of-squares: pairs (eps_l, u_l) with
// sum_l eps_l * star(u_l)*u_l == A exactly and vmo(u_l) >= m
std::vector<std::pair<int, Filter>> hermitian_sos_decompose(const Filter& A, unsigned m);

QuasiTightBank build_quasitight(const Filter& a, const DilationContext& ctx, unsigned m);

}  // namespace framelet
