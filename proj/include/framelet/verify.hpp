#pragma once

#include "framelet/bank.hpp"
#include "framelet/moments.hpp"

#include <optional>

namespace framelet {

struct LaurentMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<Filter>> entries;

    static LaurentMatrix zero(int rows, int cols, int dim);
};

struct FilterDiagnostics {
    Order vmo;
    bool interpolatory_highpass;  // zero coefficients on M Z^d \ {0}
};

struct BankReport {
    bool identity_holds = false;
    std::optional<std::pair<int, int>> first_failing_entry;
    std::string failure_reason;
    std::vector<FilterDiagnostics> bs, tbs;  // tbs empty for quasi-tight banks
    bool vmo_sr_inequality = true;   // min vmo(b) <= sr(ta, M) and dual
    bool vmo_lpm_inequality = true;  // min vmo(b) + min vmo(tb) <= lpm(u_{a,ta})
    unsigned s = 0;
};

// N_{a,ta}: d_M x d_M matrix d_M^{-1} I - [conj coset column][coset row]
LaurentMatrix polyphase_defect(const Filter& a, const Filter& ta,
                               const DilationContext& ctx);

BankReport verify_dual_bank(const DualBank& bank);
BankReport verify_quasitight(const QuasiTightBank& bank);

// numeric spot check of the frequency-domain identity (1e-8 tolerance)
bool frequency_cross_check(const DualBank& bank, int num_samples = 20,
                           unsigned seed = 20240817);

}  // namespace framelet
