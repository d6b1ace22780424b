#pragma once

#include "framelet/lattice.hpp"

#include <optional>
#include <string>

namespace framelet {

struct NotCompatible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConditionNotMet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// finite group of d x d integer matrices (all of determinant +-1)
struct SymmetryGroup {
    std::vector<IntMatrix> elements;
    std::string name;  // optional label

    int dim() const { return elements.empty() ? 0 : (int)elements[0].size(); }
    bool contains(const IntMatrix& E) const;
    // closure under products and inverses, identity present, det = +-1
    bool verify_axioms() const;
};

struct SymmetryType {
    SymmetryGroup group;
    RationalVector center;
    int sign = 1;  // +1 symmetric, -1 anti-symmetric
};

SymmetryGroup group_pmI(int dim);
SymmetryGroup group_D4();
SymmetryGroup group_D6();
// "D4", "D6", "pmI", or throws
SymmetryGroup group_by_name(const std::string& name, int dim = 2);

// conjugation by M maps G into G (with integer entries)
bool is_compatible(const DilationContext& ctx, const SymmetryGroup& G);

// (G, c, eps) with u(E(k-c)+c) = eps u(k) for all E, k, if such c and eps
// exist; extra_centers are tried first
std::optional<SymmetryType> detect_symmetry(const Filter& u, const SymmetryGroup& G,
                                            const std::vector<RationalVector>& extra_centers = {});

// maximal subgroup with (I - E) M^{-1} gamma integral
SymmetryGroup coset_symmetry_subgroup(const SymmetryGroup& G, const Index& gamma,
                                      const DilationContext& ctx);

// symmetry type of v^(xi) = e^{-i gamma.xi} u^(M^T xi): (M G M^{-1}, gamma + M c, eps)
SymmetryType transfer_symmetry(const SymmetryType& t, const Index& gamma,
                               const DilationContext& ctx);

struct Lemma31Diagnostic {
    int branch;  // 1: forces eps = 1, c = 0;  2: sr(a, M) <= 1
    bool consistent;
    unsigned observed_sr;
};

Lemma31Diagnostic lemma31_check(const Filter& a, const DilationContext& ctx,
                                const SymmetryType& t);

bool matrices_equal(const IntMatrix& A, const IntMatrix& B);
IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B);
IntMatrix identity_matrix(int dim);

}  // namespace framelet
