#pragma once

#include "framelet/lattice.hpp"

#include <string>

namespace framelet {

// where a high-pass filter came from in the construction
struct Provenance {
    enum Kind { ExplicitB1, ExplicitBj, FactorTerm } kind;
    int j = 0;  // coset index for ExplicitBj / FactorTerm
    int t = 0;  // term index within the coset factorization
    std::string str() const;
};

struct DualBank {
    DilationContext ctx;
    Filter a, ta;
    std::vector<Filter> bs, tbs;
    std::vector<Provenance> provenance;
    unsigned n1 = 0, n2 = 0;
};

struct QuasiTightBank {
    DilationContext ctx;
    Filter a;
    std::vector<Filter> bs;
    std::vector<int> eps;
    std::vector<Provenance> provenance;
    unsigned m = 0;
};

}  // namespace framelet
