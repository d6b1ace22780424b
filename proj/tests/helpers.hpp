#pragma once

#include "framelet/io.hpp"
#include "framelet/lattice.hpp"

#include <string>

namespace testutil {

inline std::string fixture(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

inline framelet::Filter load(const std::string& name) {
    return framelet::load_filter(fixture(name));
}

inline framelet::DilationContext ctx_1d() { return framelet::make_context({{2}}); }
inline framelet::DilationContext ctx_2I() { return framelet::make_context({{2, 0}, {0, 2}}); }
inline framelet::DilationContext ctx_quincunx() {
    return framelet::make_context({{1, 1}, {1, -1}});
}
inline framelet::DilationContext ctx_root3() {
    return framelet::make_context({{1, -2}, {2, -1}});
}
inline framelet::DilationContext ctx_shear() {
    return framelet::make_context({{2, 1}, {0, 2}});
}

// {0: 1/2, 1: 1/2} on Z
inline framelet::Filter haar() {
    framelet::Filter f(1);
    f.set({0}, framelet::Rational(1, 2));
    f.set({1}, framelet::Rational(1, 2));
    return f;
}

}  // namespace testutil
