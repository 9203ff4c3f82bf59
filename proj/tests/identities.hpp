#pragma once

#include <string>
#include <vector>

#include "indgrid/predictor.hpp"

namespace testing {

/// Each failure is reported as "<identity> n=<n>[ k=<k>]".
inline std::vector<std::string> predictor_identity_failures() {
    using namespace indgrid;
    using S = FamilySpec;
    std::vector<std::string> out;
    auto fail = [&](const char* what, int n, int k = -1) {
        out.push_back(std::string(what) + " n=" + std::to_string(n) + (k >= 0 ? " k=" + std::to_string(k) : ""));
    };
    for (int n = 6; n <= 400; n += 2)
        if (predict(S::grid(n, 5)) != predict(S::a(n, 0))) fail("five-row even", n);
    for (int n = 7; n <= 401; n += 2)
        if (predict(S::grid(n, 5)) != predict(S::a(n - 5, 1)).suspended()) fail("five-row odd", n);
    for (int n = 3; n <= 100; ++n) {
        auto rhs = predict(FamilySpec{FamilyKind::X4, n - 1, 0}).suspended();
        rhs.merge(predict(S::grid(n - 2, 4)).suspended(2));
        if (predict(S::grid(n, 4)) != rhs) fail("four-row recursion", n);
    }
    for (int n = 7; n <= 100; ++n) {
        auto rhs = WedgeDescriptor::spheres(n - 1, 2);
        rhs.merge(predict(S::grid(n - 6, 4)).suspended(6));
        if (predict(S::grid(n, 4)) != rhs) fail("four-row period", n);
    }
    for (int n = 12; n <= 60; n += 2)
        for (int k = 0; k <= 6; ++k) {
            auto rhs = predict(S::a_minus_v(n, k));
            rhs.merge(predict(S::a(n - 10, k + 2)).suspended(2));
            if (predict(S::a(n, k)) != rhs) fail("A recursion", n, k);
        }
    return out;
}

} // namespace testing
