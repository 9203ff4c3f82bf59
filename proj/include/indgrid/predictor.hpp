/**
 * Closed-form homotopy types for the supported families, as wedges of spheres.
 */
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "errors.hpp"
#include "families.hpp"
#include "homology.hpp"

namespace indgrid {

/// A wedge of spheres; no spheres means a point.
class WedgeDescriptor {
public:
    WedgeDescriptor() = default;

    static WedgeDescriptor point() { return {}; }
    static WedgeDescriptor spheres(int dim, std::uint64_t count = 1) {
        WedgeDescriptor w;
        w.add(dim, count);
        return w;
    }

    bool is_point() const noexcept { return spheres_.empty(); }
    const std::map<int, std::uint64_t>& sphere_counts() const noexcept { return spheres_; }

    WedgeDescriptor& add(int dim, std::uint64_t count = 1) {
        if (dim < 0) throw std::invalid_argument("sphere dimension must be nonnegative");
        if (count > 0) spheres_[dim] += count;
        return *this;
    }

    /// Wedge sum.
    WedgeDescriptor& merge(const WedgeDescriptor& o) {
        for (const auto& [d, c] : o.spheres_) spheres_[d] += c;
        return *this;
    }

    /// Sigma^s; the suspension of a point is a point.
    WedgeDescriptor suspended(int s = 1) const {
        WedgeDescriptor w;
        for (const auto& [d, c] : spheres_) w.add(d + s, c);
        return w;
    }

    std::string to_string() const {
        if (is_point()) return "pt";
        std::string s;
        for (auto it = spheres_.rbegin(); it != spheres_.rend(); ++it) {
            if (!s.empty()) s += " v ";
            if (it->second > 1) s += std::to_string(it->second) + "*";
            s += "S^" + std::to_string(it->first);
        }
        return s;
    }

    bool operator==(const WedgeDescriptor&) const = default;

private:
    std::map<int, std::uint64_t> spheres_;
};

namespace predict_detail {

inline WedgeDescriptor path(int n) {
    const int k = n / 3;
    switch (n % 3) {
    case 0: return WedgeDescriptor::spheres(k - 1);
    case 1: return WedgeDescriptor::point();
    default: return WedgeDescriptor::spheres(k);
    }
}

inline WedgeDescriptor cycle(int n) {
    const int k = n / 3;
    switch (n % 3) {
    case 0: return WedgeDescriptor::spheres(k - 1, 2);
    case 1: return WedgeDescriptor::spheres(k - 1);
    default: return WedgeDescriptor::spheres(k);
    }
}

inline WedgeDescriptor grid2(int n) {
    return n % 2 == 0 ? WedgeDescriptor::spheres(n / 2 - 1) : WedgeDescriptor::spheres(n / 2);
}

inline WedgeDescriptor grid3(int n) { return WedgeDescriptor::spheres(3 * (n / 4) + n % 4 - 1); }

inline WedgeDescriptor grid4(int n) {
    const int k = n / 6;
    std::uint64_t count = 2 * k + 1;
    if (n % 6 == 1) count = 2 * k;
    if (n % 6 == 4) count = 2 * k + 2;
    return count == 0 ? WedgeDescriptor::point() : WedgeDescriptor::spheres(n - 1, count);
}

inline WedgeDescriptor grid5(int n) {
    switch (n) {
    case 1: return WedgeDescriptor::spheres(1);
    case 4: return WedgeDescriptor::spheres(4);
    case 5: return WedgeDescriptor::spheres(5);
    case 9: return WedgeDescriptor::spheres(10);
    default: break;
    }
    const int t = n / 20, l = (n % 20) / 4, eps = n % 4, nu = eps / 2;
    const int np = 25 * t + 5 * l + eps - 1 + nu;
    const int r = n % 20;
    WedgeDescriptor w = WedgeDescriptor::spheres(np, static_cast<std::uint64_t>(3 - 2 * nu));
    switch (r) {
    case 0: case 4: case 5: case 9: case 10: case 14: case 15: case 19:
        for (int i = np - t - nu + 1; i < np; ++i) w.add(i, 4);
        w.add(np - t - nu, 2);
        break;
    case 1: case 18:
        for (int i = np - t - 2 * nu + 1; i < np; ++i) w.add(i, 4);
        break;
    default:
        for (int i = np - t; i < np; ++i) w.add(i, 4);
        break;
    }
    return w;
}

inline WedgeDescriptor x3(int n) {
    if (n % 2 == 1) return WedgeDescriptor::point();
    const int k = n / 4;
    return n % 4 == 0 ? WedgeDescriptor::spheres(3 * k - 1) : WedgeDescriptor::spheres(3 * k + 1);
}

inline WedgeDescriptor y3(int n) {
    if (n == 1) return WedgeDescriptor::point();
    if (n == 2) return WedgeDescriptor::spheres(0);
    return x3(n - 2).suspended();
}

inline WedgeDescriptor x4(int n) {
    return n % 3 == 1 ? WedgeDescriptor::point() : WedgeDescriptor::spheres(n - 1);
}

inline WedgeDescriptor y4(int n) {
    if (n == 1) return WedgeDescriptor::spheres(0);
    return x4(n - 1).suspended();
}

inline WedgeDescriptor x5(int n) {
    if (n % 2 == 1) return WedgeDescriptor::point();
    const int l = n / 4;
    return n % 4 == 0 ? WedgeDescriptor::spheres(5 * l - 1) : WedgeDescriptor::spheres(5 * l + 2);
}

inline WedgeDescriptor y5(int n) {
    if (n == 1) return WedgeDescriptor::point();
    if (n == 2) return WedgeDescriptor::spheres(1);
    return x5(n - 2).suspended(2);
}

inline int kappa(int k) { return k >= 2 ? 1 : 0; }

inline WedgeDescriptor a_minus_v(int n, int k) {
    if (n % 2 == 1) return WedgeDescriptor::point();
    const int l = n / 4;
    const std::uint64_t c = 1 + kappa(k);
    return n % 4 == 0 ? WedgeDescriptor::spheres(5 * k + 5 * l - 1, c) : WedgeDescriptor::spheres(5 * k + 5 * l + 2, c);
}

inline WedgeDescriptor a_small(int n, int k) {
    switch (n) {
    case 1: return k == 0 ? WedgeDescriptor::spheres(1) : WedgeDescriptor::point();
    case 2: return WedgeDescriptor::spheres(5 * k + 2, k >= 2 ? 2 : 1);
    case 3: return WedgeDescriptor::spheres(5 * k + 3, k >= 1 ? 2 : 1);
    case 4: return WedgeDescriptor::spheres(5 * k + 4, k >= 2 ? 2 : 1);
    default: return WedgeDescriptor::spheres(5 * k + 5, k >= 1 ? 2 : 1);
    }
}

inline WedgeDescriptor a(int n, int k) {
    if (n <= 5) return a_small(n, k);
    if (n % 2 == 1) return a(n - 5, k + 1).suspended();
    const int t = n / 20, l = (n % 20) / 4, eps = n % 4;
    const int base = 25 * t + 5 * l + 5 * k;
    const int low = 24 * t + 5 * l + 5 * k;
    WedgeDescriptor w;
    if (eps == 0) {
        w.add(base - 1, static_cast<std::uint64_t>(3 + kappa(k)));
        if (l <= 1) {
            for (int i = low; i <= base - 2; ++i) w.add(i, 4);
            w.add(low - 1, 2);
        } else {
            for (int i = low - 1; i <= base - 2; ++i) w.add(i, 4);
        }
    } else {
        w.add(base + 2, static_cast<std::uint64_t>(1 + kappa(k)));
        if (l <= 3) {
            for (int i = low + 2; i <= base + 1; ++i) w.add(i, 4);
            if (l >= 2) w.add(low + 1, 2);
        } else {
            for (int i = low + 1; i <= base + 1; ++i) w.add(i, 4);
        }
    }
    return w;
}

inline WedgeDescriptor b(int k) {
    return k == 1 ? WedgeDescriptor::spheres(4) : WedgeDescriptor::spheres(5 * k - 1, 2);
}

inline WedgeDescriptor b_prime(int k) {
    return k == 1 ? WedgeDescriptor::spheres(0) : WedgeDescriptor::spheres(5 * k - 5, 2);
}

} // namespace predict_detail

/// The stated homotopy type of I(G) for the family member. Throws UnsupportedSpec outside scope.
inline WedgeDescriptor predict(const FamilySpec& spec) {
    spec.validate();
    namespace p = predict_detail;
    switch (spec.kind) {
    case FamilyKind::Path: return p::path(spec.n);
    case FamilyKind::Cycle: return p::cycle(spec.n);
    case FamilyKind::Grid: {
        int n = spec.n, k = spec.k;
        if (k > 5 && n <= 5) std::swap(n, k);
        if (k > 5) throw UnsupportedSpec("no formula in scope for " + spec.to_string() + " (both sides >= 6)");
        switch (k) {
        case 1: return p::path(n);
        case 2: return p::grid2(n);
        case 3: return p::grid3(n);
        case 4: return p::grid4(n);
        default: return p::grid5(n);
        }
    }
    case FamilyKind::X3: return p::x3(spec.n);
    case FamilyKind::Y3: return p::y3(spec.n);
    case FamilyKind::X4: return p::x4(spec.n);
    case FamilyKind::Y4: return p::y4(spec.n);
    case FamilyKind::X5: return p::x5(spec.n);
    case FamilyKind::Y5: return p::y5(spec.n);
    case FamilyKind::A: return p::a(spec.n, spec.k);
    case FamilyKind::AMinusV: return p::a_minus_v(spec.n, spec.k);
    case FamilyKind::B: return p::b(spec.k);
    case FamilyKind::BPrime: return p::b_prime(spec.k);
    }
    throw UnsupportedSpec("no formula in scope for " + spec.to_string());
}

/// Free reduced homology with one generator per sphere.
inline HomologyProfile descriptor_homology(const WedgeDescriptor& d) {
    HomologyProfile p;
    p.coeff = Coefficients::Integers;
    for (const auto& [dim, count] : d.sphere_counts()) p.betti[dim] = count;
    return p;
}

inline std::int64_t descriptor_euler(const WedgeDescriptor& d, bool reduced = false) {
    std::int64_t chi = 0;
    for (const auto& [dim, count] : d.sphere_counts())
        chi += (dim % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(count);
    return reduced ? chi : chi + 1;
}

} // namespace indgrid
