#pragma once

#include <algorithm>
#include <cstdlib>

#include "opgrid/grid.hpp"

namespace opgrid {

class EmptyKernelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

/// calD with the empty-sum convention calD(j<0) = 0, so circuits may pass
/// through vertices below the validity region.
inline WeylElement calD_or_zero(long j) {
    return j < 0 ? WeylElement() : WeylElement::calD(j);
}

template <class Tag>
Subspace<Tag> require_line(Subspace<Tag> s, const std::string& what) {
    if (s.dim() == 0) throw EmptyKernelError("empty vertex space at " + what);
    return s;
}

}  // namespace detail

/// The Laguerre arrows that are polynomial in the source indices (S and SE
/// involve calD with vertex-dependent order and have no symbolic form).
inline WeylElement laguerre_grid_arrow_symbolic(ArrowKind kind) {
    using namespace syms;
    using E = WeylElement;
    const ParamPoly one(1);
    const E X = E::X(), D = E::D(), C = E::C();
    switch (kind) {
        case ArrowKind::E: return E::scalar(k) + X * C;
        case ArrowKind::W: return -D;
        case ArrowKind::N: return -C;
        case ArrowKind::NE: return E::scalar(n + k + one) + X * C;
        case ArrowKind::SW: return E::scalar(n) - X * D;
        case ArrowKind::NW: return D * C;
        default: throw MissingArrow("no symbolic laguerre arrow");
    }
}

/// Laguerre grid: H_{nk} = XCD + (k+1)D + n on Laurent polynomials,
/// vertex spaces U_{nk} = ker H_{nk} ∩ ker D^{n+1}.
inline GridSpec<WeylLaurent> laguerre_grid() {
    using namespace syms;
    using E = WeylElement;
    const ParamPoly one(1);
    const E X = E::X(), D = E::D(), C = E::C();

    GridSpec<WeylLaurent> g;
    g.name = "laguerre";
    g.second = Sym::k;
    g.valid = [](Vertex v) { return v.n >= 0 && v.n + v.s >= 0; };
    using AK = ArrowKind;
    g.disp[static_cast<int>(AK::E)] = Displacement{+1, -1};
    g.disp[static_cast<int>(AK::W)] = Displacement{-1, +1};
    g.disp[static_cast<int>(AK::N)] = Displacement{0, +1};
    g.disp[static_cast<int>(AK::S)] = Displacement{0, -1};
    g.disp[static_cast<int>(AK::NE)] = Displacement{+1, 0};
    g.disp[static_cast<int>(AK::SW)] = Displacement{-1, 0};
    g.disp[static_cast<int>(AK::NW)] = Displacement{-1, +2};
    g.disp[static_cast<int>(AK::SE)] = Displacement{+1, -2};

    g.arrow_symbolic = [](AK kind) -> std::optional<E> {
        if (kind == AK::S || kind == AK::SE) return std::nullopt;  // calD(n)-arrows
        return laguerre_grid_arrow_symbolic(kind);
    };
    g.arrow_concrete = [=](Vertex v, AK kind) -> E {
        switch (kind) {
            case AK::S: return detail::calD_or_zero(v.n);
            case AK::SE:
                return E::scalar(ParamPoly(v.s - 1)) * detail::calD_or_zero(v.n) - X;
            default:
                return laguerre_grid_arrow_symbolic(kind).substitute_params(
                    {{Sym::n, Rational(v.n)}, {Sym::k, Rational(v.s)}});
        }
    };
    g.space = [](Vertex v) {
        const long span = std::labs(v.s) + 2;
        const Window w = Window::range(std::min(0L, -span), v.n + span);
        const WeylElement h = WeylElement::X() * WeylElement::C() * WeylElement::D() +
                              WeylElement::scalar(ParamPoly(v.s + 1)) * WeylElement::D() +
                              WeylElement::scalar(ParamPoly(v.n));
        return detail::require_line(
            kernel_space<WeylLaurent>({h, WeylElement::D().pow(v.n + 1)}, w),
            "laguerre " + opgrid::to_string(v));
    };

    const ParamPoly nk1 = (n + one) * (n + k + one);
    g.table = {
        {"East", {AK::E, AK::W}, n + one},
        {"West", {AK::W, AK::E}, n},
        {"North", {AK::N, AK::S}, one},
        {"South", {AK::S, AK::N}, one},
        {"Northeast", {AK::NE, AK::SW}, nk1},
        {"Southwest", {AK::SW, AK::NE}, n * (n + k)},
        {"Northwest", {AK::NW, AK::SE}, n},
        {"Southeast", {AK::SE, AK::NW}, n + one},
        {"East-Northeast", {AK::E, AK::N, AK::SW}, nk1},
        {"Northeast-East", {AK::NE, AK::S, AK::W}, n + one},
        {"Northeast-North", {AK::NE, AK::W, AK::S}, n + one},
        {"North-Northeast", {AK::N, AK::E, AK::SW}, nk1},
        {"North-Northwest", {AK::N, AK::W, AK::SE}, n},
        {"Northwest-North", {AK::NW, AK::E, AK::S}, n},
        {"Northwest-West", {AK::NW, AK::S, AK::E}, n},
        {"West-Northwest", {AK::W, AK::N, AK::SE}, n},
        {"Box-ccw", {AK::E, AK::N, AK::W, AK::S}, n + one},
        {"Box-cw", {AK::N, AK::E, AK::S, AK::W}, n + one},
    };
    return g;
}

/// Legendre-Gegenbauer grid: H_{nl} = RD^2 + (l+1)XD - n(n+l); vertex spaces
/// are the W-line inside ker H_{nl}, cut out by the parity-n window.
inline GridSpec<WeylLaurent> legendre_grid() {
    using namespace syms;
    using E = WeylElement;
    const ParamPoly one(1);
    const E X = E::X(), D = E::D(), R = E::R();

    GridSpec<WeylLaurent> g;
    g.name = "legendre";
    g.second = Sym::l;
    g.valid = [](Vertex v) { return v.n >= 0 && v.s >= -1 && (v.s % 2 != 0); };
    using AK = ArrowKind;
    g.disp[static_cast<int>(AK::E)] = Displacement{+1, 0};
    g.disp[static_cast<int>(AK::W)] = Displacement{-1, 0};
    g.disp[static_cast<int>(AK::N)] = Displacement{0, +2};
    g.disp[static_cast<int>(AK::S)] = Displacement{0, -2};
    g.disp[static_cast<int>(AK::NW)] = Displacement{-1, +2};
    g.disp[static_cast<int>(AK::SE)] = Displacement{+1, -2};

    auto symbolic = [=](AK kind) -> E {
        switch (kind) {
            case AK::E: return E::scalar(n + l) * X + R * D;
            case AK::W: return E::scalar(n) * X - R * D;
            case AK::N: return X * D + E::scalar(n + l);
            case AK::S: return R * (X * D - E::scalar(n)) + E::scalar(l - one);
            case AK::NW: return D;
            case AK::SE: return E::scalar(l - one) * X + R * D;
            default: throw MissingArrow("no such legendre arrow");
        }
    };
    g.arrow_symbolic = [=](AK kind) -> std::optional<E> { return symbolic(kind); };
    g.arrow_concrete = [=](Vertex v, AK kind) -> E {
        return symbolic(kind).substitute_params(
            {{Sym::n, Rational(v.n)}, {Sym::l, Rational(v.s)}});
    };
    g.space = [](Vertex v) {
        const Window w = Window::range(v.n % 2 == 0 ? 0 : 1, v.n + 2, 2);
        const WeylElement h =
            WeylElement::R() * WeylElement::D() * WeylElement::D() +
            WeylElement::scalar(ParamPoly(v.s + 1)) * WeylElement::X() * WeylElement::D() -
            WeylElement::scalar(ParamPoly(v.n * (v.n + v.s)));
        return detail::require_line(kernel_space<WeylLaurent>({h}, w),
                                    "legendre " + opgrid::to_string(v));
    };

    const ParamPoly nl = n + l;
    const ParamPoly box = (n + one) * nl * (nl + one) * (nl + ParamPoly(2));
    g.table = {
        {"East", {AK::E, AK::W}, (n + one) * nl},
        {"West", {AK::W, AK::E}, n * (nl - one)},
        {"North", {AK::N, AK::S}, nl * (nl + one)},
        {"South", {AK::S, AK::N}, (nl - ParamPoly(2)) * (nl - one)},
        {"Northwest", {AK::NW, AK::SE}, n * nl},
        {"Southeast", {AK::SE, AK::NW}, (n + one) * (nl - one)},
        {"North-Northwest", {AK::N, AK::W, AK::SE}, n * nl * (nl + one)},
        {"Northwest-North", {AK::NW, AK::E, AK::S}, n * nl * (nl + one)},
        {"Northwest-West", {AK::NW, AK::S, AK::E}, n * (nl - one) * nl},
        {"West-Northwest", {AK::W, AK::N, AK::SE}, n * (nl - one) * nl},
        {"Box-ccw", {AK::E, AK::N, AK::W, AK::S}, box},
        {"Box-cw", {AK::N, AK::E, AK::S, AK::W}, box},
    };
    return g;
}

/// Binomial grid in the h-Weyl algebra (diff backend): H_{nm} of the paper,
/// vertex spaces W_{nm} = M^n D^m <delta_0>.
inline GridSpec<HWeylDelta> binomial_grid() {
    using namespace syms;
    using E = HWeylElement;

    GridSpec<HWeylDelta> g;
    g.name = "binomial";
    g.second = Sym::m;
    g.valid = [](Vertex v) { return v.n >= 0 && v.s >= 0; };
    using AK = ArrowKind;
    g.disp[static_cast<int>(AK::E)] = Displacement{+1, 0};
    g.disp[static_cast<int>(AK::W)] = Displacement{-1, 0};
    g.disp[static_cast<int>(AK::N)] = Displacement{0, +1};
    g.disp[static_cast<int>(AK::S)] = Displacement{0, -1};

    auto symbolic = [](AK kind) -> E {
        switch (kind) {
            case AK::E: return E::M();
            case AK::W: return E::L(n + m);
            case AK::N: return -E::D();
            case AK::S: return E::G(n + m);
            default: throw MissingArrow("binomial grid has no diagonal arrows");
        }
    };
    g.arrow_symbolic = [=](AK kind) -> std::optional<E> {
        if (kind == AK::E || kind == AK::W || kind == AK::N || kind == AK::S)
            return symbolic(kind);
        return std::nullopt;
    };
    g.arrow_concrete = [=](Vertex v, AK kind) -> E {
        return symbolic(kind).substitute_params(
            {{Sym::n, Rational(v.n)}, {Sym::m, Rational(v.s)}});
    };
    g.space = [](Vertex v) {
        DeltaVector w = DeltaVector::basis(0);
        for (long i = 0; i < v.s; ++i) w = apply(HWeylElement::D(), w);
        for (long i = 0; i < v.n; ++i) w = apply(HWeylElement::M(), w);
        const long b = v.n + v.s + 1;
        return detail::require_line(
            Subspace<DeltaTag>(Window::range(-b, b), {w}),
            "binomial " + opgrid::to_string(v));
    };

    const ParamPoly one(1);
    g.table = {
        {"East", {AK::E, AK::W}, n + one},
        {"West", {AK::W, AK::E}, n},
        {"North", {AK::N, AK::S}, m + one},
        {"South", {AK::S, AK::N}, m},
        {"Box-ccw", {AK::E, AK::N, AK::W, AK::S}, (n + one) * (m + one)},
        {"Box-cw", {AK::N, AK::E, AK::S, AK::W}, (n + one) * (m + one)},
    };
    return g;
}

inline std::vector<Vertex> laguerre_region(long n_max, long k_max) {
    std::vector<Vertex> vs;
    for (long n = 0; n <= n_max; ++n)
        for (long k = -n; k <= k_max; ++k) vs.push_back({n, k});
    return vs;
}

inline std::vector<Vertex> legendre_region(long n_max, const std::vector<long>& l_set) {
    std::vector<Vertex> vs;
    for (long n = 0; n <= n_max; ++n)
        for (long l : l_set) vs.push_back({n, l});
    return vs;
}

inline std::vector<Vertex> binomial_region(long n_max, long m_max) {
    std::vector<Vertex> vs;
    for (long n = 0; n <= n_max; ++n)
        for (long m = 0; m <= m_max; ++m) vs.push_back({n, m});
    return vs;
}

}  // namespace opgrid
