#pragma once

// Differential operators on a model: d and its four bidegree components, the Hodge
// star, formal adjoints, the Laplacians and principal symbols.
//
// Every component of d is pi-homogeneous of degree 1 (see model.hpp); a composition
// of r components therefore carries pi^r and is returned with pi^r divided out.

#include "ahodge/linalg.hpp"
#include "ahodge/model.hpp"

#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ahodge {

enum class OperatorKind {
    d,
    mu,
    del,
    delbar,
    mubar,
    d_star,
    mu_star,
    del_star,
    delbar_star,
    mubar_star,
    lap_d,
    lap_del,
    lap_delbar,
    lap_bc,
    lap_aeppli,
};

/// Differential order; the Bott-Chern and Aeppli Laplacians report their top block.
inline int differential_order(OperatorKind k) {
    switch (k) {
        case OperatorKind::mu:
        case OperatorKind::mubar:
        case OperatorKind::mu_star:
        case OperatorKind::mubar_star:
            return 0;
        case OperatorKind::d:
        case OperatorKind::del:
        case OperatorKind::delbar:
        case OperatorKind::d_star:
        case OperatorKind::del_star:
        case OperatorKind::delbar_star:
            return 1;
        case OperatorKind::lap_d:
        case OperatorKind::lap_del:
        case OperatorKind::lap_delbar:
            return 2;
        case OperatorKind::lap_bc:
        case OperatorKind::lap_aeppli:
            return 4;
    }
    return 0;
}

inline std::string_view to_string(OperatorKind k) {
    switch (k) {
        case OperatorKind::d: return "d";
        case OperatorKind::mu: return "mu";
        case OperatorKind::del: return "del";
        case OperatorKind::delbar: return "delbar";
        case OperatorKind::mubar: return "mubar";
        case OperatorKind::d_star: return "d_star";
        case OperatorKind::mu_star: return "mu_star";
        case OperatorKind::del_star: return "del_star";
        case OperatorKind::delbar_star: return "delbar_star";
        case OperatorKind::mubar_star: return "mubar_star";
        case OperatorKind::lap_d: return "lap_d";
        case OperatorKind::lap_del: return "lap_del";
        case OperatorKind::lap_delbar: return "lap_delbar";
        case OperatorKind::lap_bc: return "lap_bc";
        case OperatorKind::lap_aeppli: return "lap_aeppli";
    }
    return "?";
}

inline OperatorKind operator_from_string(std::string_view s) {
    for (auto k : {OperatorKind::d, OperatorKind::mu, OperatorKind::del, OperatorKind::delbar, OperatorKind::mubar,
                   OperatorKind::d_star, OperatorKind::mu_star, OperatorKind::del_star, OperatorKind::delbar_star,
                   OperatorKind::mubar_star, OperatorKind::lap_d, OperatorKind::lap_del, OperatorKind::lap_delbar,
                   OperatorKind::lap_bc, OperatorKind::lap_aeppli})
        if (to_string(k) == s) return k;
    // short Laplacian names as used on the command line
    if (s == "d_lap" || s == "hodge") return OperatorKind::lap_d;
    if (s == "bc") return OperatorKind::lap_bc;
    if (s == "aeppli") return OperatorKind::lap_aeppli;
    if (s == "delbar_lap") return OperatorKind::lap_delbar;
    if (s == "del_lap") return OperatorKind::lap_del;
    throw std::invalid_argument("unknown operator '" + std::string(s) + "'");
}

/// Components of d, named by their bidegree shift.
enum class Component { mu, del, delbar, mubar };

inline std::pair<int, int> component_shift(Component c) {
    switch (c) {
        case Component::mu: return {2, -1};
        case Component::del: return {1, 0};
        case Component::delbar: return {0, 1};
        case Component::mubar: return {-1, 2};
    }
    return {0, 0};
}

// ---------------------------------------------------------------------------
// d and its components

/// d(f e_B) = sum_a (V_a f) phi^a ^ e_B + (Vbar_a f) phibar^a ^ e_B + f d(e_B), pi-units.
inline Form apply_d(const Model& m, const Form& alpha) {
    Form out;
    for (const auto& [b, f] : alpha.terms()) {
        for (int a = 1; a <= m.n(); ++a) {
            for (bool anti : {false, true}) {
                auto [sign, idx] = wedge_generators(anti ? anti_gen(a) : holo_gen(a), b);
                if (sign == 0) continue;
                TrigPoly g = m.frame_apply(a, anti, f);
                if (sign < 0) g *= Scalar(-1);
                out.add(idx, g);
            }
        }
        out += f * m.d_generator(b);
    }
    return out;
}

/// Bidegree component of d, applied term by term (input may mix bidegrees).
/// Frame derivatives only feed del (V_a) and delbar (Vbar_a); mu and mubar are algebraic.
inline Form apply_component(const Model& m, const Form& alpha, Component which) {
    auto [dp, dq] = component_shift(which);
    const bool frame = which == Component::del || which == Component::delbar;
    const bool anti = which == Component::delbar;
    Form out;
    for (const auto& [b, f] : alpha.terms()) {
        if (frame)
            for (int a = 1; a <= m.n(); ++a) {
                auto [sign, idx] = wedge_generators(anti ? anti_gen(a) : holo_gen(a), b);
                if (sign == 0) continue;
                TrigPoly g = m.frame_apply(a, anti, f);
                if (sign < 0) g *= Scalar(-1);
                out.add(idx, g);
            }
        const Form& dg = m.d_generator(b);
        for (const auto& [gb, gc] : dg.terms())
            if (gb.p() == b.p() + dp && gb.q() == b.q() + dq) out.add(gb, tp_mul(f, gc));
    }
    return out;
}

/// Public form of apply_component: rejects non-homogeneous input.
inline Form component(const Model& m, const Form& alpha, Component which) {
    if (!alpha.is_homogeneous()) throw std::invalid_argument("component() needs a bidegree-homogeneous form");
    return apply_component(m, alpha, which);
}

inline Form mu(const Model& m, const Form& a) { return apply_component(m, a, Component::mu); }
inline Form del(const Model& m, const Form& a) { return apply_component(m, a, Component::del); }
inline Form delbar(const Model& m, const Form& a) { return apply_component(m, a, Component::delbar); }
inline Form mubar(const Model& m, const Form& a) { return apply_component(m, a, Component::mubar); }

// ---------------------------------------------------------------------------
// Hodge star

/// C-linear star from the precomputed generator table.
inline Form star(const Model& m, const Form& alpha) {
    Form out;
    for (const auto& [b, f] : alpha.terms()) {
        const auto& e = m.star_entry(b);
        out.add(e.target, f * e.coeff);
    }
    return out;
}

/// Star obtained by solving alpha ^ *gamma = <alpha, conj gamma> vol against every
/// generator alpha, one generator gamma at a time. Slow; used as a cross-check.
inline Form star_by_relation(const Model& m, const Form& alpha) {
    const int n = m.n();
    const auto basis = full_basis(n);
    const BasisIndex top{static_cast<std::uint8_t>((1u << n) - 1), static_cast<std::uint8_t>((1u << n) - 1)};
    const ModeIndex zero(m.dims());
    const Scalar vol_coeff = m.volume().coeff(top).coeff(zero);
    Matrix w(basis.size(), basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c) {
            auto [sign, idx] = wedge_generators(basis[r], basis[c]);
            if (sign != 0 && idx == top) w(r, c) = Scalar(sign);
        }
    Form out;
    for (const auto& [g, f] : alpha.terms()) {
        Form gamma = Form::generator(g, Scalar(1), m.dims());
        Form cg = form_conj(gamma);
        Vector rhs(basis.size());
        for (std::size_t r = 0; r < basis.size(); ++r) {
            Form a = Form::generator(basis[r], Scalar(1), m.dims());
            rhs[r] = tp_integrate(inner(a, cg, m.norms())) * vol_coeff;
        }
        auto x = solve(w, rhs);
        if (!x) throw std::runtime_error("star defining relation has no solution");
        for (std::size_t c = 0; c < basis.size(); ++c)
            if (!(*x)[c].is_zero()) out.add(basis[c], f * (*x)[c]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Formal adjoints: d* = -*d*, mu* = -*mubar*, del* = -*delbar*, delbar* = -*del*, mubar* = -*mu*

inline Form d_star(const Model& m, const Form& a) { return -star(m, apply_d(m, star(m, a))); }
inline Form mu_star(const Model& m, const Form& a) { return -star(m, mubar(m, star(m, a))); }
inline Form del_star(const Model& m, const Form& a) { return -star(m, delbar(m, star(m, a))); }
inline Form delbar_star(const Model& m, const Form& a) { return -star(m, del(m, star(m, a))); }
inline Form mubar_star(const Model& m, const Form& a) { return -star(m, mu(m, star(m, a))); }

/// First- and zero-order operators (everything except the Laplacians).
inline Form apply_operator(const Model& m, const Form& a, OperatorKind k) {
    switch (k) {
        case OperatorKind::d: return apply_d(m, a);
        case OperatorKind::mu: return mu(m, a);
        case OperatorKind::del: return del(m, a);
        case OperatorKind::delbar: return delbar(m, a);
        case OperatorKind::mubar: return mubar(m, a);
        case OperatorKind::d_star: return d_star(m, a);
        case OperatorKind::mu_star: return mu_star(m, a);
        case OperatorKind::del_star: return del_star(m, a);
        case OperatorKind::delbar_star: return delbar_star(m, a);
        case OperatorKind::mubar_star: return mubar_star(m, a);
        default: throw std::invalid_argument("apply_operator: use laplacian() for " + std::string(to_string(k)));
    }
}

inline OperatorKind adjoint_of(OperatorKind k) {
    switch (k) {
        case OperatorKind::d: return OperatorKind::d_star;
        case OperatorKind::mu: return OperatorKind::mu_star;
        case OperatorKind::del: return OperatorKind::del_star;
        case OperatorKind::delbar: return OperatorKind::delbar_star;
        case OperatorKind::mubar: return OperatorKind::mubar_star;
        default: throw std::invalid_argument("adjoint_of: not a component of d");
    }
}

inline Form adjoint(const Model& m, const Form& a, OperatorKind base) { return apply_operator(m, a, adjoint_of(base)); }

// ---------------------------------------------------------------------------
// Laplacians

/// Blocks keyed by pi-degree; the operator equals sum_r pi^r * blocks[r].
using PiGraded = std::map<int, Form>;

inline bool is_zero(const PiGraded& g) {
    for (const auto& [deg, f] : g)
        if (!f.is_zero()) return false;
    return true;
}

inline PiGraded laplacian(const Model& m, const Form& a, OperatorKind k) {
    auto D = [&](const Form& x) { return del(m, x); };
    auto Db = [&](const Form& x) { return delbar(m, x); };
    auto Ds = [&](const Form& x) { return del_star(m, x); };
    auto Dbs = [&](const Form& x) { return delbar_star(m, x); };
    switch (k) {
        case OperatorKind::lap_d:
            return {{2, apply_d(m, d_star(m, a)) + d_star(m, apply_d(m, a))}};
        case OperatorKind::lap_del:
            return {{2, D(Ds(a)) + Ds(D(a))}};
        case OperatorKind::lap_delbar:
            return {{2, Db(Dbs(a)) + Dbs(Db(a))}};
        case OperatorKind::lap_bc: {
            Form top = D(Db(Dbs(Ds(a)))) + Dbs(Ds(D(Db(a)))) + Ds(Db(Dbs(D(a)))) + Dbs(D(Ds(Db(a))));
            Form low = Ds(D(a)) + Dbs(Db(a));
            return {{4, top}, {2, low}};
        }
        case OperatorKind::lap_aeppli: {
            Form top = D(Db(Dbs(Ds(a)))) + Dbs(Ds(D(Db(a)))) + D(Dbs(Db(Ds(a)))) + Db(Ds(D(Dbs(a))));
            Form low = D(Ds(a)) + Db(Dbs(a));
            return {{4, top}, {2, low}};
        }
        default:
            throw std::invalid_argument("laplacian: not a Laplacian");
    }
}

// ---------------------------------------------------------------------------
// Principal symbols

/// Covector xi = sum_a xi_a phi^a + conj(xi_a) phibar^a (a real covector).
struct Covector {
    std::vector<Scalar> holo;

    [[nodiscard]] bool is_zero() const {
        for (const auto& s : holo)
            if (!s.is_zero()) return false;
        return true;
    }
    [[nodiscard]] Form part10(int dims) const {
        Form f;
        for (std::size_t a = 0; a < holo.size(); ++a) f.add(holo_gen(static_cast<int>(a) + 1), TrigPoly::constant(holo[a], dims));
        return f;
    }
    [[nodiscard]] Form part01(int dims) const {
        Form f;
        for (std::size_t a = 0; a < holo.size(); ++a) f.add(anti_gen(static_cast<int>(a) + 1), TrigPoly::constant(holo[a].conj(), dims));
        return f;
    }
    /// |xi|^2 for the real covector xi^{1,0} + xi^{0,1}.
    [[nodiscard]] Rational norm2(std::span<const Rational> norms) const {
        Rational r(0);
        for (std::size_t a = 0; a < holo.size(); ++a) r += 2 * holo[a].norm2() * norms[a];
        return r;
    }
};

namespace detail {

/// Linear maps on constant forms representing symbols of del, delbar and their adjoints.
struct SymbolCalculus {
    const Model& m;
    Form x10, x01;

    SymbolCalculus(const Model& model, const Covector& xi) : m(model), x10(xi.part10(model.dims())), x01(xi.part01(model.dims())) {}

    [[nodiscard]] Form s_del(const Form& u) const { return wedge(x10, u) * Scalar::i(); }
    [[nodiscard]] Form s_delbar(const Form& u) const { return wedge(x01, u) * Scalar::i(); }
    [[nodiscard]] Form s_del_star(const Form& u) const { return -star(m, s_delbar(star(m, u))); }
    [[nodiscard]] Form s_delbar_star(const Form& u) const { return -star(m, s_del(star(m, u))); }
    [[nodiscard]] Form s_d(const Form& u) const { return s_del(u) + s_delbar(u); }
    [[nodiscard]] Form s_d_star(const Form& u) const { return s_del_star(u) + s_delbar_star(u); }

    [[nodiscard]] Form apply(OperatorKind k, const Form& u) const {
        auto D = [&](const Form& x) { return s_del(x); };
        auto Db = [&](const Form& x) { return s_delbar(x); };
        auto Ds = [&](const Form& x) { return s_del_star(x); };
        auto Dbs = [&](const Form& x) { return s_delbar_star(x); };
        switch (k) {
            case OperatorKind::d: return s_d(u);
            case OperatorKind::del: return D(u);
            case OperatorKind::delbar: return Db(u);
            case OperatorKind::d_star: return s_d_star(u);
            case OperatorKind::del_star: return Ds(u);
            case OperatorKind::delbar_star: return Dbs(u);
            case OperatorKind::lap_d: return s_d(s_d_star(u)) + s_d_star(s_d(u));
            case OperatorKind::lap_del: return D(Ds(u)) + Ds(D(u));
            case OperatorKind::lap_delbar: return Db(Dbs(u)) + Dbs(Db(u));
            case OperatorKind::lap_bc: return D(Db(Dbs(Ds(u)))) + Dbs(Ds(D(Db(u)))) + Ds(Db(Dbs(D(u)))) + Dbs(D(Ds(Db(u))));
            case OperatorKind::lap_aeppli: return D(Db(Dbs(Ds(u)))) + Dbs(Ds(D(Db(u)))) + D(Dbs(Db(Ds(u)))) + Db(Ds(D(Dbs(u))));
            default: throw std::invalid_argument("operator has no positive-order principal symbol");
        }
    }
};

/// Bidegrees a symbol of kind k can reach from (p, q).
inline std::vector<std::pair<int, int>> symbol_targets(OperatorKind k, int p, int q) {
    switch (k) {
        case OperatorKind::d: return {{p + 1, q}, {p, q + 1}};
        case OperatorKind::del: return {{p + 1, q}};
        case OperatorKind::delbar: return {{p, q + 1}};
        case OperatorKind::d_star: return {{p - 1, q}, {p, q - 1}};
        case OperatorKind::del_star: return {{p - 1, q}};
        case OperatorKind::delbar_star: return {{p, q - 1}};
        default: return {{p, q}};
    }
}

}  // namespace detail

/// Matrix of the principal symbol on (p, q)-forms in the canonical generator basis.
/// Columns: generators of (p, q); rows: generators of the target bidegree(s).
inline Matrix principal_symbol(const Model& m, OperatorKind k, int p, int q, const Covector& xi) {
    if (differential_order(k) == 0) throw std::invalid_argument("order-0 operator " + std::string(to_string(k)) + " has no positive-order principal symbol");
    if (static_cast<int>(xi.holo.size()) != m.n()) throw std::invalid_argument("covector rank mismatch");
    detail::SymbolCalculus sc(m, xi);
    const auto cols = basis_of(m.n(), p, q);
    std::vector<BasisIndex> rows;
    for (auto [tp, tq] : detail::symbol_targets(k, p, q)) {
        if (tp < 0 || tq < 0 || tp > m.n() || tq > m.n()) continue;
        auto b = basis_of(m.n(), tp, tq);
        rows.insert(rows.end(), b.begin(), b.end());
    }
    std::map<BasisIndex, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
    Matrix out(rows.size(), cols.size());
    const ModeIndex zero(m.dims());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        Form img = sc.apply(k, Form::generator(cols[c], Scalar(1), m.dims()));
        for (const auto& [b, f] : img.terms()) {
            auto it = row_of.find(b);
            if (it == row_of.end()) throw std::logic_error("principal symbol left its target bidegree");
            out(it->second, c) = f.coeff(zero);
        }
    }
    return out;
}

/// Symbol of L f = -i * (del delbar f ^ omega) at xi, a scalar (n = 2 models).
inline Scalar symbol_L(const Model& m, const Covector& xi) {
    detail::SymbolCalculus sc(m, xi);
    Form one = Form::generator({}, Scalar(1), m.dims());
    Form top = wedge(sc.s_del(sc.s_delbar(one)), m.omega());
    Form s = star(m, top) * (-Scalar::i());
    return s.coeff({}).coeff(ModeIndex(m.dims()));
}

struct EllipticityReport {
    OperatorKind kind = OperatorKind::lap_bc;
    int samples = 0;
    int skipped_zero = 0;
    int singular = 0;
    std::vector<std::string> failures;  // "xi=...; (p,q)" of singular samples
    bool all_invertible = true;
    // strong ellipticity of L (only for n = 2)
    bool L_checked = false;
    int L_sign = 0;              // sign of Re sigma(L) found on every sample, 0 if mixed
    Rational L_min_ratio = 0;    // min over samples of |Re sigma(L)| / |xi|^2
    bool L_definite = false;
};

/// Seeded Gaussian-rational covector with small integer numerators and denominators.
inline Covector random_covector(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    Covector xi;
    for (int a = 0; a < n; ++a)
        xi.holo.emplace_back(detail::q(num(rng), den(rng)), detail::q(num(rng), den(rng)));
    return xi;
}

/// Samples covectors and checks invertibility of the symbol on every bidegree.
inline EllipticityReport ellipticity_check(const Model& m, OperatorKind k, int samples, std::uint64_t seed) {
    if (differential_order(k) == 0) throw std::invalid_argument("ellipticity_check: " + std::string(to_string(k)) + " is order 0");
    EllipticityReport rep;
    rep.kind = k;
    std::mt19937_64 rng(seed);
    bool first_L = true;
    bool square_kind = k == OperatorKind::lap_d || k == OperatorKind::lap_del || k == OperatorKind::lap_delbar ||
                       k == OperatorKind::lap_bc || k == OperatorKind::lap_aeppli;
    for (int s = 0; s < samples; ++s) {
        Covector xi = random_covector(rng, m.n());
        if (xi.is_zero()) {
            ++rep.skipped_zero;
            continue;
        }
        ++rep.samples;
        for (int p = 0; p <= m.n(); ++p)
            for (int q = 0; q <= m.n(); ++q) {
                Matrix sym = principal_symbol(m, k, p, q, xi);
                bool ok = square_kind ? !determinant(sym).is_zero() : rank(sym) == sym.cols();
                if (!ok) {
                    ++rep.singular;
                    rep.all_invertible = false;
                    rep.failures.push_back("sample " + std::to_string(s) + " (" + std::to_string(p) + "," + std::to_string(q) + ")");
                }
            }
        if (m.n() == 2) {
            rep.L_checked = true;
            Scalar sig = symbol_L(m, xi);
            int sg = sgn(sig.re);
            Rational ratio = abs(sig.re) / xi.norm2(m.norms());
            if (first_L) {
                rep.L_sign = sg;
                rep.L_min_ratio = ratio;
                first_L = false;
            } else {
                if (sg != rep.L_sign) rep.L_sign = 0;
                if (ratio < rep.L_min_ratio) rep.L_min_ratio = ratio;
            }
        }
    }
    rep.L_definite = rep.L_checked && rep.L_sign != 0 && sgn(rep.L_min_ratio) > 0;
    return rep;
}

// ---------------------------------------------------------------------------
// Structure diagnostics

/// del delbar omega (the Gauduchon defect for n = 2).
inline Form gauduchon_defect(const Model& m) {
    if (m.n() != 2) throw std::invalid_argument("gauduchon_defect requires n = 2");
    return del(m, delbar(m, m.omega()));
}

struct LckReport {
    bool d_omega_eq_theta_omega = false;  // (a)
    bool theta_closed = false;            // (b)
    bool theta_harmonic_nonzero = false;  // (c) sector proxy for non-exactness
    bool almost_kahler = false;           // d omega = 0
    Form d_omega;
    Form theta_wedge_omega;
};

/// Checks d omega = theta ^ omega, d theta = 0 and that theta is nonzero and Delta_d-harmonic.
inline LckReport lck_check(const Model& m, const Form& theta) {
    LckReport r;
    r.d_omega = apply_d(m, m.omega());
    r.theta_wedge_omega = wedge(theta, m.omega());
    r.almost_kahler = r.d_omega.is_zero();
    r.d_omega_eq_theta_omega = r.d_omega == r.theta_wedge_omega;
    r.theta_closed = apply_d(m, theta).is_zero();
    r.theta_harmonic_nonzero = !theta.is_zero() && r.theta_closed && apply_d(m, star(m, theta)).is_zero();
    if (theta.is_zero()) r.theta_harmonic_nonzero = r.almost_kahler;  // theta = 0 is the almost Kahler case
    return r;
}

/// Real coframe e^1..e^{2n} expressed through phi: e^{2a-1} = Re phi^a, e^{2a} = Im phi^a.
/// The hyperelliptic model uses phi^1 = e^1 + i e^3, phi^2 = e^2 + i e^4, see real_coframe_hyperelliptic.
inline Form real_part_of(int a, int dims) {
    Form f;
    f.add(holo_gen(a), TrigPoly::constant(Scalar(detail::q(1, 2)), dims));
    f.add(anti_gen(a), TrigPoly::constant(Scalar(detail::q(1, 2)), dims));
    return f;
}
inline Form imag_part_of(int a, int dims) {
    Form f;
    f.add(holo_gen(a), TrigPoly::constant(Scalar(0, detail::q(-1, 2)), dims));
    f.add(anti_gen(a), TrigPoly::constant(Scalar(0, detail::q(1, 2)), dims));
    return f;
}

/// e^1..e^4 of the hyperelliptic model (phi^1 = e^1 + i e^3, phi^2 = e^2 + i e^4); index 1-based.
inline Form hyperelliptic_e(int j) {
    switch (j) {
        case 1: return real_part_of(1, 4);
        case 2: return real_part_of(2, 4);
        case 3: return imag_part_of(1, 4);
        case 4: return imag_part_of(2, 4);
        default: throw std::out_of_range("hyperelliptic_e index");
    }
}

// ---------------------------------------------------------------------------
// Operator identities

/// True when op kills chi_kappa e_B for every generator B of bidegree (p, q) and every
/// |kappa|_inf <= radius. The coefficients of op(chi_kappa e_B) are polynomials in kappa
/// of degree at most the differential order, so radius >= order proves op = 0 on (p, q).
inline bool vanishes_on_bidegree(const Model& m, int p, int q, const std::function<Form(const Form&)>& op, int radius = 2) {
    for (const auto& b : basis_of(m.n(), p, q))
        for (const auto& k : box_modes(m.dims(), radius))
            if (!op(Form::generator(b, TrigPoly::mode(k))).is_zero()) return false;
    return true;
}

/// del delbar + delbar del = 0 on (p, q)-forms.
inline bool del_delbar_anticommute(const Model& m, int p, int q) {
    return vanishes_on_bidegree(m, p, q, [&](const Form& a) { return del(m, delbar(m, a)) + delbar(m, del(m, a)); });
}

/// star star = (-1)^{p+q} on every generator.
inline bool star_squared_sign(const Model& m) {
    for (const auto& b : full_basis(m.n())) {
        Form g = Form::generator(b, Scalar(1), m.dims());
        Form ss = star(m, star(m, g));
        if (!(ss == g * Scalar(b.degree() % 2 ? -1 : 1))) return false;
    }
    return true;
}

}  // namespace ahodge
