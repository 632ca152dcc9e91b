#pragma once

// Invariant almost-Hermitian models: coframe structure equations, the action of the
// (1,0) and (0,1) frame fields on Fourier characters, deck rules and metric data.
//
// All first-order data is stored in pi-units: the true operator is pi times the
// stored one. The structure constants of d carry the same single factor of pi, so
// every component of d is pi-homogeneous of degree one.

#include "ahodge/form.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ahodge {

/// Raised for model data that cannot be built or interpreted.
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// c0 + sum_j k[j] * kappa_j + cdelta * delta
struct AffineCoeff {
    Scalar c0;
    std::vector<Scalar> k;
    Scalar cdelta;

    [[nodiscard]] Scalar eval(const ModeIndex& kappa, const Rational& delta) const {
        Scalar out = c0;
        for (std::size_t j = 0; j < k.size(); ++j)
            if (!k[j].is_zero() && kappa[static_cast<int>(j)] != 0) out += k[j] * Scalar(kappa[static_cast<int>(j)]);
        if (!cdelta.is_zero()) out += cdelta * Scalar(delta);
        return out;
    }
    friend bool operator==(const AffineCoeff&, const AffineCoeff&) = default;
};

/// One term of a frame field acting on chi_kappa: coeff(kappa) * chi_{kappa + shift}.
struct ShiftRule {
    ModeIndex shift;
    AffineCoeff coeff;
    friend bool operator==(const ShiftRule&, const ShiftRule&) = default;
};

/// Action tables of V_1..V_n (holomorphic) and Vbar_1..Vbar_n.
struct DerivationRule {
    std::vector<std::vector<ShiftRule>> holo;
    std::vector<std::vector<ShiftRule>> anti;
    friend bool operator==(const DerivationRule&, const DerivationRule&) = default;
};

/// Coefficient c0 + cdelta*delta of one generator in d(phi^a).
struct StructureTerm {
    BasisIndex basis;
    Scalar c0;
    Scalar cdelta;
    friend bool operator==(const StructureTerm&, const StructureTerm&) = default;
};

/// d(phi^a) for a = 1..n; differentials of phibar^a follow by conjugation.
using StructureTable = std::vector<std::vector<StructureTerm>>;

struct DeckRule {
    enum class Kind { parity, involution };
    Kind kind = Kind::parity;
    // parity: kappa[index] must be divisible by modulus
    int index = 0;
    int modulus = 2;
    // involution: c_kappa = (-1)^{phase(kappa)} c_{A kappa}, with phase(kappa) = phase_c0 + sum phase_k[j] kappa_j
    std::vector<std::vector<int>> map;
    int phase_c0 = 0;
    std::vector<int> phase_k;

    [[nodiscard]] ModeIndex apply(const ModeIndex& kappa) const {
        ModeIndex out(kappa.dims);
        for (std::size_t r = 0; r < map.size(); ++r) {
            long v = 0;
            for (std::size_t c = 0; c < map[r].size(); ++c) v += static_cast<long>(map[r][c]) * kappa[static_cast<int>(c)];
            out[static_cast<int>(r)] = static_cast<int>(v);
        }
        return out;
    }
    [[nodiscard]] long phase(const ModeIndex& kappa) const {
        long v = phase_c0;
        for (std::size_t j = 0; j < phase_k.size(); ++j) v += static_cast<long>(phase_k[j]) * kappa[static_cast<int>(j)];
        return v;
    }
    friend bool operator==(const DeckRule&, const DeckRule&) = default;
};

struct MetricSpec {
    std::vector<Rational> norms;  // squared norm of phi^a (and of phibar^a)
    Form omega;
    Form volume;
    friend bool operator==(const MetricSpec&, const MetricSpec&) = default;
};

/// Raw, serializable model description.
struct ModelSpec {
    std::string name;
    int n = 2;
    int fourier_dims = 0;
    Rational char_base = 1;
    Rational delta = 0;
    DerivationRule derivations;
    StructureTable structure;
    std::vector<DeckRule> decks;
    MetricSpec metric;
    friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

/// A model with precomputed generator differentials and star tables. Immutable.
class Model {
public:
    struct StarEntry {
        Scalar coeff;
        BasisIndex target;
    };

    explicit Model(ModelSpec spec) : spec_(std::move(spec)) { compile(); }

    [[nodiscard]] const ModelSpec& spec() const { return spec_; }
    [[nodiscard]] const std::string& name() const { return spec_.name; }
    [[nodiscard]] int n() const { return spec_.n; }
    [[nodiscard]] int dims() const { return spec_.fourier_dims; }
    [[nodiscard]] const Rational& delta() const { return spec_.delta; }
    [[nodiscard]] std::span<const Rational> norms() const { return spec_.metric.norms; }
    [[nodiscard]] const Form& omega() const { return spec_.metric.omega; }
    [[nodiscard]] const Form& volume() const { return spec_.metric.volume; }

    /// True when no frame field moves a character to a different mode.
    [[nodiscard]] bool shift_free() const { return max_shift_ == 0; }
    /// Largest |shift|_inf over all frame rules.
    [[nodiscard]] int max_shift() const { return max_shift_; }
    /// Coordinates moved by at least one frame rule.
    [[nodiscard]] const std::vector<int>& shifted_axes() const { return shifted_axes_; }

    /// V_a f (anti = false) or Vbar_a f (anti = true), in pi-units; a is 1-based.
    [[nodiscard]] TrigPoly frame_apply(int a, bool anti, const TrigPoly& f) const {
        const auto& rules = (anti ? spec_.derivations.anti : spec_.derivations.holo)[static_cast<std::size_t>(a - 1)];
        TrigPoly out;
        for (const auto& [kappa, c] : f.terms())
            for (const auto& r : rules) {
                Scalar v = r.coeff.eval(kappa, spec_.delta);
                if (v.is_zero()) continue;
                out.add_term(kappa + r.shift, v * c);
            }
        return out;
    }

    /// d of a canonical generator (constant coefficients, pi-units).
    [[nodiscard]] const Form& d_generator(const BasisIndex& b) const { return dgen_.at(b); }

    /// *e_b = coeff * e_target.
    [[nodiscard]] const StarEntry& star_entry(const BasisIndex& b) const { return star_.at(b); }

    [[nodiscard]] TrigPoly one() const { return TrigPoly::constant(Scalar(1), dims()); }

private:
    void compile();

    ModelSpec spec_;
    int max_shift_ = 0;
    std::vector<int> shifted_axes_;
    std::map<BasisIndex, Form> dgen_;
    std::map<BasisIndex, StarEntry> star_;
};

inline BasisIndex holo_gen(int a) { return {static_cast<std::uint8_t>(1u << (a - 1)), 0}; }
inline BasisIndex anti_gen(int a) { return {0, static_cast<std::uint8_t>(1u << (a - 1))}; }

/// Generator with explicit holomorphic and antiholomorphic index lists (ascending, 1-based).
inline BasisIndex gen(std::initializer_list<int> I, std::initializer_list<int> J) {
    return {indices_mask(std::vector<int>(I)), indices_mask(std::vector<int>(J))};
}

inline void Model::compile() {
    const int n = spec_.n;
    if (n < 1 || n > kMaxCoframeRank) throw ModelError("coframe rank out of range");
    if (spec_.fourier_dims < 0 || spec_.fourier_dims > kMaxFourierDims) throw ModelError("fourier_dims out of range");
    if (static_cast<int>(spec_.structure.size()) != n) throw ModelError("structure table must list every generator");
    if (static_cast<int>(spec_.derivations.holo.size()) != n || static_cast<int>(spec_.derivations.anti.size()) != n)
        throw ModelError("derivation table must list every frame field");
    if (static_cast<int>(spec_.metric.norms.size()) != n) throw ModelError("metric.norms must have n entries");
    for (const auto& r : spec_.metric.norms)
        if (sgn(r) <= 0) throw ModelError("metric norms must be positive");

    std::vector<bool> moved(kMaxFourierDims, false);
    for (const auto* table : {&spec_.derivations.holo, &spec_.derivations.anti})
        for (const auto& rules : *table)
            for (const auto& r : rules) {
                max_shift_ = std::max(max_shift_, r.shift.sup_norm());
                for (int j = 0; j < kMaxFourierDims; ++j)
                    if (r.shift[j] != 0) moved[static_cast<std::size_t>(j)] = true;
            }
    for (int j = 0; j < kMaxFourierDims; ++j)
        if (moved[static_cast<std::size_t>(j)]) shifted_axes_.push_back(j);

    // d(phi^a), d(phibar^a) = conj d(phi^a)
    std::vector<Form> dholo(static_cast<std::size_t>(n)), danti(static_cast<std::size_t>(n));
    for (int a = 1; a <= n; ++a) {
        Form f;
        for (const auto& t : spec_.structure[static_cast<std::size_t>(a - 1)]) {
            if (t.basis.degree() != 2) throw ModelError("structure terms must be 2-form generators");
            f.add(t.basis, TrigPoly::constant(t.c0 + t.cdelta * Scalar(spec_.delta), spec_.fourier_dims));
        }
        dholo[static_cast<std::size_t>(a - 1)] = f;
        danti[static_cast<std::size_t>(a - 1)] = form_conj(f);
    }
    // Leibniz over the ordered factors of each canonical generator.
    for (const auto& b : full_basis(n)) {
        std::vector<std::pair<bool, int>> letters;
        for (int i : mask_indices(b.I)) letters.emplace_back(false, i);
        for (int j : mask_indices(b.J)) letters.emplace_back(true, j);
        Form total;
        for (std::size_t pos = 0; pos < letters.size(); ++pos) {
            Form term = Form::generator({}, Scalar(1), spec_.fourier_dims);
            for (std::size_t x = 0; x < letters.size(); ++x) {
                auto [anti, a] = letters[x];
                if (x == pos)
                    term = wedge(term, (anti ? danti : dholo)[static_cast<std::size_t>(a - 1)]);
                else
                    term = wedge(term, Form::generator(anti ? anti_gen(a) : holo_gen(a), Scalar(1), spec_.fourier_dims));
            }
            if (pos % 2) term *= Scalar(-1);
            total += term;
        }
        dgen_.emplace(b, std::move(total));
    }

    // Star table from alpha ^ *conj(beta) = <alpha, beta> vol on generators.
    const Form& vol = spec_.metric.volume;
    const BasisIndex top{static_cast<std::uint8_t>((1u << n) - 1), static_cast<std::uint8_t>((1u << n) - 1)};
    Scalar vol_coeff = vol.coeff(top).coeff(ModeIndex(spec_.fourier_dims));
    if (vol_coeff.is_zero()) {
        // leave the star table empty; validate reports the inconsistent metric
        return;
    }
    for (const auto& beta : full_basis(n)) {
        // conj(e_beta) = s * e_gamma with gamma = (J, I)
        const int s = (beta.p() * beta.q()) % 2 ? -1 : 1;
        const BasisIndex gamma{beta.J, beta.I};
        const BasisIndex comp{static_cast<std::uint8_t>(top.I & ~beta.I), static_cast<std::uint8_t>(top.J & ~beta.J)};
        auto [eps, prod] = wedge_generators(beta, comp);
        // e_beta ^ (s * t * e_comp) = N_beta * vol  =>  t = N_beta * v / (s * eps)
        Scalar t = Scalar(generator_norm(beta, spec_.metric.norms)) * vol_coeff / Scalar(s * eps);
        star_.emplace(gamma, StarEntry{t, comp});
    }
}

// ---------------------------------------------------------------------------
// Built-in models

namespace detail {

inline AffineCoeff affine(int dims, Scalar c0, std::vector<Scalar> k = {}, Scalar cdelta = Scalar()) {
    k.resize(static_cast<std::size_t>(dims));
    return {std::move(c0), std::move(k), std::move(cdelta)};
}

inline ShiftRule no_shift(AffineCoeff c, int dims) { return {ModeIndex(dims), std::move(c)}; }

inline ModeIndex axis_shift(int dims, int axis, int by) {
    ModeIndex m(dims);
    m[axis] = by;
    return m;
}

inline Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Metric with |phi^a|^2 = norm, omega = i*scale*sum phi^{a abar}, vol = omega^n / n!.
inline MetricSpec diagonal_metric(int n, int dims, const Rational& norm, const Scalar& omega_scale, const Scalar& vol_coeff) {
    MetricSpec m;
    m.norms.assign(static_cast<std::size_t>(n), norm);
    for (int a = 1; a <= n; ++a) m.omega.add(BasisIndex{holo_gen(a).I, anti_gen(a).J}, TrigPoly::constant(Scalar::i() * omega_scale, dims));
    const BasisIndex top{static_cast<std::uint8_t>((1u << n) - 1), static_cast<std::uint8_t>((1u << n) - 1)};
    m.volume.add(top, TrigPoly::constant(vol_coeff, dims));
    return m;
}

}  // namespace detail

/// Kodaira-Thurston nilmanifold with J_b, b = 8*pi*delta; characters exp(2 pi i (k t + l x + m y)).
inline Model builtin_kt(const Rational& delta) {
    using detail::affine;
    using detail::no_shift;
    if (sgn(delta) == 0) throw ModelError("kt requires delta != 0 (b = 8*pi*delta must be nonzero)");
    const int dims = 3;
    const Scalar I = Scalar::i();
    ModelSpec s;
    s.name = "kt";
    s.n = 2;
    s.fourier_dims = dims;
    s.char_base = 2;
    s.delta = delta;
    // V1 chi = (i k + l) chi, Vbar1 chi = (i k - l) chi, V2 chi = Vbar2 chi = i m chi
    s.derivations.holo = {{no_shift(affine(dims, 0, {I, 1, 0}), dims)}, {no_shift(affine(dims, 0, {0, 0, I}), dims)}};
    s.derivations.anti = {{no_shift(affine(dims, 0, {I, -1, 0}), dims)}, {no_shift(affine(dims, 0, {0, 0, I}), dims)}};
    // d phi^1 = 0, d phi^2 = 2 delta (phi^{12} + phi^{1 2bar} + phi^{2 1bar} - phi^{1bar 2bar})
    s.structure = {
        {},
        {{gen({1, 2}, {}), 0, 2}, {gen({1}, {2}), 0, 2}, {gen({2}, {1}), 0, 2}, {gen({}, {1, 2}), 0, -2}},
    };
    s.metric = detail::diagonal_metric(2, dims, 1, 1, 1);
    return Model(std::move(s));
}

/// Hyperelliptic solvmanifold with an lcaK structure; cover characters exp(i pi (k x1 + l y1 + m x2 + n y2)).
inline Model builtin_hyperelliptic() {
    using detail::affine;
    using detail::axis_shift;
    using detail::q;
    const int dims = 4;
    const Scalar I = Scalar::i();
    const Scalar quarter(q(1, 4));
    const Scalar iquarter = I * quarter;
    const Scalar half(q(1, 2));
    ModelSpec s;
    s.name = "hyperelliptic";
    s.n = 2;
    s.fourier_dims = dims;
    s.char_base = 1;
    s.delta = 0;
    const ModeIndex up = axis_shift(dims, 2, 1), down = axis_shift(dims, 2, -1), stay(dims);
    // cos(pi x2), sin(pi x2) factors of e_1, e_2 shift the x2-frequency m by +-1
    auto v1 = [&](Scalar msign) {
        return std::vector<ShiftRule>{{up, affine(dims, 0, {iquarter, quarter, 0, 0})},
                                      {down, affine(dims, 0, {iquarter, -quarter, 0, 0})},
                                      {stay, affine(dims, 0, {0, 0, msign * half, 0})}};
    };
    auto v2 = [&](Scalar nsign) {
        return std::vector<ShiftRule>{{up, affine(dims, 0, {-quarter, iquarter, 0, 0})},
                                      {down, affine(dims, 0, {quarter, iquarter, 0, 0})},
                                      {stay, affine(dims, 0, {0, 0, 0, nsign * half})}};
    };
    s.derivations.holo = {v1(1), v2(1)};
    s.derivations.anti = {v1(-1), v2(-1)};
    // d phi^1 = (i/4)(-phi^{12} - phi^{1 2bar} - phi^{2 1bar} + phi^{1bar 2bar}), d phi^2 = (i/2) phi^{1 1bar}
    s.structure = {
        {{gen({1, 2}, {}), -iquarter, 0}, {gen({1}, {2}), -iquarter, 0}, {gen({2}, {1}), -iquarter, 0}, {gen({}, {1, 2}), iquarter, 0}},
        {{gen({1}, {1}), I * half, 0}},
    };
    DeckRule pk{DeckRule::Kind::parity, 0, 2, {}, 0, {}};
    DeckRule pl{DeckRule::Kind::parity, 1, 2, {}, 0, {}};
    DeckRule pn{DeckRule::Kind::parity, 3, 2, {}, 0, {}};
    DeckRule inv;
    inv.kind = DeckRule::Kind::involution;
    inv.map = {{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    inv.phase_k = {0, 0, 1, 0};
    s.decks = {pk, pl, pn, inv};
    s.metric = detail::diagonal_metric(2, dims, 2, half, quarter);
    return Model(std::move(s));
}

/// Flat 4-torus, phi^1 = dx1 + i dx2, phi^2 = dx3 + i dx4; characters exp(2 pi i <k, x>).
inline Model builtin_torus4() {
    using detail::affine;
    using detail::no_shift;
    const int dims = 4;
    const Scalar I = Scalar::i();
    ModelSpec s;
    s.name = "torus4";
    s.n = 2;
    s.fourier_dims = dims;
    s.char_base = 2;
    s.delta = 0;
    s.derivations.holo = {{no_shift(affine(dims, 0, {I, 1, 0, 0}), dims)}, {no_shift(affine(dims, 0, {0, 0, I, 1}), dims)}};
    s.derivations.anti = {{no_shift(affine(dims, 0, {I, -1, 0, 0}), dims)}, {no_shift(affine(dims, 0, {0, 0, I, -1}), dims)}};
    s.structure = {{}, {}};
    s.metric = detail::diagonal_metric(2, dims, 1, 1, 1);
    return Model(std::move(s));
}

/// name in {kt, hyperelliptic, torus4}; delta is only used by kt.
inline Model builtin(const std::string& name, const Rational& delta) {
    if (name == "kt") return builtin_kt(delta);
    if (name == "hyperelliptic") return builtin_hyperelliptic();
    if (name == "torus4") return builtin_torus4();
    throw ModelError("unknown builtin model '" + name + "'");
}

inline bool is_builtin_name(const std::string& name) {
    return name == "kt" || name == "hyperelliptic" || name == "torus4";
}

/// The same model with metric lambda*g: coframe squared norms divide by lambda,
/// omega scales by lambda and vol by lambda^n.
inline Model scale_metric(const Model& m, const Rational& lambda) {
    if (sgn(lambda) <= 0) throw ModelError("metric scale must be positive");
    ModelSpec s = m.spec();
    for (auto& r : s.metric.norms) r /= lambda;
    s.metric.omega *= Scalar(lambda);
    Rational ln(1);
    for (int j = 0; j < s.n; ++j) ln *= lambda;
    s.metric.volume *= Scalar(ln);
    return Model(std::move(s));
}

}  // namespace ahodge
