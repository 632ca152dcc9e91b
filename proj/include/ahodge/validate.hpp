#pragma once

// Consistency checks for a model: integrability, the component relations of d^2 = 0,
// metric normalization and adjointness.

#include "ahodge/calculus.hpp"
#include "ahodge/random.hpp"

#include <string>
#include <vector>

namespace ahodge {

struct CheckResult {
    std::string name;
    bool passed = true;
    int cases = 0;
    std::string detail;   // first failure description
    std::string witness;  // serialized witness form, if any
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    [[nodiscard]] bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    [[nodiscard]] const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
};

struct ValidateOptions {
    int char_box = 2;
    int samples = 100;
    std::uint64_t seed = 20240601;
};

namespace detail {

inline void fail(CheckResult& r, std::string what, const Form& witness, int dims) {
    if (!r.passed) return;
    r.passed = false;
    r.detail = std::move(what);
    r.witness = format_form(witness, dims);
}

}  // namespace detail

/// The seven relations obtained by splitting d^2 = 0 by bidegree shift.
inline std::vector<std::pair<std::string, Form>> component_relations(const Model& m, const Form& a) {
    auto Mu = [&](const Form& x) { return mu(m, x); };
    auto D = [&](const Form& x) { return del(m, x); };
    auto Db = [&](const Form& x) { return delbar(m, x); };
    auto Mb = [&](const Form& x) { return mubar(m, x); };
    return {
        {"mu^2", Mu(Mu(a))},
        {"mu del + del mu", Mu(D(a)) + D(Mu(a))},
        {"del^2 + mu delbar + delbar mu", D(D(a)) + Mu(Db(a)) + Db(Mu(a))},
        {"mu mubar + del delbar + delbar del + mubar mu", Mu(Mb(a)) + D(Db(a)) + Db(D(a)) + Mb(Mu(a))},
        {"delbar^2 + mubar del + del mubar", Db(Db(a)) + Mb(D(a)) + D(Mb(a))},
        {"mubar delbar + delbar mubar", Mb(Db(a)) + Db(Mb(a))},
        {"mubar^2", Mb(Mb(a))},
    };
}

inline CheckResult check_d_squared(const Model& m, int char_box) {
    CheckResult r{"d^2 = 0", true, 0, {}, {}};
    for (const auto& b : full_basis(m.n())) {
        if (b.degree() != 1) continue;
        ++r.cases;
        Form dd = apply_d(m, m.d_generator(b));
        if (!dd.is_zero()) detail::fail(r, "d(d " + format_basis(b) + ") != 0", Form::generator(b, Scalar(1), m.dims()), m.dims());
    }
    for (const auto& k : box_modes(m.dims(), char_box)) {
        ++r.cases;
        Form chi = Form::function(TrigPoly::mode(k));
        if (!apply_d(m, apply_d(m, chi)).is_zero()) detail::fail(r, "d(d " + format_mode(k) + ") != 0", chi, m.dims());
        // Vbar_a is the conjugate of V_a
        TrigPoly f = TrigPoly::mode(k);
        for (int a = 1; a <= m.n(); ++a)
            if (!(tp_conj(m.frame_apply(a, false, f)) == m.frame_apply(a, true, tp_conj(f))))
                detail::fail(r, "Vbar_" + std::to_string(a) + " is not the conjugate of V_" + std::to_string(a) + " at " + format_mode(k), chi,
                             m.dims());
    }
    return r;
}

inline CheckResult check_relations(const Model& m, int samples, std::uint64_t seed) {
    CheckResult r{"component relations", true, 0, {}, {}};
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        Form a = random_mixed_form(rng, m);
        ++r.cases;
        for (const auto& [name, value] : component_relations(m, a))
            if (!value.is_zero()) detail::fail(r, name + " != 0", a, m.dims());
        Form sum = mu(m, a) + del(m, a) + delbar(m, a) + mubar(m, a);
        if (!(sum == apply_d(m, a))) detail::fail(r, "components do not sum to d", a, m.dims());
    }
    return r;
}

inline CheckResult check_metric(const Model& m) {
    CheckResult r{"metric normalization", true, 3, {}, {}};
    TrigPoly ww = inner(m.omega(), m.omega(), m.norms());
    if (!(ww == TrigPoly::constant(Scalar(m.n()), m.dims()))) detail::fail(r, "<omega, omega> != n", m.omega(), m.dims());
    Form pw = Form::function(m.one());
    Rational fact(1);
    for (int j = 1; j <= m.n(); ++j) {
        pw = wedge(pw, m.omega());
        fact *= j;
    }
    pw *= Scalar(Rational(1) / fact);
    if (!(pw == m.volume())) detail::fail(r, "omega^n / n! != vol", m.volume(), m.dims());
    if (!(inner(m.volume(), m.volume(), m.norms()) == m.one())) detail::fail(r, "|vol| != 1", m.volume(), m.dims());
    return r;
}

inline CheckResult check_adjoints(const Model& m, int samples, std::uint64_t seed) {
    CheckResult r{"adjointness", true, 0, {}, {}};
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const OperatorKind ops[] = {OperatorKind::d, OperatorKind::del, OperatorKind::delbar, OperatorKind::mu, OperatorKind::mubar};
    for (int s = 0; s < samples; ++s) {
        Form a = random_mixed_form(rng, m);
        Form b = random_mixed_form(rng, m);
        for (auto op : ops) {
            ++r.cases;
            Scalar lhs = l2_inner(apply_operator(m, a, op), b, m.norms());
            Scalar rhs = l2_inner(a, adjoint(m, b, op), m.norms());
            if (!(lhs == rhs)) detail::fail(r, "<" + std::string(to_string(op)) + " a, b> != <a, " + std::string(to_string(op)) + "* b>", a, m.dims());
        }
    }
    return r;
}

inline ValidationReport validate(const Model& m, const ValidateOptions& o = {}) {
    ValidationReport rep;
    rep.checks.push_back(check_d_squared(m, o.char_box));
    rep.checks.push_back(check_relations(m, o.samples, o.seed));
    rep.checks.push_back(check_metric(m));
    // star and the adjoints need a nondegenerate volume
    if (rep.checks.back().passed)
        rep.checks.push_back(check_adjoints(m, o.samples, o.seed));
    else
        rep.checks.push_back({"adjointness", false, 0, "skipped: metric is inconsistent", {}});
    return rep;
}

}  // namespace ahodge
