// ahodge: command-line front end.
//
// Exit codes: 0 success, 1 usage, 2 invalid model, 3 internal consistency failure.

#include "ahodge/ahodge.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ahodge;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvalidModel = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string model = "kt";
    std::string delta = "1";
    std::string format = "table";
    std::string output;
    bool timing = false;
};

Rational parse_delta(const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--delta: ") + e.what());
    }
}

Model load(const Common& c) {
    Rational delta = parse_delta(c.delta);
    if (c.model == "kt" && sgn(delta) == 0) throw UsageError("kt requires --delta != 0 (b = 8*pi*delta must be nonzero)");
    return resolve_model(c.model, delta);
}

std::pair<int, int> parse_bidegree(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--bidegree expects p,q");
    try {
        std::size_t used = 0;
        int p = std::stoi(text.substr(0, comma), &used);
        if (used != comma) throw UsageError("--bidegree expects p,q");
        std::string rest = text.substr(comma + 1);
        int q = std::stoi(rest, &used);
        if (used != rest.size()) throw UsageError("--bidegree expects p,q");
        return {p, q};
    } catch (const std::logic_error&) {
        throw UsageError("--bidegree expects p,q");
    }
}

SystemKind parse_system(const std::string& s) {
    try {
        return system_from_string(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void emit(const Common& c, const std::string& table, const ojson& doc) {
    std::string text = c.format == "json" ? doc.dump(2) + "\n" : table;
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output);
    if (!out) throw UsageError("cannot write '" + c.output + "'");
    out << text;
}

std::string bidegree_text(const std::optional<std::pair<int, int>>& b) {
    return b ? "(" + std::to_string(b->first) + "," + std::to_string(b->second) + ")" : "2-forms";
}

/// Re-checks a report against its own system and the deck rules.
void verify_report(const Model& m, const SolveReport& r) {
    for (const auto& f : r.basis) {
        if (!satisfies(m, r.system, f)) throw InternalError("basis form fails its system: " + format_form(f, m.dims()));
        auto proj = deck_project(m, std::vector<Form>{f});
        if (proj.size() != 1) throw InternalError("basis form is not deck invariant: " + format_form(f, m.dims()));
    }
}

std::string solve_table(const SolveReport& r, bool timing) {
    std::ostringstream t;
    t << "model          " << r.model << "\n";
    t << "delta          " << format_rational(r.delta) << "\n";
    t << "bidegree       " << bidegree_text(r.bidegree) << "\n";
    t << "system         " << to_string(r.system) << "\n";
    t << "box / margin   " << r.box << " / " << r.margin << "\n";
    t << "dimension      " << r.dimension << "\n";
    t << "cover dim      " << r.cover_dimension << "\n";
    t << "certification  " << to_string(r.certification) << " (shell kernel " << r.shell_kernel_dimension << ")\n";
    t << "sector         " << r.sector << "\n";
    if (timing) t << "elapsed_ms     " << static_cast<long>(r.elapsed_ms + 0.5) << "\n";
    for (std::size_t i = 0; i < r.basis.size(); ++i) t << "  [" << i << "] " << format_form(r.basis[i], r.dims) << "\n";
    return t.str();
}

void add_common(CLI::App* sub, Common& c, bool with_model = true) {
    if (with_model) {
        sub->add_option("--model", c.model, "builtin (kt, hyperelliptic, torus4) or model file")->capture_default_str();
        sub->add_option("--delta", c.delta, "rational parameter, b = 8*pi*delta (kt only)")->capture_default_str();
    }
    sub->add_option("--format", c.format, "table or json")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
    sub->add_option("--output", c.output, "write the report to this file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact harmonic forms on invariant almost-Hermitian models"};
    app.require_subcommand(1);

    Common common;
    std::string bidegree = "1,1", system = "bc", systems = "bc,delbar", laplacian = "bc", theta;
    int box = 4, samples = 50;
    std::optional<int> margin;
    std::uint64_t seed = 7;

    auto* v = app.add_subcommand("validate", "check structure equations, relations, metric and adjoints");
    add_common(v, common);
    v->add_option("--samples", samples, "random forms per identity")->capture_default_str();
    v->add_option("--seed", seed)->capture_default_str();

    auto* s = app.add_subcommand("solve", "harmonic forms of one system");
    add_common(s, common);
    s->add_option("--bidegree", bidegree, "p,q")->capture_default_str();
    s->add_option("--system", system, "hodge, del, delbar, bc, aeppli or asd")->capture_default_str();
    s->add_option("--box", box, "mode box radius")->capture_default_str()->check(CLI::NonNegativeNumber);
    s->add_option("--margin", margin, "interior margin (default: shift reach)")->check(CLI::NonNegativeNumber);
    s->add_flag("--timing", common.timing, "include elapsed_ms");

    auto* c = app.add_subcommand("compare", "compare two harmonic spaces");
    add_common(c, common);
    c->add_option("--bidegree", bidegree, "p,q")->capture_default_str();
    c->add_option("--systems", systems, "a,b")->capture_default_str();
    c->add_option("--box", box, "mode box radius")->capture_default_str()->check(CLI::NonNegativeNumber);
    c->add_option("--margin", margin, "interior margin (default: shift reach)")->check(CLI::NonNegativeNumber);
    c->add_flag("--timing", common.timing, "include elapsed_ms");

    auto* y = app.add_subcommand("symbol", "principal symbol invertibility on sampled covectors");
    add_common(y, common);
    y->add_option("--laplacian", laplacian, "bc, aeppli, d, del, delbar or an operator name")->capture_default_str();
    y->add_option("--samples", samples)->capture_default_str();
    y->add_option("--seed", seed)->capture_default_str();

    auto* r = app.add_subcommand("circle", "lattice points on the circle m^2 + (l - delta)^2 = delta^2");
    add_common(r, common, false);
    r->add_option("--delta", common.delta, "positive rational")->required();

    auto* g = app.add_subcommand("diagnostics", "Gauduchon defect, lcK check and operator identities");
    add_common(g, common);
    g->add_option("--theta", theta, "1-form text (default: e^4 on hyperelliptic, 0 otherwise)");
    g->add_option("--samples", samples, "random forms for the duality check")->capture_default_str();
    g->add_option("--seed", seed)->capture_default_str();

    auto* e = app.add_subcommand("export", "print a model as JSON");
    e->add_option("--model", common.model)->capture_default_str();
    e->add_option("--delta", common.delta)->capture_default_str();
    e->add_option("--output", common.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*v) {
            Model m = load(common);
            ValidateOptions o;
            o.samples = samples;
            o.seed = seed;
            auto rep = validate(m, o);
            std::ostringstream t;
            for (const auto& ch : rep.checks) {
                t << (ch.passed ? "pass  " : "FAIL  ") << ch.name << " (" << ch.cases << " cases)";
                if (!ch.passed) t << ": " << ch.detail << "\n      witness: " << ch.witness;
                t << "\n";
            }
            t << (rep.passed() ? "model valid\n" : "model invalid\n");
            emit(common, t.str(), to_json(rep));
            return rep.passed() ? kOk : kInvalidModel;
        }
        if (*s) {
            Model m = load(common);
            SystemKind k = parse_system(system);
            std::optional<std::pair<int, int>> pq;
            if (k != SystemKind::asd) pq = parse_bidegree(bidegree);
            SolveOptions o;
            o.box = box;
            o.margin = margin;
            SolveReport rep;
            try {
                rep = solve_harmonic(m, pq, k, o);
            } catch (const std::invalid_argument& err) {
                throw UsageError(err.what());
            }
            verify_report(m, rep);
            emit(common, solve_table(rep, common.timing), to_json(rep, common.timing));
            return kOk;
        }
        if (*c) {
            Model m = load(common);
            auto comma = systems.find(',');
            if (comma == std::string::npos) throw UsageError("--systems expects a,b");
            SystemKind ka = parse_system(systems.substr(0, comma)), kb = parse_system(systems.substr(comma + 1));
            SolveOptions o;
            o.box = box;
            o.margin = margin;
            CompareReport rep;
            try {
                rep = compare(m, parse_bidegree(bidegree), ka, kb, o);
            } catch (const std::invalid_argument& err) {
                throw UsageError(err.what());
            }
            verify_report(m, rep.a);
            verify_report(m, rep.b);
            std::ostringstream t;
            t << relation_text(rep.span.relation, to_string(ka), to_string(kb)) << "\n";
            t << "dim " << to_string(ka) << " = " << rep.span.dim_a << ", dim " << to_string(kb) << " = " << rep.span.dim_b << "\n";
            if (rep.span.witness) t << "witness " << format_form(*rep.span.witness, m.dims()) << "\n";
            emit(common, t.str(), to_json(rep, common.timing));
            return kOk;
        }
        if (*y) {
            Model m = load(common);
            OperatorKind op;
            try {
                op = operator_from_string(laplacian);
                if (differential_order(op) == 0) throw std::invalid_argument(std::string(to_string(op)) + " has order 0 and no positive-order symbol");
            } catch (const std::invalid_argument& err) {
                throw UsageError(err.what());
            }
            auto rep = ellipticity_check(m, op, samples, seed);
            std::ostringstream t;
            t << to_string(op) << ": " << rep.samples << " samples, " << rep.skipped_zero << " zero skipped\n";
            t << (rep.all_invertible ? "all invertible\n" : std::to_string(rep.singular) + " singular symbol matrices\n");
            if (rep.L_checked)
                t << "L: sign " << rep.L_sign << ", min |Re sigma| / |xi|^2 = " << format_rational(rep.L_min_ratio)
                  << (rep.L_definite ? " (definite)\n" : " (not definite)\n");
            emit(common, t.str(), to_json(rep));
            return kOk;
        }
        if (*r) {
            Rational delta = parse_delta(common.delta);
            if (sgn(delta) <= 0) throw UsageError("--delta must be positive");
            auto cc = circle_count(delta);
            std::ostringstream t;
            t << "count " << cc.count << "\n";
            for (auto [l, mm] : cc.points) t << "  (l, m) = (" << l << ", " << mm << ")\n";
            emit(common, t.str(), to_json(cc, delta));
            return kOk;
        }
        if (*g) {
            Model m = load(common);
            if (m.n() != 2) throw UsageError("diagnostics needs a model with n = 2");
            Form th;
            if (!theta.empty()) {
                try {
                    th = parse_form(theta);
                } catch (const std::exception& err) {
                    throw UsageError(std::string("--theta: ") + err.what());
                }
            } else if (m.name() == "hyperelliptic") {
                th = hyperelliptic_e(4);
            }
            Form defect = gauduchon_defect(m);
            auto lck = lck_check(m, th);
            bool star2 = star_squared_sign(m);
            std::mt19937_64 rng(seed);
            bool duality = true;
            for (int i = 0; i < samples && duality; ++i) {
                Form a = random_mixed_form(rng, m);
                auto lhs = ahodge::laplacian(m, a, OperatorKind::lap_bc);
                auto rhs = ahodge::laplacian(m, star(m, a), OperatorKind::lap_aeppli);
                for (auto& [deg, f] : lhs)
                    if (!(star(m, f) == rhs[deg])) duality = false;
            }
            std::vector<std::string> anticommute;
            for (int p = 0; p <= 2; ++p)
                for (int q = 0; q <= 2; ++q)
                    if (del_delbar_anticommute(m, p, q)) anticommute.push_back("(" + std::to_string(p) + "," + std::to_string(q) + ")");
            std::ostringstream t;
            t << "gauduchon defect del delbar omega = " << format_form(defect, m.dims()) << "\n";
            t << "d omega           = " << format_form(lck.d_omega, m.dims()) << "\n";
            t << "theta             = " << format_form(th, m.dims()) << "\n";
            t << "theta ^ omega     = " << format_form(lck.theta_wedge_omega, m.dims()) << "\n";
            t << "d omega = theta ^ omega: " << (lck.d_omega_eq_theta_omega ? "yes" : "no") << "\n";
            t << "d theta = 0: " << (lck.theta_closed ? "yes" : "no") << "\n";
            t << "theta harmonic: " << (lck.theta_harmonic_nonzero ? "yes" : "no") << "\n";
            t << "almost Kahler: " << (lck.almost_kahler ? "yes" : "no") << "\n";
            t << "star star = (-1)^k: " << (star2 ? "yes" : "no") << "\n";
            t << "star lap_bc = lap_aeppli star on " << samples << " forms: " << (duality ? "yes" : "no") << "\n";
            t << "del delbar + delbar del = 0 on:";
            for (const auto& b : anticommute) t << " " << b;
            t << "\n";
            ojson j;
            j["model"] = m.name();
            j["gauduchon_defect"] = format_form(defect, m.dims());
            j["d_omega"] = format_form(lck.d_omega, m.dims());
            j["theta"] = format_form(th, m.dims());
            j["d_omega_eq_theta_omega"] = lck.d_omega_eq_theta_omega;
            j["theta_closed"] = lck.theta_closed;
            j["theta_harmonic"] = lck.theta_harmonic_nonzero;
            j["almost_kahler"] = lck.almost_kahler;
            j["star_squared"] = star2;
            j["bc_aeppli_duality"] = duality;
            j["anticommute_bidegrees"] = anticommute;
            emit(common, t.str(), j);
            if (!star2 || !duality) throw InternalError("operator identity failed");
            return kOk;
        }
        if (*e) {
            Model m = load(common);
            Common out = common;
            out.format = "json";
            emit(out, "", ojson::parse(model_to_json(m).dump()));
            return kOk;
        }
    } catch (const UsageError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kUsage;
    } catch (const ModelError& err) {
        std::cerr << "invalid model: " << err.what() << "\n";
        return kInvalidModel;
    } catch (const InternalError& err) {
        std::cerr << "internal consistency failure: " << err.what() << "\n";
        return kInternal;
    } catch (const std::exception& err) {
        std::cerr << "internal failure: " << err.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
