#pragma once

// Harmonic-space solver: assembles the kernel characterizations of the Laplacians on
// Fourier mode classes, solves them exactly and filters by deck rules.

#include "ahodge/calculus.hpp"
#include "ahodge/linalg.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

namespace ahodge {

enum class SystemKind { hodge, del, delbar, bc, aeppli, asd };

inline std::string_view to_string(SystemKind k) {
    switch (k) {
        case SystemKind::hodge: return "hodge";
        case SystemKind::del: return "del";
        case SystemKind::delbar: return "delbar";
        case SystemKind::bc: return "bc";
        case SystemKind::aeppli: return "aeppli";
        case SystemKind::asd: return "asd";
    }
    return "?";
}

inline SystemKind system_from_string(std::string_view s) {
    for (auto k : {SystemKind::hodge, SystemKind::del, SystemKind::delbar, SystemKind::bc, SystemKind::aeppli, SystemKind::asd})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown system '" + std::string(s) + "' (expected hodge, del, delbar, bc, aeppli or asd)");
}

struct SystemRow {
    std::string name;
    int order;  // number of d-components applied; the row is pi^order-homogeneous
    std::function<Form(const Model&, const Form&)> apply;
};

/// Equation rows of a system; alpha is harmonic iff every row vanishes.
inline std::vector<SystemRow> system_rows(SystemKind k) {
    auto D = [](const Model& m, const Form& a) { return del(m, a); };
    auto Db = [](const Model& m, const Form& a) { return delbar(m, a); };
    auto Ds = [](const Model& m, const Form& a) { return del(m, star(m, a)); };
    auto Dbs = [](const Model& m, const Form& a) { return delbar(m, star(m, a)); };
    switch (k) {
        case SystemKind::hodge:
            return {{"d a", 1, [](const Model& m, const Form& a) { return apply_d(m, a); }},
                    {"d *a", 1, [](const Model& m, const Form& a) { return apply_d(m, star(m, a)); }}};
        case SystemKind::del:
            return {{"del a", 1, D}, {"delbar *a", 1, Dbs}};
        case SystemKind::delbar:
            return {{"delbar a", 1, Db}, {"del *a", 1, Ds}};
        case SystemKind::bc:
            return {{"del a", 1, D},
                    {"delbar a", 1, Db},
                    {"del delbar *a", 2, [](const Model& m, const Form& a) { return del(m, delbar(m, star(m, a))); }}};
        case SystemKind::aeppli:
            return {{"del *a", 1, Ds},
                    {"delbar *a", 1, Dbs},
                    {"del delbar a", 2, [](const Model& m, const Form& a) { return del(m, delbar(m, a)); }}};
        case SystemKind::asd:
            return {{"d a", 1, [](const Model& m, const Form& a) { return apply_d(m, a); }},
                    {"*a + a", 0, [](const Model& m, const Form& a) { return star(m, a) + a; }}};
    }
    return {};
}

/// Residual of each system row on alpha.
inline std::vector<std::pair<std::string, Form>> system_residuals(const Model& m, SystemKind k, const Form& alpha) {
    std::vector<std::pair<std::string, Form>> out;
    for (const auto& r : system_rows(k)) out.emplace_back(r.name, r.apply(m, alpha));
    return out;
}

inline bool satisfies(const Model& m, SystemKind k, const Form& alpha) {
    for (const auto& r : system_rows(k))
        if (!r.apply(m, alpha).is_zero()) return false;
    return true;
}

inline int system_order(SystemKind k) {
    int o = 0;
    for (const auto& r : system_rows(k)) o = std::max(o, r.order);
    return o;
}

// ---------------------------------------------------------------------------
// Mode classes

struct ModeClass {
    std::vector<ModeIndex> modes;     // sorted
    std::vector<ModeIndex> interior;  // sorted subset carrying unknowns
};

/// Smallest admissible margin: the reach of one frame-field application.
inline int required_margin(const Model& m) { return m.max_shift(); }

inline std::vector<ModeClass> mode_classes(const Model& m, int box, int margin) {
    if (box < 0) throw std::invalid_argument("box must be non-negative");
    if (margin < required_margin(m))
        throw std::invalid_argument("margin " + std::to_string(margin) + " is below the required minimum " + std::to_string(required_margin(m)));
    std::vector<ModeIndex> shifts;
    for (const auto* table : {&m.spec().derivations.holo, &m.spec().derivations.anti})
        for (const auto& rules : *table)
            for (const auto& r : rules)
                if (!r.shift.is_zero()) {
                    shifts.push_back(r.shift);
                    shifts.push_back(-r.shift);
                }
    std::sort(shifts.begin(), shifts.end());
    shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());

    auto in_box = [&](const ModeIndex& k) { return k.sup_norm() <= box; };
    auto interior = [&](const ModeIndex& k) {
        for (int j : m.shifted_axes())
            if (std::abs(k[j]) > box - margin) return false;
        return true;
    };
    std::set<ModeIndex> seen;
    std::vector<ModeClass> out;
    for (const auto& start : box_modes(m.dims(), box)) {
        if (seen.count(start)) continue;
        ModeClass c;
        std::vector<ModeIndex> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            ModeIndex k = stack.back();
            stack.pop_back();
            c.modes.push_back(k);
            for (const auto& s : shifts) {
                ModeIndex nb = k + s;
                nb.dims = m.dims();
                if (in_box(nb) && !seen.count(nb)) {
                    seen.insert(nb);
                    stack.push_back(nb);
                }
            }
        }
        std::sort(c.modes.begin(), c.modes.end());
        for (const auto& k : c.modes)
            if (interior(k)) c.interior.push_back(k);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const ModeClass& a, const ModeClass& b) { return a.modes.front() < b.modes.front(); });
    return out;
}

// ---------------------------------------------------------------------------
// Assembly

using Column = std::pair<ModeIndex, BasisIndex>;

struct RowLabel {
    int system_row;
    ModeIndex mode;
    BasisIndex basis;
    friend bool operator<(const RowLabel& a, const RowLabel& b) {
        if (a.system_row != b.system_row) return a.system_row < b.system_row;
        if (!(a.mode == b.mode)) return a.mode < b.mode;
        return a.basis < b.basis;
    }
};

struct Assembly {
    Matrix matrix;
    std::vector<Column> columns;  // ordered by (mode, generator)
    std::vector<RowLabel> rows;   // ordered by (system row, mode, generator)
};

/// Generators carrying unknowns: bidegree (p, q), or every 2-form for asd.
inline std::vector<BasisIndex> unknown_generators(const Model& m, SystemKind k, std::pair<int, int> bidegree) {
    if (k == SystemKind::asd) {
        std::vector<BasisIndex> out;
        for (const auto& b : full_basis(m.n()))
            if (b.degree() == 2) out.push_back(b);
        return out;
    }
    auto [p, q] = bidegree;
    if (p < 0 || q < 0 || p > m.n() || q > m.n()) throw std::invalid_argument("bidegree out of range");
    return basis_of(m.n(), p, q);
}

inline Assembly assemble_columns(const Model& m, SystemKind k, std::vector<Column> columns) {
    const auto rows = system_rows(k);
    std::map<RowLabel, std::vector<std::pair<std::size_t, Scalar>>> entries;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        Form unit = Form::generator(columns[c].second, TrigPoly::mode(columns[c].first));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Form img = rows[r].apply(m, unit);
            for (const auto& [b, f] : img.terms())
                for (const auto& [kappa, s] : f.terms()) {
                    ModeIndex kk = kappa;
                    kk.dims = m.dims();
                    entries[RowLabel{static_cast<int>(r), kk, b}].emplace_back(c, s);
                }
        }
    }
    Assembly a;
    a.columns = std::move(columns);
    a.matrix = Matrix(entries.size(), a.columns.size());
    std::size_t r = 0;
    for (auto& [label, row] : entries) {
        a.rows.push_back(label);
        for (auto& [c, s] : row) a.matrix(r, c) += s;
        ++r;
    }
    return a;
}

inline Assembly assemble(const Model& m, SystemKind k, std::pair<int, int> bidegree, const ModeClass& cls) {
    std::vector<Column> cols;
    const auto gens = unknown_generators(m, k, bidegree);
    for (const auto& kappa : cls.interior)
        for (const auto& b : gens) cols.emplace_back(kappa, b);
    return assemble_columns(m, k, std::move(cols));
}

inline Form column_vector_to_form(const std::vector<Column>& cols, const Vector& v) {
    Form f;
    for (std::size_t c = 0; c < cols.size(); ++c)
        if (!v[c].is_zero()) f.add(cols[c].second, TrigPoly::mode(cols[c].first, v[c]));
    return f;
}

// ---------------------------------------------------------------------------
// Deck filtering

/// Rows of the deck-invariance constraints on the given columns.
inline std::vector<Vector> deck_constraints(const Model& m, const std::vector<Column>& cols) {
    std::map<Column, std::size_t> index;
    for (std::size_t c = 0; c < cols.size(); ++c) index[cols[c]] = c;
    std::vector<Vector> rows;
    for (const auto& d : m.spec().decks)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const auto& [kappa, b] = cols[c];
            Vector row(cols.size());
            if (d.kind == DeckRule::Kind::parity) {
                if (((kappa[d.index] % d.modulus) + d.modulus) % d.modulus == 0) continue;
                row[c] = Scalar(1);
            } else {
                // c_{A kappa} = (-1)^{phase(kappa)} c_kappa
                ModeIndex image = d.apply(kappa);
                image.dims = m.dims();
                Scalar sign = (d.phase(kappa) % 2 == 0) ? Scalar(1) : Scalar(-1);
                auto it = index.find({image, b});
                row[c] -= sign;
                if (it != index.end()) row[it->second] += Scalar(1);
            }
            if (std::any_of(row.begin(), row.end(), [](const Scalar& s) { return !s.is_zero(); })) rows.push_back(std::move(row));
        }
    return rows;
}

/// Intersects span(basis) (vectors over cols) with the deck-invariant subspace.
inline std::vector<Vector> deck_project(const Model& m, const std::vector<Column>& cols, const std::vector<Vector>& basis) {
    if (basis.empty() || m.spec().decks.empty()) return basis;
    auto cons = deck_constraints(m, cols);
    if (cons.empty()) return basis;
    // (C V^T) x = 0
    Matrix cv(cons.size(), basis.size());
    for (std::size_t r = 0; r < cons.size(); ++r)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Scalar s;
            for (std::size_t c = 0; c < cols.size(); ++c)
                if (!cons[r][c].is_zero() && !basis[j][c].is_zero()) s += cons[r][c] * basis[j][c];
            cv(r, j) = s;
        }
    std::vector<Vector> combos = nullspace(cv);
    std::vector<Vector> out;
    for (const auto& x : combos) {
        Vector v(cols.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (!x[j].is_zero())
                for (std::size_t c = 0; c < cols.size(); ++c)
                    if (!basis[j][c].is_zero()) v[c] += x[j] * basis[j][c];
        out.push_back(std::move(v));
    }
    return span_basis(out, cols.size());
}

/// Form-level deck projection: the deck-invariant part of span(forms).
inline std::vector<Form> deck_project(const Model& m, const std::vector<Form>& forms) {
    std::set<Column> keys;
    for (const auto& f : forms)
        for (const auto& [b, tp] : f.terms())
            for (const auto& [k, c] : tp.terms()) {
                ModeIndex kk = k;
                kk.dims = m.dims();
                keys.insert({kk, b});
                // involution partners must be representable
                for (const auto& d : m.spec().decks)
                    if (d.kind == DeckRule::Kind::involution) {
                        ModeIndex img = d.apply(kk);
                        img.dims = m.dims();
                        keys.insert({img, b});
                    }
            }
    std::vector<Column> cols(keys.begin(), keys.end());
    std::map<Column, std::size_t> idx;
    for (std::size_t c = 0; c < cols.size(); ++c) idx[cols[c]] = c;
    std::vector<Vector> vecs;
    for (const auto& f : forms) {
        Vector v(cols.size());
        for (const auto& [b, tp] : f.terms())
            for (const auto& [k, c] : tp.terms()) {
                ModeIndex kk = k;
                kk.dims = m.dims();
                v[idx[{kk, b}]] = c;
            }
        vecs.push_back(std::move(v));
    }
    std::vector<Form> out;
    for (const auto& v : deck_project(m, cols, span_basis(vecs, cols.size()))) out.push_back(column_vector_to_form(cols, v));
    return out;
}

// ---------------------------------------------------------------------------
// Solving

enum class Certification { exact_decoupled, box_lower_bound };

inline std::string_view to_string(Certification c) { return c == Certification::exact_decoupled ? "exact-decoupled" : "box-lower-bound"; }

struct SolveOptions {
    int box = 4;
    std::optional<int> margin;  // default: required_margin(model)
    int threads = 0;            // 0: AHODGE_THREADS or hardware concurrency
};

struct SolveReport {
    std::string model;
    Rational delta;
    std::optional<std::pair<int, int>> bidegree;  // empty for asd
    SystemKind system = SystemKind::bc;
    int box = 0;
    int margin = 0;
    int dims = 0;
    std::size_t dimension = 0;
    std::size_t cover_dimension = 0;
    std::size_t shell_kernel_dimension = 0;  // kernel on the two outermost shells (shift-free models)
    Certification certification = Certification::box_lower_bound;
    std::string sector;
    std::vector<Form> basis;
    std::vector<Form> cover_basis;  // before deck filtering
    double elapsed_ms = 0;
};

inline std::string sector_note(const Model& m) {
    if (m.name() == "kt") return "characters in (t,x,y) with zero z-frequency";
    if (!m.spec().decks.empty()) return "cover-torus characters filtered by deck rules";
    return "all characters in the box";
}

inline int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("AHODGE_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
inline void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    threads = std::max(1, std::min<int>(threads, static_cast<int>(count)));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

namespace detail {

/// Indices of classes grouped into orbits under the involution deck rules.
inline std::vector<std::vector<std::size_t>> orbit_groups(const Model& m, const std::vector<ModeClass>& classes) {
    std::map<ModeIndex, std::size_t> owner;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (const auto& k : classes[i].modes) owner[k] = i;
    std::vector<std::size_t> parent(classes.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& d : m.spec().decks) {
        if (d.kind != DeckRule::Kind::involution) continue;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            ModeIndex img = d.apply(classes[i].modes.front());
            img.dims = m.dims();
            auto it = owner.find(img);
            if (it == owner.end()) continue;
            std::size_t a = find(i), b = find(it->second);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < classes.size(); ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

struct ClassKernel {
    std::vector<Column> columns;
    std::vector<Vector> kernel;
};

}  // namespace detail

inline SolveReport solve_harmonic(const Model& m, std::optional<std::pair<int, int>> bidegree, SystemKind system, const SolveOptions& opt = {}) {
    auto t0 = std::chrono::steady_clock::now();
    if (system != SystemKind::asd && !bidegree) throw std::invalid_argument("system " + std::string(to_string(system)) + " needs a bidegree");
    if (system == SystemKind::asd && m.n() != 2) throw std::invalid_argument("asd system requires n = 2");
    SolveReport rep;
    rep.model = m.name();
    rep.delta = m.delta();
    rep.bidegree = system == SystemKind::asd ? std::nullopt : bidegree;
    rep.system = system;
    rep.box = opt.box;
    rep.margin = opt.margin.value_or(required_margin(m));
    rep.dims = m.dims();
    rep.sector = sector_note(m);
    const auto pq = bidegree.value_or(std::pair{1, 1});
    (void)unknown_generators(m, system, pq);  // range check

    auto classes = mode_classes(m, rep.box, rep.margin);
    std::vector<detail::ClassKernel> kernels(classes.size());
    parallel_for(classes.size(), worker_count(opt.threads), [&](std::size_t i) {
        if (classes[i].interior.empty()) return;
        Assembly a = assemble(m, system, pq, classes[i]);
        kernels[i].kernel = nullspace_fast(a.matrix);
        kernels[i].columns = std::move(a.columns);
    });

    // deck filtering per orbit group, in deterministic group order
    for (const auto& group : detail::orbit_groups(m, classes)) {
        std::vector<Column> cols;
        std::vector<Vector> vecs;
        std::size_t offset = 0;
        std::size_t total = 0;
        for (auto i : group) total += kernels[i].columns.size();
        for (auto i : group) {
            for (const auto& v : kernels[i].kernel) {
                Vector w(total);
                for (std::size_t c = 0; c < v.size(); ++c) w[offset + c] = v[c];
                vecs.push_back(std::move(w));
                rep.cover_basis.push_back(column_vector_to_form(kernels[i].columns, v));
            }
            cols.insert(cols.end(), kernels[i].columns.begin(), kernels[i].columns.end());
            offset += kernels[i].columns.size();
        }
        rep.cover_dimension += vecs.size();
        for (const auto& v : deck_project(m, cols, vecs)) rep.basis.push_back(column_vector_to_form(cols, v));
    }
    rep.dimension = rep.basis.size();

    if (m.shift_free()) {
        const int lo = std::max(1, rep.box - 1);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            int r = classes[i].modes.front().sup_norm();
            if (r >= lo && r <= rep.box) rep.shell_kernel_dimension += kernels[i].kernel.size();
        }
        if (rep.shell_kernel_dimension == 0) rep.certification = Certification::exact_decoupled;
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline SolveReport b_minus(const Model& m, const SolveOptions& opt = {}) {
    if (m.n() != 2) throw std::invalid_argument("b_minus requires n = 2");
    return solve_harmonic(m, std::nullopt, SystemKind::asd, opt);
}

// ---------------------------------------------------------------------------
// Span comparison

enum class Relation { equal, a_in_b, b_in_a, incomparable };

inline std::string_view to_string(Relation r) {
    switch (r) {
        case Relation::equal: return "equal";
        case Relation::a_in_b: return "A<B";
        case Relation::b_in_a: return "B<A";
        case Relation::incomparable: return "incomparable";
    }
    return "?";
}

namespace detail {

struct Coordinates {
    std::vector<Column> cols;
    std::map<Column, std::size_t> index;

    Coordinates(const std::vector<const std::vector<Form>*>& sets, int dims) {
        std::set<Column> keys;
        for (const auto* s : sets)
            for (const auto& f : *s)
                for (const auto& [b, tp] : f.terms())
                    for (const auto& [k, c] : tp.terms()) {
                        ModeIndex kk = k;
                        kk.dims = dims;
                        keys.insert({kk, b});
                    }
        cols.assign(keys.begin(), keys.end());
        for (std::size_t c = 0; c < cols.size(); ++c) index[cols[c]] = c;
    }
    [[nodiscard]] Vector of(const Form& f) const {
        Vector v(cols.size());
        for (const auto& [b, tp] : f.terms())
            for (const auto& [k, c] : tp.terms()) {
                ModeIndex kk = k;
                kk.dims = cols.empty() ? k.dims : cols.front().first.dims;
                v[index.at({kk, b})] = c;
            }
        return v;
    }
};

inline std::size_t span_rank(const Coordinates& co, const std::vector<Form>& forms) {
    std::vector<Vector> v;
    for (const auto& f : forms) v.push_back(co.of(f));
    return v.empty() ? 0 : rank(Matrix::from_rows(v, co.cols.size()));
}

}  // namespace detail

/// dim(span(a) + span(b)) and friends, exact.
struct SpanComparison {
    Relation relation = Relation::equal;
    std::size_t dim_a = 0, dim_b = 0, dim_sum = 0;
    std::optional<Form> witness;  // element of the larger space outside the smaller
};

inline SpanComparison compare_spans(const std::vector<Form>& a, const std::vector<Form>& b, int dims) {
    detail::Coordinates co({&a, &b}, dims);
    SpanComparison r;
    r.dim_a = detail::span_rank(co, a);
    r.dim_b = detail::span_rank(co, b);
    std::vector<Form> both = a;
    both.insert(both.end(), b.begin(), b.end());
    r.dim_sum = detail::span_rank(co, both);
    if (r.dim_sum == r.dim_a && r.dim_sum == r.dim_b)
        r.relation = Relation::equal;
    else if (r.dim_sum == r.dim_b)
        r.relation = Relation::a_in_b;
    else if (r.dim_sum == r.dim_a)
        r.relation = Relation::b_in_a;
    else
        r.relation = Relation::incomparable;
    auto find_witness = [&](const std::vector<Form>& big, const std::vector<Form>& small, std::size_t small_dim) -> std::optional<Form> {
        for (const auto& f : big) {
            std::vector<Form> trial = small;
            trial.push_back(f);
            if (detail::span_rank(co, trial) > small_dim) return f;
        }
        return std::nullopt;
    };
    if (r.relation == Relation::a_in_b) r.witness = find_witness(b, a, r.dim_a);
    if (r.relation == Relation::b_in_a || r.relation == Relation::incomparable) r.witness = find_witness(a, b, r.dim_b);
    return r;
}

struct CompareReport {
    SolveReport a, b;
    SpanComparison span;
};

inline CompareReport compare(const Model& m, std::pair<int, int> bidegree, SystemKind sys_a, SystemKind sys_b, const SolveOptions& opt = {}) {
    CompareReport r;
    r.a = solve_harmonic(m, bidegree, sys_a, opt);
    r.b = solve_harmonic(m, bidegree, sys_b, opt);
    r.span = compare_spans(r.a.basis, r.b.basis, m.dims());
    return r;
}

// ---------------------------------------------------------------------------
// Lefschetz decomposition, circle counting, A_s membership

struct Lefschetz {
    TrigPoly f;
    Form gamma;
};

/// phi = f omega + gamma with <gamma, omega> = 0 and *gamma = -gamma (n = 2, phi of type (1,1)).
inline Lefschetz lefschetz11(const Model& m, const Form& phi) {
    if (m.n() != 2) throw std::invalid_argument("lefschetz11 requires n = 2");
    if (!phi.is_zero() && phi.bidegree() != std::pair{1, 1}) throw std::invalid_argument("lefschetz11 needs a (1,1)-form");
    Lefschetz out;
    out.f = inner(phi, m.omega(), m.norms()) * Scalar(detail::q(1, 2));
    out.gamma = phi - out.f * m.omega();
    return out;
}

struct CircleCount {
    std::size_t count = 0;
    std::vector<std::pair<long, long>> points;  // (l, m), ascending
};

/// Lattice points (l, m) with m^2 + (l - delta)^2 = delta^2.
inline CircleCount circle_count(const Rational& delta) {
    if (sgn(delta) <= 0) throw std::invalid_argument("circle_count needs delta > 0");
    CircleCount out;
    Rational two_delta = 2 * delta;
    mpz_class lmax = two_delta.get_num() / two_delta.get_den();  // floor, two_delta > 0
    for (long l = 0; l <= lmax.get_si(); ++l) {
        Rational m2 = Rational(l) * (two_delta - l);
        if (m2.get_den() != 1 || sgn(m2) < 0) continue;
        mpz_class root = sqrt(m2.get_num());
        if (root * root != m2.get_num()) continue;
        long r = root.get_si();
        if (r == 0) {
            out.points.emplace_back(l, 0);
        } else {
            out.points.emplace_back(l, -r);
            out.points.emplace_back(l, r);
        }
    }
    out.count = out.points.size();
    return out;
}

/// alpha in A_s = ker mubar, ker delbar^2, ker del^2, ker mu.
inline bool as_membership(const Model& m, const Form& alpha) {
    if (!alpha.is_homogeneous()) throw std::invalid_argument("as_membership needs a homogeneous form");
    return mubar(m, alpha).is_zero() && delbar(m, delbar(m, alpha)).is_zero() && del(m, del(m, alpha)).is_zero() && mu(m, alpha).is_zero();
}

/// Basis of span(bc basis) cut down to A_s; the domain of the injection into Bott-Chern cohomology.
inline std::vector<Form> bc_cap_as(const Model& m, const SolveReport& rep) {
    if (rep.system != SystemKind::bc) throw std::invalid_argument("bc_cap_as needs a bc report");
    if (rep.basis.empty()) return {};
    std::vector<std::vector<Form>> parts(4);
    for (const auto& f : rep.basis) {
        parts[0].push_back(mubar(m, f));
        parts[1].push_back(delbar(m, delbar(m, f)));
        parts[2].push_back(del(m, del(m, f)));
        parts[3].push_back(mu(m, f));
    }
    std::vector<detail::Coordinates> cos;
    for (const auto& p : parts) cos.emplace_back(std::vector<const std::vector<Form>*>{&p}, m.dims());
    std::size_t width = 0;
    for (const auto& c : cos) width += c.cols.size();
    if (width == 0) return rep.basis;
    Matrix a(width, rep.basis.size());
    for (std::size_t j = 0; j < rep.basis.size(); ++j) {
        std::size_t off = 0;
        for (std::size_t p = 0; p < 4; ++p) {
            Vector v = cos[p].of(parts[p][j]);
            for (std::size_t r = 0; r < v.size(); ++r) a(off + r, j) = v[r];
            off += cos[p].cols.size();
        }
    }
    std::vector<Form> out;
    for (const auto& x : nullspace(a)) {
        Form f;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!x[j].is_zero()) f += rep.basis[j] * x[j];
        out.push_back(f);
    }
    return out;
}

inline std::vector<Form> bc_cap_as(const Model& m, std::pair<int, int> bidegree, const SolveOptions& opt = {}) {
    return bc_cap_as(m, solve_harmonic(m, bidegree, SystemKind::bc, opt));
}

}  // namespace ahodge
