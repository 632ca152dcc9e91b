#pragma once

// JSON model files. All rationals and Gaussian rationals are strings ("p/q", "a+bi");
// integer-valued fields (ranks, shifts, deck maps) are JSON integers.

#include "ahodge/model.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace ahodge {

using json = nlohmann::json;

/// Model document that does not match the schema; the message starts with the field path.
class SchemaError : public ModelError {
public:
    SchemaError(const std::string& path, const std::string& what) : ModelError(path + ": " + what), path_(path) {}
    [[nodiscard]] const std::string& path() const { return path_; }

private:
    std::string path_;
};

namespace io {

inline std::string scalar_text(const Scalar& s) { return format_rational(s.re) + "+" + format_rational(s.im) + "i"; }

inline const json& field(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

inline std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
inline std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline Rational rational(const json& v, const std::string& path) {
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
    } catch (const ParseError& e) {
        throw SchemaError(path, e.what());
    }
    throw SchemaError(path, "expected an exact rational string \"p/q\"");
}

inline Scalar scalar(const json& v, const std::string& path) {
    try {
        if (v.is_string()) return parse_scalar(v.get<std::string>());
        if (v.is_number_integer()) return Scalar(v.get<long>());
    } catch (const ParseError& e) {
        throw SchemaError(path, e.what());
    }
    throw SchemaError(path, "expected an exact Gaussian rational string \"a+bi\"");
}

inline int integer(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
    return v.get<int>();
}

inline std::vector<int> int_list(const json& v, const std::string& path) {
    if (!v.is_array()) throw SchemaError(path, "expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(integer(v[i], at(path, i)));
    return out;
}

inline Form form(const json& v, const std::string& path) {
    if (!v.is_string()) throw SchemaError(path, "expected form text");
    try {
        return parse_form(v.get<std::string>());
    } catch (const std::exception& e) {
        throw SchemaError(path, e.what());
    }
}

inline ModeIndex mode(const json& v, int dims, const std::string& path) {
    auto c = int_list(v, path);
    if (static_cast<int>(c.size()) != dims) throw SchemaError(path, "expected " + std::to_string(dims) + " components");
    ModeIndex k(dims);
    for (int j = 0; j < dims; ++j) k[j] = c[static_cast<std::size_t>(j)];
    return k;
}

inline json mode_json(const ModeIndex& k, int dims) {
    json a = json::array();
    for (int j = 0; j < dims; ++j) a.push_back(k[j]);
    return a;
}

}  // namespace io

inline json model_to_json(const ModelSpec& s) {
    using namespace io;
    json doc;
    doc["name"] = s.name;
    doc["n"] = s.n;
    doc["fourier_dims"] = s.fourier_dims;
    doc["char_base"] = format_rational(s.char_base);
    doc["delta"] = format_rational(s.delta);
    json structure = json::array();
    for (std::size_t a = 0; a < s.structure.size(); ++a) {
        json terms = json::array();
        for (const auto& t : s.structure[a])
            terms.push_back({{"basis", {mask_indices(t.basis.I), mask_indices(t.basis.J)}},
                             {"coeff", {{"c0", scalar_text(t.c0)}, {"cdelta", scalar_text(t.cdelta)}}}});
        structure.push_back({{"gen", a + 1}, {"terms", terms}});
    }
    doc["structure"] = structure;
    json derivations = json::array();
    auto emit = [&](const std::vector<std::vector<ShiftRule>>& table, const std::string& prefix) {
        for (std::size_t a = 0; a < table.size(); ++a) {
            json rules = json::array();
            for (const auto& r : table[a]) {
                json k = json::array();
                for (const auto& c : r.coeff.k) k.push_back(scalar_text(c));
                rules.push_back({{"shift", mode_json(r.shift, s.fourier_dims)},
                                 {"affine", {{"c0", scalar_text(r.coeff.c0)}, {"k", k}, {"cdelta", scalar_text(r.coeff.cdelta)}}}});
            }
            derivations.push_back({{"field", prefix + std::to_string(a + 1)}, {"rules", rules}});
        }
    };
    emit(s.derivations.holo, "V");
    emit(s.derivations.anti, "Vb");
    doc["derivations"] = derivations;
    json decks = json::array();
    for (const auto& d : s.decks) {
        if (d.kind == DeckRule::Kind::parity)
            decks.push_back({{"kind", "parity"}, {"index", d.index}, {"modulus", d.modulus}});
        else
            decks.push_back({{"kind", "involution"}, {"map", d.map}, {"phase", {{"c0", d.phase_c0}, {"k", d.phase_k}}}});
    }
    doc["decks"] = decks;
    json norms = json::array();
    for (const auto& r : s.metric.norms) norms.push_back(format_rational(r));
    doc["metric"] = {{"norms", norms}, {"omega", format_form(s.metric.omega, s.fourier_dims)}, {"volume", format_form(s.metric.volume, s.fourier_dims)}};
    return doc;
}

inline json model_to_json(const Model& m) { return model_to_json(m.spec()); }

/// Parses a model document. Does not run validate().
inline ModelSpec spec_from_json(const json& doc) {
    using namespace io;
    if (!doc.is_object()) throw SchemaError("$", "model document must be a JSON object");
    ModelSpec s;
    const json& name = field(doc, "name", "");
    if (!name.is_string()) throw SchemaError("name", "expected a string");
    s.name = name.get<std::string>();
    s.n = integer(field(doc, "n", ""), "n");
    if (s.n < 1 || s.n > kMaxCoframeRank) throw SchemaError("n", "out of range");
    s.fourier_dims = integer(field(doc, "fourier_dims", ""), "fourier_dims");
    if (s.fourier_dims < 0 || s.fourier_dims > kMaxFourierDims) throw SchemaError("fourier_dims", "out of range");
    s.char_base = rational(field(doc, "char_base", ""), "char_base");
    s.delta = doc.contains("delta") ? rational(doc["delta"], "delta") : Rational(0);

    const json& st = field(doc, "structure", "");
    if (!st.is_array()) throw SchemaError("structure", "expected an array");
    s.structure.assign(static_cast<std::size_t>(s.n), {});
    std::vector<bool> seen(static_cast<std::size_t>(s.n), false);
    for (std::size_t i = 0; i < st.size(); ++i) {
        const std::string p = at("structure", i);
        int g = integer(field(st[i], "gen", p), join(p, "gen"));
        if (g < 1 || g > s.n) throw SchemaError(join(p, "gen"), "generator index out of range");
        if (seen[static_cast<std::size_t>(g - 1)]) throw SchemaError(join(p, "gen"), "duplicate generator");
        seen[static_cast<std::size_t>(g - 1)] = true;
        const json& terms = field(st[i], "terms", p);
        if (!terms.is_array()) throw SchemaError(join(p, "terms"), "expected an array");
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const std::string tp = at(join(p, "terms"), t);
            const json& basis = field(terms[t], "basis", tp);
            if (!basis.is_array() || basis.size() != 2) throw SchemaError(join(tp, "basis"), "expected [[I...],[J...]]");
            auto I = int_list(basis[0], join(tp, "basis") + "[0]");
            auto J = int_list(basis[1], join(tp, "basis") + "[1]");
            for (int v : I)
                if (v < 1 || v > s.n) throw SchemaError(join(tp, "basis"), "index out of range");
            for (int v : J)
                if (v < 1 || v > s.n) throw SchemaError(join(tp, "basis"), "index out of range");
            if (!std::is_sorted(I.begin(), I.end()) || !std::is_sorted(J.begin(), J.end()))
                throw SchemaError(join(tp, "basis"), "indices must be ascending");
            StructureTerm term;
            try {
                term.basis = {indices_mask(I), indices_mask(J)};
            } catch (const std::exception& e) {
                throw SchemaError(join(tp, "basis"), e.what());
            }
            const json& c = field(terms[t], "coeff", tp);
            term.c0 = c.contains("c0") ? scalar(c["c0"], join(tp, "coeff.c0")) : Scalar();
            term.cdelta = c.contains("cdelta") ? scalar(c["cdelta"], join(tp, "coeff.cdelta")) : Scalar();
            s.structure[static_cast<std::size_t>(g - 1)].push_back(term);
        }
    }
    for (int a = 0; a < s.n; ++a)
        if (!seen[static_cast<std::size_t>(a)]) throw SchemaError("structure", "missing generator " + std::to_string(a + 1));

    const json& der = field(doc, "derivations", "");
    if (!der.is_array()) throw SchemaError("derivations", "expected an array");
    s.derivations.holo.assign(static_cast<std::size_t>(s.n), {});
    s.derivations.anti.assign(static_cast<std::size_t>(s.n), {});
    std::vector<bool> seen_field(static_cast<std::size_t>(2 * s.n), false);
    for (std::size_t i = 0; i < der.size(); ++i) {
        const std::string p = at("derivations", i);
        const json& f = field(der[i], "field", p);
        if (!f.is_string()) throw SchemaError(join(p, "field"), "expected \"V<a>\" or \"Vb<a>\"");
        std::string name_f = f.get<std::string>();
        bool anti = name_f.rfind("Vb", 0) == 0;
        if (!anti && name_f.rfind("V", 0) != 0) throw SchemaError(join(p, "field"), "expected \"V<a>\" or \"Vb<a>\"");
        std::string num = name_f.substr(anti ? 2 : 1);
        int a = 0;
        try {
            a = std::stoi(num);
        } catch (const std::exception&) {
            throw SchemaError(join(p, "field"), "bad frame index");
        }
        if (a < 1 || a > s.n || std::to_string(a) != num) throw SchemaError(join(p, "field"), "frame index out of range");
        std::size_t slot = static_cast<std::size_t>((anti ? s.n : 0) + a - 1);
        if (seen_field[slot]) throw SchemaError(join(p, "field"), "duplicate frame field");
        seen_field[slot] = true;
        const json& rules = field(der[i], "rules", p);
        if (!rules.is_array()) throw SchemaError(join(p, "rules"), "expected an array");
        auto& out = (anti ? s.derivations.anti : s.derivations.holo)[static_cast<std::size_t>(a - 1)];
        for (std::size_t r = 0; r < rules.size(); ++r) {
            const std::string rp = at(join(p, "rules"), r);
            ShiftRule rule;
            rule.shift = rules[r].contains("shift") ? mode(rules[r]["shift"], s.fourier_dims, join(rp, "shift")) : ModeIndex(s.fourier_dims);
            const json& af = field(rules[r], "affine", rp);
            rule.coeff.c0 = af.contains("c0") ? scalar(af["c0"], join(rp, "affine.c0")) : Scalar();
            rule.coeff.cdelta = af.contains("cdelta") ? scalar(af["cdelta"], join(rp, "affine.cdelta")) : Scalar();
            rule.coeff.k.assign(static_cast<std::size_t>(s.fourier_dims), Scalar());
            if (af.contains("k")) {
                const json& k = af["k"];
                if (!k.is_array() || static_cast<int>(k.size()) != s.fourier_dims)
                    throw SchemaError(join(rp, "affine.k"), "expected " + std::to_string(s.fourier_dims) + " coefficients");
                for (std::size_t j = 0; j < k.size(); ++j) rule.coeff.k[j] = scalar(k[j], at(join(rp, "affine.k"), j));
            }
            out.push_back(std::move(rule));
        }
    }
    for (std::size_t slot = 0; slot < seen_field.size(); ++slot)
        if (!seen_field[slot]) {
            int a = static_cast<int>(slot) % s.n + 1;
            throw SchemaError("derivations", std::string("missing field ") + (static_cast<int>(slot) >= s.n ? "Vb" : "V") + std::to_string(a));
        }

    if (doc.contains("decks")) {
        const json& decks = doc["decks"];
        if (!decks.is_array()) throw SchemaError("decks", "expected an array");
        for (std::size_t i = 0; i < decks.size(); ++i) {
            const std::string p = at("decks", i);
            const json& kind = field(decks[i], "kind", p);
            DeckRule d;
            if (kind == "parity") {
                d.kind = DeckRule::Kind::parity;
                d.index = integer(field(decks[i], "index", p), join(p, "index"));
                d.modulus = decks[i].contains("modulus") ? integer(decks[i]["modulus"], join(p, "modulus")) : 2;
                if (d.index < 0 || d.index >= s.fourier_dims) throw SchemaError(join(p, "index"), "out of range");
                if (d.modulus < 1) throw SchemaError(join(p, "modulus"), "must be positive");
            } else if (kind == "involution") {
                d.kind = DeckRule::Kind::involution;
                const json& map = field(decks[i], "map", p);
                if (!map.is_array() || static_cast<int>(map.size()) != s.fourier_dims)
                    throw SchemaError(join(p, "map"), "expected a square integer matrix");
                for (std::size_t r = 0; r < map.size(); ++r) {
                    d.map.push_back(int_list(map[r], at(join(p, "map"), r)));
                    if (static_cast<int>(d.map.back().size()) != s.fourier_dims) throw SchemaError(at(join(p, "map"), r), "wrong row length");
                }
                const json& ph = field(decks[i], "phase", p);
                d.phase_c0 = ph.contains("c0") ? integer(ph["c0"], join(p, "phase.c0")) : 0;
                d.phase_k = ph.contains("k") ? int_list(ph["k"], join(p, "phase.k")) : std::vector<int>(static_cast<std::size_t>(s.fourier_dims), 0);
                if (static_cast<int>(d.phase_k.size()) != s.fourier_dims) throw SchemaError(join(p, "phase.k"), "wrong length");
            } else {
                throw SchemaError(join(p, "kind"), "expected \"parity\" or \"involution\"");
            }
            s.decks.push_back(std::move(d));
        }
    }

    const json& metric = field(doc, "metric", "");
    const json& norms = field(metric, "norms", "metric");
    if (!norms.is_array()) throw SchemaError("metric.norms", "expected an array");
    for (std::size_t i = 0; i < norms.size(); ++i) s.metric.norms.push_back(rational(norms[i], at("metric.norms", i)));
    s.metric.omega = form(field(metric, "omega", "metric"), "metric.omega");
    s.metric.volume = form(field(metric, "volume", "metric"), "metric.volume");
    return s;
}

inline Model model_from_json(const json& doc) { return Model(spec_from_json(doc)); }

inline Model load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError("cannot open model file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("$", std::string("invalid JSON: ") + e.what());
    }
    return model_from_json(doc);
}

/// A builtin name ("kt", "hyperelliptic", "torus4") or a path to a model file.
inline Model resolve_model(const std::string& name_or_path, const Rational& delta) {
    if (is_builtin_name(name_or_path)) return builtin(name_or_path, delta);
    return load_model_file(name_or_path);
}

}  // namespace ahodge
