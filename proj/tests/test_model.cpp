#include "ahodge/calculus.hpp"
#include "ahodge/model_io.hpp"
#include "ahodge/validate.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace ahodge;

namespace {

Rational R(long n, long d = 1) { return detail::q(n, d); }

Form gen_form(const Model& m, std::initializer_list<int> I, std::initializer_list<int> J, const Scalar& c = Scalar(1)) {
    return Form::generator(gen(I, J), c, m.dims());
}

Form phi(const Model& m, int a) { return Form::generator(holo_gen(a), Scalar(1), m.dims()); }
Form phibar(const Model& m, int a) { return Form::generator(anti_gen(a), Scalar(1), m.dims()); }

const CheckResult& check_named(const ValidationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c;
    throw std::runtime_error("no check " + name);
}

}  // namespace

TEST(Builtins, KodairaThurstonStructureEquationsFromCoordinates) {
    // phi^2 = dy - i b (dz - x dy) gives d phi^2 = i b dx ^ dy; at x = 0, dx = (phi^1 - phibar^1)/(2i)
    // and dy = (phi^2 + phibar^2)/2. In pi-units b = 8 delta.
    for (auto delta : {R(1), R(1, 2), R(-3, 7)}) {
        Model m = builtin_kt(delta);
        Scalar i = Scalar::i();
        Form dx = (phi(m, 1) - phibar(m, 1)) * (Scalar(1) / (Scalar(2) * i));
        Form dy = (phi(m, 2) + phibar(m, 2)) * Scalar(R(1, 2));
        Form expected = wedge(dx, dy) * (i * Scalar(8 * delta));
        EXPECT_EQ(apply_d(m, phi(m, 2)), expected);
        EXPECT_TRUE(apply_d(m, phi(m, 1)).is_zero());
        // the same equation in the complex coframe
        Form complex_form = (gen_form(m, {1, 2}, {}) + gen_form(m, {1}, {2}) + gen_form(m, {2}, {1}) - gen_form(m, {}, {1, 2})) *
                       Scalar(2 * delta);
        EXPECT_EQ(apply_d(m, phi(m, 2)), complex_form);
    }
}

TEST(Builtins, KodairaThurstonRejectsZeroDelta) {
    EXPECT_THROW(builtin_kt(0), ModelError);
    EXPECT_THROW(resolve_model("kt", 0), ModelError);
}

TEST(Builtins, HyperellipticRealStructureEquations) {
    Model m = builtin_hyperelliptic();
    auto e = [](int j) { return hyperelliptic_e(j); };
    EXPECT_EQ(apply_d(m, e(1)), -wedge(e(2), e(3)));
    EXPECT_EQ(apply_d(m, e(2)), wedge(e(1), e(3)));
    EXPECT_TRUE(apply_d(m, e(3)).is_zero());
    EXPECT_TRUE(apply_d(m, e(4)).is_zero());
    // omega = e^13 + e^24 and d omega = e^134
    EXPECT_EQ(m.omega(), wedge(e(1), e(3)) + wedge(e(2), e(4)));
    EXPECT_EQ(apply_d(m, m.omega()), wedge(wedge(e(1), e(3)), e(4)));
}

TEST(Builtins, HyperellipticComplexStructureEquations) {
    Model m = builtin_hyperelliptic();
    Scalar i = Scalar::i();
    Form d1 = (-gen_form(m, {1, 2}, {}) - gen_form(m, {1}, {2}) - gen_form(m, {2}, {1}) + gen_form(m, {}, {1, 2})) * (i * Scalar(R(1, 4)));
    EXPECT_EQ(apply_d(m, phi(m, 1)), d1);
    EXPECT_EQ(apply_d(m, phi(m, 2)), gen_form(m, {1}, {1}, i * Scalar(R(1, 2))));
}

TEST(Builtins, HyperellipticFrameMatchesVectorFields) {
    // V1 = (cos(pi x2) d/dx1 + sin(pi x2) d/dy1 - i d/dx2)/2 on exp(i pi (k x1 + l y1 + m x2 + n y2)), pi-units
    Model m = builtin_hyperelliptic();
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        ModeIndex kappa = random_mode(rng, 4, 3);
        int k = kappa[0], l = kappa[1], mm = kappa[2], n = kappa[3];
        Scalar i = Scalar::i();
        TrigPoly chi = TrigPoly::mode(kappa);
        ModeIndex up = kappa, down = kappa;
        up[2] += 1;
        down[2] -= 1;
        // cos = (up + down)/2, sin = (up - down)/(2i)
        TrigPoly cosf = TrigPoly::mode(up, Scalar(R(1, 2))) + TrigPoly::mode(down, Scalar(R(1, 2)));
        TrigPoly sinf = TrigPoly::mode(up, Scalar(1) / (Scalar(2) * i)) - TrigPoly::mode(down, Scalar(1) / (Scalar(2) * i));
        TrigPoly v1 = (cosf * (i * Scalar(k)) + sinf * (i * Scalar(l)) + chi * (-i * i * Scalar(mm))) * Scalar(R(1, 2));
        TrigPoly v2 = (sinf * (-i * Scalar(k)) + cosf * (i * Scalar(l)) + chi * (-i * i * Scalar(n))) * Scalar(R(1, 2));
        EXPECT_EQ(m.frame_apply(1, false, chi), v1);
        EXPECT_EQ(m.frame_apply(2, false, chi), v2);
        EXPECT_EQ(m.frame_apply(1, true, chi), tp_conj(m.frame_apply(1, false, tp_conj(chi))));
    }
}

TEST(Builtins, KodairaThurstonFrameMatchesVectorFields) {
    // V1 = (d/dt - i d/dx)/2, V2 = (d/dy + x d/dz + (i/b) d/dz)/2 on z-independent exp(2 pi i (k t + l x + m y))
    Model m = builtin_kt(1);
    Scalar i = Scalar::i();
    for (const auto& kappa : box_modes(3, 2)) {
        TrigPoly chi = TrigPoly::mode(kappa);
        EXPECT_EQ(m.frame_apply(1, false, chi), chi * (i * Scalar(kappa[0]) + Scalar(kappa[1])));
        EXPECT_EQ(m.frame_apply(2, false, chi), chi * (i * Scalar(kappa[2])));
        EXPECT_EQ(m.frame_apply(1, true, chi), chi * (i * Scalar(kappa[0]) - Scalar(kappa[1])));
    }
}

TEST(Builtins, MetricNormalization) {
    for (const Model& m : {builtin_kt(1), builtin_hyperelliptic(), builtin_torus4()}) {
        EXPECT_EQ(inner(m.omega(), m.omega(), m.norms()), TrigPoly::constant(Scalar(2), m.dims())) << m.name();
        EXPECT_EQ(wedge(m.omega(), m.omega()) * Scalar(R(1, 2)), m.volume()) << m.name();
    }
    // hyperelliptic vol = phi^{12 1bar 2bar} / 4
    Model h = builtin_hyperelliptic();
    EXPECT_EQ(h.volume(), gen_form(h, {1, 2}, {1, 2}, Scalar(R(1, 4))));
}

TEST(Builtins, StarTableMatchesDefiningRelation) {
    for (const Model& m : {builtin_kt(R(1, 3)), builtin_hyperelliptic(), builtin_torus4(), scale_metric(builtin_kt(1), R(2))})
        for (const auto& b : full_basis(2)) {
            Form g = Form::generator(b, Scalar(1), m.dims());
            EXPECT_EQ(star(m, g), star_by_relation(m, g)) << m.name() << " " << format_basis(b);
        }
}

TEST(Builtins, StarExamples) {
    Model m = builtin_kt(1);
    EXPECT_EQ(star(m, m.omega()), m.omega());
    EXPECT_EQ(star(m, gen_form(m, {1}, {2})), -gen_form(m, {1}, {2}));
    EXPECT_EQ(star(m, Form::function(m.one())), m.volume());
    EXPECT_TRUE(star_squared_sign(m));
    EXPECT_TRUE(star_squared_sign(builtin_hyperelliptic()));
}

TEST(Validate, BuiltinsPass) {
    for (const Model& m : {builtin_kt(1), builtin_kt(R(1, 2)), builtin_hyperelliptic(), builtin_torus4()}) {
        auto rep = validate(m);
        EXPECT_TRUE(rep.passed()) << m.name() << ": " << (rep.first_failure() ? rep.first_failure()->detail : "");
        EXPECT_EQ(check_named(rep, "component relations").cases, 100);
    }
}

TEST(Validate, CorruptedStructureFailsDSquared) {
    ModelSpec s = builtin_kt(1).spec();
    s.structure[1][0].cdelta = Scalar(3);
    auto rep = validate(Model(s));
    EXPECT_FALSE(rep.passed());
    EXPECT_FALSE(check_named(rep, "d^2 = 0").passed);
    EXPECT_FALSE(check_named(rep, "d^2 = 0").witness.empty());
}

TEST(Validate, VolumeMismatchFailsMetric) {
    ModelSpec s = builtin_torus4().spec();
    s.metric.volume *= Scalar(2);
    auto rep = validate(Model(s));
    EXPECT_TRUE(check_named(rep, "d^2 = 0").passed);
    EXPECT_FALSE(check_named(rep, "metric normalization").passed);
}

TEST(ModelIO, RoundTripIsExact) {
    for (const Model& m : {builtin_kt(R(-5, 3)), builtin_hyperelliptic(), builtin_torus4()}) {
        json doc = model_to_json(m);
        Model back = model_from_json(doc);
        EXPECT_TRUE(back.spec() == m.spec()) << m.name();
        EXPECT_EQ(model_to_json(back).dump(), doc.dump());
    }
}

TEST(ModelIO, MissingVolumeNamesTheField) {
    json doc = model_to_json(builtin_kt(1));
    doc["metric"].erase("volume");
    try {
        model_from_json(doc);
        FAIL() << "expected SchemaError";
    } catch (const SchemaError& e) {
        EXPECT_NE(std::string(e.what()).find("metric.volume"), std::string::npos) << e.what();
    }
}

TEST(ModelIO, BadRationalIsASchemaError) {
    json doc = model_to_json(builtin_kt(1));
    doc["delta"] = "1/0";
    EXPECT_THROW(model_from_json(doc), SchemaError);
}

TEST(ModelIO, FileLoading) {
    auto path = std::filesystem::temp_directory_path() / "ahodge_model_io_test.json";
    {
        std::ofstream out(path);
        out << model_to_json(builtin_hyperelliptic()).dump(2);
    }
    Model m = resolve_model(path.string(), 0);
    EXPECT_EQ(m.name(), "hyperelliptic");
    EXPECT_TRUE(validate(m).passed());
    std::filesystem::remove(path);
    EXPECT_THROW(resolve_model(path.string(), 0), ModelError);
}

TEST(ScaleMetric, NormsOmegaAndVolume) {
    Model m = builtin_kt(1);
    Model s = scale_metric(m, R(3));
    EXPECT_EQ(s.omega(), m.omega() * Scalar(3));
    EXPECT_EQ(s.volume(), m.volume() * Scalar(9));
    EXPECT_TRUE(validate(s).passed());
    EXPECT_THROW(scale_metric(m, R(-1)), ModelError);
}
