#include "trisect/verifier.hpp"

#include <cmath>
#include <stdexcept>

namespace trisect::verifier {

using scalar::BigFloat;

namespace {

Term f(std::string field, int num = 1, int den = 1) { return {std::move(field), {num, den}}; }

Expr e(std::vector<Term> terms, Rational constant = {0, 1}) { return {std::move(terms), constant}; }

Expr k(int num, int den = 1) { return {{}, {num, den}}; }

Claim angle(std::string id, MethodId m, Expr lhs, Expr rhs, std::string description) {
    return {std::move(id), m, ClaimForm::linear, std::move(lhs), std::move(rhs), kAngleTolerance, std::move(description)};
}

Claim length(std::string id, MethodId m, std::string a, std::string b, std::string description) {
    return {std::move(id), m,   ClaimForm::relative, e({f(std::move(a))}), e({f(std::move(b))}), kLengthTolerance,
            std::move(description)};
}

std::vector<Claim> method1_claims() {
    const MethodId m = MethodId::method1_equilateral;
    return {
        angle("m1.beta", m, e({f("beta")}), e({f("theta", -3, 2)}, {90, 1}), "GEB against 90 - 1.5 theta"),
        angle("m1.hbe", m, e({f("hbe")}), e({f("theta", -1)}, {60, 1}), "HBE against 60 - theta"),
        angle("m1.hbe_two_thirds", m, e({f("hbe")}), e({f("beta", 2, 3)}), "HBE is two thirds of GEB"),
        angle("m1.trisected", m, e({f("beta"), f("hbe", -1)}), e({f("beta", 1, 3)}),
              "GEB minus HBE leaves one third of GEB"),
        angle("m1.dba", m, e({f("dba")}), e({f("theta")}), "base angles of the isosceles triangle"),
        angle("m1.aeg", m, e({f("aeg")}), k(90), "FG is perpendicular to the bisector at E"),
        angle("m1.hba", m, e({f("hba")}), k(60), "HAB is equilateral"),
        angle("m1.fga", m, e({f("fga")}), e({f("theta", -1, 2)}, {90, 1}), "FGA in triangle AEG"),
        angle("m1.afg", m, e({f("afg")}), e({f("theta", -1, 2)}, {90, 1}), "AFG in triangle AEF"),
    };
}

std::vector<Claim> method2_claims() {
    const MethodId m = MethodId::method2_central;
    return {
        angle("m2.eab", m, e({f("eab")}), e({f("theta")}), "chord AE leaves AB at theta"),
        angle("m2.beta", m, e({f("beta")}), e({f("theta", -6)}, {540, 1}), "GDA against 3(180 - 2 theta)"),
        angle("m2.alpha_half_beta", m, e({f("alpha")}), e({f("beta", 1, 2)}), "inscribed GKA is half of central GDA"),
        angle("m2.alpha", m, e({f("alpha")}), e({f("theta", -3)}, {270, 1}), "GKA against 3(90 - theta)"),
        angle("m2.eta", m, e({f("eta")}), e({f("theta", -1)}, {90, 1}), "EBA against 90 - theta"),
        angle("m2.eda", m, e({f("eda")}), e({f("beta", 1, 3)}), "first central third"),
        angle("m2.fde", m, e({f("fde")}), e({f("beta", 1, 3)}), "second central third"),
        angle("m2.gdf", m, e({f("gdf")}), e({f("beta", 1, 3)}), "third central third"),
        angle("m2.eka", m, e({f("eka")}), e({f("alpha", 1, 3)}), "first inscribed third"),
        angle("m2.fke", m, e({f("fke")}), e({f("alpha", 1, 3)}), "second inscribed third"),
        angle("m2.gkf", m, e({f("gkf")}), e({f("alpha", 1, 3)}), "third inscribed third"),
        angle("m2.theta_from_alpha", m, e({f("theta")}), e({f("alpha", -1, 3)}, {90, 1}), "theta recovered from GKA"),
        angle("m2.theta_from_beta", m, e({f("theta")}), e({f("beta", -1, 6)}, {90, 1}), "theta recovered from GDA"),
        angle("m2.phi", m, e({f("phi")}), e({f("alpha", -4, 3)}, {90, 1}), "theta - alpha against 90 - 4/3 alpha"),
        angle("m2.aed", m, e({f("aed")}), e({f("theta")}), "DAE is isosceles on two radii"),
        angle("m2.eaf_ekf", m, e({f("eaf")}), e({f("fke")}), "EAF and EKF stand on arc EF"),
        angle("m2.gaf_gkf", m, e({f("gaf")}), e({f("gkf")}), "GAF and GKF stand on arc GF"),
        angle("m2.bag", m, e({f("bag")}), e({f("alpha", -1)}, {90, 1}), "BAG against 90 - alpha"),
        angle("m2.eba_half_eda", m, e({f("eta")}), e({f("eda", 1, 2)}), "inscribed EBA is half of central EDA"),
        length("m2.chord_ae_ef", m, "ae", "ef", "first two stepped chords"),
        length("m2.chord_ef_fg", m, "ef", "fg", "last two stepped chords"),
        length("m2.radii_da_de", m, "da", "de", "DA and DE are radii of circle 1"),
    };
}

std::vector<Claim> method3_claims() {
    const MethodId m = MethodId::method3_similar;
    return {
        angle("m3.boe", m, e({f("boe")}), e({f("theta")}), "given angle at O"),
        angle("m3.beta_three_mcd", m, e({f("beta")}), e({f("mcd", 3)}), "BOA is three times MCD"),
        angle("m3.odl_two_mcd", m, e({f("odl")}), e({f("mcd", 2)}), "ODL is twice MCD"),
        angle("m3.lao_two_mcd", m, e({f("lao")}), e({f("mcd", 2)}), "LAO is twice MCD"),
        angle("m3.lao_odl", m, e({f("lao")}), e({f("odl")}), "ODA is isosceles on two radii"),
        angle("m3.bot_mcd", m, e({f("bot")}), e({f("mcd")}), "BOT equals MCD"),
        angle("m3.mod_mcd", m, e({f("mod")}), e({f("mcd")}), "base angles of OCD"),
        {"m3.mcd_tan_third", m, ClaimForm::tan_third, e({f("mcd")}), {}, kAngleTolerance,
         "MCD against atan(tan(theta) / 3)"},
        length("m3.cd_od", m, "cd", "od", "D lies on the perpendicular bisector of CO"),
        length("m3.oa_od", m, "oa", "od", "OA and OD are radii"),
    };
}

template <typename Real>
Real field_value(const std::vector<methods::Field<Real>>& fields, const std::string& name) {
    for (const auto& [key, value] : fields) {
        if (key == name) return value;
    }
    throw std::invalid_argument("report has no field '" + name + "'");
}

template <typename Real>
Real ratio(const Rational& q) {
    return Real(q.num) / Real(q.den);
}

template <typename Real>
Real eval(const Expr& x, const std::vector<methods::Field<Real>>& fields) {
    Real sum = ratio<Real>(x.constant);
    for (const auto& t : x.terms) sum += ratio<Real>(t.coef) * field_value(fields, t.field);
    return sum;
}

}  // namespace

const std::vector<Claim>& claims(MethodId id) {
    static const std::vector<Claim> m1 = method1_claims();
    static const std::vector<Claim> m2 = method2_claims();
    static const std::vector<Claim> m3 = method3_claims();
    switch (id) {
        case MethodId::method1_equilateral: return m1;
        case MethodId::method2_central: return m2;
        case MethodId::method3_similar: return m3;
    }
    return m1;
}

const Claim* find_claim(std::string_view id) {
    for (MethodId m : methods::kAllMethods) {
        for (const Claim& c : claims(m)) {
            if (c.id == id) return &c;
        }
    }
    return nullptr;
}

template <typename Real>
Real residual(const Claim& c, const methods::MethodReport<Real>& r) {
    using std::atan;
    using std::tan;
    const auto fields = methods::report_fields(r);
    const Real lhs = eval(c.lhs, fields);
    switch (c.form) {
        case ClaimForm::linear: return lhs - eval(c.rhs, fields);
        case ClaimForm::tan_third: {
            const Real theta = scalar::deg_to_rad(scalar::AngleDeg<Real>{field_value(fields, "theta")});
            const Real oracle = scalar::rad_to_deg(Real(atan(Real(tan(theta)) / Real(3)))).value;
            return lhs - oracle;
        }
        case ClaimForm::relative: {
            const Real rhs = eval(c.rhs, fields);
            return (lhs - rhs) / rhs;
        }
    }
    return lhs;
}

template double residual(const Claim&, const methods::MethodReport<double>&);
template BigFloat residual(const Claim&, const methods::MethodReport<BigFloat>&);

}  // namespace trisect::verifier
