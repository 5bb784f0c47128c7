#include "trisect/methods.hpp"

#include <cmath>
#include <sstream>

namespace trisect::methods {

using scalar::BigFloat;

const char* short_name(MethodId id) {
    switch (id) {
        case MethodId::method1_equilateral: return "method1";
        case MethodId::method2_central: return "method2";
        case MethodId::method3_similar: return "method3";
    }
    return "?";
}

std::optional<MethodId> parse_method(std::string_view text) {
    if (text == "method1" || text == "method1_equilateral") return MethodId::method1_equilateral;
    if (text == "method2" || text == "method2_central") return MethodId::method2_central;
    if (text == "method3" || text == "method3_similar") return MethodId::method3_similar;
    return std::nullopt;
}

Interval theta_range(MethodId id, const RunOptions& opts) {
    switch (id) {
        case MethodId::method1_equilateral: return opts.exterior ? Interval{0, 90} : Interval{0, 60};
        case MethodId::method2_central: return {60, 90};
        case MethodId::method3_similar: return {0, 90};
    }
    return {};
}

bool theta_admissible(MethodId id, double theta_deg, const RunOptions& opts) {
    if (!theta_range(id, opts).contains(theta_deg)) return false;
    // E sits on BH at 60 degrees; both derived angles vanish there.
    return !(id == MethodId::method1_equilateral && theta_deg == 60.0);
}

Interval target_range(MethodId id) {
    switch (id) {
        case MethodId::method1_equilateral: return {0, 90};
        case MethodId::method2_central: return {0, 180};
        case MethodId::method3_similar: return {0, 180};
    }
    return {};
}

DefaultGrid default_grid(MethodId id, const RunOptions& opts) {
    switch (id) {
        case MethodId::method1_equilateral: return opts.exterior ? DefaultGrid{60.5, 89.5, 0.5} : DefaultGrid{1, 59, 0.5};
        case MethodId::method2_central: return {61, 89, 0.5};
        case MethodId::method3_similar: return {1, 89, 0.5};
    }
    return {1, 2, 1};
}

template <typename Real>
std::vector<Field<Real>> Method1Report<Real>::fields() const {
    return {{"theta", theta.value}, {"beta", beta.value}, {"hbe", hbe.value}, {"dba", dba.value},
            {"aeg", aeg.value},     {"hba", hba.value},   {"fga", fga.value}, {"afg", afg.value}};
}

template <typename Real>
std::vector<Field<Real>> Method2Report<Real>::fields() const {
    return {{"theta", theta.value}, {"eab", eab.value}, {"beta", beta.value}, {"alpha", alpha.value},
            {"eta", eta.value},     {"phi", phi.value}, {"eda", eda.value},   {"fde", fde.value},
            {"gdf", gdf.value},     {"eka", eka.value}, {"fke", fke.value},   {"gkf", gkf.value},
            {"aed", aed.value},     {"eaf", eaf.value}, {"gaf", gaf.value},   {"bag", bag.value},
            {"ae", ae},             {"ef", ef},         {"fg", fg},           {"da", da},
            {"de", de}};
}

template <typename Real>
std::vector<Field<Real>> Method3Report<Real>::fields() const {
    return {{"theta", theta.value}, {"boe", boe.value}, {"beta", beta.value},
            {"mcd", mcd.value},     {"bot", bot.value}, {"odl", odl.value},
            {"lao", lao.value},     {"mod", mod.value}, {"theta_minus_beta", theta_minus_beta.value},
            {"cd", cd},             {"od", od},         {"oa", oa}};
}

namespace {

template <typename Real>
class Measurer {
public:
    Measurer(const engine::Environment<Real>& env, const scalar::Backend& backend)
        : env_(env), kernel_(scalar::eps_of<Real>(backend)) {}

    AngleDeg<Real> angle(const char* vertex, const char* p, const char* q) const {
        return kernel_.angle_at(env_.point(vertex), env_.point(p), env_.point(q));
    }

    Real length(const char* p, const char* q) const { return kernel_.dist(env_.point(p), env_.point(q)); }

    // Twice the signed area of (a, b, c).
    Real orient(const char* a, const char* b, const char* c) const {
        const auto& pa = env_.point(a);
        const auto& pb = env_.point(b);
        const auto& pc = env_.point(c);
        return (pb.x - pa.x) * (pc.y - pa.y) - (pb.y - pa.y) * (pc.x - pa.x);
    }

private:
    const engine::Environment<Real>& env_;
    geom::Kernel<Real> kernel_;
};

template <typename Real>
Method1Report<Real> measure_method1(const Measurer<Real>& m, const AngleDeg<Real>& theta) {
    Method1Report<Real> r;
    r.theta = theta;
    const Real zero(0);
    const Real o1 = m.orient("A", "B", "E");
    const Real o2 = m.orient("B", "H", "E");
    const Real o3 = m.orient("H", "A", "E");
    const bool inside = (o1 > zero && o2 > zero && o3 > zero) || (o1 < zero && o2 < zero && o3 < zero);
    r.e_outside_hab = !inside;
    const Real sign = inside ? Real(1) : Real(-1);
    r.beta = {sign * m.angle("E", "G", "B").value};
    r.hbe = {sign * m.angle("B", "H", "E").value};
    r.dba = m.angle("B", "D", "A");
    r.aeg = m.angle("E", "A", "G");
    r.hba = m.angle("B", "H", "A");
    r.fga = m.angle("G", "F", "A");
    r.afg = m.angle("F", "A", "G");
    return r;
}

template <typename Real>
Method2Report<Real> measure_method2(const Measurer<Real>& m, const AngleDeg<Real>& theta) {
    Method2Report<Real> r;
    r.theta = theta;
    r.eab = m.angle("A", "E", "B");
    r.beta = m.angle("D", "G", "A");
    r.alpha = m.angle("K", "G", "A");
    r.eta = m.angle("B", "E", "A");
    r.phi = {theta.value - r.alpha.value};
    r.eda = m.angle("D", "E", "A");
    r.fde = m.angle("D", "F", "E");
    r.gdf = m.angle("D", "G", "F");
    r.eka = m.angle("K", "E", "A");
    r.fke = m.angle("K", "F", "E");
    r.gkf = m.angle("K", "G", "F");
    r.aed = m.angle("E", "A", "D");
    r.eaf = m.angle("A", "E", "F");
    r.gaf = m.angle("A", "G", "F");
    r.bag = m.angle("A", "B", "G");
    r.ae = m.length("A", "E");
    r.ef = m.length("E", "F");
    r.fg = m.length("F", "G");
    r.da = m.length("D", "A");
    r.de = m.length("D", "E");
    return r;
}

template <typename Real>
Method3Report<Real> measure_method3(const Measurer<Real>& m, const AngleDeg<Real>& theta) {
    Method3Report<Real> r;
    r.theta = theta;
    r.boe = m.angle("O", "B", "E");
    r.beta = m.angle("O", "B", "A");
    r.mcd = m.angle("C", "M", "D");
    r.bot = m.angle("O", "B", "T");
    r.odl = m.angle("D", "O", "L");
    r.lao = m.angle("A", "L", "O");
    r.mod = m.angle("O", "M", "D");
    r.theta_minus_beta = {theta.value - r.beta.value};
    r.cd = m.length("C", "D");
    r.od = m.length("O", "D");
    r.oa = m.length("O", "A");
    return r;
}

std::string degrees_text(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace

template <typename Real>
MethodRun<Real> run_method_full(MethodId id, const AngleDeg<Real>& theta, const scalar::Backend& backend,
                                const RunOptions& opts) {
    const double t = scalar::to_double(theta.value);
    if (!theta_admissible(id, t, opts)) {
        const Interval iv = theta_range(id, opts);
        throw MethodError(MethodErrc::theta_out_of_range, std::string(short_name(id)) + ": theta " +
                                                              degrees_text(t) + " outside (" + degrees_text(iv.lo) +
                                                              ", " + degrees_text(iv.hi) + ")");
    }
    scalar::BackendScope<Real> scope(backend);
    engine::Bindings<Real> bindings{{"theta", theta.value}};
    engine::Execution<Real> exec = engine::execute(builtin(id), bindings, backend);
    const Measurer<Real> m(exec.env, backend);
    MethodReport<Real> report;
    switch (id) {
        case MethodId::method1_equilateral: report = measure_method1(m, theta); break;
        case MethodId::method2_central: report = measure_method2(m, theta); break;
        case MethodId::method3_similar: report = measure_method3(m, theta); break;
    }
    return {std::move(report), std::move(exec)};
}

template <typename Real>
AngleDeg<Real> inverse_seed(MethodId id, const AngleDeg<Real>& target_beta) {
    using std::atan;
    using std::tan;
    const double b = scalar::to_double(target_beta.value);
    const Interval iv = target_range(id);
    if (!iv.contains(b)) {
        throw MethodError(MethodErrc::target_out_of_range, std::string(short_name(id)) + ": target beta " +
                                                               degrees_text(b) + " outside (" + degrees_text(iv.lo) +
                                                               ", " + degrees_text(iv.hi) + ")");
    }
    const Real& beta = target_beta.value;
    AngleDeg<Real> theta;
    switch (id) {
        case MethodId::method1_equilateral: theta = {Real(2) * (Real(90) - beta) / Real(3)}; break;
        case MethodId::method2_central: theta = {Real(90) - beta / Real(6)}; break;
        case MethodId::method3_similar: {
            const Real third = scalar::deg_to_rad(AngleDeg<Real>{beta / Real(3)});
            theta = scalar::rad_to_deg(Real(atan(Real(3) * Real(tan(third)))));
            break;
        }
    }
    if (!theta_admissible(id, scalar::to_double(theta.value))) {
        throw MethodError(MethodErrc::target_out_of_range,
                          std::string(short_name(id)) + ": target beta " + degrees_text(b) +
                              " maps outside the valid given-angle interval");
    }
    return theta;
}

namespace {

template <typename Real>
std::vector<double> fixed_points_impl(MethodId id, const scalar::Backend& backend, const RunOptions& opts,
                                      double tol_deg) {
    // Sign of derived(theta) - theta, or 0 when the construction degenerates.
    auto sign_at = [&](double theta, bool& ok) -> int {
        ok = true;
        try {
            const auto report = run_method<Real>(id, AngleDeg<Real>{Real(theta)}, backend, opts);
            const Real g = derived_angle(report) - Real(theta);
            const Real zero(0);
            return g > zero ? 1 : (g < zero ? -1 : 0);
        } catch (const engine::ExecutionError&) {
        } catch (const MethodError&) {
        }
        ok = false;
        return 0;
    };

    const Interval iv = theta_range(id, opts);
    constexpr int kSamples = 64;
    std::vector<double> roots;
    bool have_prev = false;
    double prev_theta = 0;
    int prev_sign = 0;
    for (int i = 1; i < kSamples; ++i) {
        const double theta = iv.lo + (iv.hi - iv.lo) * i / kSamples;
        bool ok = false;
        const int s = sign_at(theta, ok);
        if (!ok) continue;
        if (s == 0) {
            roots.push_back(theta);
        } else if (have_prev && prev_sign != 0 && s != prev_sign) {
            double lo = prev_theta;
            double hi = theta;
            while (hi - lo > tol_deg) {
                const double mid = lo + (hi - lo) / 2;
                if (mid <= lo || mid >= hi) break;
                bool mid_ok = false;
                const int ms = sign_at(mid, mid_ok);
                if (!mid_ok) break;
                if (ms == 0) {
                    lo = hi = mid;
                    break;
                }
                (ms == prev_sign ? lo : hi) = mid;
            }
            roots.push_back(lo + (hi - lo) / 2);
        }
        have_prev = true;
        prev_theta = theta;
        prev_sign = s;
    }
    return roots;
}

}  // namespace

std::vector<double> fixed_points(MethodId id, const scalar::Backend& backend, const RunOptions& opts, double tol_deg) {
    return scalar::with_backend(backend, [&]<typename Real>() {
        return fixed_points_impl<Real>(id, backend, opts, tol_deg);
    });
}

std::optional<double> fixed_point(MethodId id, const scalar::Backend& backend, const RunOptions& opts) {
    const auto roots = fixed_points(id, backend, opts);
    if (roots.empty()) return std::nullopt;
    return roots.front();
}

template struct Method1Report<double>;
template struct Method1Report<BigFloat>;
template struct Method2Report<double>;
template struct Method2Report<BigFloat>;
template struct Method3Report<double>;
template struct Method3Report<BigFloat>;

template MethodRun<double> run_method_full(MethodId, const AngleDeg<double>&, const scalar::Backend&,
                                           const RunOptions&);
template MethodRun<BigFloat> run_method_full(MethodId, const AngleDeg<BigFloat>&, const scalar::Backend&,
                                             const RunOptions&);
template AngleDeg<double> inverse_seed(MethodId, const AngleDeg<double>&);
template AngleDeg<BigFloat> inverse_seed(MethodId, const AngleDeg<BigFloat>&);

}  // namespace trisect::methods
