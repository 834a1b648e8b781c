#include "hyplab/bernstein.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hyplab/special.hpp"

namespace hyplab {

LevySpec LevySpec::from_atoms(std::vector<LevyAtom> atoms) {
    if (atoms.empty()) throw std::invalid_argument("LevySpec: empty atom list");
    for (const auto& a : atoms)
        if (!(a.site > 0.0) || !(a.mass > 0.0))
            throw std::invalid_argument("LevySpec: atoms need site > 0 and mass > 0");
    LevySpec s;
    s.type = Type::Atoms;
    s.atoms = std::move(atoms);
    return s;
}

LevySpec LevySpec::stable(double theta) {
    if (!(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument("LevySpec: stable index theta in (0,1)");
    LevySpec s;
    s.type = Type::Stable;
    s.theta = theta;
    return s;
}

LevySpec LevySpec::tilted_stable(double theta, double tilt) {
    if (!(theta > 0.0 && theta < 1.0) || !(tilt > 0.0))
        throw std::invalid_argument("LevySpec: tilted stable needs theta in (0,1), tilt > 0");
    LevySpec s;
    s.type = Type::TiltedStable;
    s.theta = theta;
    s.tilt = tilt;
    return s;
}

BernsteinFn::BernsteinFn(double a, double b, LevySpec levy)
    : a_(a), b_(b), levy_(std::move(levy)) {
    if (a_ < 0.0 || b_ < 0.0) throw std::invalid_argument("BernsteinFn: a, b >= 0 required");
    if (a_ == 0.0 && b_ == 0.0 && levy_.empty())
        throw std::invalid_argument("BernsteinFn: trivial f = 0 rejected");
}

BernsteinFn::BernsteinFn(double a, double b, LevySpec levy, allow_trivial_tag)
    : a_(a), b_(b), levy_(std::move(levy)) {}

double BernsteinFn::operator()(double lam) const {
    if (lam < 0.0) throw std::domain_error("BernsteinFn: lambda >= 0 required");
    double v = a_ + b_ * lam;
    switch (levy_.type) {
        case LevySpec::Type::None:
            break;
        case LevySpec::Type::Atoms:
            for (const auto& at : levy_.atoms) v += at.mass * (-std::expm1(-at.site * lam));
            break;
        case LevySpec::Type::Stable:
            v += std::pow(lam, levy_.theta);
            break;
        case LevySpec::Type::TiltedStable:
            v += std::pow(lam + levy_.tilt, levy_.theta) - std::pow(levy_.tilt, levy_.theta);
            break;
    }
    return v;
}

double BernsteinFn::eval_quadrature(double lam, double tol) const {
    if (lam < 0.0) throw std::domain_error("BernsteinFn: lambda >= 0 required");
    double v = a_ + b_ * lam;
    if (levy_.empty() || lam == 0.0) return v;
    if (levy_.type == LevySpec::Type::Atoms) return (*this)(lam);

    // Levy density in s; both catalogue entries behave like s^{-1-theta}
    // near 0 with at most exponential decay.
    auto density = [&](double s) {
        const double base =
            levy_.theta * std::pow(s, -1.0 - levy_.theta) / std::tgamma(1.0 - levy_.theta);
        return levy_.type == LevySpec::Type::Stable ? base : base * std::exp(-levy_.tilt * s);
    };
    // substitute u = s * lam; integrand (1 - e^{-u}) density(u/lam) / lam,
    // split at u = 1 and mapped to (0,1) pieces (u = x, then u = 1/x).
    auto g = [&](double u) { return -std::expm1(-u) * density(u / lam) / lam; };
    const double inner = integrate_unit_ts([&](double x) { return g(x); }, tol);
    const double outer = integrate_unit_ts([&](double x) { return g(1.0 / x) / (x * x); }, tol);
    return v + inner + outer;
}

BernsteinFn BernsteinFn::nonlinear_part() const {
    return BernsteinFn(0.0, 0.0, levy_, allow_trivial_tag{});
}

double BernsteinFn::drift_estimate() const {
    const double l1 = 1e6, l2 = 1e7;
    // difference quotient removes the killing term exactly and the
    // nonlinear part up to o(1)
    return ((*this)(l2) - (*this)(l1)) / (l2 - l1);
}

bool BernsteinFn::lower_order_check(double theta, double floor) const {
    if (!(theta > 0.0 && theta <= 1.0))
        throw std::invalid_argument("lower_order_check: theta in (0, 1]");
    double lo = std::numeric_limits<double>::infinity();
    for (double lam = 1e2; lam <= 1e7 + 1.0; lam *= 10.0)
        lo = std::min(lo, std::pow(lam, -theta) * (*this)(lam));
    return lo > floor;
}

nlohmann::json BernsteinFn::to_json() const {
    nlohmann::json j;
    j["a"] = a_;
    j["b"] = b_;
    nlohmann::json levy;
    switch (levy_.type) {
        case LevySpec::Type::None:
            levy["type"] = "none";
            break;
        case LevySpec::Type::Atoms: {
            levy["type"] = "atoms";
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& at : levy_.atoms) arr.push_back({{"s", at.site}, {"mass", at.mass}});
            levy["atoms"] = arr;
            break;
        }
        case LevySpec::Type::Stable:
            levy["type"] = "stable";
            levy["theta"] = levy_.theta;
            break;
        case LevySpec::Type::TiltedStable:
            levy["type"] = "tilted_stable";
            levy["theta"] = levy_.theta;
            levy["tilt"] = levy_.tilt;
            break;
    }
    j["levy"] = levy;
    return j;
}

BernsteinFn BernsteinFn::from_json(const nlohmann::json& j) {
    const double a = j.value("a", 0.0);
    const double b = j.value("b", 0.0);
    LevySpec levy = LevySpec::none();
    if (j.contains("levy")) {
        const auto& l = j.at("levy");
        const std::string type = l.value("type", "none");
        if (type == "atoms") {
            std::vector<LevyAtom> atoms;
            for (const auto& at : l.at("atoms"))
                atoms.push_back({at.at("s").get<double>(), at.at("mass").get<double>()});
            levy = LevySpec::from_atoms(std::move(atoms));
        } else if (type == "stable") {
            levy = LevySpec::stable(l.at("theta").get<double>());
        } else if (type == "tilted_stable") {
            levy = LevySpec::tilted_stable(l.at("theta").get<double>(), l.at("tilt").get<double>());
        } else if (type != "none") {
            throw std::invalid_argument("BernsteinFn::from_json: unknown levy type " + type);
        }
    }
    return BernsteinFn(a, b, std::move(levy));
}

}  // namespace hyplab
