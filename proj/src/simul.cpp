#include "blocktf/simul.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "blocktf/partfrac.hpp"

namespace blocktf {

std::string Trajectory::to_csv(const std::vector<std::string>& columns) const {
    std::string out = "t";
    for (const std::string& c : columns) out += "," + c;
    out += "\n";
    char buf[32];
    for (std::size_t i = 0; i < times.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", times[i]);
        out += buf;
        for (double v : states[i]) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += ",";
            out += buf;
        }
        out += "\n";
    }
    return out;
}

Trajectory rk4(const StateDeriv& f, std::vector<double> x0, double t_end, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("rk4 needs dt > 0");
    if (t_end < dt) throw std::invalid_argument("rk4 needs t_end >= dt");
    const auto n_steps = static_cast<std::size_t>(std::llround(t_end / dt));
    const std::size_t dim = x0.size();

    Trajectory traj;
    traj.dt = dt;
    traj.times.reserve(n_steps + 1);
    traj.states.reserve(n_steps + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(x0);

    std::vector<double> x = std::move(x0);
    std::vector<double> xt(dim);
    for (std::size_t step = 0; step < n_steps; ++step) {
        double t = static_cast<double>(step) * dt;
        std::vector<double> k1 = f(t, x);
        for (std::size_t i = 0; i < dim; ++i) xt[i] = x[i] + 0.5 * dt * k1[i];
        std::vector<double> k2 = f(t + 0.5 * dt, xt);
        for (std::size_t i = 0; i < dim; ++i) xt[i] = x[i] + 0.5 * dt * k2[i];
        std::vector<double> k3 = f(t + 0.5 * dt, xt);
        for (std::size_t i = 0; i < dim; ++i) xt[i] = x[i] + dt * k3[i];
        std::vector<double> k4 = f(t + dt, xt);
        for (std::size_t i = 0; i < dim; ++i)
            x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        double t_next = static_cast<double>(step + 1) * dt;
        for (double v : x)
            if (!std::isfinite(v))
                throw MathError("integration diverged at t = " + std::to_string(t_next));
        traj.times.push_back(t_next);
        traj.states.push_back(x);
    }
    return traj;
}

namespace {

// real part of sum_j residues[j-1] t^(j-1) e^{pole t} / (j-1)! over all
// terms; the imaginary residue must cancel to 1e-9
double invert_at(const PartialFractions& pf, double t) {
    std::complex<double> acc(0.0, 0.0);
    for (const PoleTerm& term : pf.terms) {
        std::complex<double> e = std::exp(term.pole * t);
        double tpow = 1.0;
        double fact = 1.0;
        for (unsigned j = 1; j <= term.multiplicity; ++j) {
            acc += term.residues[j - 1] * tpow * e / fact;
            tpow *= t;
            fact *= static_cast<double>(j);
        }
    }
    if (std::abs(acc.imag()) > 1e-9 * std::max(1.0, std::abs(acc.real())))
        throw MathError("inverse transform failed to realify");
    return acc.real();
}

PartialFractions strictly_proper_decomposition(const RatFunc& r, const char* what) {
    if (!r.is_strictly_proper()) throw MathError(std::string(what) + " needs a strictly proper transfer function");
    PartialFractions pf = partial_fractions(r);
    return pf;
}

} // namespace

std::vector<double> time_response(const RatFunc& r, ResponseKind kind, const std::vector<double>& t_grid) {
    RatFunc target = r;
    if (kind == ResponseKind::step) {
        if (!r.is_proper()) throw MathError("step response needs a proper transfer function");
        target = r * RatFunc(Poly::constant(Rat(1)), Poly::identity_s());
    }
    PartialFractions pf = strictly_proper_decomposition(
        target, kind == ResponseKind::step ? "step response" : "impulse response");
    std::vector<double> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) out.push_back(invert_at(pf, t));
    return out;
}

std::vector<double> forced_response(const RatFunc& h, const Signal& input, const std::vector<double>& t_grid) {
    if (!h.is_proper()) throw MathError("forced response needs a proper transfer function");
    SDomainExpr y = laplace(input).times(h);
    std::vector<double> out(t_grid.size(), 0.0);
    for (const SDomainTerm& term : y.terms()) {
        PartialFractions pf = strictly_proper_decomposition(term.tf, "forced response");
        double shift = rat_to_double(term.delay);
        for (std::size_t i = 0; i < t_grid.size(); ++i) {
            double tau = t_grid[i] - shift;
            if (tau >= 0.0) out[i] += invert_at(pf, tau);
        }
    }
    return out;
}

namespace {

// controllable canonical state-space of a proper transfer function
struct StateSpace {
    std::vector<double> a;  // monic denominator coefficients a_0..a_{n-1}
    std::vector<double> c;  // output row
    double d = 0.0;
    std::size_t dim = 0;
};

StateSpace realize(const RatFunc& h) {
    if (!h.is_proper()) throw MathError("state-space realization needs a proper transfer function");
    StateSpace ss;
    const Poly& den = h.den();  // monic by canonical form
    auto [quot, rem] = Poly::divmod(h.num(), den);
    ss.dim = static_cast<std::size_t>(den.degree());
    ss.d = quot.is_zero() ? 0.0 : rat_to_double(quot.coeff(0));
    ss.a.resize(ss.dim);
    ss.c.assign(ss.dim, 0.0);
    for (std::size_t i = 0; i < ss.dim; ++i) ss.a[i] = rat_to_double(den.coeff(i));
    for (int i = 0; i <= rem.degree(); ++i) ss.c[static_cast<std::size_t>(i)] = rat_to_double(rem.coeff(static_cast<std::size_t>(i)));
    return ss;
}

} // namespace

CrossValidation cross_validate(const LinODE& ode, const Signal& input, double t_end, double dt, double tol) {
    RatFunc h = transfer_function(ode);
    if (!h.is_proper()) throw MathError("cross validation needs a proper transfer function");

    StateSpace ss = realize(h);
    auto u = [&input](double t) { return input.value_at(t); };

    std::vector<double> y_ode;
    if (ss.dim == 0) {
        auto n_steps = static_cast<std::size_t>(std::llround(t_end / dt));
        y_ode.reserve(n_steps + 1);
        for (std::size_t i = 0; i <= n_steps; ++i) y_ode.push_back(ss.d * u(static_cast<double>(i) * dt));
    } else {
        StateDeriv f = [&ss, &u](double t, const std::vector<double>& x) {
            std::vector<double> dx(ss.dim);
            for (std::size_t i = 0; i + 1 < ss.dim; ++i) dx[i] = x[i + 1];
            double top = u(t);
            for (std::size_t i = 0; i < ss.dim; ++i) top -= ss.a[i] * x[i];
            dx[ss.dim - 1] = top;
            return dx;
        };
        Trajectory traj = rk4(f, std::vector<double>(ss.dim, 0.0), t_end, dt);
        y_ode.reserve(traj.times.size());
        for (std::size_t k = 0; k < traj.times.size(); ++k) {
            double y = ss.d * u(traj.times[k]);
            for (std::size_t i = 0; i < ss.dim; ++i) y += ss.c[i] * traj.states[k][i];
            y_ode.push_back(y);
        }
    }

    std::vector<double> grid(y_ode.size());
    for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = static_cast<double>(i) * dt;
    std::vector<double> y_tf = forced_response(h, input, grid);

    CrossValidation cv;
    for (std::size_t i = 0; i < grid.size(); ++i)
        cv.max_abs_err = std::max(cv.max_abs_err, std::abs(y_ode[i] - y_tf[i]));
    cv.pass = cv.max_abs_err <= tol;
    return cv;
}

CrossValidation cross_validate(const LinODE& ode, ResponseKind kind, double t_end, double dt, double tol) {
    if (kind == ResponseKind::impulse)
        throw MathError("impulse input is unsupported in the rk4 path; use time_response for the "
                        "transfer-function route");
    return cross_validate(ode, Signal::step(), t_end, dt, tol);
}

CompartmentModel::CompartmentModel(double kA_, double kL_, double kTA_, double kTL_,
                                   std::function<double(double)> ufr_)
    : kA(kA_), kL(kL_), kTA(kTA_), kTL(kTL_), ufr(std::move(ufr_)) {
    if (!(kA > 0.0) || !(kL > 0.0) || !(kTA > 0.0) || !(kTL > 0.0))
        throw std::invalid_argument("compartment rate constants must be positive");
    if (!ufr) ufr = [](double) { return 0.0; };
}

DialysisRun simulate_dialysis(const CompartmentModel& m, const std::vector<double>& v0, double t_end, double dt) {
    if (v0.size() != 3) throw std::invalid_argument("dialysis state is [VA, VT, VL]");
    for (double v : v0)
        if (v < 0.0) throw std::invalid_argument("initial volumes must be nonnegative");

    StateDeriv f = [&m](double t, const std::vector<double>& x) {
        const double va = x[0], vt = x[1], vl = x[2];
        return std::vector<double>{
            -m.kA * va + m.kTA * vt,
            m.kA * va + m.kL * vl - (m.kTA + m.kTL) * vt - m.ufr(t),
            -m.kL * vl + m.kTL * vt,
        };
    };
    DialysisRun run;
    run.trajectory = rk4(f, v0, t_end, dt);
    for (const auto& state : run.trajectory.states)
        for (double v : state)
            if (v < 0.0) run.negative_volume = true;
    return run;
}

} // namespace blocktf
