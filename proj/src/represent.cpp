#include "kappa/represent.hpp"

#include <cmath>
#include <sstream>

namespace kappa {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_grid(const Grid& g) {
    if (g.n < 32) throw Error("grid needs at least 32 points per axis");
    if (!(g.extent > 0)) throw Error("grid extent must be positive");
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

} // namespace

std::string GaussianParams::to_string() const {
    return "c0=" + format_double(center0) + ";c1=" + format_double(center1) +
           ";w0=" + format_double(width0) + ";w1=" + format_double(width1) +
           ";b0=" + format_double(phase0) + ";b1=" + format_double(phase1);
}

GridState GridState::gaussian(const Grid& g, const GaussianParams& p) {
    check_grid(g);
    auto margin_ok = [&](double c, double w) {
        return std::abs(c) + 5.0 * w <= 0.9 * g.extent && w >= 2.0 * g.spacing();
    };
    if (!margin_ok(p.center0, p.width0) || !margin_ok(p.center1, p.width1))
        throw StateError("gaussian state violates the 10% compact-support margin "
                         "or is unresolved by the grid (" +
                         p.to_string() + ")");

    std::vector<std::complex<double>> v(g.size());
    for (int j0 = 0; j0 < g.n; ++j0) {
        double p0 = g.point(j0);
        double e0 = (p0 - p.center0) / p.width0;
        for (int j1 = 0; j1 < g.n; ++j1) {
            double p1 = g.point(j1);
            double e1 = (p1 - p.center1) / p.width1;
            double amp = std::exp(-0.5 * (e0 * e0 + e1 * e1));
            double phase = p.phase0 * p0 + p.phase1 * p1;
            v[static_cast<std::size_t>(j0) * g.n + j1] =
                amp * std::complex<double>(std::cos(phase), std::sin(phase));
        }
    }
    GridState s(g, std::move(v));
    double nrm = s.norm();
    for (auto& z : s.values_) z /= nrm;
    return s;
}

GridState GridState::from_values(const Grid& g, std::vector<std::complex<double>> values) {
    check_grid(g);
    if (values.size() != g.size()) throw StateError("state size does not match grid");
    GridState s(g, std::move(values));
    if (std::abs(s.norm() - 1.0) > 1e-12) throw StateError("state is not normalized");
    return s;
}

double GridState::norm() const {
    return std::sqrt(std::abs(inner_product(grid_, values_, values_)));
}

std::vector<GaussianParams> random_gaussian_params(int count, std::uint64_t seed,
                                                   double max_center0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> center(-1.8, 1.8);
    std::uniform_real_distribution<double> center0(-max_center0, max_center0);
    std::uniform_real_distribution<double> width(0.5, 0.8);
    std::uniform_real_distribution<double> phase(-2.5, 2.5);
    std::vector<GaussianParams> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        GaussianParams p;
        p.center0 = center0(rng);
        p.center1 = center(rng);
        p.width0 = width(rng);
        p.width1 = width(rng);
        p.phase0 = phase(rng);
        p.phase1 = phase(rng);
        out.push_back(p);
    }
    return out;
}

std::string to_string(RepresentCase c) {
    return c == RepresentCase::Bicross ? "bicross" : "standard";
}

RepresentCase represent_case_from_string(const std::string& s) {
    if (s == "bicross" || s == "bicrossproduct") return RepresentCase::Bicross;
    if (s == "standard") return RepresentCase::Standard;
    throw Error("unknown case '" + s + "' (expected bicross or standard)");
}

SmashConfig represent_config(RepresentCase c) {
    SmashConfig cfg;
    cfg.basis = c == RepresentCase::Bicross ? Basis::Bicrossproduct : Basis::Standard;
    cfg.order = Order::PX;
    return cfg;
}

OperatorSet::OperatorSet(RepresentCase c, const Grid& g, double hbar, double kappa)
    : case_(c), grid_(g), hbar_(hbar), inv_kappa_(1.0 / kappa),
      table_(derive_table(represent_config(c))) {
    check_grid(g);
    if (!(hbar > 0)) throw Error("hbar must be positive");
    if (!(kappa > 0)) throw Error("kappa must be positive");
    if (std::isinf(kappa)) inv_kappa_ = 0.0;
    // The largest diagonal exponential applied anywhere is e^{2 L /(kappa hbar)}
    // (squared operators in the bicross case).
    if (2.0 * grid_.extent * inv_kappa_ / hbar_ > 700.0)
        throw OverflowError("e^{L/(kappa hbar)} exceeds the floating range on this grid");

    // Dense spectral differentiation matrix for the periodic extension of
    // the box (period n * spacing); real circulant built from the DFT
    // wavenumbers, with the Nyquist mode dropped for even n.
    int n = grid_.n;
    double period = n * grid_.spacing();
    std::vector<double> circ(n, 0.0);
    for (int d = 0; d < n; ++d) {
        double acc = 0.0;
        for (int m = 1; m < n; ++m) {
            int mm = (m <= n / 2) ? m : m - n;
            if (2 * m == n) continue;
            double k = 2.0 * kPi * mm / period;
            acc -= k * std::sin(2.0 * kPi * m * d / n);
        }
        circ[d] = acc / n;
    }
    deriv_.resize(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) deriv_[static_cast<std::size_t>(j) * n + l] = circ[((j - l) % n + n) % n];
}

OperatorSet::StateVec OperatorSet::derivative(int axis, const StateVec& v) const {
    int n = grid_.n;
    StateVec out(v.size(), {0.0, 0.0});
    if (axis == 0) {
        for (int j = 0; j < n; ++j) {
            auto* o = &out[static_cast<std::size_t>(j) * n];
            for (int l = 0; l < n; ++l) {
                double d = deriv_[static_cast<std::size_t>(j) * n + l];
                const auto* in = &v[static_cast<std::size_t>(l) * n];
                for (int i = 0; i < n; ++i) o[i] += d * in[i];
            }
        }
    } else {
        for (int r = 0; r < n; ++r) {
            const auto* in = &v[static_cast<std::size_t>(r) * n];
            auto* o = &out[static_cast<std::size_t>(r) * n];
            for (int j = 0; j < n; ++j) {
                std::complex<double> acc{0.0, 0.0};
                const double* drow = &deriv_[static_cast<std::size_t>(j) * n];
                for (int l = 0; l < n; ++l) acc += drow[l] * in[l];
                o[j] = acc;
            }
        }
    }
    return out;
}

OperatorSet::StateVec OperatorSet::diagonal_p(int axis, const StateVec& v) const {
    int n = grid_.n;
    StateVec out(v.size());
    for (int j0 = 0; j0 < n; ++j0) {
        double p0 = grid_.point(j0);
        for (int j1 = 0; j1 < n; ++j1) {
            double w = axis == 0 ? p0 : grid_.point(j1);
            std::size_t idx = static_cast<std::size_t>(j0) * n + j1;
            out[idx] = w * v[idx];
        }
    }
    return out;
}

OperatorSet::StateVec OperatorSet::diagonal_exp(double r, const StateVec& v) const {
    int n = grid_.n;
    StateVec out(v.size());
    for (int j0 = 0; j0 < n; ++j0) {
        double w = std::exp(-r * grid_.point(j0) * inv_kappa_ / hbar_);
        for (int j1 = 0; j1 < n; ++j1) {
            std::size_t idx = static_cast<std::size_t>(j0) * n + j1;
            out[idx] = w * v[idx];
        }
    }
    return out;
}

OperatorSet::StateVec OperatorSet::apply_generator(const Generator& g, const StateVec& v) const {
    const std::complex<double> ih{0.0, hbar_};
    if (g.is_p()) {
        if (g.index > 1) throw Error("P" + std::to_string(g.index) + " is not representable on the two-axis grid");
        return diagonal_p(g.index, v);
    }
    if (g.is_exp()) return diagonal_exp(g.exp_r.to_double(), v);
    if (g.index > 1) throw Error("x" + std::to_string(g.index) + " is not representable on the two-axis grid");

    if (g.index == 1) {
        // x_1 = i hbar e^{-p_0 s /(kappa hbar)} d/dp_1, s = 1 or 1/2.
        double s = case_ == RepresentCase::Bicross ? 1.0 : 0.5;
        StateVec d = derivative(1, v);
        StateVec out = diagonal_exp(s, d);
        for (auto& z : out) z *= ih;
        return out;
    }
    // x_0 = -i hbar d/dp_0 (+ symmetrized dilation term in the standard case).
    StateVec out = derivative(0, v);
    for (auto& z : out) z *= -ih;
    if (case_ == RepresentCase::Standard && inv_kappa_ != 0.0) {
        StateVec a = diagonal_p(1, derivative(1, v));
        StateVec b = derivative(1, diagonal_p(1, v));
        const std::complex<double> c{0.0, -0.25 * inv_kappa_};
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += c * (a[k] + b[k]);
    }
    return out;
}

OperatorSet::StateVec OperatorSet::apply_element(const Element& e, const StateVec& v) const {
    StateVec out(v.size(), {0.0, 0.0});
    for (const auto& [mono, coeff] : e.terms()) {
        StateVec acc = v;
        const auto& w = mono.word();
        for (auto it = w.rbegin(); it != w.rend(); ++it) acc = apply_generator(*it, acc);
        std::complex<double> c = coeff.eval(hbar_, inv_kappa_);
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += c * acc[k];
    }
    return out;
}

std::complex<double> inner_product(const Grid& g, const std::vector<std::complex<double>>& a,
                                   const std::vector<std::complex<double>>& b) {
    if (a.size() != g.size() || b.size() != g.size())
        throw StateError("vector size does not match grid");
    double h = g.spacing();
    std::complex<double> acc{0.0, 0.0};
    for (int j0 = 0; j0 < g.n; ++j0) {
        double w0 = (j0 == 0 || j0 == g.n - 1) ? 0.5 : 1.0;
        std::complex<double> row{0.0, 0.0};
        for (int j1 = 0; j1 < g.n; ++j1) {
            double w1 = (j1 == 0 || j1 == g.n - 1) ? 0.5 : 1.0;
            std::size_t idx = static_cast<std::size_t>(j0) * g.n + j1;
            row += w1 * std::conj(a[idx]) * b[idx];
        }
        acc += w0 * row;
    }
    return acc * (h * h);
}

namespace {

double vec_norm(const Grid& g, const std::vector<std::complex<double>>& v) {
    return std::sqrt(std::abs(inner_product(g, v, v)));
}

} // namespace

double dispersion(const OperatorSet& ops, const Element& observable, const GridState& state) {
    if (std::abs(state.norm() - 1.0) > 1e-12) throw StateError("state is not normalized");
    const auto& psi = state.values();
    auto applied = ops.apply_element(observable, psi);
    std::complex<double> mean = inner_product(state.grid(), psi, applied);
    for (std::size_t k = 0; k < applied.size(); ++k) applied[k] -= mean * psi[k];
    double var = std::abs(inner_product(state.grid(), applied, applied));
    return var < 0 ? 0.0 : std::sqrt(var);
}

std::vector<ResidualRow> commutator_residuals(const OperatorSet& ops, const GridState& state) {
    const auto& psi = state.values();
    const Grid& g = state.grid();
    const DerivedTable& t = ops.table();

    struct Pair {
        std::string name;
        Element a, b, c;
    };
    std::vector<Pair> pairs;
    pairs.push_back({commutator_key('x', 0, 'x', 1), Element::x(0), Element::x(1), t.comms.xx[0][1]});
    pairs.push_back({commutator_key('P', 0, 'P', 1), Element::p(0), Element::p(1), t.comms.pp[0][1]});
    for (int mu = 0; mu < 2; ++mu)
        for (int nu = 0; nu < 2; ++nu)
            pairs.push_back({commutator_key('x', mu, 'P', nu), Element::x(mu), Element::p(nu),
                             t.comms.xp[mu][nu]});

    std::vector<ResidualRow> rows;
    for (const auto& pr : pairs) {
        auto b_psi = ops.apply_element(pr.b, psi);
        auto ab = ops.apply_element(pr.a, b_psi);
        auto a_psi = ops.apply_element(pr.a, psi);
        auto ba = ops.apply_element(pr.b, a_psi);
        auto c_psi = ops.apply_element(pr.c, psi);
        std::vector<std::complex<double>> res(psi.size());
        for (std::size_t k = 0; k < res.size(); ++k) res[k] = ab[k] - ba[k] - c_psi[k];
        double scale = std::max({vec_norm(g, ab), vec_norm(g, ba), vec_norm(g, c_psi),
                                 ops.hbar() * 1e-6});
        rows.push_back({pr.name, vec_norm(g, res) / scale});
    }
    return rows;
}

std::vector<UncertaintyRow> check_uncertainty(const OperatorSet& ops, const GridState& state,
                                              const GaussianParams& params) {
    const DerivedTable& t = ops.table();
    double dx0 = dispersion(ops, Element::x(0), state);
    double dx1 = dispersion(ops, Element::x(1), state);
    double dp0 = dispersion(ops, Element::p(0), state);
    double dp1 = dispersion(ops, Element::p(1), state);

    auto half_abs_expectation = [&](const Element& c) {
        auto applied = ops.apply_element(c, state.values());
        return 0.5 * std::abs(inner_product(state.grid(), state.values(), applied));
    };

    struct Row {
        std::string name;
        double lhs;
        const Element* comm;
    };
    std::vector<Row> defs = {
        {"(x0,x1)", dx0 * dx1, &t.comms.xx[0][1]},
        {"(P1,x1)", dp1 * dx1, &t.comms.xp[1][1]},
        {"(P0,x0)", dp0 * dx0, &t.comms.xp[0][0]},
        {"(P1,x0)", dp1 * dx0, &t.comms.xp[0][1]},
    };

    std::vector<UncertaintyRow> rows;
    for (const auto& d : defs) {
        UncertaintyRow r;
        r.case_name = to_string(ops.represent_case());
        r.pair_name = d.name;
        r.kappa = ops.inv_kappa() == 0.0 ? std::numeric_limits<double>::infinity()
                                         : 1.0 / ops.inv_kappa();
        r.lhs = d.lhs;
        r.rhs = half_abs_expectation(*d.comm);
        r.margin = r.lhs - r.rhs;
        r.state = params;
        rows.push_back(r);
    }
    return rows;
}

int UncertaintyReport::violations() const {
    int count = 0;
    for (const auto& r : rows)
        if (!r.pass()) ++count;
    return count;
}

double UncertaintyReport::min_margin() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& r : rows) m = std::min(m, r.margin);
    return m;
}

UncertaintyReport uncertainty_sweep(RepresentCase c, const Grid& g, double hbar,
                                    const std::vector<double>& kappas, int states_per_kappa,
                                    std::uint64_t seed, double max_center0) {
    UncertaintyReport report;
    report.case_name = to_string(c);
    report.hbar = hbar;
    report.grid = g;
    report.seed = seed;
    for (double kappa : kappas) {
        OperatorSet ops(c, g, hbar, kappa);
        auto params = random_gaussian_params(states_per_kappa, seed, max_center0);
        for (const auto& p : params) {
            GridState state = GridState::gaussian(g, p);
            auto rows = check_uncertainty(ops, state, p);
            report.rows.insert(report.rows.end(), rows.begin(), rows.end());
        }
    }
    return report;
}

} // namespace kappa
