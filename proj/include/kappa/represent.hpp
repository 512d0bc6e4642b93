#pragma once

#include <complex>
#include <random>
#include <vector>

#include "kappa/smash.hpp"

namespace kappa {

/// Two-axis momentum-space grid over [-extent, extent] x [-extent, extent];
/// axis 0 is p_0, axis 1 is p_1.  Differentiation is spectral on the
/// periodic extension of the box, so states are expected to vanish near the
/// edges (see GridState::gaussian's margin check).
struct Grid {
    int n = 128;
    double extent = 8.0;

    double spacing() const { return 2.0 * extent / (n - 1); }
    double point(int j) const { return -extent + j * spacing(); }
    std::size_t size() const { return static_cast<std::size_t>(n) * n; }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.n == b.n && a.extent == b.extent;
    }
};

struct GaussianParams {
    double center0 = 0.0;
    double center1 = 0.0;
    double width0 = 0.8; // envelope scale: psi ~ exp(-(p-c)^2/(2 w^2))
    double width1 = 0.8;
    double phase0 = 0.0; // linear phase b: psi ~ exp(i b p)
    double phase1 = 0.0;

    std::string to_string() const;
};

/// Normalized complex wavefunction over a Grid.  Construction enforces unit
/// trapezoidal norm (within 1e-12) and, for Gaussians, a compact-support
/// margin of at least 10% of the box from each edge.
class GridState {
public:
    static GridState gaussian(const Grid& g, const GaussianParams& params);
    static GridState from_values(const Grid& g, std::vector<std::complex<double>> values);

    const Grid& grid() const { return grid_; }
    const std::vector<std::complex<double>>& values() const { return values_; }
    double norm() const;

private:
    GridState(const Grid& g, std::vector<std::complex<double>> v)
        : grid_(g), values_(std::move(v)) {}

    Grid grid_;
    std::vector<std::complex<double>> values_;
};

/// Uniformly samples Gaussian state parameters within ranges that respect
/// the support margin of the grid.
std::vector<GaussianParams> random_gaussian_params(int count, std::uint64_t seed,
                                                   double max_center0 = 1.8);

/// The two momentum-first phase-space algebras with a known classical limit,
/// named by their coalgebra basis.
enum class RepresentCase { Bicross, Standard };

std::string to_string(RepresentCase c);
RepresentCase represent_case_from_string(const std::string& s);
SmashConfig represent_config(RepresentCase c);

/// Concrete operators realizing a phase-space algebra on the grid:
/// P_mu acts by multiplication and x_mu as a spectral differential operator,
///   bicross:  x_0 = -i hbar d/dp_0,  x_1 = i hbar e^{-p_0/(kappa hbar)} d/dp_1
///   standard: x_1 = i hbar e^{-p_0/(2 kappa hbar)} d/dp_1,
///             x_0 = -i hbar d/dp_0 - (i/(4 kappa)) (p_1 d/dp_1 + d/dp_1 p_1)
/// (the symmetric ordering of the dilation term keeps x_0 Hermitian; it
/// differs from p_1 d/dp_1 by a constant and leaves every commutator
/// unchanged).
class OperatorSet {
public:
    OperatorSet(RepresentCase c, const Grid& g, double hbar, double kappa);

    RepresentCase represent_case() const { return case_; }
    const Grid& grid() const { return grid_; }
    double hbar() const { return hbar_; }
    double inv_kappa() const { return inv_kappa_; }

    /// Symbolic table whose relations these operators realize.
    const DerivedTable& table() const { return table_; }

    using StateVec = std::vector<std::complex<double>>;

    StateVec apply_generator(const Generator& g, const StateVec& v) const;
    StateVec apply_element(const Element& e, const StateVec& v) const;

private:
    StateVec derivative(int axis, const StateVec& v) const;
    StateVec diagonal_p(int axis, const StateVec& v) const;
    StateVec diagonal_exp(double r, const StateVec& v) const;

    RepresentCase case_;
    Grid grid_;
    double hbar_;
    double inv_kappa_;
    DerivedTable table_;
    std::vector<double> deriv_; // dense spectral derivative matrix, n x n
};

/// Trapezoidal inner product <a|b>.
std::complex<double> inner_product(const Grid& g, const std::vector<std::complex<double>>& a,
                                   const std::vector<std::complex<double>>& b);

/// sqrt(<a^2> - <a>^2) computed as ||(A - <A>) psi||; identical to the
/// two-moment form for Hermitian A and free of cancellation.  Throws
/// StateError when the state is not normalized to 1e-12.
double dispersion(const OperatorSet& ops, const Element& observable, const GridState& state);

struct ResidualRow {
    std::string relation;
    double residual = 0.0; // relative to the size of the commutator inputs
};

/// Relative residuals ||(AB - BA - C) psi|| / scale for every relation of
/// the case's table over the representable generators {x0, x1, P0, P1},
/// with C read from the derived table.
std::vector<ResidualRow> commutator_residuals(const OperatorSet& ops, const GridState& state);

struct UncertaintyRow {
    std::string case_name;
    std::string pair_name;
    double kappa = 0.0;
    double lhs = 0.0;    // dispersion product
    double rhs = 0.0;    // half the represented commutator expectation
    double margin = 0.0; // lhs - rhs
    GaussianParams state;

    bool pass() const { return margin >= -1e-9 * std::max(lhs, rhs); }
};

struct UncertaintyReport {
    std::string case_name;
    double hbar = 1.0;
    Grid grid;
    std::uint64_t seed = 0;
    std::vector<UncertaintyRow> rows;

    int violations() const;
    double min_margin() const;
};

/// Evaluates the four deformed uncertainty inequalities of the case on one
/// state: (x0,x1), (P1,x1), (P0,x0), (P1,x0), each bounded below by half the
/// expectation of the table's commutator.
std::vector<UncertaintyRow> check_uncertainty(const OperatorSet& ops, const GridState& state,
                                              const GaussianParams& params);

/// Random-state sweep over the given kappas.
UncertaintyReport uncertainty_sweep(RepresentCase c, const Grid& g, double hbar,
                                    const std::vector<double>& kappas, int states_per_kappa,
                                    std::uint64_t seed, double max_center0 = 1.8);

} // namespace kappa
