#pragma once

#include <Eigen/Dense>

#include <memory>
#include <vector>

#include "floquet/double_double.hpp"
#include "floquet/hp.hpp"
#include "floquet/operator_model.hpp"

namespace floquet {

using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

struct GeneratorMatrices {
    CMatrix P;  // depends on lambda only
    RMatrix Q;  // depends on t only
};

GeneratorMatrices generator_matrices(const OperatorSpec& spec, Complex lambda, double t);
CMatrix build_generator(const OperatorSpec& spec, Complex lambda, double t);
RMatrix symplectic_form(int p);

// Y = S(t) Y~ between quasi-derivatives and plain derivatives (y, y', ..., y^(2p-1)).
RMatrix quasi_derivative_similarity(const OperatorSpec& spec, double t);

// Ordered per-segment propagators of the Z-conjugated system, kept in double-double
// so the full product can be formed at whatever precision the caller needs.
class PropagatorChain {
public:
    PropagatorChain(int dim, Complex scale) : dim_(dim), scale_(scale) {}

    int dim() const { return dim_; }
    // diagonal conjugation Z = diag(scale^{j-1}); scale == 1 means unscaled
    Complex scale() const { return scale_; }
    size_t segments() const { return factors_.size(); }
    void append(std::vector<dd::Complex> factor) { factors_.push_back(std::move(factor)); }

    // Z^{-1} M Z at the requested precision (bits).
    hp::Matrix product(mpfr_prec_t bits) const;

private:
    int dim_;
    Complex scale_;
    std::vector<std::vector<dd::Complex>> factors_;  // row-major, applied first-to-last
};

enum class Engine {
    taylor_chain,  // segmented double-double Taylor series, multiprecision product
    runge_kutta,   // adaptive Dormand-Prince 5(4) in double precision
};

struct MonodromyOptions {
    double tol = 1e-12;            // local relative error target of the RK engine
    Engine engine = Engine::taylor_chain;
    bool scaled = false;           // return Z^{-1} M Z instead of M
    bool allow_renormalization = true;
};

struct MonodromyResult {
    int p = 0;
    CMatrix matrix;                // M(1, lambda) (or Z^{-1} M Z), divided by e^{log_scale}
    Complex lambda;
    int step_count = 0;
    double local_error_estimate = 0.0;
    bool scale_applied = false;
    Complex scale_root{1.0, 0.0};  // the z in Z = diag(z^{j-1}) when scale_applied
    double log_scale = 0.0;
    std::shared_ptr<const PropagatorChain> chain;  // set by the Taylor engine
    std::shared_ptr<const hp::Matrix> conjugated;  // chain product at working precision
};

MonodromyResult monodromy(const OperatorSpec& spec, Complex lambda, const MonodromyOptions& options);
MonodromyResult monodromy(const OperatorSpec& spec, Complex lambda, double tol = 1e-12);
MonodromyResult scaled_monodromy(const OperatorSpec& spec, Complex lambda, double tol = 1e-12);

double symplectic_defect(const MonodromyResult& result);
// det M with log_scale undone, computed at extended precision when a chain is available
Complex monodromy_determinant(const MonodromyResult& result);
// Eigenvalues of the stored double matrix (log_scale undone).
std::vector<Complex> matrix_eigenvalues(const MonodromyResult& result);

// Precision (bits) that keeps the multiplier information of M(1, lambda) representable.
mpfr_prec_t working_precision(int p, Complex lambda);

// A multiprecision matrix similar to M(1, lambda): the Z-conjugated chain product when the
// Taylor engine produced the result, otherwise the stored matrix with log_scale folded back in.
hp::Matrix precise_matrix(const MonodromyResult& result, mpfr_prec_t bits);

// Closed form for q = 0: Z C e^{zB} (Z C)^{-1}, or C e^{zB} C^{-1} when scaled.
CMatrix free_monodromy(int p, Complex lambda, bool scaled);

// Fundamental matrix of the plain-derivative system (y, y', ..., y^(2p-1)), by RK.
CMatrix classical_monodromy(const OperatorSpec& spec, Complex lambda, double tol = 1e-12);

// max_i sum_j |A_ij| and max_j sum_i |A_ij|
double max_row_sum(const CMatrix& a);
double max_col_sum(const CMatrix& a);

}  // namespace floquet
