#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace seqsense {

// Dense complex linear algebra for small Hilbert spaces (dim <= kDimensionCap).
// Row/column conventions follow Eigen; tensor factors are ordered with the
// first subsystem most significant, so basis index i = ((i0*d1 + i1)*d2 + i2)...

using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

inline constexpr long kDimensionCap = 4096;
inline constexpr double kHermTolerance = 1e-12;

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix identity(long dim);

// max |A - A†| <= kHermTolerance * max|A|
bool is_hermitian(const ComplexMatrix& a, double tol = kHermTolerance);

// Kronecker product with the global dimension cap; throws DimensionError past it.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, long cap = kDimensionCap);

// Identity on every factor except `site`, which carries `op`.
ComplexMatrix embed_site_operator(const ComplexMatrix& op, int site,
                                  const std::vector<int>& subsystem_dims);

ComplexMatrix apply(const ComplexMatrix& u, const ComplexMatrix& rhs);
StateVector apply(const ComplexMatrix& u, const StateVector& psi);

// |i0,i1,...> over the given factor dimensions.
StateVector basis_state(const std::vector<int>& subsystem_dims, const std::vector<int>& levels);

long product_dim(const std::vector<int>& subsystem_dims);

struct EighResult {
    Eigen::VectorXd eigenvalues;   // ascending
    ComplexMatrix eigenvectors;    // columns
};

// Hermitian eigendecomposition (LAPACK zheevd). Throws ContractError on a
// non-Hermitian input.
EighResult eigh(const ComplexMatrix& h);

// Holds one eigendecomposition of H and produces exp(-iHt) actions for many t.
// Eigendecomposition keeps the evolution unitary to round-off, and H is reused
// across the many durations a schedule scan touches.
class HermitianPropagator {
  public:
    explicit HermitianPropagator(const ComplexMatrix& h);

    long dim() const { return eig_.eigenvalues.size(); }
    const Eigen::VectorXd& eigenvalues() const { return eig_.eigenvalues; }

    // U(t) = V exp(-i E t) V†
    ComplexMatrix evolution(double t) const;
    // U(t) psi via two matvecs; never forms U.
    StateVector evolve(const StateVector& psi, double t) const;

  private:
    EighResult eig_;
};

// U = exp(-i h t); unitary within 1e-9 entrywise.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t);

}  // namespace seqsense
