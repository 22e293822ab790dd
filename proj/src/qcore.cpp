#include "seqsense/qcore.hpp"

#include <string>

#include "seqsense/errors.hpp"

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

namespace seqsense {

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

ComplexMatrix identity(long dim) { return ComplexMatrix::Identity(dim, dim); }

bool is_hermitian(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    double scale = a.cwiseAbs().maxCoeff();
    double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
    return dev <= tol * std::max(scale, 1e-300);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, long cap) {
    long rows = a.rows() * b.rows();
    long cols = a.cols() * b.cols();
    if (rows > cap || cols > cap) {
        throw DimensionError("kron: result dimension " + std::to_string(std::max(rows, cols)) +
                             " exceeds cap " + std::to_string(cap));
    }
    ComplexMatrix out(rows, cols);
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

long product_dim(const std::vector<int>& subsystem_dims) {
    long d = 1;
    for (int s : subsystem_dims) {
        if (s < 1) throw DimensionError("subsystem dimension must be >= 1");
        d *= s;
        if (d > kDimensionCap)
            throw DimensionError("total dimension exceeds cap " + std::to_string(kDimensionCap));
    }
    return d;
}

ComplexMatrix embed_site_operator(const ComplexMatrix& op, int site,
                                  const std::vector<int>& subsystem_dims) {
    if (site < 0 || site >= static_cast<int>(subsystem_dims.size()))
        throw std::out_of_range("embed_site_operator: site out of range");
    if (op.rows() != op.cols() || op.rows() != subsystem_dims[site])
        throw DimensionError("embed_site_operator: operator does not match the site dimension");
    long before = 1, after = 1;
    for (int j = 0; j < site; ++j) before *= subsystem_dims[j];
    for (std::size_t j = site + 1; j < subsystem_dims.size(); ++j) after *= subsystem_dims[j];
    return kron(kron(identity(before), op), identity(after));
}

ComplexMatrix apply(const ComplexMatrix& u, const ComplexMatrix& rhs) {
    if (u.cols() != rhs.rows()) throw DimensionError("apply: shape mismatch");
    return u * rhs;
}

StateVector apply(const ComplexMatrix& u, const StateVector& psi) {
    if (u.cols() != psi.size()) throw DimensionError("apply: shape mismatch");
    return u * psi;
}

StateVector basis_state(const std::vector<int>& subsystem_dims, const std::vector<int>& levels) {
    if (subsystem_dims.size() != levels.size())
        throw DimensionError("basis_state: one level per subsystem required");
    long dim = product_dim(subsystem_dims);
    long idx = 0;
    for (std::size_t j = 0; j < subsystem_dims.size(); ++j) {
        if (levels[j] < 0 || levels[j] >= subsystem_dims[j])
            throw std::out_of_range("basis_state: level out of range");
        idx = idx * subsystem_dims[j] + levels[j];
    }
    StateVector psi = StateVector::Zero(dim);
    psi(idx) = 1.0;
    return psi;
}

EighResult eigh(const ComplexMatrix& h) {
    if (!is_hermitian(h))
        throw ContractError("eigh: matrix is not Hermitian within tolerance");
    const lapack_int n = static_cast<lapack_int>(h.rows());
    EighResult res;
    res.eigenvectors = h;  // zheevd overwrites with eigenvectors
    res.eigenvalues.resize(n);
    if (n == 0) return res;
    lapack_int info = LAPACKE_zheevd(
        LAPACK_COL_MAJOR, 'V', 'L', n,
        reinterpret_cast<lapack_complex_double*>(res.eigenvectors.data()), n,
        res.eigenvalues.data());
    if (info != 0)
        throw ContractError("eigh: zheevd failed with info " + std::to_string(info));
    return res;
}

HermitianPropagator::HermitianPropagator(const ComplexMatrix& h) : eig_(eigh(h)) {}

ComplexMatrix HermitianPropagator::evolution(double t) const {
    const long n = dim();
    StateVector phases(n);
    for (long i = 0; i < n; ++i)
        phases(i) = std::exp(Complex(0.0, -eig_.eigenvalues(i) * t));
    return eig_.eigenvectors * phases.asDiagonal() * eig_.eigenvectors.adjoint();
}

StateVector HermitianPropagator::evolve(const StateVector& psi, double t) const {
    if (psi.size() != dim()) throw DimensionError("evolve: state dimension mismatch");
    StateVector y = eig_.eigenvectors.adjoint() * psi;
    for (long i = 0; i < y.size(); ++i)
        y(i) *= std::exp(Complex(0.0, -eig_.eigenvalues(i) * t));
    return eig_.eigenvectors * y;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t) {
    return HermitianPropagator(h).evolution(t);
}

}  // namespace seqsense
