#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qbsim {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Operators are built once and treated as
// immutable afterwards; sharing across threads is safe by that convention.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const { return dim_; }
    bool empty() const { return dim_ == 0; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }
    const cplx* row(std::size_t i) const { return data_.data() + i * dim_; }

    // this += factor * other
    ComplexMatrix& add_scaled(const ComplexMatrix& other, cplx factor);
    ComplexMatrix& scale(cplx factor);

    ComplexMatrix adjoint() const;

    // max_ij |A_ij - (A†)_ij|; zero for an exactly Hermitian matrix
    double hermiticity_error() const;

    double max_abs() const;

    // Content hash; used to key eigendecomposition caches.
    std::uint64_t fingerprint() const;

    bool operator==(const ComplexMatrix& other) const {
        return dim_ == other.dim_ && data_ == other.data_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace qbsim
