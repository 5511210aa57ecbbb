#ifndef SKETCHBAL_MATRIX_HPP
#define SKETCHBAL_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sketchbal {

/// Dense real matrix stored in row-major order. The universal carrier for
/// input matrices, sketched matrices and factors throughout the library.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("DenseMatrix: dimensions must be positive");
    }

    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("DenseMatrix: dimensions must be positive");
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("DenseMatrix: data length " +
                                        std::to_string(data_.size()) + " != rows*cols");
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
    const double* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<double>& data() noexcept { return data_; }
    const std::vector<double>& data() const noexcept { return data_; }

    bool is_finite() const noexcept;

    bool same_shape(const DenseMatrix& other) const noexcept {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& m);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scaled(const DenseMatrix& m, double factor);

double frobenius_norm(const DenseMatrix& m);
double max_abs(const DenseMatrix& m);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// y = M x for a vector x of length M.cols().
std::vector<double> matvec(const DenseMatrix& m, const std::vector<double>& x);
/// y = M^T x for a vector x of length M.rows().
std::vector<double> matvec_transposed(const DenseMatrix& m, const std::vector<double>& x);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& v);

}  // namespace sketchbal

#endif
