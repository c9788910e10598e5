#ifndef HULLCERT_MATRIX_HPP
#define HULLCERT_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hullcert {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

class IllConditionedError : public Error {
public:
    using Error::Error;
};

/// Raised when an enumeration would exceed the configured dimension cap.
class ComplexityError : public Error {
public:
    using Error::Error;
};

/// Raised when an operation's precondition does not hold for the given input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Raised when a sign decision lands in the zero band and blocks a verdict
/// that has no Indeterminate channel of its own.
class IndeterminateSignError : public Error {
public:
    using Error::Error;
};

enum class Sign3 { Negative, Zero, Positive };

/// Two-parameter zero band: a scalar decides Zero iff |x| <= abs_eps + rel_eps * scale.
struct Tolerance {
    double abs_eps = 1e-9;
    double rel_eps = 1e-9;
};

/// Sign of x relative to a magnitude reference (e.g. the max |entry| of the
/// matrix x came from).
inline Sign3 sign_of(double x, double scale, const Tolerance& tol = {}) {
    const double band = tol.abs_eps + tol.rel_eps * scale;
    if (std::abs(x) <= band) return Sign3::Zero;
    return x < 0.0 ? Sign3::Negative : Sign3::Positive;
}

/// Dense row-major real matrix. Entries are validated finite on construction.
class Matrix {
public:
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(checked_size(rows, cols), 0.0) {}

    Matrix(int rows, int cols, std::vector<double> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != checked_size(rows, cols))
            throw DimensionError("matrix entry count does not match rows*cols");
        validate_finite();
    }

    Matrix(std::initializer_list<std::initializer_list<double>> rows) {
        rows_ = static_cast<int>(rows.size());
        if (rows_ == 0) throw DimensionError("matrix must have at least one row");
        cols_ = static_cast<int>(rows.begin()->size());
        if (cols_ == 0) throw DimensionError("matrix must have at least one column");
        data_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_)
                throw DimensionError("ragged rows in matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
        validate_finite();
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix constant(int rows, int cols, double v) {
        Matrix m(rows, cols);
        for (auto& e : m.data_) e = v;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double& operator()(int i, int j) { return data_[index(i, j)]; }
    double operator()(int i, int j) const { return data_[index(i, j)]; }

    const std::vector<double>& data() const { return data_; }

    double max_abs() const {
        double m = 0.0;
        for (double e : data_) m = std::max(m, std::abs(e));
        return m;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix cwise_abs() const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = std::abs(data_[k]);
        return r;
    }

    std::vector<double> operator*(const std::vector<double>& x) const {
        if (static_cast<int>(x.size()) != cols_)
            throw DimensionError("matrix-vector size mismatch");
        std::vector<double> y(rows_, 0.0);
        for (int i = 0; i < rows_; ++i) {
            double s = 0.0;
            for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
        return r;
    }

    friend Matrix operator*(double s, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = s * a.data_[k];
        return r;
    }

    bool operator==(const Matrix& other) const = default;

    void check_same_shape(const Matrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw DimensionError("matrix shape mismatch");
    }

private:
    static std::size_t checked_size(int rows, int cols) {
        if (rows < 1 || cols < 1)
            throw DimensionError("matrix dimensions must be positive");
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }

    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw DimensionError("matrix index out of range");
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    void validate_finite() const {
        for (double e : data_)
            if (!std::isfinite(e)) throw Error("matrix entries must be finite");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

/// Sorted set of distinct indices into {1,...,n}, stored 0-based.
class IndexSet {
public:
    IndexSet() = default;

    explicit IndexSet(std::vector<int> indices) : idx_(std::move(indices)) {
        for (std::size_t k = 0; k < idx_.size(); ++k) {
            if (idx_[k] < 0) throw Error("index set entries must be nonnegative");
            if (k > 0 && idx_[k] <= idx_[k - 1])
                throw Error("index set must be strictly increasing");
        }
    }

    static IndexSet full(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[i] = i;
        return IndexSet(std::move(v));
    }

    static IndexSet of(std::initializer_list<int> zero_based) {
        return IndexSet(std::vector<int>(zero_based));
    }

    /// Parses indices as given in reports and CLI input (1-based).
    static IndexSet from_one_based(std::vector<int> indices) {
        std::sort(indices.begin(), indices.end());
        for (auto& i : indices) {
            if (i < 1) throw Error("1-based index must be >= 1");
            i -= 1;
        }
        return IndexSet(std::move(indices));
    }

    int size() const { return static_cast<int>(idx_.size()); }
    bool empty() const { return idx_.empty(); }
    int operator[](int k) const { return idx_[static_cast<std::size_t>(k)]; }
    const std::vector<int>& indices() const { return idx_; }

    bool contains(int i) const {
        return std::binary_search(idx_.begin(), idx_.end(), i);
    }

    IndexSet complement(int n) const {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(n - size()));
        for (int i = 0; i < n; ++i)
            if (!contains(i)) v.push_back(i);
        return IndexSet(std::move(v));
    }

    std::vector<int> one_based() const {
        std::vector<int> v = idx_;
        for (auto& i : v) i += 1;
        return v;
    }

    /// "{1,3}" rendering used in reports.
    std::string label() const {
        std::string s = "{";
        for (std::size_t k = 0; k < idx_.size(); ++k) {
            if (k > 0) s += ',';
            s += std::to_string(idx_[k] + 1);
        }
        s += '}';
        return s;
    }

    bool operator==(const IndexSet& other) const = default;

private:
    std::vector<int> idx_;
};

inline double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double e : v) m = std::max(m, std::abs(e));
    return m;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

} // namespace hullcert

#endif
