#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcnmf {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Instances-by-features data. Instance ids survive resampling so partitions
// can be mapped back to the original rows.
struct DataMatrix {
    Matrix values;                  // n x d, one row per instance
    std::vector<std::int64_t> ids;  // size n; defaults to 0..n-1

    DataMatrix() = default;

    explicit DataMatrix(Matrix v) : values(std::move(v)) {
        ids.resize(static_cast<std::size_t>(values.rows()));
        std::iota(ids.begin(), ids.end(), std::int64_t{0});
    }

    DataMatrix(Matrix v, std::vector<std::int64_t> row_ids)
        : values(std::move(v)), ids(std::move(row_ids)) {
        if (ids.size() != static_cast<std::size_t>(values.rows()))
            throw std::invalid_argument("DataMatrix: id count does not match row count");
    }

    Eigen::Index rows() const { return values.rows(); }
    Eigen::Index cols() const { return values.cols(); }
};

// Symmetric kernel matrix. Construction rejects non-square input and entries
// violating |K(i,j) - K(j,i)| <= 1e-12 * max(1, |K(i,j)|).
class GramMatrix {
  public:
    GramMatrix() = default;

    explicit GramMatrix(Matrix v) : values_(std::move(v)) {
        if (values_.rows() != values_.cols())
            throw std::invalid_argument("GramMatrix: matrix is not square");
        for (Eigen::Index i = 0; i < values_.rows(); ++i) {
            for (Eigen::Index j = i + 1; j < values_.cols(); ++j) {
                const double a = values_(i, j);
                const double b = values_(j, i);
                if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a)))
                    throw std::invalid_argument("GramMatrix: matrix is not symmetric");
            }
        }
    }

    const Matrix& values() const { return values_; }
    Eigen::Index size() const { return values_.rows(); }

  private:
    Matrix values_;
};

// CSV (or other structured-input) failure with the offending location.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, int row, int col)
        : std::runtime_error("parse error at row " + std::to_string(row) + ", column " +
                             std::to_string(col) + ": " + msg),
          row_(row),
          col_(col) {}

    int row() const { return row_; }
    int col() const { return col_; }

  private:
    int row_;
    int col_;
};

// File-level I/O failure (missing file, unwritable directory, ...).
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Every alignment iterate produced a degenerate partition; carries a
// per-iterate diagnostic trace for the caller.
class NoValidBridgeError : public std::runtime_error {
  public:
    explicit NoValidBridgeError(std::string diagnostic)
        : std::runtime_error("no valid bridge matrix: every alignment iterate was degenerate"),
          diagnostic_(std::move(diagnostic)) {}

    const std::string& diagnostic() const { return diagnostic_; }

  private:
    std::string diagnostic_;
};

}  // namespace bcnmf
