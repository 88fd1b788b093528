#pragma once

#include <cstddef>
#include <vector>

namespace corrtree {

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<double>& data() const { return data_; }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Row-major boolean grid, used for missing-value masks.
class BoolGrid {
public:
    BoolGrid() = default;
    BoolGrid(std::size_t rows, std::size_t cols, bool fill = false)
        : rows_(rows), cols_(cols), data_(rows * cols, fill ? 1 : 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c, bool v) { data_[r * cols_ + c] = v ? 1 : 0; }
    bool get(std::size_t r, std::size_t c) const { return data_[r * cols_ + c] != 0; }

    bool any() const {
        for (char v : data_)
            if (v) return true;
        return false;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<char> data_;
};

} // namespace corrtree
