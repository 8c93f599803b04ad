#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polarmp {

/// Dense image plane, indexed (row, col). Row-major so raster I/O is a
/// straight memory walk.
template <class Scalar>
using Image = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using ImageD = Image<double>;

/// Binary mask with values in {0,1}. Stored as bytes; files use {0,255}.
using BinaryMask = Image<std::uint8_t>;

/// Toolkit error. Messages name the violated constraint.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

inline void require_same_shape(const ImageD& a, const ImageD& b, const std::string& ctx) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ctx + ": dimension mismatch (" + std::to_string(a.rows()) + "x" +
                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                std::to_string(b.cols()) + ")");
}

inline void require_mask_shape(const ImageD& a, const BinaryMask& m, const std::string& ctx) {
  if (a.rows() != m.rows() || a.cols() != m.cols())
    throw Error(ctx + ": mask dimension mismatch (" + std::to_string(a.rows()) + "x" +
                std::to_string(a.cols()) + " vs " + std::to_string(m.rows()) + "x" +
                std::to_string(m.cols()) + ")");
}

inline bool all_finite(const ImageD& img) { return img.isFinite().all(); }

constexpr double kPi = 3.14159265358979323846;

}  // namespace polarmp
