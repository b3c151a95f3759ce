// Copyright 2026 The sedkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEDKIT_MAT_HPP_
#define SEDKIT_MAT_HPP_

#include <cstddef>
#include <vector>

#include "sedkit/error.hpp"

namespace sedkit {

// Scalar type for all in-memory signal/feature math. Checkpoints and feature
// files are stored as 32-bit floats regardless.
#ifdef SEDKIT_REAL32
using real = float;
#else
using real = double;
#endif

// Dense row-major matrix. Plain storage, no expression templates; the tensor
// engine handles anything differentiable.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, real fill = 0) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  real& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  real operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  real* data() { return data_.data(); }
  const real* data() const { return data_.data(); }
  std::vector<real>& vec() { return data_; }
  const std::vector<real>& vec() const { return data_; }

  bool same_shape(const Mat& other) const { return rows_ == other.rows_ && cols_ == other.cols_; }

  void require_shape(int rows, int cols, const char* what) const {
    if (rows_ != rows || cols_ != cols)
      throw ShapeError(std::string(what) + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                       ", got " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<real> data_;
};

}  // namespace sedkit

#endif  // SEDKIT_MAT_HPP_
