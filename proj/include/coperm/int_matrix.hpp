#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace coperm {

// Small dense square matrix of signed integers, row-major.
class IntMatrix {
 public:
  static constexpr int kMaxDim = 12;

  IntMatrix() = default;
  explicit IntMatrix(int dim);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(int dim);

  int dim() const { return dim_; }

  std::int64_t& operator()(int i, int j) { return entries_[i * dim_ + j]; }
  std::int64_t operator()(int i, int j) const { return entries_[i * dim_ + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int dim_ = 0;
  std::vector<std::int64_t> entries_;
};

}  // namespace coperm
