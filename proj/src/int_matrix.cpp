#include "coperm/int_matrix.hpp"

#include "coperm/error.hpp"

namespace coperm {

IntMatrix::IntMatrix(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxDim) {
    throw Error(ErrorCode::TooLarge, "matrix dimension " + std::to_string(dim) +
                                         " outside 0.." + std::to_string(kMaxDim));
  }
  entries_.assign(static_cast<std::size_t>(dim) * dim, 0);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim_) {
      throw Error(ErrorCode::DegreeMismatch, "matrix rows must be square");
    }
    int j = 0;
    for (std::int64_t v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

}  // namespace coperm
