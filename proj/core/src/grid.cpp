#include "cpe/grid.hpp"

#include "cpe/errors.hpp"

namespace cpe {

Grid::Grid(int nx, int ny, int nz) : dims_{nx, ny, nz} {
  if (nx < 8 || nx % 2 != 0) throw ConstraintFault("nx", "must be even and >= 8");
  if (ny < 8 || ny % 2 != 0) throw ConstraintFault("ny", "must be even and >= 8");
  if (nz < 8) throw ConstraintFault("nz", "must be >= 8");
}

Dims Grid::padded() const noexcept {
  return Dims{3 * dims_.nx / 2, 3 * dims_.ny / 2, (3 * dims_.nz + 1) / 2};
}

}  // namespace cpe
