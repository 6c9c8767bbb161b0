#ifndef FERMAT_MATRIX_IO_HPP
#define FERMAT_MATRIX_IO_HPP

#include <string>

#include "fermat/fermat_core.hpp"

namespace fermat {

// Persists the matrix as CSV (17 significant digits per entry) plus a JSON
// sidecar `<path>.json` carrying {n, alpha, d, scale_factor, normalized,
// graph_kind, seed, ...}. Round trips are bit-identical.
void save_matrix(const FermatMatrix& matrix, const std::string& path);
FermatMatrix load_matrix(const std::string& path);

}  // namespace fermat

#endif  // FERMAT_MATRIX_IO_HPP
