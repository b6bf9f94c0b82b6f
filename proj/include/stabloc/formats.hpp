#pragma once

#include <string>
#include <vector>

#include "stabloc/bit_matrix.hpp"
#include "stabloc/stabilizer.hpp"
#include "stabloc/surface.hpp"

namespace stabloc {

/// Check-matrix rows plus per-row signs, as parsed from the text format.
/// Carrying this separately from StabilizerGroup lets the delta/eta
/// algorithms run on raw matrices without the group validity gate.
struct SignedCheckMatrix {
    BitMatrix matrix; // m x 2n
    std::vector<int> signs;

    std::size_t num_qubits() const { return matrix.cols() / 2; }
    std::size_t num_rows() const { return matrix.rows(); }
};

/// Check-matrix text format:
///
///     n m
///     +100|001
///     -001|010
///
/// one row per generator, sign character then n x-bits, '|', n z-bits.
SignedCheckMatrix parse_check_matrix(const std::string& text);
std::string emit_check_matrix(const BitMatrix& a, const std::vector<int>& signs);
std::string emit_check_matrix(const StabilizerGroup& g);

/// Cellulation text format, 0-based ids throughout:
///
///     VERTICES 6
///     EDGES
///     0 0 1
///     1 0 1
///     FACES
///     0 0 1
///
/// edge lines are "id u v", face lines are "id e1 e2 ... ek"; ids must be
/// sequential from 0. Blank lines and lines starting with '#' are skipped.
Cellulation parse_cellulation(const std::string& text);
std::string emit_cellulation(const Cellulation& c);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace stabloc
