#pragma once

// Skew intersection lattice of the 2^k vanishing cycles and its nondegenerate
// quotient. For k = 4 this is the rank-16 Milnor lattice of the Fermat cubic
// surface singularity; its radical has rank 6 and the quotient has rank 10.

#include <cstddef>
#include <vector>

#include "cubmon/artin_graph.hpp"
#include "cubmon/integer_matrix.hpp"

namespace cubmon {

/// Pairing of two vanishing cycles. For i < j (lexicographic) and i, j
/// comparable the value is -(-1)^(sum_nu (i_nu - j_nu)), with the exponent
/// read by parity; incomparable pairs give 0; skew-symmetric; zero diagonal.
int hl_pairing(const BitVertex& i, const BitVertex& j);

struct SkewLattice {
  unsigned k = 0;
  IntMatrix gram;  // 2^k x 2^k, lexicographic vertex order
  std::size_t dimension() const { return gram.rows(); }
};

SkewLattice gram_matrix(unsigned k);

/// Hermite-reduced basis (rows) of the integer kernel of the Gram matrix.
std::vector<IntVector> radical(const SkewLattice& lattice);

struct QuotientLattice {
  std::size_t rank = 0;
  IntMatrix induced_gram;                // rank x rank
  std::vector<IntVector> class_map;      // one image per vanishing cycle
  std::vector<IntVector> radical_basis;  // in the original coordinates
  IntMatrix projection;                  // rank x dimension, Hermite normal form, columns = class_map

  std::int64_t pair(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const {
    return pairing(induced_gram, x, y);
  }
};

/// Quotient by the (saturated) radical. The projection is the row Hermite
/// form of a surjection with kernel equal to the radical, so coordinates are
/// canonical.
QuotientLattice quotient_lattice(const SkewLattice& lattice);

/// Rational rank of the span of the selected class_map vectors.
std::size_t sublattice_rank(const QuotientLattice& q, const std::vector<std::size_t>& subset);

/// Basis e_1, f_1, ..., e_n, f_n (quotient coordinates) with <e_i, f_i> = 1
/// and all other pairings zero. Throws DegenerateForm if the induced form is
/// not unimodular.
std::vector<IntVector> symplectic_basis(const QuotientLattice& q);
/// Same, for an arbitrary skew Gram matrix in its own coordinates.
std::vector<IntVector> symplectic_basis(const IntMatrix& skew_gram);

bool is_skew(const IntMatrix& m);

}  // namespace cubmon
