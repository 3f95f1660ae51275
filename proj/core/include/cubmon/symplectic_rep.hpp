#pragma once

// Homological monodromy: each vertex of the Artin graph acts on the quotient
// lattice by the Picard-Lefschetz transvection in its vanishing class. This
// layer checks the Artin, triangle, conjugacy, quadratic-refinement and
// irreducibility properties of that action by exact matrix arithmetic.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubmon/artin_graph.hpp"
#include "cubmon/milnor_lattice.hpp"

namespace cubmon {

/// Word in the standard generators, as vertex indices; the product is taken
/// left to right.
using GeneratorWord = std::vector<std::size_t>;

/// Integer matrix preserving a fixed skew form (M^T G M == G, checked on construction).
class SpMatrix {
 public:
  SpMatrix(IntMatrix entries, const IntMatrix& form, std::optional<GeneratorWord> provenance = std::nullopt);

  const IntMatrix& entries() const { return entries_; }
  const std::optional<GeneratorWord>& provenance() const { return provenance_; }

  friend bool operator==(const SpMatrix& a, const SpMatrix& b) { return a.entries_ == b.entries_; }

 private:
  IntMatrix entries_;
  std::optional<GeneratorWord> provenance_;
};

bool preserves_form(const IntMatrix& m, const IntMatrix& form);

/// The monodromy representation on a quotient lattice with a fixed sign
/// convention: T_v(x) = x + sign * <x, a_v> a_v.
class TransvectionRep {
 public:
  TransvectionRep(const QuotientLattice& q, int sign);

  const QuotientLattice& lattice() const { return *q_; }
  int sign() const { return sign_; }
  std::size_t generator_count() const { return q_->class_map.size(); }

  const SpMatrix& generator(std::size_t v) const { return gens_.at(v); }
  const IntMatrix& inverse(std::size_t v) const { return inverses_.at(v); }
  IntMatrix word(const GeneratorWord& w) const;
  IntMatrix word_inverse(const GeneratorWord& w) const;

 private:
  const QuotientLattice* q_;
  int sign_;
  std::vector<SpMatrix> gens_;
  std::vector<IntMatrix> inverses_;
};

/// x -> x + sign * <x, a> a in quotient coordinates.
SpMatrix transvection(const QuotientLattice& q, std::size_t vertex, int sign);

/// ABA == BAB when expect_braid, otherwise AB == BA.
bool verify_pair_relation(const SpMatrix& a, const SpMatrix& b, bool expect_braid);

struct TransvectionShape {
  std::size_t deviation_rank = 0;   // rank(T - I)
  bool square_zero = false;         // (T - I)^2 == 0
  std::size_t fixed_dimension = 0;  // dim ker(T - I)
  bool direction_primitive = false; // image of T - I spanned by a primitive vector
  bool direction_is_class = false;  // ... which is +-a_v
};

TransvectionShape transvection_shape(const TransvectionRep& rep, std::size_t vertex);

struct RelationFailure {
  std::vector<std::size_t> vertices;
  std::string relation;
};

struct RelationReport {
  int sign = 1;
  std::size_t pairs_checked = 0;
  std::size_t triangles_checked = 0;
  /// Triangles where the identity also holds for the reverse cyclic orientation.
  std::size_t triangles_both_orientations = 0;
  std::vector<RelationFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks every vertex pair (braid iff adjacent, commute otherwise) and, for
/// every triangle, the identity s_u s_v s_w s_u == s_v s_w s_u s_v in the
/// cyclic orientation where sign * <a_u,a_v><a_v,a_w><a_w,a_u> == -1.
RelationReport verify_all_relations(const TransvectionRep& rep, const ArtinGraph& g);

/// Orientation of a triangle for which the 4-letter identity is expected.
std::vector<std::size_t> oriented_triangle(const TransvectionRep& rep, std::size_t u, std::size_t v, std::size_t w);
bool triangle_identity_holds(const TransvectionRep& rep, std::size_t u, std::size_t v, std::size_t w);

struct ConjugacyWitness {
  std::size_t vertex;
  GeneratorWord word;  // word * T_root * word^{-1} == T_vertex
  bool verified = false;
};

/// One witness per vertex, from a breadth-first spanning tree rooted at
/// `root` (lexicographic tie-breaking). Throws InvalidInput if the graph is
/// disconnected.
std::vector<ConjugacyWitness> conjugacy_witnesses(const TransvectionRep& rep, const ArtinGraph& g,
                                                  std::size_t root = 0);

/// Quadratic refinement of the mod-2 intersection form on the quotient.
/// Vectors of F_2^rank are bit masks with coordinate i at bit i.
class QuadraticRefinement {
 public:
  std::size_t rank() const { return rank_; }
  int value(std::uint32_t x) const { return values_.at(x); }
  const std::vector<std::uint8_t>& values() const { return values_; }
  /// Vanishing classes used as the F_2 basis on which q was set to 1.
  const std::vector<std::size_t>& basis_vertices() const { return basis_; }

 private:
  friend QuadraticRefinement quadratic_refinement(const QuotientLattice& q);
  std::size_t rank_ = 0;
  std::vector<std::uint8_t> values_;
  std::vector<std::size_t> basis_;
};

std::uint32_t mod2_vector(std::span<const std::int64_t> v);
int mod2_pairing(const QuotientLattice& q, std::uint32_t x, std::uint32_t y);

/// Sets q = 1 on an F_2 basis of vanishing classes and extends by
/// q(x+y) = q(x) + q(y) + <x,y>. Throws ConstructionFailed if the classes do
/// not span, if some class then gets q = 0, or if rank exceeds 20.
QuadraticRefinement quadratic_refinement(const QuotientLattice& q);

/// q(x+y) == q(x) + q(y) + <x,y> on all pairs.
bool refinement_is_quadratic(const QuotientLattice& q, const QuadraticRefinement& qr);
/// Vertices whose transvection does not preserve q (empty when invariant).
std::vector<std::size_t> refinement_violations(const QuotientLattice& q, const QuadraticRefinement& qr);

/// Dimension of the smallest rational subspace containing the seeds and
/// invariant under every generator.
std::size_t invariant_span_closure(const TransvectionRep& rep, const std::vector<IntVector>& seeds);

struct ChainParity {
  bool nonzero = false;
  int parity = 0;
  IntVector sum;
};

/// s = a_1 + a_3 + a_5 + a_7 along the braid chain; reports s != 0 and the
/// parity of <a_(0111), s>. Requires k = 4.
ChainParity chain_parity_check(const QuotientLattice& q);

}  // namespace cubmon
