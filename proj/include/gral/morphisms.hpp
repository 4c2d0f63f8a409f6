#pragma once

// Graded homomorphisms between path algebras given on generators: the maps
// induced by graph morphisms, the Cohn-to-Leavitt isomorphism onto L(E(X)),
// and checks on finite chains of graph morphisms.

#include <optional>
#include <string>
#include <vector>

#include "gral/gradedstruct.hpp"
#include "gral/graph.hpp"
#include "gral/pathalg.hpp"

namespace gral {

struct AlgebraHom {
  SpecPtr source;
  SpecPtr target;
  std::vector<AlgebraElement> vertex_images;  // by source vertex id
  std::vector<AlgebraElement> edge_images;    // by source edge id
  std::vector<AlgebraElement> ghost_images;   // by source edge id
};

/// Checks degrees of the generator images and relations (i)-(v) of the
/// source presentation in the target. Throws RelationViolation.
void validate_relations(const AlgebraHom& h);

/// Builds and validates a homomorphism from generator images.
AlgebraHom make_hom(SpecPtr source, SpecPtr target, std::vector<AlgebraElement> vertices,
                    std::vector<AlgebraElement> edges, std::vector<AlgebraElement> ghosts);

/// v -> psi(v), f -> psi(f), f* -> psi(f)* between the relative Cohn algebras
/// of the source and target objects. Throws PreconditionViolation when the
/// graph morphism is invalid.
AlgebraHom induced_hom(const GraphMorphism& psi, const Ring& ring);
/// Same, over given algebras of the source and target objects.
AlgebraHom induced_hom(const GraphMorphism& psi, SpecPtr source, SpecPtr target);

/// The relative Cohn algebra of an object (Leavitt when x = Reg).
SpecPtr object_algebra(const GraphObject& obj, const Ring& ring);

AlgebraElement hom_apply(const AlgebraHom& h, const AlgebraElement& x);

/// g after f; g.source must be the same algebra handle as f.target.
AlgebraHom hom_compose(const AlgebraHom& g, const AlgebraHom& f);

/// Name of the first generator on which the homs differ, if any.
std::optional<std::string> first_difference(const AlgebraHom& a, const AlgebraHom& b);

/// phi : C^X(E) -> L(E(X)) with v -> v + v' and f -> f + f' on the
/// duplicated part.
AlgebraHom cohn_to_leavitt(const SpecPtr& cohn);

struct DegreeRank {
  int degree = 0;
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
};

struct IsoVerdict {
  Verdict verdict = Verdict::HoldsExactly;
  std::vector<DegreeRank> ranks;
  std::size_t source_total = 0;
  std::size_t target_total = 0;
  std::string detail;

  std::string format() const;
};

/// Per degree: every target spanning monomial must have a preimage among
/// source combinations (searched one length further than size_bound) and the
/// images of the source spanning monomials must be independent. Exact when
/// both graphs are acyclic and size_bound covers their longest paths.
IsoVerdict verify_graded_iso(const AlgebraHom& h, std::size_t degree_bound = 3, std::size_t size_bound = 3,
                             std::size_t cap = default_search_cap());

/// objects[i] -> objects[i+1] via maps[i].
struct GraphChain {
  std::vector<GraphObject> objects;
  std::vector<GraphMorphism> maps;
};

struct ChainVerdict {
  bool commutes = true;
  std::size_t checked = 0;  // number of generator equalities compared
  std::string detail;
};

/// Functoriality of the induced homs on all composites, and commutation of
/// the cocone into the last algebra. A supplied cocone (one hom per object
/// into a common target) is checked instead of the induced one.
ChainVerdict chain_colimit_check(const GraphChain& chain, const Ring& ring,
                                 const std::optional<std::vector<AlgebraHom>>& cocone = std::nullopt);

}  // namespace gral
