#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polycert/newton_diagram.hpp"
#include "polycert/rational.hpp"

namespace polycert {

/// Integer supporting functional for a relative face:
///   normal . w == offset       for w in the face,
///   normal . w <= offset - 1   for the other parent points.
struct FaceWitness {
    std::vector<Integer> normal;
    Integer offset;

    friend bool operator==(const FaceWitness&, const FaceWitness&) = default;
};

struct RelativeFace {
    NewtonDiagram parent;
    std::vector<MultiIndex> points;  // canonical order
    std::optional<FaceWitness> witness;
    /// Set for faces F_J of a full dilated simplex: the (0-based)
    /// coordinates J that vanish on the face.
    std::optional<std::vector<std::size_t>> zero_coordinates;

    bool is_empty() const noexcept { return points.empty(); }
    bool is_improper() const noexcept { return points.size() == parent.size(); }
};

/// Exact integer re-check of a witness against a parent set and face.
bool verify_face_witness(const NewtonDiagram& parent, const std::vector<MultiIndex>& face,
                         const FaceWitness& witness);

struct FaceTest {
    bool is_face = false;
    std::optional<FaceWitness> witness;
};

/// Decides whether `subset` is K ∩ S for a face K of conv(S) by an exact
/// LP that maximizes the separation gap. ∅ and S are faces.
/// Throws PreconditionError if subset is not contained in S.
FaceTest is_relative_face(const NewtonDiagram& parent, const std::vector<MultiIndex>& subset);

struct FaceEnumerationBudget {
    std::size_t max_points = 20;
};

/// All distinct relative faces of S including ∅ and S, each with a
/// witness, ordered by size then canonical point order. Candidates are the
/// affine closures aff(T) ∩ S of small subsets T; each is settled by LP.
/// Throws ResourceError if |S| exceeds the budget.
std::vector<RelativeFace> enumerate_relative_faces(const NewtonDiagram& parent,
                                                   const FaceEnumerationBudget& budget = {});

/// Closed-form faces F_J = {w in (Z_+^n)_d : w_J = 0} of the full dilated
/// simplex, one per J ⊆ [n] in bitmask order (J = ∅ first). Witness is
/// normal = -1_J, offset = 0.
std::vector<RelativeFace> simplex_faces(std::size_t nvars, Exponent degree);

/// Affine dimension of a point set (-1 for the empty set).
int affine_dimension(const std::vector<MultiIndex>& points);

}  // namespace polycert
