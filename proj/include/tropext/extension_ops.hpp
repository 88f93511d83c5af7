#ifndef TROPEXT_EXTENSION_OPS_HPP
#define TROPEXT_EXTENSION_OPS_HPP

#include "tropext/universal.hpp"

namespace tropext {

// Pullback of an extended structure along m: new_base -> s.base with
// m(new_basepoint) = s.basepoint. Object polyhedra become fiber products with
// m; structure and nat maps are composed through.
ExtendedStructure pullback_extension(const CurveType& c, const ExtendedStructure& s,
                                     const AffineMap& m, const Polyhedron& new_base,
                                     const QVec& new_basepoint);

// The unique classifying map of an extension into the universal one.
struct ClassifyingMap {
    AffineMap map;  // s.base ambient -> P_u's ambient (Q coordinates)
    ValidationReport certificate;  // pullback along map reproduces s
};

// Throws NOT_AN_EXTENSION when the determined map leaves P_u or the pullback
// certificate fails.
ClassifyingMap classify(const CurveType& c, const UniversalExtension& u,
                        const ExtendedStructure& s);

// Restriction of the universal extension to the face {rho_e = 0 : e in S}.
struct FaceRestriction {
    std::vector<std::string> smoothed_edges;
    Polyhedron face;  // P_u cap {rho_e = 0 : e in S}, canonical
    QVec witness;     // relative-interior point of the face
    CurveType contracted_curve;
    // Per original vertex: map from its contracted vertex's stratum ambient to
    // its own stratum ambient (identity for unmerged vertices).
    std::vector<AffineMap> vertex_transport;
    // Original vertex index -> contracted vertex index.
    std::vector<std::size_t> vertex_class;
    // Original kept edge index -> contracted edge index (smoothed edges absent).
    std::vector<std::size_t> edge_map;
};

// Throws NEW_CYCLE, EMPTY_FACE, or NO_INTERIOR_WITNESS.
FaceRestriction face_restrict(const UniversalExtension& u, const CurveType& c,
                              const std::vector<std::string>& smoothed);

// Verifies that build_Pu of the contracted curve is carried isomorphically
// onto the face by the scaffold embedding Q' -> Q.
ValidationReport check_open_universality(const UniversalExtension& u, const CurveType& c,
                                         const std::vector<std::string>& smoothed);

}  // namespace tropext

#endif
