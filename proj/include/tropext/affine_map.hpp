#ifndef TROPEXT_AFFINE_MAP_HPP
#define TROPEXT_AFFINE_MAP_HPP

#include "tropext/linalg.hpp"

namespace tropext {

// Integral affine map x -> linear * x + translate. The linear part must have
// integer entries; the translation may be any rational vector.
struct AffineMap {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    QMat linear;     // target_dim x source_dim, integer entries
    QVec translate;  // target_dim

    AffineMap() = default;
    AffineMap(QMat lin, QVec tr);

    static AffineMap identity(std::size_t n);
    static AffineMap constant(std::size_t source_dim, QVec value);
    // Projection selecting source coordinates [offset, offset+count).
    static AffineMap coordinate_projection(std::size_t source_dim, std::size_t offset,
                                           std::size_t count);
    // Embedding of R^count into coordinates [offset, offset+count) of R^target,
    // other coordinates set to the given base values.
    static AffineMap coordinate_embedding(std::size_t target_dim, std::size_t offset,
                                          std::size_t count, QVec base);

    QVec apply(const QVec& x) const;
    bool integral() const { return is_integral(linear); }

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// b after a: (b ∘ a)(x) = b(a(x)).
AffineMap compose(const AffineMap& b, const AffineMap& a);

// Block map (a x b): (x, y) -> (a(x), b(y)).
AffineMap direct_sum(const AffineMap& a, const AffineMap& b);

// Joint map x -> (a(x), b(x)); sources must agree.
AffineMap pair(const AffineMap& a, const AffineMap& b);

AffineMap map_add(const AffineMap& a, const AffineMap& b);

}  // namespace tropext

#endif
