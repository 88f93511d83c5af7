#include "tropext/affine_map.hpp"

namespace tropext {

AffineMap::AffineMap(QMat lin, QVec tr)
    : source_dim(lin.cols), target_dim(lin.rows), linear(std::move(lin)), translate(std::move(tr)) {
    if (translate.size() != target_dim) throw KernelError("DIMENSION_MISMATCH", "AffineMap");
}

AffineMap AffineMap::identity(std::size_t n) { return AffineMap(QMat::identity(n), QVec(n)); }

AffineMap AffineMap::constant(std::size_t source_dim, QVec value) {
    QMat lin(value.size(), source_dim);
    return AffineMap(std::move(lin), std::move(value));
}

AffineMap AffineMap::coordinate_projection(std::size_t source_dim, std::size_t offset,
                                           std::size_t count) {
    if (offset + count > source_dim) throw KernelError("DIMENSION_MISMATCH", "projection");
    QMat lin(count, source_dim);
    for (std::size_t i = 0; i < count; ++i) lin.at(i, offset + i) = 1;
    return AffineMap(std::move(lin), QVec(count));
}

AffineMap AffineMap::coordinate_embedding(std::size_t target_dim, std::size_t offset,
                                          std::size_t count, QVec base) {
    if (offset + count > target_dim || base.size() != target_dim)
        throw KernelError("DIMENSION_MISMATCH", "embedding");
    QMat lin(target_dim, count);
    for (std::size_t i = 0; i < count; ++i) {
        lin.at(offset + i, i) = 1;
        base[offset + i] = 0;
    }
    return AffineMap(std::move(lin), std::move(base));
}

QVec AffineMap::apply(const QVec& x) const {
    if (x.size() != source_dim) throw KernelError("DIMENSION_MISMATCH", "AffineMap::apply");
    return vec_add(mat_vec(linear, x), translate);
}

AffineMap compose(const AffineMap& b, const AffineMap& a) {
    if (a.target_dim != b.source_dim) throw KernelError("DIMENSION_MISMATCH", "compose");
    return AffineMap(mat_mul(b.linear, a.linear), b.apply(a.translate));
}

AffineMap direct_sum(const AffineMap& a, const AffineMap& b) {
    QMat lin(a.target_dim + b.target_dim, a.source_dim + b.source_dim);
    for (std::size_t i = 0; i < a.target_dim; ++i)
        for (std::size_t j = 0; j < a.source_dim; ++j) lin.at(i, j) = a.linear.at(i, j);
    for (std::size_t i = 0; i < b.target_dim; ++i)
        for (std::size_t j = 0; j < b.source_dim; ++j)
            lin.at(a.target_dim + i, a.source_dim + j) = b.linear.at(i, j);
    QVec tr = a.translate;
    tr.insert(tr.end(), b.translate.begin(), b.translate.end());
    return AffineMap(std::move(lin), std::move(tr));
}

AffineMap pair(const AffineMap& a, const AffineMap& b) {
    if (a.source_dim != b.source_dim) throw KernelError("DIMENSION_MISMATCH", "pair");
    QMat lin(a.target_dim + b.target_dim, a.source_dim);
    for (std::size_t i = 0; i < a.target_dim; ++i)
        for (std::size_t j = 0; j < a.source_dim; ++j) lin.at(i, j) = a.linear.at(i, j);
    for (std::size_t i = 0; i < b.target_dim; ++i)
        for (std::size_t j = 0; j < b.source_dim; ++j)
            lin.at(a.target_dim + i, j) = b.linear.at(i, j);
    QVec tr = a.translate;
    tr.insert(tr.end(), b.translate.begin(), b.translate.end());
    return AffineMap(std::move(lin), std::move(tr));
}

AffineMap map_add(const AffineMap& a, const AffineMap& b) {
    if (a.source_dim != b.source_dim || a.target_dim != b.target_dim)
        throw KernelError("DIMENSION_MISMATCH", "map_add");
    QMat lin(a.target_dim, a.source_dim);
    for (std::size_t k = 0; k < lin.a.size(); ++k) lin.a[k] = a.linear.a[k] + b.linear.a[k];
    return AffineMap(std::move(lin), vec_add(a.translate, b.translate));
}

}  // namespace tropext
