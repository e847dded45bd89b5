#include "lieidx/structure_matrix.hpp"

namespace lieidx {

StructureMatrix::StructureMatrix(const StructureConstants& alg)
    : dim_(alg.dim()),
      rows_(alg.dim(), std::vector<LinearForm>(alg.dim())) {
  for (const auto& [i, j, s, c] : alg.entries()) {
    rows_[i - 1][j - 1].add(s, c);
    rows_[j - 1][i - 1].add(s, -c);
  }
}

QMatrix StructureMatrix::evaluated_at(const std::vector<Rational>& p) const {
  if (static_cast<int>(p.size()) != dim_)
    throw DomainError("functional dimension does not match the algebra");
  QMatrix m(dim_, QVector(dim_, Rational(0)));
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      Rational v = rows_[i][j].eval(p);
      m[i][j] = v;
      m[j][i] = -v;
    }
  return m;
}

std::vector<std::vector<Polynomial>> StructureMatrix::to_polynomials() const {
  std::vector<std::vector<Polynomial>> m(dim_,
                                         std::vector<Polynomial>(dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m[i][j] = rows_[i][j].to_polynomial();
  return m;
}

StructureMatrix structure_matrix(const StructureConstants& alg) {
  return StructureMatrix(alg);
}

}  // namespace lieidx
