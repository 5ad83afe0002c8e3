#include "homalt/super.hpp"

#include <set>

#include "homalt/errors.hpp"

namespace homalt {

SuperSpace::SuperSpace(std::size_t even_dim, std::size_t odd_dim,
                       std::vector<std::string> basis_names)
    : even_dim_(even_dim), odd_dim_(odd_dim), names_(std::move(basis_names)) {
  if (names_.empty()) {
    names_.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) names_.push_back("e" + std::to_string(i));
  }
  if (names_.size() != dim()) throw SchemaError("basis name count does not match dimension");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw SchemaError("basis names must be pairwise distinct");
}

int SuperSpace::degree(std::size_t i) const {
  if (i >= dim()) throw IndexOutOfRange("basis index out of range");
  return i < even_dim_ ? 0 : 1;
}

GradedMap::GradedMap(SuperSpace space, Matrix matrix, int degree)
    : space_(std::move(space)), matrix_(std::move(matrix)), degree_(degree) {
  if (degree_ != 0 && degree_ != 1) throw GradingError("map degree must be 0 or 1");
  if (matrix_.rows() != space_.dim() || matrix_.cols() != space_.dim())
    throw DimensionMismatch("map matrix does not match space dimension");
  for (std::size_t i = 0; i < space_.dim(); ++i) {
    for (std::size_t j = 0; j < space_.dim(); ++j) {
      if (matrix_(i, j) == 0) continue;
      int shift = (space_.degree(i) + space_.degree(j)) % 2;
      if (shift != degree_) {
        throw GradingError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") violates the declared map degree");
      }
    }
  }
}

GradedMap GradedMap::identity(const SuperSpace& space) {
  return GradedMap(space, Matrix::identity(space.dim()), 0);
}

GradedMap GradedMap::zero(const SuperSpace& space, int degree) {
  return GradedMap(space, Matrix(space.dim(), space.dim()), degree);
}

bool GradedMap::is_identity() const {
  return degree_ == 0 && matrix_ == Matrix::identity(space_.dim());
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (!(f.space() == g.space())) throw DimensionMismatch("composition requires the same space");
  return GradedMap(f.space(), f.matrix() * g.matrix(), (f.degree() + g.degree()) % 2);
}

GradedMap invert(const GradedMap& m) {
  return GradedMap(m.space(), inverse(m.matrix()), m.degree());
}

GradedMap power(const GradedMap& m, unsigned n) {
  GradedMap acc = GradedMap::identity(m.space());
  for (unsigned i = 0; i < n; ++i) acc = compose(m, acc);
  return acc;
}

GradedMap add(const GradedMap& f, const GradedMap& g) {
  if (!(f.space() == g.space()) || f.degree() != g.degree())
    throw DimensionMismatch("map sum requires equal spaces and degrees");
  return GradedMap(f.space(), f.matrix() + g.matrix(), f.degree());
}

GradedMap sub(const GradedMap& f, const GradedMap& g) {
  if (!(f.space() == g.space()) || f.degree() != g.degree())
    throw DimensionMismatch("map difference requires equal spaces and degrees");
  return GradedMap(f.space(), f.matrix() - g.matrix(), f.degree());
}

}  // namespace homalt
