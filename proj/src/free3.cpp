#include "quadop/free3.hpp"

#include <set>

#include "quadop/errors.hpp"

namespace quadop {

GeneratorSpace::GeneratorSpace(std::vector<std::string> names, MatrixQ swap)
    : names_(std::move(names)), swap_(std::move(swap)) {
  const std::size_t d = names_.size();
  if (swap_.rows() != d || swap_.cols() != d)
    throw InputError("generator swap matrix must be " + std::to_string(d) + "x" +
                     std::to_string(d));
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InputError("empty generator name");
    if (n.find('}') != std::string::npos || n.find('{') != std::string::npos)
      throw InputError("generator name '" + n + "' may not contain braces");
    if (!seen.insert(n).second) throw InputError("duplicate generator name '" + n + "'");
  }
  if (!(swap_ * swap_ == MatrixQ::identity(d)))
    throw InputError("generator swap matrix is not an involution");
}

std::optional<std::size_t> GeneratorSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

GeneratorSpaceBuilder& GeneratorSpaceBuilder::add(const std::string& name, Symmetry s) {
  entries_.push_back({name, s == Symmetry::Symmetric ? 0 : 1});
  return *this;
}

GeneratorSpaceBuilder& GeneratorSpaceBuilder::add_pair(const std::string& name,
                                                       const std::string& opposite) {
  entries_.push_back({name, 2});
  entries_.push_back({opposite, 3});
  return *this;
}

GeneratorSpace GeneratorSpaceBuilder::build() const {
  const std::size_t d = entries_.size();
  MatrixQ swap(d, d);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) {
    names.push_back(entries_[i].name);
    switch (entries_[i].kind) {
      case 0: swap(i, i) = 1; break;
      case 1: swap(i, i) = -1; break;
      case 2: swap(i + 1, i) = 1; break;
      case 3: swap(i - 1, i) = 1; break;
    }
  }
  return GeneratorSpace(std::move(names), std::move(swap));
}

MatrixQ free3_action(const GeneratorSpace& v, const PermS3& pi) {
  const std::size_t d = v.dim();
  const auto& reps = coset_reps();
  MatrixQ m(free3_dim(d), free3_dim(d));
  for (int s = 0; s < 3; ++s) {
    auto [rep, tail] = coset_decompose(pi * reps[s]);
    const int target = coset_index(rep);
    const bool swapped = !(tail == PermS3::identity());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t col = free3_index(s, i, j, d);
        if (!swapped) {
          m(free3_index(target, i, j, d), col) = 1;
          continue;
        }
        // (12) acts through the inner factor only.
        for (std::size_t k = 0; k < d; ++k)
          if (sgn(v.swap()(k, j)) != 0) m(free3_index(target, i, k, d), col) = v.swap()(k, j);
      }
  }
  return m;
}

std::vector<MatrixQ> free3_actions(const GeneratorSpace& v) {
  std::vector<MatrixQ> out;
  for (const auto& pi : all_perms()) out.push_back(free3_action(v, pi));
  return out;
}

SubspaceQ s3_closure(const GeneratorSpace& v, const std::vector<VectorQ>& vectors) {
  const std::size_t n = free3_dim(v.dim());
  SubspaceQ current = SubspaceQ::span(vectors, n);
  const MatrixQ transposition = free3_action(v, PermS3::swap12());
  const MatrixQ cycle = free3_action(v, PermS3::cycle123());
  while (true) {
    MatrixQ gens(current.basis());
    for (std::size_t r = 0; r < current.dim(); ++r) {
      gens.append_row(transposition * current.basis().row(r));
      gens.append_row(cycle * current.basis().row(r));
    }
    SubspaceQ next = SubspaceQ::span(gens);
    if (next.dim() == current.dim()) return next;
    current = std::move(next);
  }
}

SubspaceQ s3_core(const GeneratorSpace& v, const SubspaceQ& w) {
  SubspaceQ core = w;
  for (const auto& pi : all_perms()) core = subspace_intersect(core, image(free3_action(v, pi), w));
  return core;
}

bool is_s3_stable(const GeneratorSpace& v, const SubspaceQ& w) {
  for (const auto& pi : {PermS3::swap12(), PermS3::cycle123()}) {
    const MatrixQ m = free3_action(v, pi);
    for (std::size_t r = 0; r < w.dim(); ++r)
      if (!w.contains(m * w.basis().row(r))) return false;
  }
  return true;
}

MatrixQ free3_induced(const MatrixQ& t) {
  const std::size_t d = t.rows();
  const MatrixQ block = kron(t, t);
  MatrixQ m(free3_dim(d), free3_dim(d));
  for (int s = 0; s < 3; ++s)
    for (std::size_t r = 0; r < d * d; ++r)
      for (std::size_t c = 0; c < d * d; ++c) m(s * d * d + r, s * d * d + c) = block(r, c);
  return m;
}

}  // namespace quadop
