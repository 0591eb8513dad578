#include "quadop/locality.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>

namespace quadop {

namespace {

std::size_t perm_index(const PermS3& sigma) {
  const auto& perms = all_perms();
  return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), sigma) - perms.begin());
}

Rational binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

}  // namespace

LocalityInstance::LocalityInstance(QuadOperad p, int k_window) : p_(std::move(p)), k_(k_window) {
  if (k_ < 1) throw InputError("locality window K must be at least 1");
  const P3Projection proj = p3_projection(p_);
  p3_dim_ = proj.matrix.rows();
  const std::size_t d = p_.d();
  monomials_.resize(6 * d * d);
  for (std::size_t s = 0; s < 6; ++s) {
    const MatrixQ action = free3_action(p_.gens, all_perms()[s]);
    for (std::size_t outer = 0; outer < d; ++outer)
      for (std::size_t inner = 0; inner < d; ++inner)
        monomials_[(s * d + outer) * d + inner] =
            proj.matrix * action.column_vector(free3_index(0, outer, inner, d));
  }
}

std::size_t LocalityInstance::space_dim() const {
  const std::size_t w = 2 * static_cast<std::size_t>(k_) + 1;
  return p3_dim_ * w * w * w;
}

std::size_t LocalityInstance::coordinate(std::size_t basis, int ia, int ib, int ic) const {
  const std::size_t w = 2 * static_cast<std::size_t>(k_) + 1;
  return ((basis * w + static_cast<std::size_t>(ia + k_)) * w + static_cast<std::size_t>(ib + k_)) * w +
         static_cast<std::size_t>(ic + k_);
}

const VectorQ& LocalityInstance::monomial(const PermS3& sigma, std::size_t outer,
                                          std::size_t inner) const {
  const std::size_t d = p_.d();
  return monomials_[(perm_index(sigma) * d + outer) * d + inner];
}

void LocalityInstance::Echelon::reduce(SparseQ& v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows.find(it->first);
    if (row == rows.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Rational f = it->second;
    for (const auto& [c, x] : row->second) {
      auto [slot, inserted] = v.try_emplace(c, 0);
      slot->second -= f * x;
      if (c != col && sgn(slot->second) == 0) v.erase(slot);
    }
    v.erase(col);
    it = v.upper_bound(col);
  }
}

void LocalityInstance::Echelon::insert(SparseQ v) {
  ++generators;
  reduce(v);
  if (v.empty()) return;
  const Rational lead = v.begin()->second;
  for (auto& [c, x] : v) x /= lead;
  const std::size_t pivot = v.begin()->first;
  rows.emplace(pivot, std::move(v));
}

LocalityInstance::Echelon LocalityInstance::build_slice(int total) const {
  Echelon e;
  const std::size_t d = p_.d();
  if (p3_dim_ == 0) return e;
  // Unordered pairs {x, y} of variable labels with the third label z outside.
  const std::array<std::array<int, 3>, 3> arrangements{{{1, 2, 3}, {1, 3, 2}, {2, 3, 1}}};
  for (const auto& labels : arrangements) {
    const PermS3 sigma{{labels[0], labels[1], labels[2]}};
    for (int nx = -k_; nx <= k_; ++nx)
      for (int ny = -k_; ny <= k_; ++ny) {
        const int nz = total - nx - ny;
        if (std::abs(nz) > k_ || nx - 1 < -k_ || ny + 1 > k_) continue;
        auto index_of = [&](int x, int y, int label) {
          std::array<int, 3> idx{};
          idx[labels[0] - 1] = x;
          idx[labels[1] - 1] = y;
          idx[labels[2] - 1] = nz;
          return idx[label - 1];
        };
        for (std::size_t outer = 0; outer < d; ++outer)
          for (std::size_t inner = 0; inner < d; ++inner) {
            const VectorQ& mono = monomial(sigma, outer, inner);
            SparseQ g;
            for (std::size_t b = 0; b < p3_dim_; ++b) {
              if (sgn(mono[b]) == 0) continue;
              g[coordinate(b, index_of(nx, ny, 1), index_of(nx, ny, 2), index_of(nx, ny, 3))] += mono[b];
              g[coordinate(b, index_of(nx - 1, ny + 1, 1), index_of(nx - 1, ny + 1, 2),
                           index_of(nx - 1, ny + 1, 3))] -= mono[b];
            }
            std::erase_if(g, [](const auto& kv) { return sgn(kv.second) == 0; });
            e.insert(std::move(g));
          }
      }
  }
  return e;
}

const LocalityInstance::Echelon& LocalityInstance::slice(int total) const {
  {
    std::lock_guard lock(mutex_);
    auto it = slices_.find(total);
    if (it != slices_.end()) return *it->second;
  }
  auto built = std::make_shared<const Echelon>(build_slice(total));
  std::lock_guard lock(mutex_);
  return *slices_.try_emplace(total, std::move(built)).first->second;
}

std::size_t LocalityInstance::ideal_dim(int total) const { return slice(total).rows.size(); }

std::size_t LocalityInstance::ideal_dim() const {
  std::size_t out = 0;
  for (int t = -3 * k_; t <= 3 * k_; ++t) out += ideal_dim(t);
  return out;
}

std::size_t LocalityInstance::generator_count(int total) const { return slice(total).generators; }

bool LocalityInstance::contains(const SparseQ& v, int total) const {
  SparseQ w = v;
  std::erase_if(w, [](const auto& kv) { return sgn(kv.second) == 0; });
  slice(total).reduce(w);
  return w.empty();
}

LocalityInstance build_instance(const QuadOperad& p, int k_window) {
  return LocalityInstance(p, k_window);
}

namespace {

void check_window(const LocalityInstance& inst, const ResidueSpec& spec) {
  const int need = std::max({std::abs(spec.k), std::abs(spec.n - spec.n_order), std::abs(spec.n + spec.k),
                             std::abs(spec.m), std::abs(spec.m + spec.n_order)});
  if (need > inst.window())
    throw WindowError("residue indices leave the window [-" + std::to_string(inst.window()) + ", " +
                          std::to_string(inst.window()) + "]; requires K >= " + std::to_string(need),
                      need);
}

}  // namespace

SparseQ residue_vector(const LocalityInstance& inst, const ResidueSpec& spec) {
  if (spec.k < 0 || spec.n_order < 0) throw InputError("n-product order and N must be nonnegative");
  const std::size_t d = inst.operad().d();
  if (spec.inner >= d || spec.outer >= d) throw InputError("operation index out of range");
  check_window(inst, spec);
  const VectorQ& mono = inst.monomial(PermS3::identity(), spec.outer, spec.inner);
  SparseQ out;
  for (int t = 0; t <= spec.k; ++t)
    for (int s = 0; s <= spec.n_order; ++s) {
      Rational coef = binomial(spec.k, t) * binomial(spec.n_order, s);
      if ((t + s) % 2 == 1) coef = -coef;
      for (std::size_t b = 0; b < inst.p3_dim(); ++b)
        if (sgn(mono[b]) != 0)
          out[inst.coordinate(b, spec.k - t, spec.n - s + t, spec.m + s)] += coef * mono[b];
    }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

std::optional<int> min_locality_order(const LocalityInstance& inst, std::size_t inner, int k,
                                      std::size_t outer, int n_max, int n, int m) {
  check_window(inst, {inner, k, outer, n_max, n, m});
  for (int order = 0; order <= n_max; ++order) {
    const SparseQ r = residue_vector(inst, {inner, k, outer, order, n, m});
    if (inst.contains(r, k + n + m)) return order;
  }
  return std::nullopt;
}

bool LocalitySweep::all_local() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairOutcome& o) { return o.order.has_value(); });
}

bool LocalitySweep::any_local() const {
  return std::any_of(pairs.begin(), pairs.end(), [](const PairOutcome& o) { return o.order.has_value(); });
}

LocalitySweep locality_sweep(const LocalityInstance& inst, int n_max, int k, int n, int m) {
  const std::size_t d = inst.operad().d();
  LocalitySweep out{inst.operad().name, inst.window(), n_max, k, n, m, {}};
  check_window(inst, {0, k, 0, n_max, n, m});
  (void)inst.ideal_dim(k + n + m);
  std::vector<std::future<std::optional<int>>> jobs;
  for (std::size_t inner = 0; inner < d; ++inner)
    for (std::size_t outer = 0; outer < d; ++outer)
      jobs.push_back(std::async(std::launch::async, [&, inner, outer] {
        return min_locality_order(inst, inner, k, outer, n_max, n, m);
      }));
  std::size_t job = 0;
  for (std::size_t inner = 0; inner < d; ++inner)
    for (std::size_t outer = 0; outer < d; ++outer) out.pairs.push_back({inner, outer, jobs[job++].get()});
  return out;
}

}  // namespace quadop
