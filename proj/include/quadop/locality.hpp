#pragma once

// Windowed formal-distribution calculus. The degree-3 multilinear component of the
// free P-algebra on a(n), b(n), c(n), |n| ≤ K, modulo the ideal generated by
// x(n)y(m) − x(n−1)y(m+1); residues of n-products are tested for ideal membership.
//
// Membership is a sound certificate; non-membership only holds inside the window.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "quadop/errors.hpp"
#include "quadop/operad.hpp"

namespace quadop {

class WindowError : public InputError {
 public:
  WindowError(const std::string& what, int required_k) : InputError(what), required_k(required_k) {}
  int required_k;
};

struct ResidueSpec {
  std::size_t inner = 0;  // i: operation of the n-product a ∘ᵢ₍ₖ₎ b
  int k = 0;              // n-product order
  std::size_t outer = 0;  // j: operation applied with c
  int n_order = 0;        // N: candidate locality order
  int n = 0;
  int m = 0;
};

/// Sparse vector keyed by degree-3 coordinate index.
using SparseQ = std::map<std::size_t, Rational>;

class LocalityInstance {
 public:
  /// Requires K ≥ 1.
  LocalityInstance(QuadOperad p, int k_window);

  const QuadOperad& operad() const { return p_; }
  int window() const { return k_; }
  std::size_t p3_dim() const { return p3_dim_; }
  std::size_t space_dim() const;

  /// Coordinate of (P(3) basis element, a-index, b-index, c-index).
  std::size_t coordinate(std::size_t basis, int ia, int ib, int ic) const;

  /// Image in P(3) coordinates of (x_{σ1} ∘_inner x_{σ2}) ∘_outer x_{σ3}.
  const VectorQ& monomial(const PermS3& sigma, std::size_t outer, std::size_t inner) const;

  /// Dimension of the ideal inside the slice of total index ia+ib+ic = total.
  std::size_t ideal_dim(int total) const;
  std::size_t ideal_dim() const;

  /// Number of ideal generators whose two terms both fit in the window.
  std::size_t generator_count(int total) const;

  bool contains(const SparseQ& v, int total) const;

 private:
  struct Echelon {
    std::map<std::size_t, SparseQ> rows;  // keyed by pivot column; pivot entry is 1
    std::size_t generators = 0;
    void reduce(SparseQ& v) const;
    void insert(SparseQ v);
  };

  const Echelon& slice(int total) const;
  Echelon build_slice(int total) const;

  QuadOperad p_;
  int k_;
  std::size_t p3_dim_ = 0;
  std::vector<VectorQ> monomials_;  // [perm index][outer][inner]
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const Echelon>> slices_;
};

LocalityInstance build_instance(const QuadOperad& p, int k_window);

/// Σ_{t,s} (−1)^{t+s} C(k,t) C(N,s) (a(k−t) ∘ᵢ b(n−s+t)) ∘ⱼ c(m+s). Throws WindowError.
SparseQ residue_vector(const LocalityInstance& inst, const ResidueSpec& spec);

/// Smallest N ≤ n_max whose residue lies in the ideal. Throws WindowError.
std::optional<int> min_locality_order(const LocalityInstance& inst, std::size_t inner, int k,
                                      std::size_t outer, int n_max, int n = 0, int m = 0);

struct PairOutcome {
  std::size_t inner;
  std::size_t outer;
  std::optional<int> order;
};

struct LocalitySweep {
  std::string operad;
  int window;
  int n_max;
  int k;
  int n;
  int m;
  std::vector<PairOutcome> pairs;  // ordered by (inner, outer)

  bool all_local() const;
  bool any_local() const;
};

/// All d² operation pairs; pairs are evaluated concurrently.
LocalitySweep locality_sweep(const LocalityInstance& inst, int n_max, int k = 0, int n = 0, int m = 0);

}  // namespace quadop
