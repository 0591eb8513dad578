#pragma once

// The Dong Property criterion (V∨ ⊗→ V∨) ∩ R⊥ = 0.

#include <string>
#include <vector>

#include "quadop/operad.hpp"

namespace quadop {

enum class Verdict { Dong, NotDong };

std::string to_string(Verdict v);

struct DongWitness {
  /// Coordinates in F_{V∨}(3), supported on the σ = id block.
  VectorQ vector;
  /// Relation-grammar text in the dual generator names (re-parses to `vector`).
  std::string text;
  /// Same element as a combination of (p {i} q) {j} t, with dictionary names where available.
  std::string pqt;
};

struct DongReport {
  std::string operad;
  Verdict verdict = Verdict::Dong;
  bool method_agreement = true;
  std::size_t kernel_dim = 0;
  std::vector<DongWitness> witnesses;
  OperadDims dims;
};

/// Decides the property twice (intersection with R⊥, rank of the images in P!(3)) and
/// throws InvariantError if the two methods disagree.
DongReport dong_verdict(const QuadOperad& p);

/// Reports in input order; entries are evaluated concurrently.
std::vector<DongReport> dong_table(const std::vector<QuadOperad>& operads);

/// Display names for the generators of V∨: the operad's dictionary read through duality.
GeneratorSpace dual_display_generators(const QuadOperad& p);

}  // namespace quadop
