#pragma once

// Manin white and black products, replication and dendriform splitting.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadop/operad.hpp"

namespace quadop {

enum class ProductKind { White, Black, Di, Tri, SplitPre, SplitPost };

std::string to_string(ProductKind kind);

/// How a derived operad was produced; `dictionary` maps result generator names to their origin.
struct ProductRecipe {
  ProductKind kind;
  std::vector<std::string> operands;
  std::map<std::string, std::string> dictionary;
};

/// Generators V ⊗ W named "g*h" (index i·e + j); relations are the kernel of
/// F_{V⊗W}(3) → P(3) ⊗ Q(3), (σ,(i,p),(j,q)) ↦ proj_P(σ,i,j) ⊗ proj_Q(σ,p,q).
QuadOperad white_product(const QuadOperad& p, const QuadOperad& q);

/// dual(white(dual P, dual Q)) on k₋ ⊗ V ⊗ W, generators named "g•h".
QuadOperad black_product(const QuadOperad& p, const QuadOperad& q);

/// Black product as the image of R ⊗ S under the transpose of the interleave map.
QuadOperad black_direct(const QuadOperad& p, const QuadOperad& q);

enum class ReplicationMode { Di, Tri };
enum class SplitMode { Pre, Post };

/// di P = Perm ∘ P, tri P = ComTriAs ∘ P (white products).
QuadOperad replicate(const QuadOperad& p, ReplicationMode mode);

/// Dendriform (pre) or tridendriform (post) splitting of Q: generators succ_g, prec_g (, perp_g),
/// with (12)·succ_w = −prec_{(12)w} and (12)·perp_w = perp_{(12)w}.
QuadOperad split(const QuadOperad& q, SplitMode mode);

GeneratorSpace split_generators(const GeneratorSpace& w, SplitMode mode);

/// The split relations f_M before S₃-closure, one per (subset M, basis relation of Q).
std::vector<VectorQ> split_relation_images(const QuadOperad& q, SplitMode mode);

struct TensorCheck {
  bool pass = true;
  std::string failure;
  /// Index of the offending relation of Q and its nonzero image in P!(3) ⊗ B(3).
  std::optional<std::size_t> relation;
  std::optional<VectorQ> witness;
};

/// For every relation h of Q, h evaluated on (p₁⊗a₁, p₂⊗a₂, p₃⊗a₃) with the operations
/// (p⊗a) *_j (q⊗b) = Σᵢ (p ∘ⁱ q) ⊗ (a *_{i,j} b) must vanish in P!(3) ⊗ B(3).
/// B's generators are indexed by I × J (index i·|J| + j). Throws InputError on index mismatch.
TensorCheck verify_black_tensor(const QuadOperad& p, const QuadOperad& q, const QuadOperad& b);

}  // namespace quadop
