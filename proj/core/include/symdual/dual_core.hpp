#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "symdual/boolean_poset.hpp"
#include "symdual/orbit_monomials.hpp"

namespace symdual {

// A pair (F, C): fixed columns ℓ_S on S ∈ F (∅ allowed, meaning zero columns)
// and free columns on the antichain C.
struct GenFamily {
  int c = 0;
  std::vector<std::pair<SubsetMask, std::int64_t>> fixed;  // sorted by mask bits
  Antichain antichain;

  std::int64_t fixed_total() const;
  bool operator==(const GenFamily&) const = default;
  bool operator<(const GenFamily& o) const;
};

std::int64_t k_of_antichain(const TypeVector& a, const Antichain& antichain);

bool in_dual_single(const TypeVector& a, const TypeVector& b, std::int64_t n,
                    const Limits& limits = {});
bool in_dual(const GeneratorSystem& g, const TypeVector& b, std::int64_t n, const Limits& limits = {});
bool divides_up_to_sym(const TypeVector& bp, const TypeVector& b, std::int64_t n);

// Precomputed per-generator ideal sums for repeated membership tests against one system.
class DualMembership {
 public:
  DualMembership(const GeneratorSystem& g, const Limits& limits = {});
  bool contains(const TypeVector& b, std::int64_t n) const;
  // True when b is in the dual and no single-variable removal stays in it.
  bool is_minimal(const TypeVector& b, std::int64_t n) const;
  const GeneratorSystem& system() const { return system_; }

 private:
  bool contains_dense(const std::vector<std::int64_t>& ell) const;
  GeneratorSystem system_;
  std::vector<std::uint64_t> ideals_;
  std::vector<std::vector<std::int64_t>> k_sums_;  // [generator][ideal]
};

struct OneOrbitClass {
  Antichain antichain;
  std::int64_t k_c = 0;
  std::vector<TypeVector> members;
};

std::vector<OneOrbitClass> one_orbit_classes(const TypeVector& a, std::int64_t n,
                                             const Limits& limits = {});
std::vector<TypeVector> one_orbit_min_gens(const TypeVector& a, std::int64_t n,
                                           const Limits& limits = {});

// All (F, C) pairs produced by the s-tuples of proper order ideals. Independent of n.
std::vector<GenFamily> generator_families(const GeneratorSystem& g, const Limits& limits = {});
// Members of G_{F,C}(n): free counts ≥ 0 on C summing to n − Σ_F ℓ.
std::vector<TypeVector> expand_family(const GenFamily& family, std::int64_t n);
std::vector<TypeVector> general_candidates(const GeneratorSystem& g, std::int64_t n,
                                           const Limits& limits = {});

enum class Pruning { SingleVariable, Pairwise };

std::vector<TypeVector> min_gens(const GeneratorSystem& g, std::int64_t n, const Limits& limits = {},
                                 Pruning pruning = Pruning::SingleVariable);
// Same result from precomputed families, for sweeps over n.
std::vector<TypeVector> min_gens_from_families(const DualMembership& membership,
                                               const std::vector<GenFamily>& families,
                                               std::int64_t n,
                                               Pruning pruning = Pruning::SingleVariable);

struct MinDegreeResult {
  std::int64_t degree = 0;
  std::vector<TypeVector> generators;
};
MinDegreeResult min_degree_gens(const GeneratorSystem& g, std::int64_t n, const Limits& limits = {});

}  // namespace symdual
