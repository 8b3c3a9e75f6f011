#pragma once

#include <random>
#include <vector>

#include "supint/classification.hpp"
#include "supint/pluecker.hpp"

namespace supint {

struct FamilyOptions {
  /// Numerators are drawn from [-max_num, max_num], denominators from [1, max_den].
  int max_num = 9;
  int max_den = 4;
  /// Draw Gaussian-rational parameters instead of rational ones.
  bool gaussian = false;
};

/// Classes with a parametrization: (1,1,1), (0,1,0), (11,0,1), (0,11,0), (11,0,0) and conjugates.
const std::vector<ClassLabel>& family_labels();
bool has_family(const ClassLabel& label);

/// A point of the parametrized family with random nonzero parameters satisfying
/// the side conditions. Throws std::invalid_argument for labels without a family.
PlueckerPoint sample_family(const ClassLabel& label, std::mt19937_64& rng, const FamilyOptions& opt = {});

/// `count` seeded samples.
std::vector<PlueckerPoint> enumerate_family(const ClassLabel& label, int count, unsigned long seed,
                                            const FamilyOptions& opt = {});

/// Adds a random nonzero amount to one D coefficient. The result may or may not stay on the variety.
PlueckerPoint perturb(const PlueckerPoint& p, std::mt19937_64& rng);

}  // namespace supint
