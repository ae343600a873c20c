#pragma once

#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "pearl/gate_model.hpp"

namespace pearl {

/// Shape of randomly generated encoders. Kinds are uniform over the four gate kinds,
/// qubit pairs uniform over distinct pairs in [1, n], degrees uniform in [-degree_max, degree_max].
struct RandomNecklaceParams {
  std::size_t min_strings = 1;
  std::size_t max_strings = 6;
  int min_frame = 2;
  int max_frame = 4;
  int degree_max = 2;
};

template <typename Rng>
PearlNecklace random_necklace(Rng& rng, const RandomNecklaceParams& params) {
  if (params.min_strings < 1 || params.min_strings > params.max_strings ||
      params.min_frame < 2 || params.min_frame > params.max_frame || params.degree_max < 0) {
    throw std::invalid_argument("invalid random necklace parameters");
  }
  std::uniform_int_distribution<std::size_t> count(params.min_strings, params.max_strings);
  std::uniform_int_distribution<int> width(params.min_frame, params.max_frame);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> degree(-params.degree_max, params.degree_max);

  const std::size_t n = count(rng);
  const int frame = width(rng);
  std::uniform_int_distribution<int> qubit(1, frame);
  std::uniform_int_distribution<int> other(1, frame - 1);

  std::vector<GateString> strings;
  strings.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const GateKind k = kAllKinds[kind(rng)];
    const int target = qubit(rng);
    if (is_two_qubit(k)) {
      int source = other(rng);
      if (source >= target) ++source;
      strings.push_back({k, source, target, degree(rng)});
    } else {
      strings.push_back({k, 0, target, 0});
    }
  }
  return PearlNecklace(frame, std::move(strings));
}

}  // namespace pearl
