#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rpt/graph.hpp"
#include "rpt/ortho_rep.hpp"
#include "rpt/spirality.hpp"
#include "rpt/spq_tree.hpp"

namespace rpt {

using Rotation = std::vector<std::vector<int>>;  // clockwise incident edges per vertex

struct EmbeddingFaces {
  std::vector<std::vector<Dart>> walks;
  std::vector<int> face_of_dart;
};

struct OracleLimits {
  int max_n = 10;
  int max_m = 14;
  static OracleLimits from_env();  // ORTHOTEST_MAX_ORACLE_N overrides max_n
};

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

EmbeddingFaces embedding_faces(const Graph& g, const Rotation& rot);

// Calls f for every genus-0 rotation system (reflections included). f returns false to stop.
void enumerate_embeddings(const Graph& g, const std::function<bool(const Rotation&, const EmbeddingFaces&)>& f,
                          const OracleLimits& lim = OracleLimits::from_env());
long long count_embeddings(const Graph& g, const OracleLimits& lim = OracleLimits::from_env());

struct CornerConstraint {
  enum Where { External, Internal, Any } where = Any;
  int vertex = -1;
  uint8_t allowed = 0x1e;  // bit a set: angle a quarter turns allowed
};

OrthoRep rep_from_rotation(const Graph& g, const Rotation& rot);

std::optional<OrthoRep> zero_bend_feasible(const Graph& g, const Rotation& rot, int ext_face,
                                           const std::vector<CornerConstraint>& cons = {});

bool oracle_test(const Graph& g, const std::vector<CornerConstraint>& cons = {},
                 const OracleLimits& lim = OracleLimits::from_env());
std::optional<OrthoRep> oracle_witness(const Graph& g, const std::vector<CornerConstraint>& cons = {},
                                       const OracleLimits& lim = OracleLimits::from_env());

// Spirality set of the component at `node` in view rv, with the component taken in
// isolation: pendant stubs stand in for the outside edges at each pole, all stubs share
// one face whose turn sum is free, every other face is a +4 face.
SpiralitySet oracle_spirality_set(const SpqTree& t, const RootedView& rv, int node,
                                  const OracleLimits& lim = {13, 24});

}  // namespace rpt
