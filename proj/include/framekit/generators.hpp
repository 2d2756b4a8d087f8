#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "framekit/rng.hpp"
#include "framekit/superframe.hpp"

// Deterministic instance generators: the worked examples of the theory at
// parametric sizes, plus seeded random families.  Same arguments => identical
// output, bit for bit.

namespace framekit {

enum class InstanceKind {
  Shift,            // truncated shift operator with its canonical K-frame
  ProjectionPair,   // disjoint pair from two coordinate projections
  Interleaved,      // minimal super K(+)L-frame on interleaved supports
  NonMinimal,       // counterexample: minimal component forces failure
  RandomFrame,      // Gaussian frame for C^d
  RandomKFrame,     // image of a Gaussian frame under a Gaussian K
};

struct GeneratorSpec {
  InstanceKind kind = InstanceKind::RandomFrame;
  Eigen::Index d1 = 2;                 // d for single-space kinds, m for super kinds
  std::optional<Eigen::Index> d2;      // unused by current kinds (split is derived)
  Eigen::Index count = 4;              // M for random kinds
  std::uint64_t seed = 0;
};

struct ShiftInstance {
  Matrix k;         // e_i -> e_{i+1}, last basis vector -> 0
  FrameSequence f;  // {K e_1, ..., K e_d} = {e_2, ..., e_d, 0}
};
// Requires d >= 2 (InvalidSpec otherwise).  f is a Parseval K-frame that is
// not a frame.
ShiftInstance shift_kframe(Eigen::Index d);

struct ProjectionPairInstance {
  Matrix p;           // projection onto span{e_{4n}}
  Matrix q;           // projection onto span{e_{2n-1}}
  SuperFramePair pair;  // ({P e_n}, {Q e_n}), n = 1..d
};
// Requires d >= 4.  Components are P-/Q-frames with orthogonal analysis
// ranges, so the combined sequence is a (P(+)Q)-frame.
ProjectionPairInstance projection_pair(Eigen::Index d);

struct SuperInstance {
  Matrix k;
  Matrix l;
  SuperFramePair pair;
};
// d1 = d2 = M = 2m; x_n alternates 0 / e_n, y_n alternates f_n / 0;
// K e_n = e_{2n} (n <= m, else 0), L f_n = f_{2n-1} (n <= m, else 0).
// Combined sequence is a minimal (K(+)L)-frame.  Requires m >= 1.
SuperInstance interleaved_minimal(Eigen::Index m);
// d1 = d2 = 2m, M = m; x_n = e_{2n}, y_n = f_{2n-1}, same K, L.  The left
// component is a K-minimal K-frame and L != 0, so the combined sequence is
// NOT a (K(+)L)-frame.  Requires m >= 1.
SuperInstance nonminimal_counterexample(Eigen::Index m);

// Gaussian d x M frame (entries with independent standard-normal real and
// imaginary parts).  Requires d >= 1, M >= 1.
FrameSequence random_frame(Eigen::Index d, Eigen::Index count,
                           std::uint64_t seed);
// Same drawing continued from an existing stream.
FrameSequence random_frame(Rng& rng, Eigen::Index d, Eigen::Index count);

struct RandomKFrameInstance {
  Matrix k;
  FrameSequence f;  // {K x_n} for a Gaussian frame {x_n}
};
// Requires d >= 1, M >= d (so the base sequence is a frame almost surely; the
// generator verifies and re-draws on the measure-zero failure).
RandomKFrameInstance random_kframe(Eigen::Index d, Eigen::Index count,
                                   std::uint64_t seed);

// Random matrix helpers shared by the property suite and the tests.
Matrix gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);
// Unitary factor of a Gaussian matrix (Householder QR with the phase fixed so
// the result is a deterministic function of the rng stream).
Matrix random_unitary(Rng& rng, Eigen::Index d);
// Partial isometry of the given rank r <= d: maps one orthonormal r-set onto
// another, vanishes on the complement.
Matrix random_partial_isometry(Rng& rng, Eigen::Index d, Eigen::Index rank);

// Named-object bag mirroring the instance-file schema; conventional names per
// kind are documented with the CLI (`K`, `L`, `F`, `F1`, `F2`, `pair`).
struct Instance {
  std::map<std::string, Matrix> operators;
  std::map<std::string, FrameSequence> frames;
  std::map<std::string, std::pair<std::string, std::string>> pairs;
  std::optional<ToleranceConfig> tolerance;
};

Instance make_instance(const GeneratorSpec& spec);

}  // namespace framekit
