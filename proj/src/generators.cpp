#include "framekit/generators.hpp"

#include <Eigen/QR>

namespace framekit {

ShiftInstance shift_kframe(Eigen::Index d) {
  if (d < 2) throw InvalidSpec("shift_kframe: needs d >= 2");
  Matrix k = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i + 1 < d; ++i) k(i + 1, i) = 1.0;
  // frame members are the images of the standard basis: {e_2, ..., e_d, 0}
  return {k, FrameSequence(k)};
}

ProjectionPairInstance projection_pair(Eigen::Index d) {
  if (d < 4) throw InvalidSpec("projection_pair: needs d >= 4");
  Matrix p = Matrix::Zero(d, d);
  for (Eigen::Index i = 4; i <= d; i += 4) p(i - 1, i - 1) = 1.0;
  Matrix q = Matrix::Zero(d, d);
  for (Eigen::Index i = 1; i <= d; i += 2) q(i - 1, i - 1) = 1.0;
  SuperFramePair pair{FrameSequence(p), FrameSequence(q)};
  return {p, q, std::move(pair)};
}

SuperInstance interleaved_minimal(Eigen::Index m) {
  if (m < 1) throw InvalidSpec("interleaved_minimal: needs m >= 1");
  const Eigen::Index d = 2 * m;  // = M
  Matrix left = Matrix::Zero(d, d);
  Matrix right = Matrix::Zero(d, d);
  for (Eigen::Index n = 1; n <= d; ++n) {
    if (n % 2 == 0)
      left(n - 1, n - 1) = 1.0;  // x_n = e_n at even n
    else
      right(n - 1, n - 1) = 1.0;  // y_n = f_n at odd n
  }
  Matrix k = Matrix::Zero(d, d);
  Matrix l = Matrix::Zero(d, d);
  for (Eigen::Index n = 1; n <= m; ++n) {
    k(2 * n - 1, n - 1) = 1.0;  // K e_n = e_{2n}
    l(2 * n - 2, n - 1) = 1.0;  // L f_n = f_{2n-1}
  }
  return {k, l, SuperFramePair(FrameSequence(left), FrameSequence(right))};
}

SuperInstance nonminimal_counterexample(Eigen::Index m) {
  if (m < 1) throw InvalidSpec("nonminimal_counterexample: needs m >= 1");
  const Eigen::Index d = 2 * m;
  Matrix left = Matrix::Zero(d, m);
  Matrix right = Matrix::Zero(d, m);
  for (Eigen::Index n = 1; n <= m; ++n) {
    left(2 * n - 1, n - 1) = 1.0;   // x_n = e_{2n}
    right(2 * n - 2, n - 1) = 1.0;  // y_n = f_{2n-1}
  }
  Matrix k = Matrix::Zero(d, d);
  Matrix l = Matrix::Zero(d, d);
  for (Eigen::Index n = 1; n <= m; ++n) {
    k(2 * n - 1, n - 1) = 1.0;
    l(2 * n - 2, n - 1) = 1.0;
  }
  return {k, l, SuperFramePair(FrameSequence(left), FrameSequence(right))};
}

Matrix gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      out(i, j) = rng.next_complex_gaussian();
  return out;
}

Matrix random_unitary(Rng& rng, Eigen::Index d) {
  for (;;) {
    const Matrix g = gaussian_matrix(rng, d, d);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(d, d);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    bool ok = true;
    for (Eigen::Index j = 0; j < d; ++j) {
      const Complex rjj = r(j, j);
      if (std::abs(rjj) < 1e-12) {  // essentially never for Gaussian input
        ok = false;
        break;
      }
      q.col(j) *= rjj / std::abs(rjj);  // fix the phase ambiguity of QR
    }
    if (ok) return q;
  }
}

Matrix random_partial_isometry(Rng& rng, Eigen::Index d, Eigen::Index rank) {
  if (rank < 0 || rank > d)
    throw InvalidSpec("random_partial_isometry: rank out of range");
  if (rank == 0) return Matrix::Zero(d, d);
  const Matrix u = random_unitary(rng, d).leftCols(rank);
  const Matrix v = random_unitary(rng, d).leftCols(rank);
  return u * v.adjoint();
}

FrameSequence random_frame(Eigen::Index d, Eigen::Index count,
                           std::uint64_t seed) {
  Rng rng(seed);
  return random_frame(rng, d, count);
}

FrameSequence random_frame(Rng& rng, Eigen::Index d, Eigen::Index count) {
  if (d < 1 || count < 1) throw InvalidSpec("random_frame: needs d, M >= 1");
  for (int attempt = 0; attempt < 64; ++attempt) {
    FrameSequence f{gaussian_matrix(rng, d, count)};
    // spanning is almost sure once count >= d; below that the caller gets a
    // plain Gaussian sequence
    if (count < d || is_frame_kind(frame_bounds(f).kind)) return f;
  }
  throw InvalidSpec("random_frame: could not draw a spanning sample");
}

RandomKFrameInstance random_kframe(Eigen::Index d, Eigen::Index count,
                                   std::uint64_t seed) {
  if (d < 1 || count < d)
    throw InvalidSpec("random_kframe: needs M >= d >= 1");
  const FrameSequence base = random_frame(d, count, seed);
  Rng rng(derive_seed(seed, "random_kframe.operator", 0));
  const Matrix k = gaussian_matrix(rng, d, d);
  return {k, FrameSequence(Matrix(k * base.vectors))};
}

Instance make_instance(const GeneratorSpec& spec) {
  Instance inst;
  switch (spec.kind) {
    case InstanceKind::Shift: {
      auto s = shift_kframe(spec.d1);
      inst.operators["K"] = s.k;
      inst.frames["F"] = s.f;
      break;
    }
    case InstanceKind::ProjectionPair: {
      auto s = projection_pair(spec.d1);
      inst.operators["P"] = s.p;
      inst.operators["Q"] = s.q;
      inst.frames["F1"] = s.pair.left;
      inst.frames["F2"] = s.pair.right;
      inst.pairs["pair"] = {"F1", "F2"};
      break;
    }
    case InstanceKind::Interleaved:
    case InstanceKind::NonMinimal: {
      auto s = spec.kind == InstanceKind::Interleaved
                   ? interleaved_minimal(spec.d1)
                   : nonminimal_counterexample(spec.d1);
      inst.operators["K"] = s.k;
      inst.operators["L"] = s.l;
      inst.frames["F1"] = s.pair.left;
      inst.frames["F2"] = s.pair.right;
      inst.pairs["pair"] = {"F1", "F2"};
      break;
    }
    case InstanceKind::RandomFrame: {
      inst.frames["F"] = random_frame(spec.d1, spec.count, spec.seed);
      break;
    }
    case InstanceKind::RandomKFrame: {
      auto s = random_kframe(spec.d1, spec.count, spec.seed);
      inst.operators["K"] = s.k;
      inst.frames["F"] = s.f;
      break;
    }
  }
  return inst;
}

}  // namespace framekit
