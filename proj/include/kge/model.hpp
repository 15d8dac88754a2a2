#pragma once

#include "kge/common.hpp"
#include "kge/vocab.hpp"

#include <random>
#include <string>
#include <vector>

namespace kge {

enum class ModelKind { cp, complex_mul, rescal };

inline const char* model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::cp: return "cp";
    case ModelKind::complex_mul: return "complex";
    default: return "rescal";
  }
}

inline ModelKind model_kind_from_name(const std::string& name) {
  if (name == "cp" || name == "CP") return ModelKind::cp;
  if (name == "complex" || name == "ComplEx") return ModelKind::complex_mul;
  if (name == "rescal" || name == "RESCAL") return ModelKind::rescal;
  throw config_error("unknown model kind '" + name + "' (expected cp|complex|rescal)");
}

/// Embedding storage for one model.
///
/// Table layout by kind:
///   CP:      [0] entity_head |E|xD, [1] entity_tail |E|xD, [2] relation |R|xD
///   ComplEx: [0] entity |E|xD,      [1] relation |R|xD
///   RESCAL:  [0] entity |E|xD,      [1] relation |R|x(D*D), each row a row-major DxD matrix
///
/// ComplEx rows are half-split complex vectors: entries [0, D/2) are real parts,
/// [D/2, D) imaginary parts of D/2 complex coordinates.
struct ModelParams {
  ModelKind kind = ModelKind::cp;
  int dim = 0;
  int n_entities = 0;
  int n_relations = 0;  // total, after reciprocal augmentation
  std::vector<Matrix> tables;

  int head_table_index() const { return 0; }
  int tail_table_index() const { return kind == ModelKind::cp ? 1 : 0; }
  int relation_table_index() const { return kind == ModelKind::cp ? 2 : 1; }

  Matrix& head_table() { return tables[head_table_index()]; }
  const Matrix& head_table() const { return tables[head_table_index()]; }
  Matrix& tail_table() { return tables[tail_table_index()]; }
  const Matrix& tail_table() const { return tables[tail_table_index()]; }
  Matrix& relation_table() { return tables[relation_table_index()]; }
  const Matrix& relation_table() const { return tables[relation_table_index()]; }

  /// RESCAL only: the DxD matrix of relation r as a map over its table row.
  Eigen::Map<const Matrix> relation_matrix(int r) const {
    return Eigen::Map<const Matrix>(relation_table().row(r).data(), dim, dim);
  }
  Eigen::Map<Matrix> relation_matrix(int r) {
    return Eigen::Map<Matrix>(relation_table().row(r).data(), dim, dim);
  }

  void check_entity(int e) const {
    if (e < 0 || e >= n_entities) throw contract_error("entity index out of bounds: " + std::to_string(e));
  }
  void check_relation(int r) const {
    if (r < 0 || r >= n_relations) throw contract_error("relation index out of bounds: " + std::to_string(r));
  }
};

/// Draws all entries i.i.d. N(0, init_scale^2); deterministic under a fixed seed.
inline ModelParams init_params(ModelKind kind, const Vocab& vocab, int dim, double init_scale,
                               uint64_t seed) {
  if (dim <= 0) throw config_error("embedding dimension must be positive");
  if (kind == ModelKind::complex_mul && dim % 2 != 0)
    throw config_error("complex model requires an even embedding dimension");

  ModelParams p;
  p.kind = kind;
  p.dim = dim;
  p.n_entities = vocab.n_entities();
  p.n_relations = vocab.n_relations_total();

  switch (kind) {
    case ModelKind::cp:
      p.tables = {Matrix(p.n_entities, dim), Matrix(p.n_entities, dim), Matrix(p.n_relations, dim)};
      break;
    case ModelKind::complex_mul:
      p.tables = {Matrix(p.n_entities, dim), Matrix(p.n_relations, dim)};
      break;
    case ModelKind::rescal:
      p.tables = {Matrix(p.n_entities, dim), Matrix(p.n_relations, dim * dim)};
      break;
  }

  if (init_scale == 0.0) {
    for (Matrix& t : p.tables) t.setZero();
    return p;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, init_scale);
  for (Matrix& t : p.tables) {
    double* data = t.data();
    for (Eigen::Index i = 0; i < t.size(); ++i) data[i] = gauss(rng);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Scoring
// ---------------------------------------------------------------------------

/// The transformed query vector q(h, r) with scores(k) = <tail_table row k, q>:
/// h o r for CP, h conj(R_r) for ComplEx, h R_r for RESCAL.
inline Vector head_transform(const ModelParams& p, int h, int r) {
  p.check_entity(h);
  p.check_relation(r);
  const int d = p.dim;
  Vector q(d);
  switch (p.kind) {
    case ModelKind::cp:
      q = (p.head_table().row(h).array() * p.relation_table().row(r).array()).transpose();
      break;
    case ModelKind::complex_mul: {
      const int c = d / 2;
      auto hre = p.head_table().row(h).segment(0, c).array();
      auto him = p.head_table().row(h).segment(c, c).array();
      auto rre = p.relation_table().row(r).segment(0, c).array();
      auto rim = p.relation_table().row(r).segment(c, c).array();
      q.segment(0, c) = (hre * rre + him * rim).matrix().transpose();
      q.segment(c, c) = (him * rre - hre * rim).matrix().transpose();
      break;
    }
    case ModelKind::rescal:
      q.noalias() = p.relation_matrix(r).transpose() * p.head_table().row(h).transpose();
      break;
  }
  return q;
}

/// The dual transform of a tail entity: t o r for CP, t o R_r for ComplEx
/// (diagonal transpose, no conjugation), t R_r^T for RESCAL.
inline Vector tail_transform(const ModelParams& p, int t, int r) {
  p.check_entity(t);
  p.check_relation(r);
  const int d = p.dim;
  Vector q(d);
  switch (p.kind) {
    case ModelKind::cp:
      q = (p.tail_table().row(t).array() * p.relation_table().row(r).array()).transpose();
      break;
    case ModelKind::complex_mul: {
      const int c = d / 2;
      auto tre = p.tail_table().row(t).segment(0, c).array();
      auto tim = p.tail_table().row(t).segment(c, c).array();
      auto rre = p.relation_table().row(r).segment(0, c).array();
      auto rim = p.relation_table().row(r).segment(c, c).array();
      q.segment(0, c) = tre * rre - tim * rim;
      q.segment(c, c) = tre * rim + tim * rre;
      break;
    }
    case ModelKind::rescal:
      q.noalias() = p.relation_matrix(r) * p.tail_table().row(t).transpose();
      break;
  }
  return q;
}

/// Scalar score of one triple, evaluated directly from the raw parameters
/// (independent of the transformed-query route used by score_all_tails).
inline double score_triple(const ModelParams& p, int h, int r, int t) {
  p.check_entity(h);
  p.check_relation(r);
  p.check_entity(t);
  const int d = p.dim;
  switch (p.kind) {
    case ModelKind::cp: {
      double s = 0.0;
      const auto& H = p.head_table();
      const auto& R = p.relation_table();
      const auto& T = p.tail_table();
      for (int i = 0; i < d; ++i) s += H(h, i) * R(r, i) * T(t, i);
      return s;
    }
    case ModelKind::complex_mul: {
      // Re(sum_c conj(h_c) r_c t_c) over half-split complex coordinates.
      const int c = d / 2;
      const auto& E = p.head_table();
      const auto& R = p.relation_table();
      double s = 0.0;
      for (int i = 0; i < c; ++i) {
        double hre = E(h, i), him = E(h, c + i);
        double rre = R(r, i), rim = R(r, c + i);
        double tre = E(t, i), tim = E(t, c + i);
        double ure = hre * rre + him * rim;
        double uim = hre * rim - him * rre;
        s += ure * tre - uim * tim;
      }
      return s;
    }
    case ModelKind::rescal: {
      const auto& E = p.head_table();
      auto R = p.relation_matrix(r);
      double s = 0.0;
      for (int a = 0; a < d; ++a) {
        double acc = 0.0;
        for (int b = 0; b < d; ++b) acc += R(a, b) * E(t, b);
        s += E(h, a) * acc;
      }
      return s;
    }
  }
  return 0.0;
}

inline void score_all_tails(const ModelParams& p, int h, int r, Vector& out) {
  Vector q = head_transform(p, h, r);
  out.resize(p.n_entities);
  out.noalias() = p.tail_table() * q;
}

inline Vector score_all_tails(const ModelParams& p, int h, int r) {
  Vector out;
  score_all_tails(p, h, r, out);
  return out;
}

// ---------------------------------------------------------------------------
// Gradient accumulation
// ---------------------------------------------------------------------------

/// Sparse-by-row gradient accumulator shaped like a ModelParams.
class GradientBuffer {
 public:
  explicit GradientBuffer(const ModelParams& p) {
    grads_.reserve(p.tables.size());
    touched_.resize(p.tables.size());
    all_touched_.resize(p.tables.size(), false);
    for (const Matrix& t : p.tables) {
      grads_.emplace_back(Matrix::Zero(t.rows(), t.cols()));
      touched_[grads_.size() - 1].assign(static_cast<size_t>(t.rows()), 0);
    }
  }

  size_t n_tables() const { return grads_.size(); }
  const Matrix& table(int i) const { return grads_[i]; }
  Matrix& table(int i) { return grads_[i]; }

  bool all_rows_touched(int i) const { return all_touched_[i]; }
  bool row_touched(int i, int row) const { return all_touched_[i] || touched_[i][row] != 0; }

  /// Marks a row as touched and returns a mutable view for accumulation.
  Eigen::Block<Matrix, 1, Eigen::Dynamic> row(int table, int r) {
    touched_[table][r] = 1;
    return grads_[table].row(r);
  }

  /// Rank-1 accumulation grads[table] += coeffs * q^T; touches every row.
  void add_outer(int table, const Vector& coeffs, const Vector& q) {
    grads_[table].noalias() += coeffs * q.transpose();
    all_touched_[table] = true;
  }

  void merge(const GradientBuffer& other) {
    for (size_t i = 0; i < grads_.size(); ++i) {
      if (other.all_touched_[i]) {
        grads_[i] += other.grads_[i];
        all_touched_[i] = true;
      } else {
        for (Eigen::Index r = 0; r < grads_[i].rows(); ++r) {
          if (other.touched_[i][r]) {
            grads_[i].row(r) += other.grads_[i].row(r);
            touched_[i][r] = 1;
          }
        }
      }
    }
  }

  void clear() {
    for (size_t i = 0; i < grads_.size(); ++i) {
      if (all_touched_[i]) {
        grads_[i].setZero();
      } else {
        for (Eigen::Index r = 0; r < grads_[i].rows(); ++r) {
          if (touched_[i][r]) grads_[i].row(r).setZero();
        }
      }
      std::fill(touched_[i].begin(), touched_[i].end(), 0);
      all_touched_[i] = false;
    }
  }

 private:
  std::vector<Matrix> grads_;
  std::vector<std::vector<char>> touched_;
  std::vector<char> all_touched_;
};

namespace detail {

/// Backward of the query transform: given s = tail_table^T * dL_dscores,
/// accumulates the head-row and relation gradients of sum_k dL_k * score(h,r,k).
inline void backward_query_grads(const ModelParams& p, int h, int r, const Vector& s,
                                 GradientBuffer& buf) {
  const int d = p.dim;
  switch (p.kind) {
    case ModelKind::cp:
      buf.row(p.head_table_index(), h) +=
          (p.relation_table().row(r).array() * s.transpose().array()).matrix();
      buf.row(p.relation_table_index(), r) +=
          (p.head_table().row(h).array() * s.transpose().array()).matrix();
      break;
    case ModelKind::complex_mul: {
      const int c = d / 2;
      auto hre = p.head_table().row(h).segment(0, c).array();
      auto him = p.head_table().row(h).segment(c, c).array();
      auto rre = p.relation_table().row(r).segment(0, c).array();
      auto rim = p.relation_table().row(r).segment(c, c).array();
      auto sre = s.segment(0, c).transpose().array();
      auto sim = s.segment(c, c).transpose().array();
      auto hrow = buf.row(p.head_table_index(), h);
      hrow.segment(0, c) += (rre * sre - rim * sim).matrix();
      hrow.segment(c, c) += (rre * sim + rim * sre).matrix();
      auto rrow = buf.row(p.relation_table_index(), r);
      rrow.segment(0, c) += (hre * sre + him * sim).matrix();
      rrow.segment(c, c) += (him * sre - hre * sim).matrix();
      break;
    }
    case ModelKind::rescal: {
      buf.row(p.head_table_index(), h) += (p.relation_matrix(r) * s).transpose();
      auto rrow = buf.row(p.relation_table_index(), r);
      Eigen::Map<Matrix> rgrad(rrow.data(), d, d);
      rgrad.noalias() += p.head_table().row(h).transpose() * s.transpose();
      break;
    }
  }
}

}  // namespace detail

/// Accumulates d(sum_k dL_dscores[k] * score(h, r, k))/d(params) into the buffer:
/// every tail row, the queried head row, and the queried relation parameters.
inline void accumulate_score_gradients(const ModelParams& p, int h, int r, const Vector& dL_dscores,
                                       GradientBuffer& buf) {
  if (!dL_dscores.allFinite()) throw numeric_error("non-finite score gradient");
  Vector q = head_transform(p, h, r);
  buf.add_outer(p.tail_table_index(), dL_dscores, q);
  Vector s = p.tail_table().transpose() * dL_dscores;
  detail::backward_query_grads(p, h, r, s, buf);
}

}  // namespace kge
