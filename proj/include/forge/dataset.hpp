#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <utility>
#include <vector>

#include "forge/error.hpp"

namespace forge {

using RowMatrixXd =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Flattened real-valued samples with class labels. Every feature lies in
// [0, 1] after ingestion; `shape` is the per-sample tensor shape whose
// product equals dim(). Immutable by convention once built.
struct TensorDataset {
  RowMatrixXd data;                  // n x d, one sample per row
  std::vector<std::int32_t> labels;  // size n (or empty for unlabeled data)
  std::vector<std::size_t> shape;    // per-sample shape, product == d
  std::size_t num_classes = 0;

  std::size_t size() const { return static_cast<std::size_t>(data.rows()); }
  std::size_t dim() const { return static_cast<std::size_t>(data.cols()); }

  // Throws data_error when an invariant is broken.
  void validate() const;
};

// Builds a dataset and validates it. num_classes is max(label)+1 unless a
// larger count is given.
TensorDataset make_dataset(RowMatrixXd data, std::vector<std::int32_t> labels,
                           std::vector<std::size_t> shape,
                           std::size_t num_classes = 0);

// Owning copy of the rows belonging to one class.
RowMatrixXd class_rows(const TensorDataset& ds, std::int32_t cls);
std::size_t class_count(const TensorDataset& ds, std::int32_t cls);

// Same data with every label replaced (transport outputs carry the target
// class label).
TensorDataset relabel(const TensorDataset& ds, std::int32_t cls,
                      std::size_t num_classes = 0);

// Fixed-length token sequences over a finite vocabulary.
struct TokenCorpus {
  std::vector<std::vector<std::uint32_t>> sequences;
  std::uint32_t vocab_size = 0;
  std::uint32_t seq_len = 0;

  void validate() const;
};

// Flattened one-hot coordinate laws: flat index i <-> (position, token).
inline std::pair<std::uint32_t, std::uint32_t> onehot_coord(
    std::size_t flat, std::uint32_t vocab_size) {
  return {static_cast<std::uint32_t>(flat / vocab_size),
          static_cast<std::uint32_t>(flat % vocab_size)};
}

inline std::size_t onehot_flat(std::uint32_t position, std::uint32_t token,
                               std::uint32_t vocab_size) {
  return std::size_t{position} * vocab_size + token;
}

// Materialized flattened one-hot encoding of one sequence (N * |V| entries,
// exactly N ones). Intended for tiny-scale verification only.
std::vector<std::uint8_t> one_hot(const std::vector<std::uint32_t>& seq,
                                  std::uint32_t vocab_size);

}  // namespace forge
