// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "specratio/poly.hpp"

namespace specratio {

// Square integer matrix, row-major.
class Mat {
 public:
  Mat() = default;
  explicit Mat(std::size_t n) : n_(n), e_(n * n, BigInt(0)) {}
  Mat(std::initializer_list<std::initializer_list<long>> rows);
  static Mat identity(std::size_t n);
  static Mat from_rows(std::vector<std::vector<BigInt>> rows);

  std::size_t dim() const { return n_; }
  BigInt& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  BigInt max_abs_entry() const;
  bool is_nonnegative() const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> e_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
std::vector<BigInt> operator*(const Mat& a, const std::vector<BigInt>& v);

// Monic characteristic polynomial det(xI - m), exact.
Poly char_poly(const Mat& m);

// Exact determinant (fraction-free elimination).
BigInt det(const Mat& m);

// Exact inverse for det = +-1; throws std::domain_error otherwise.
Mat unimodular_inverse(const Mat& m);

// Named generators of equal dimension; when inverse_closed, inverses of
// all generators exist over the integers and are served on demand.
struct Generator {
  std::string label;
  Mat matrix;
};

class GeneratorSet {
 public:
  GeneratorSet(std::size_t dimension, std::vector<Generator> gens,
               bool inverse_closed);

  std::size_t dimension() const { return dim_; }
  bool inverse_closed() const { return inverse_closed_; }
  const std::vector<Generator>& generators() const { return gens_; }
  int index_of(const std::string& label) const;  // -1 when absent

 private:
  std::size_t dim_;
  std::vector<Generator> gens_;
  bool inverse_closed_;
};

// One letter of a word: a generator reference, possibly inverted.
struct WordLetter {
  int index = 0;
  bool inverse = false;
};
using Word = std::vector<WordLetter>;

// word [g1, g2, ...] maps to matrix(g1) * matrix(g2) * ... (left to right).
Mat word_product(const GeneratorSet& gens, const Word& word);

// "a.b'.a" <-> letters; an apostrophe marks an inverse letter.
std::string word_to_string(const GeneratorSet& gens, const Word& word);
Word parse_word(const GeneratorSet& gens, const std::string& text);

}  // namespace specratio
