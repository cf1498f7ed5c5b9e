// Copyright 2026 The specratio Authors
// SPDX-License-Identifier: Apache-2.0

#include "specratio/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "specratio/detail/bareiss.hpp"

namespace specratio {

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows) {
  n_ = rows.size();
  e_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("matrix not square");
    for (long v : row) e_.emplace_back(v);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::vector<std::vector<BigInt>> rows) {
  if (rows.empty()) throw std::invalid_argument("matrix has no rows");
  Mat m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw std::invalid_argument("matrix not square");
    for (std::size_t j = 0; j < rows.size(); ++j)
      m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

BigInt Mat::max_abs_entry() const {
  BigInt m = 0;
  for (const auto& v : e_) {
    BigInt a = abs(v);
    if (a > m) m = a;
  }
  return m;
}

bool Mat::is_nonnegative() const {
  for (const auto& v : e_)
    if (v < 0) return false;
  return true;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  const std::size_t n = a.dim();
  Mat c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  Mat c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

std::vector<BigInt> operator*(const Mat& a, const std::vector<BigInt>& v) {
  if (a.dim() != v.size()) throw std::invalid_argument("dimension mismatch");
  std::vector<BigInt> out(v.size(), BigInt(0));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out[i] += a.at(i, j) * v[j];
  return out;
}

Poly char_poly(const Mat& m) {
  // Faddeev-LeVerrier over exact rationals: M_1 = A, c_{n-1} = -tr(M_1),
  // M_k = A(M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
  const std::size_t n = m.dim();
  if (n == 0) throw std::invalid_argument("empty matrix");
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  std::vector<std::vector<Rational>> work(n, std::vector<Rational>(n, Rational(0))),
      next = work;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) work[i][j] = Rational(m.at(i, j));
  Rational tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr += work[i][i];
  c[n - 1] = -tr;
  for (std::size_t k = 2; k <= n; ++k) {
    // work += c_{n-k+1} I, then next = A * work.
    for (std::size_t i = 0; i < n; ++i) work[i][i] += c[n - k + 1];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l)
          if (m.at(i, l) != 0) s += Rational(m.at(i, l)) * work[l][j];
        next[i][j] = s;
      }
    std::swap(work, next);
    tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += work[i][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  std::vector<BigInt> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (c[i].get_den() != 1)
      throw std::logic_error("characteristic polynomial not integral");
    out[i] = c[i].get_num();
  }
  return Poly(std::move(out));
}

namespace {
struct BigIntTraits {
  BigInt zero() const { return BigInt(0); }
  BigInt one() const { return BigInt(1); }
  bool is_zero(const BigInt& v) const { return v == 0; }
  BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
  BigInt sub(const BigInt& a, const BigInt& b) const { return a - b; }
  BigInt exact_div(BigInt a, const BigInt& b) const {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};
}  // namespace

BigInt det(const Mat& m) {
  const std::size_t n = m.dim();
  std::vector<std::vector<BigInt>> rows(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
  return detail::bareiss_det(std::move(rows), BigIntTraits{});
}

Mat unimodular_inverse(const Mat& m) {
  BigInt d = det(m);
  if (d != 1 && d != -1)
    throw std::domain_error("matrix not unimodular (|det| != 1)");
  const std::size_t n = m.dim();
  Mat inv(n);
  if (n == 1) {
    inv.at(0, 0) = d;  // 1/d = d for d = +-1
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<BigInt>> minor;
      minor.reserve(n - 1);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;  // adjugate transposes the cofactor matrix
        std::vector<BigInt> row;
        row.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c) {
          if (c == i) continue;
          row.push_back(m.at(r, c));
        }
        minor.push_back(std::move(row));
      }
      BigInt cof = detail::bareiss_det(std::move(minor), BigIntTraits{});
      if ((i + j) % 2 != 0) cof = -cof;
      inv.at(i, j) = d == 1 ? cof : -cof;
    }
  return inv;
}

GeneratorSet::GeneratorSet(std::size_t dimension, std::vector<Generator> gens,
                           bool inverse_closed)
    : dim_(dimension), gens_(std::move(gens)), inverse_closed_(inverse_closed) {
  for (const auto& g : gens_) {
    if (g.matrix.dim() != dim_)
      throw std::invalid_argument("generator dimension mismatch: " + g.label);
    if (inverse_closed_) {
      BigInt d = det(g.matrix);
      if (d != 1 && d != -1)
        throw std::invalid_argument("inverse-closed set requires |det| = 1: " +
                                    g.label);
    }
  }
}

int GeneratorSet::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].label == label) return static_cast<int>(i);
  return -1;
}

Mat word_product(const GeneratorSet& gens, const Word& word) {
  Mat acc = Mat::identity(gens.dimension());
  for (const WordLetter& l : word) {
    if (l.index < 0 ||
        l.index >= static_cast<int>(gens.generators().size()))
      throw std::invalid_argument("word references unknown generator");
    const Mat& g = gens.generators()[static_cast<std::size_t>(l.index)].matrix;
    acc = l.inverse ? acc * unimodular_inverse(g) : acc * g;
  }
  return acc;
}

std::string word_to_string(const GeneratorSet& gens, const Word& word) {
  std::ostringstream out;
  bool first = true;
  for (const WordLetter& l : word) {
    if (!first) out << ".";
    first = false;
    out << gens.generators()[static_cast<std::size_t>(l.index)].label;
    if (l.inverse) out << "'";
  }
  return out.str();
}

Word parse_word(const GeneratorSet& gens, const std::string& text) {
  Word word;
  if (text.empty()) return word;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, '.')) {
    bool inv = !token.empty() && token.back() == '\'';
    if (inv) token.pop_back();
    int idx = gens.index_of(token);
    if (idx < 0) throw std::invalid_argument("unknown generator label: " + token);
    word.push_back({idx, inv});
  }
  return word;
}

}  // namespace specratio
