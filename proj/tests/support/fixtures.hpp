#pragma once
// Instance builders and independent reference computations shared by tests.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gclr/core/dataset.hpp"
#include "gclr/core/entity_set.hpp"

namespace fixtures {

using gclr::core::Entity;

// Entities drawn from `groups` latent regressions: X has an intercept plus
// J-1 standard normal columns, y = X beta_g + N(0, noise^2).
inline std::vector<Entity> latent_entities(int I, int L, int J, int groups, double noise,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> N(0.0, 1.0);
  std::vector<Eigen::VectorXd> betas;
  for (int g = 0; g < groups; ++g) {
    Eigen::VectorXd b(J);
    for (int j = 0; j < J; ++j) b[j] = 3.0 * N(rng);
    betas.push_back(b);
  }
  std::vector<Entity> out;
  for (int i = 0; i < I; ++i) {
    Entity e;
    e.id = "u" + std::to_string(i + 1);
    e.X.resize(L, J);
    e.y.resize(L);
    const auto& b = betas[static_cast<std::size_t>(i % groups)];
    for (int l = 0; l < L; ++l) {
      e.X(l, 0) = 1.0;
      for (int j = 1; j < J; ++j) e.X(l, j) = N(rng);
      e.y[l] = e.X.row(l).dot(b) + noise * N(rng);
      e.weeks.push_back(l + 1);
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline gclr::core::Dataset latent_dataset(int I, int K, int n, std::uint64_t seed, int L = 6,
                                          int J = 2, double noise = 1.0) {
  return gclr::core::Dataset(latent_entities(I, L, J, K, noise, seed), K, n);
}

// X = identity (d x d), y random: the cost of a set is its centroid SSE.
inline std::vector<Entity> identity_entities(int I, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-10.0, 10.0);
  std::vector<Entity> out;
  for (int i = 0; i < I; ++i) {
    Entity e;
    e.id = "p" + std::to_string(i);
    e.X = Eigen::MatrixXd::Identity(d, d);
    e.y.resize(d);
    for (int l = 0; l < d; ++l) {
      e.y[l] = U(rng);
      e.weeks.push_back(l + 1);
    }
    out.push_back(std::move(e));
  }
  return out;
}

// Solution of the normal equations X'X b = X'y by Gaussian elimination with
// partial pivoting in long double. Full column rank required.
inline Eigen::VectorXd normal_equations_beta(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  const int J = static_cast<int>(X.cols());
  std::vector<std::vector<long double>> A(J, std::vector<long double>(J + 1, 0.0L));
  for (int r = 0; r < X.rows(); ++r)
    for (int a = 0; a < J; ++a) {
      for (int b = 0; b < J; ++b) A[a][b] += (long double)X(r, a) * X(r, b);
      A[a][J] += (long double)X(r, a) * y[r];
    }
  for (int c = 0; c < J; ++c) {
    int piv = c;
    for (int r = c + 1; r < J; ++r)
      if (std::fabs((double)A[r][c]) > std::fabs((double)A[piv][c])) piv = r;
    std::swap(A[c], A[piv]);
    for (int r = 0; r < J; ++r) {
      if (r == c) continue;
      const long double f = A[r][c] / A[c][c];
      for (int k = c; k <= J; ++k) A[r][k] -= f * A[c][k];
    }
  }
  Eigen::VectorXd b(J);
  for (int c = 0; c < J; ++c) b[c] = (double)(A[c][J] / A[c][c]);
  return b;
}

inline double rss(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, const Eigen::VectorXd& b) {
  long double s = 0.0L;
  for (int r = 0; r < X.rows(); ++r) {
    const long double e = (long double)y[r] - (long double)X.row(r).dot(b);
    s += e * e;
  }
  return (double)s;
}

// Rows of every entity in S stacked.
inline void stack(const std::vector<Entity>& es, const gclr::core::EntitySet& S, Eigen::MatrixXd& X,
                  Eigen::VectorXd& y) {
  Eigen::Index rows = 0;
  S.for_each([&](std::size_t i) { rows += es[i].X.rows(); });
  X.resize(rows, es.front().X.cols());
  y.resize(rows);
  Eigen::Index at = 0;
  S.for_each([&](std::size_t i) {
    X.middleRows(at, es[i].X.rows()) = es[i].X;
    y.segment(at, es[i].y.size()) = es[i].y;
    at += es[i].X.rows();
  });
}

// Reference cluster cost from the normal equations (full-rank stacks only).
inline double reference_cost(const std::vector<Entity>& es, const gclr::core::EntitySet& S) {
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
  stack(es, S, X, y);
  return rss(X, y, normal_equations_beta(X, y));
}

// Every restricted growth string of length I with at most K blocks, K used.
template <class F>
void for_each_partition(int I, int K, F&& f) {
  std::vector<int> a(static_cast<std::size_t>(I), 0);
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (pos == I) {
      if (used == K) f(a);
      return;
    }
    for (int k = 0; k <= std::min(used, K - 1); ++k) {
      if (I - pos - 1 < K - std::max(used, k + 1)) continue;
      a[pos] = k;
      rec(pos + 1, std::max(used, k + 1));
    }
  };
  rec(0, 0);
}

inline bool rel_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace fixtures
