#include "gclr/exact/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gclr/core/errors.hpp"

namespace gclr::exact {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Simplex {
 public:
  Simplex(const LpProblem& lp, const LpOptions& opt)
      : lp_(lp), opt_(opt), m_(lp.A.rows()), N_(lp.A.cols()) {
    const auto total = N_ + m_;
    lo_.resize(total);
    up_.resize(total);
    x_.setZero(total);
    lo_.head(N_) = lp.lower;
    up_.head(N_) = lp.upper;
    lo_.tail(m_).setZero();
    up_.tail(m_).setZero();
    art_sign_.setOnes(m_);
    basic_pos_.assign(static_cast<std::size_t>(total), -1);
    max_iter_ = opt.max_iterations > 0 ? opt.max_iterations
                                       : static_cast<int>(50 * (m_ + N_) + 10000);
  }

  bool warm(const std::vector<int>& basis) {
    if (static_cast<Eigen::Index>(basis.size()) != m_) return false;
    basis_.resize(m_);
    for (Eigen::Index r = 0; r < m_; ++r) {
      const int j = basis[r];
      if (j < 0 || j >= N_) return false;
      basis_[r] = j;
    }
    for (Eigen::Index j = 0; j < N_; ++j) x_[j] = lo_[j];
    if (!refactor()) return false;
    for (Eigen::Index r = 0; r < m_; ++r) {
      const auto j = basis_[r];
      const double tol = opt_.feasibility_tol * (1.0 + std::abs(x_[j]));
      if (x_[j] < lo_[j] - tol || x_[j] > up_[j] + tol) return false;
    }
    return true;
  }

  void cold() {
    for (Eigen::Index j = 0; j < N_; ++j) x_[j] = lo_[j];
    Eigen::VectorXd r = lp_.b - lp_.A * x_.head(N_);
    basis_.resize(m_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      art_sign_[i] = r[i] >= 0.0 ? 1.0 : -1.0;
      basis_[i] = N_ + i;
      up_[N_ + i] = kInf;
      x_[N_ + i] = std::abs(r[i]);
    }
    refactor();
  }

  // Phase 1 objective: sum of artificials.
  LpStatus phase1() {
    Eigen::VectorXd cost = Eigen::VectorXd::Zero(N_ + m_);
    cost.tail(m_).setOnes();
    auto status = iterate(cost);
    if (status != LpStatus::Optimal) return status;
    double infeas = 0.0;
    for (Eigen::Index i = 0; i < m_; ++i) infeas += x_[N_ + i];
    const double scale = 1.0 + lp_.b.cwiseAbs().maxCoeff();
    if (infeas > opt_.feasibility_tol * scale * static_cast<double>(m_)) return LpStatus::Infeasible;
    for (Eigen::Index i = 0; i < m_; ++i) {
      up_[N_ + i] = 0.0;
      if (basic_pos_[N_ + i] < 0) x_[N_ + i] = 0.0;
    }
    return LpStatus::Optimal;
  }

  LpStatus phase2() {
    Eigen::VectorXd cost = Eigen::VectorXd::Zero(N_ + m_);
    cost.head(N_) = lp_.c;
    return iterate(cost);
  }

  LpSolution finish(LpStatus status) {
    LpSolution s;
    s.status = status;
    s.iterations = iterations_;
    s.x = x_.head(N_);
    for (Eigen::Index j = 0; j < N_; ++j)  // snap tiny bound violations
      s.x[j] = std::clamp(s.x[j], lo_[j], up_[j]);
    Eigen::VectorXd cb(m_);
    for (Eigen::Index r = 0; r < m_; ++r) cb[r] = basis_[r] < N_ ? lp_.c[basis_[r]] : 0.0;
    s.y = Binv_.transpose() * cb;
    s.reduced = lp_.c - lp_.A.transpose() * s.y;
    s.objective = lp_.c.dot(s.x);
    s.dual_objective = s.y.dot(lp_.b);
    for (Eigen::Index j = 0; j < N_; ++j)
      if (basic_pos_[j] < 0) s.dual_objective += s.reduced[j] * s.x[j];
    s.basis.resize(static_cast<std::size_t>(m_));
    for (Eigen::Index r = 0; r < m_; ++r) s.basis[r] = basis_[r] < N_ ? static_cast<int>(basis_[r]) : -1;
    return s;
  }

 private:
  Eigen::VectorXd column(Eigen::Index j) const {
    if (j < N_) return lp_.A.col(j);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(m_);
    e[j - N_] = art_sign_[j - N_];
    return e;
  }

  bool refactor() {
    Eigen::MatrixXd B(m_, m_);
    for (Eigen::Index r = 0; r < m_; ++r) B.col(r) = column(basis_[r]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
    if (!lu.isInvertible()) return false;
    Binv_ = lu.inverse();
    std::fill(basic_pos_.begin(), basic_pos_.end(), -1);
    for (Eigen::Index r = 0; r < m_; ++r) basic_pos_[basis_[r]] = r;
    // x_B = B^-1 (b - N x_N)
    Eigen::VectorXd rhs = lp_.b;
    for (Eigen::Index j = 0; j < N_ + m_; ++j)
      if (basic_pos_[j] < 0 && x_[j] != 0.0) rhs -= column(j) * x_[j];
    const Eigen::VectorXd xb = Binv_ * rhs;
    for (Eigen::Index r = 0; r < m_; ++r) x_[basis_[r]] = xb[r];
    since_refactor_ = 0;
    return true;
  }

  LpStatus iterate(const Eigen::VectorXd& cost) {
    int degenerate_run = 0;
    while (true) {
      if (iterations_ >= max_iter_) return LpStatus::IterationLimit;
      const bool bland = degenerate_run >= opt_.degenerate_before_bland;

      Eigen::VectorXd cb(m_);
      for (Eigen::Index r = 0; r < m_; ++r) cb[r] = cost[basis_[r]];
      const Eigen::VectorXd y = Binv_.transpose() * cb;

      // Entering variable.
      Eigen::Index enter = -1;
      double enter_d = 0.0;
      double best = 0.0;
      for (Eigen::Index j = 0; j < N_ + m_; ++j) {
        if (basic_pos_[j] >= 0 || up_[j] - lo_[j] <= 0.0) continue;
        const double d = cost[j] - (j < N_ ? y.dot(lp_.A.col(j)) : y[j - N_] * art_sign_[j - N_]);
        const bool at_upper = x_[j] > lo_[j];
        const double gain = at_upper ? d : -d;
        if (gain <= opt_.optimality_tol) continue;
        if (bland) {
          enter = j;
          enter_d = d;
          break;
        }
        if (gain > best) {
          best = gain;
          enter = j;
          enter_d = d;
        }
      }
      if (enter < 0) return LpStatus::Optimal;

      const double s = enter_d > 0.0 ? -1.0 : 1.0;
      const Eigen::VectorXd alpha = Binv_ * column(enter);

      // Ratio test; delta_r = -s * alpha_r is the change of basic r per unit step.
      double step = up_[enter] - lo_[enter];
      Eigen::Index leave = -1;
      bool leave_to_upper = false;
      double leave_pivot = 0.0;
      for (Eigen::Index r = 0; r < m_; ++r) {
        const double delta = -s * alpha[r];
        if (std::abs(delta) <= opt_.pivot_tol) continue;
        const auto j = basis_[r];
        double limit;
        bool to_upper;
        if (delta < 0.0) {
          limit = (x_[j] - lo_[j]) / -delta;
          to_upper = false;
        } else {
          if (!std::isfinite(up_[j])) continue;
          limit = (up_[j] - x_[j]) / delta;
          to_upper = true;
        }
        limit = std::max(limit, 0.0);
        bool take;
        if (leave < 0)
          take = limit <= step;
        else if (limit < step - 1e-12)
          take = true;
        else if (limit <= step + 1e-12)
          take = bland ? j < basis_[leave] : std::abs(alpha[r]) > leave_pivot;
        else
          take = false;
        if (take) {
          step = limit;
          leave = r;
          leave_to_upper = to_upper;
          leave_pivot = std::abs(alpha[r]);
        }
      }
      if (leave < 0 && !std::isfinite(step)) return LpStatus::Unbounded;

      ++iterations_;
      degenerate_run = step <= 1e-12 ? degenerate_run + 1 : 0;

      for (Eigen::Index r = 0; r < m_; ++r) x_[basis_[r]] -= s * alpha[r] * step;
      x_[enter] += s * step;

      if (leave < 0) continue;  // bound flip of the entering variable

      const auto out = basis_[leave];
      x_[out] = leave_to_upper ? up_[out] : lo_[out];
      basic_pos_[out] = -1;
      basis_[leave] = enter;
      basic_pos_[enter] = leave;

      const double piv = alpha[leave];
      Binv_.row(leave) /= piv;
      for (Eigen::Index r = 0; r < m_; ++r)
        if (r != leave && alpha[r] != 0.0) Binv_.row(r) -= alpha[r] * Binv_.row(leave);

      if (++since_refactor_ >= opt_.refactor_interval && !refactor())
        throw SolverError("simplex: basis became singular during refactorization");
    }
  }

  const LpProblem& lp_;
  const LpOptions& opt_;
  Eigen::Index m_;
  Eigen::Index N_;
  Eigen::VectorXd lo_, up_, x_;
  Eigen::VectorXd art_sign_;
  std::vector<Eigen::Index> basis_;
  std::vector<Eigen::Index> basic_pos_;
  Eigen::MatrixXd Binv_;
  int since_refactor_ = 0;
  int iterations_ = 0;
  int max_iter_ = 0;
};

}  // namespace

LpSolution solve_lp(const LpProblem& lp, const std::vector<int>& warm_basis,
                    const LpOptions& options) {
  const auto m = lp.A.rows();
  const auto N = lp.A.cols();
  if (lp.b.size() != m || lp.c.size() != N || lp.lower.size() != N || lp.upper.size() != N)
    throw ContractError("solve_lp: inconsistent problem dimensions");
  for (Eigen::Index j = 0; j < N; ++j)
    if (!std::isfinite(lp.lower[j]) || lp.upper[j] < lp.lower[j])
      throw ContractError("solve_lp: invalid bounds on column " + std::to_string(j));

  Simplex sx(lp, options);
  bool warm = !warm_basis.empty() && sx.warm(warm_basis);
  if (!warm) {
    sx.cold();
    const auto st = sx.phase1();
    if (st != LpStatus::Optimal) return sx.finish(st == LpStatus::Unbounded ? LpStatus::Infeasible : st);
  }
  auto sol = sx.finish(sx.phase2());
  sol.warm_started = warm;
  return sol;
}

}  // namespace gclr::exact
