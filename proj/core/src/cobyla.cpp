// Copyright 2026 The rotorq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Constrained Optimization BY Linear Approximation, after M. J. D. Powell,
// "A direct search optimization method that models the objective and
// constraint functions by linear interpolation" (1994). Indices below are
// 1-based to keep the bookkeeping readable against the published algorithm.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rotorq/errors.hpp"
#include "rotorq/optimizer.hpp"

namespace rotorq {
namespace {

class Vec {
 public:
  explicit Vec(int n) : d_(static_cast<std::size_t>(n) + 1, 0.0) {}
  double& operator()(int i) { return d_[i]; }
  double operator()(int i) const { return d_[i]; }

 private:
  std::vector<double> d_;
};

class Mat {
 public:
  Mat(int rows, int cols)
      : cols_(cols), d_(static_cast<std::size_t>(rows + 1) * (cols + 1), 0.0) {}
  double& operator()(int i, int j) { return d_[i * (cols_ + 1) + j]; }
  double operator()(int i, int j) const { return d_[i * (cols_ + 1) + j]; }

 private:
  int cols_;
  std::vector<double> d_;
};

// Rounding-error guard: true when `value` is indistinguishable from zero
// relative to the magnitude `scale` of the terms that produced it.
bool negligible(double scale, double value) {
  const double acca = scale + 0.1 * std::abs(value);
  const double accb = scale + 0.2 * std::abs(value);
  return scale >= acca || acca >= accb;
}

// Trust-region subproblem. Finds dx with |dx| <= rho that first minimizes the
// largest violation of the linearized constraints a_k . dx >= b_k (k <= m),
// then minimizes -a_{m+1} . dx without increasing that violation. Returns
// false when a degeneracy stopped dx short of the trust-region boundary.
bool trust_region_step(int n, int m, const Mat& a, const Vec& b, double rho,
                       Vec& dx) {
  Mat z(n, n);
  Vec zdota(m + 1), vmultc(m + 1), sdirn(n), dxnew(n), vmultd(m + 1);
  std::vector<int> iact(static_cast<std::size_t>(m) + 2, 0);
  bool full = true;
  int mcon = m, nact = 0, icon = 0, nactx = 0, icount = 0, kk = 0;
  double resmax = 0.0, optold = 0.0, optnew = 0.0, resold = 0.0;
  double step = 0.0, stpful = 0.0, ratio = 0.0, temp = 0.0;

  for (int i = 1; i <= n; ++i) {
    z(i, i) = 1.0;
    dx(i) = 0.0;
  }
  for (int k = 1; k <= m; ++k) {
    if (b(k) > resmax) {
      resmax = b(k);
      icon = k;
    }
  }
  for (int k = 1; k <= m; ++k) {
    iact[k] = k;
    vmultc(k) = resmax - b(k);
  }
  if (resmax == 0.0) goto stage_two;
  for (int i = 1; i <= n; ++i) sdirn(i) = 0.0;

// Stop a stage after three iterations that neither improve the stage
// objective nor grow the active set; this prevents cycling.
new_stage:
  optold = 0.0;
  icount = 0;

iterate:
  if (mcon == m) {
    optnew = resmax;
  } else {
    optnew = 0.0;
    for (int i = 1; i <= n; ++i) optnew -= dx(i) * a(i, mcon);
  }
  if (icount == 0 || optnew < optold) {
    optold = optnew;
    nactx = nact;
    icount = 3;
  } else if (nact > nactx) {
    nactx = nact;
    icount = 3;
  } else {
    --icount;
    if (icount == 0) goto stage_end;
  }

  if (icon <= nact) goto drop_constraint;

  {
    // Add constraint iact[icon]: rotate the trailing columns of z so that the
    // last n-nact-1 are orthogonal to its gradient.
    kk = iact[icon];
    for (int i = 1; i <= n; ++i) dxnew(i) = a(i, kk);
    double tot = 0.0;
    for (int k = n; k > nact; --k) {
      double sp = 0.0, spabs = 0.0;
      for (int i = 1; i <= n; ++i) {
        const double t = z(i, k) * dxnew(i);
        sp += t;
        spabs += std::abs(t);
      }
      if (negligible(spabs, sp)) sp = 0.0;
      if (tot == 0.0) {
        tot = sp;
      } else {
        const int kp = k + 1;
        const double h = std::hypot(sp, tot);
        const double alpha = sp / h, beta = tot / h;
        tot = h;
        for (int i = 1; i <= n; ++i) {
          const double t = alpha * z(i, k) + beta * z(i, kp);
          z(i, kp) = alpha * z(i, kp) - beta * z(i, k);
          z(i, k) = t;
        }
      }
    }

    if (tot != 0.0) {
      ++nact;
      zdota(nact) = tot;
      vmultc(icon) = vmultc(nact);
      vmultc(nact) = 0.0;
    } else {
      // The new gradient is a combination of the active ones: one active
      // constraint has to leave. vmultd receives the combination weights.
      ratio = -1.0;
      for (int k = nact; k >= 1; --k) {
        double zdotv = 0.0, zdvabs = 0.0;
        for (int i = 1; i <= n; ++i) {
          const double t = z(i, k) * dxnew(i);
          zdotv += t;
          zdvabs += std::abs(t);
        }
        if (!negligible(zdvabs, zdotv)) {
          const double t = zdotv / zdota(k);
          if (t > 0.0 && iact[k] <= m) {
            const double tempa = vmultc(k) / t;
            if (ratio < 0.0 || tempa < ratio) ratio = tempa;
          }
          if (k >= 2) {
            const int kw = iact[k];
            for (int i = 1; i <= n; ++i) dxnew(i) -= t * a(i, kw);
          }
          vmultd(k) = t;
        } else {
          vmultd(k) = 0.0;
        }
      }
      if (ratio < 0.0) goto stage_end;

      for (int k = 1; k <= nact; ++k) {
        vmultc(k) = std::max(0.0, vmultc(k) - ratio * vmultd(k));
      }
      if (icon < nact) {
        const int isave = iact[icon];
        const double vsave = vmultc(icon);
        int k = icon;
        do {
          const int kp = k + 1;
          const int kw = iact[kp];
          double sp = 0.0;
          for (int i = 1; i <= n; ++i) sp += z(i, k) * a(i, kw);
          const double h = std::hypot(sp, zdota(kp));
          const double alpha = zdota(kp) / h, beta = sp / h;
          zdota(kp) = alpha * zdota(k);
          zdota(k) = h;
          for (int i = 1; i <= n; ++i) {
            const double t = alpha * z(i, kp) + beta * z(i, k);
            z(i, kp) = alpha * z(i, k) - beta * z(i, kp);
            z(i, k) = t;
          }
          iact[k] = kw;
          vmultc(k) = vmultc(kp);
          k = kp;
        } while (k < nact);
        iact[k] = isave;
        vmultc(k) = vsave;
      }
      temp = 0.0;
      for (int i = 1; i <= n; ++i) temp += z(i, nact) * a(i, kk);
      if (temp == 0.0) goto stage_end;
      zdota(nact) = temp;
      vmultc(icon) = 0.0;
      vmultc(nact) = ratio;
    }

    // Keep the objective as the last active constraint during stage two.
    iact[icon] = iact[nact];
    iact[nact] = kk;
    if (mcon > m && kk != mcon) {
      const int k = nact - 1;
      double sp = 0.0;
      for (int i = 1; i <= n; ++i) sp += z(i, k) * a(i, kk);
      const double h = std::hypot(sp, zdota(nact));
      const double alpha = zdota(nact) / h, beta = sp / h;
      zdota(nact) = alpha * zdota(k);
      zdota(k) = h;
      for (int i = 1; i <= n; ++i) {
        const double t = alpha * z(i, nact) + beta * z(i, k);
        z(i, nact) = alpha * z(i, k) - beta * z(i, nact);
        z(i, k) = t;
      }
      iact[nact] = iact[k];
      iact[k] = kk;
      std::swap(vmultc(k), vmultc(nact));
    }

    if (mcon > m) goto stage_two_direction;
    kk = iact[nact];
    temp = -1.0;
    for (int i = 1; i <= n; ++i) temp += sdirn(i) * a(i, kk);
    temp /= zdota(nact);
    for (int i = 1; i <= n; ++i) sdirn(i) -= temp * z(i, nact);
    goto take_step;
  }

drop_constraint:
  // Remove constraint iact[icon] from the active set.
  if (icon < nact) {
    const int isave = iact[icon];
    const double vsave = vmultc(icon);
    int k = icon;
    do {
      const int kp = k + 1;
      kk = iact[kp];
      double sp = 0.0;
      for (int i = 1; i <= n; ++i) sp += z(i, k) * a(i, kk);
      const double h = std::hypot(sp, zdota(kp));
      const double alpha = zdota(kp) / h, beta = sp / h;
      zdota(kp) = alpha * zdota(k);
      zdota(k) = h;
      for (int i = 1; i <= n; ++i) {
        const double t = alpha * z(i, kp) + beta * z(i, k);
        z(i, kp) = alpha * z(i, k) - beta * z(i, kp);
        z(i, k) = t;
      }
      iact[k] = kk;
      vmultc(k) = vmultc(kp);
      k = kp;
    } while (k < nact);
    iact[k] = isave;
    vmultc(k) = vsave;
  }
  --nact;
  if (mcon > m) goto stage_two_direction;
  temp = 0.0;
  for (int i = 1; i <= n; ++i) temp += sdirn(i) * z(i, nact + 1);
  for (int i = 1; i <= n; ++i) sdirn(i) -= temp * z(i, nact + 1);
  goto take_step;

stage_two_direction:
  temp = 1.0 / zdota(nact);
  for (int i = 1; i <= n; ++i) sdirn(i) = temp * z(i, nact);

take_step:
  {
    // Step to the trust-region boundary, or the step that zeroes resmax.
    double dd = rho * rho, sd = 0.0, ss = 0.0;
    for (int i = 1; i <= n; ++i) {
      if (std::abs(dx(i)) >= 1e-6 * rho) dd -= dx(i) * dx(i);
      sd += dx(i) * sdirn(i);
      ss += sdirn(i) * sdirn(i);
    }
    if (dd <= 0.0) goto stage_end;
    temp = std::sqrt(ss * dd);
    if (std::abs(sd) >= 1e-6 * temp) temp = std::sqrt(ss * dd + sd * sd);
    stpful = dd / (temp + sd);
    step = stpful;
    if (mcon == m) {
      if (negligible(step, resmax)) goto stage_two;
      step = std::min(step, resmax);
    }

    for (int i = 1; i <= n; ++i) dxnew(i) = dx(i) + step * sdirn(i);
    if (mcon == m) {
      resold = resmax;
      resmax = 0.0;
      for (int k = 1; k <= nact; ++k) {
        kk = iact[k];
        double t = b(kk);
        for (int i = 1; i <= n; ++i) t -= a(i, kk) * dxnew(i);
        resmax = std::max(resmax, t);
      }
    }

    // Multipliers that would hold at dxnew.
    for (int k = nact; k >= 1; --k) {
      double zdotw = 0.0, zdwabs = 0.0;
      for (int i = 1; i <= n; ++i) {
        const double t = z(i, k) * dxnew(i);
        zdotw += t;
        zdwabs += std::abs(t);
      }
      if (negligible(zdwabs, zdotw)) zdotw = 0.0;
      vmultd(k) = zdotw / zdota(k);
      if (k >= 2) {
        kk = iact[k];
        for (int i = 1; i <= n; ++i) dxnew(i) -= vmultd(k) * a(i, kk);
      }
    }
    if (mcon > m && nact >= 1) vmultd(nact) = std::max(0.0, vmultd(nact));

    // Residuals of the inactive constraints at dxnew.
    for (int i = 1; i <= n; ++i) dxnew(i) = dx(i) + step * sdirn(i);
    for (int k = nact + 1; k <= mcon; ++k) {
      kk = iact[k];
      double sum = resmax - b(kk);
      double sumabs = resmax + std::abs(b(kk));
      for (int i = 1; i <= n; ++i) {
        const double t = a(i, kk) * dxnew(i);
        sum += t;
        sumabs += std::abs(t);
      }
      if (negligible(sumabs, sum)) sum = 0.0;
      vmultd(k) = sum;
    }

    // Largest fraction of the step that keeps every multiplier nonnegative.
    ratio = 1.0;
    icon = 0;
    for (int k = 1; k <= mcon; ++k) {
      if (vmultd(k) < 0.0) {
        const double t = vmultc(k) / (vmultc(k) - vmultd(k));
        if (t < ratio) {
          ratio = t;
          icon = k;
        }
      }
    }
    temp = 1.0 - ratio;
    for (int i = 1; i <= n; ++i) dx(i) = temp * dx(i) + ratio * dxnew(i);
    for (int k = 1; k <= mcon; ++k) {
      vmultc(k) = std::max(0.0, temp * vmultc(k) + ratio * vmultd(k));
    }
    if (mcon == m) resmax = resold + ratio * (resmax - resold);

    if (icon > 0) goto iterate;
    if (step == stpful) return full;
  }

stage_two:
  mcon = m + 1;
  icon = mcon;
  iact[mcon] = mcon;
  vmultc(mcon) = 0.0;
  goto new_stage;

stage_end:
  if (mcon == m) goto stage_two;
  full = false;
  return full;
}

class CobylaRun {
 public:
  CobylaRun(const ConstrainedObjective& f, int m, std::vector<double> x0,
            const OptimizerOptions& options)
      : f_(f),
        n_(static_cast<int>(x0.size())),
        m_(m),
        options_(options),
        x_(std::move(x0)),
        con_(static_cast<std::size_t>(m) + 2, 0.0) {}

  OptimizerResult run();

 private:
  // Evaluates at x_, filling con_ with constraints, f, and max violation.
  bool evaluate();

  const ConstrainedObjective& f_;
  int n_;
  int m_;
  OptimizerOptions options_;
  std::vector<double> x_;
  std::vector<double> con_;  // 0-based: c_1..c_m, f, resmax
  int evaluations_ = 0;
  double f_value_ = 0.0;
  double resmax_ = 0.0;
};

bool CobylaRun::evaluate() {
  if (evaluations_ >= options_.max_evaluations && evaluations_ > 0) return false;
  ++evaluations_;
  f_value_ = f_(x_, std::span<double>(con_.data(), static_cast<std::size_t>(m_)));
  resmax_ = 0.0;
  for (int k = 0; k < m_; ++k) resmax_ = std::max(resmax_, -con_[k]);
  con_[m_] = f_value_;
  con_[m_ + 1] = resmax_;
  return true;
}

OptimizerResult CobylaRun::run() {
  const int n = n_, m = m_;
  const int np = n + 1, mp = m + 1, mpp = m + 2;
  constexpr double kAlpha = 0.25, kBeta = 2.1, kGamma = 0.5, kDelta = 1.1;
  double rho = options_.rho_begin;
  const double rhoend = options_.rho_end;
  double parmu = 0.0;

  // Column np of sim is the best vertex; columns 1..n are edge displacements
  // from it and simi is their inverse. datmat holds (c, f, resmax) per vertex.
  Mat sim(n, np), simi(n, n), datmat(mpp, np), a(n, mp);
  Vec vsig(n), veta(n), sigbar(n), dx(n), w(n), con(mpp);
  auto x = [&](int i) -> double& { return x_[i - 1]; };
  auto load_con = [&] {
    for (int k = 1; k <= mpp; ++k) con(k) = con_[k - 1];
  };

  for (int i = 1; i <= n; ++i) {
    sim(i, np) = x(i);
    sim(i, i) = rho;
    simi(i, i) = 1.0 / rho;
  }
  int jdrop = np;
  bool in_trust_step = false;
  bool acceptable = true;
  bool full_step = false;
  double prerec = 0.0, prerem = 0.0, parsig = 0.0, pareta = 0.0;
  StopReason reason = StopReason::converged;

  // Initial simplex: the start point and one step of rho along each axis.
  for (;;) {
    if (!evaluate()) {
      reason = StopReason::max_evaluations;
      goto finish;
    }
    load_con();
    for (int k = 1; k <= mpp; ++k) datmat(k, jdrop) = con(k);
    if (jdrop <= n) {
      if (datmat(mp, np) <= f_value_) {
        x(jdrop) = sim(jdrop, np);
      } else {
        sim(jdrop, np) = x(jdrop);
        for (int k = 1; k <= mpp; ++k) {
          datmat(k, jdrop) = datmat(k, np);
          datmat(k, np) = con(k);
        }
        for (int k = 1; k <= jdrop; ++k) {
          sim(jdrop, k) = -rho;
          double t = 0.0;
          for (int i = k; i <= jdrop; ++i) t -= simi(i, k);
          simi(jdrop, k) = t;
        }
      }
    }
    if (evaluations_ > n) break;
    jdrop = evaluations_;
    x(jdrop) += rho;
  }
  in_trust_step = true;

  for (;;) {
  select_best:
    {
      // Move the vertex with the least merit into the pole position.
      double phimin = datmat(mp, np) + parmu * datmat(mpp, np);
      int nbest = np;
      for (int j = 1; j <= n; ++j) {
        const double t = datmat(mp, j) + parmu * datmat(mpp, j);
        if (t < phimin) {
          nbest = j;
          phimin = t;
        } else if (t == phimin && parmu == 0.0 && datmat(mpp, j) < datmat(mpp, nbest)) {
          nbest = j;
        }
      }
      if (nbest <= n) {
        for (int i = 1; i <= mpp; ++i) std::swap(datmat(i, np), datmat(i, nbest));
        for (int i = 1; i <= n; ++i) {
          const double t = sim(i, nbest);
          sim(i, nbest) = 0.0;
          sim(i, np) += t;
          double tempa = 0.0;
          for (int k = 1; k <= n; ++k) {
            sim(i, k) -= t;
            tempa -= simi(k, i);
          }
          simi(nbest, i) = tempa;
        }
      }

      double error = 0.0;
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          double t = i == j ? -1.0 : 0.0;
          for (int k = 1; k <= n; ++k) t += simi(i, k) * sim(k, j);
          error = std::max(error, std::abs(t));
        }
      }
      if (error > 0.1) {
        reason = StopReason::rounding_errors;
        goto finish;
      }

      // Linear models; column mp of a holds minus the objective gradient.
      for (int k = 1; k <= mp; ++k) {
        con(k) = -datmat(k, np);
        for (int j = 1; j <= n; ++j) w(j) = datmat(k, j) + con(k);
        for (int i = 1; i <= n; ++i) {
          double t = 0.0;
          for (int j = 1; j <= n; ++j) t += w(j) * simi(j, i);
          a(i, k) = k == mp ? -t : t;
        }
      }

      acceptable = true;
      parsig = kAlpha * rho;
      pareta = kBeta * rho;
      for (int j = 1; j <= n; ++j) {
        double wsig = 0.0, weta = 0.0;
        for (int i = 1; i <= n; ++i) {
          wsig += simi(j, i) * simi(j, i);
          weta += sim(i, j) * sim(i, j);
        }
        vsig(j) = 1.0 / std::sqrt(wsig);
        veta(j) = std::sqrt(weta);
        if (vsig(j) < parsig || veta(j) > pareta) acceptable = false;
      }

      if (!in_trust_step && !acceptable) {
        // Geometry step: replace the worst-shaped vertex.
        jdrop = 0;
        double t = pareta;
        for (int j = 1; j <= n; ++j) {
          if (veta(j) > t) {
            jdrop = j;
            t = veta(j);
          }
        }
        if (jdrop == 0) {
          for (int j = 1; j <= n; ++j) {
            if (vsig(j) < t) {
              jdrop = j;
              t = vsig(j);
            }
          }
        }
        t = kGamma * rho * vsig(jdrop);
        for (int i = 1; i <= n; ++i) dx(i) = t * simi(jdrop, i);
        double cvmaxp = 0.0, cvmaxm = 0.0, sum = 0.0;
        for (int k = 1; k <= mp; ++k) {
          sum = 0.0;
          for (int i = 1; i <= n; ++i) sum += a(i, k) * dx(i);
          if (k < mp) {
            const double c = datmat(k, np);
            cvmaxp = std::max(cvmaxp, -sum - c);
            cvmaxm = std::max(cvmaxm, sum - c);
          }
        }
        const double dxsign = parmu * (cvmaxp - cvmaxm) > sum + sum ? -1.0 : 1.0;
        t = 0.0;
        for (int i = 1; i <= n; ++i) {
          dx(i) *= dxsign;
          sim(i, jdrop) = dx(i);
          t += simi(jdrop, i) * dx(i);
        }
        for (int i = 1; i <= n; ++i) simi(jdrop, i) /= t;
        for (int j = 1; j <= n; ++j) {
          if (j != jdrop) {
            double s = 0.0;
            for (int i = 1; i <= n; ++i) s += simi(j, i) * dx(i);
            for (int i = 1; i <= n; ++i) simi(j, i) -= s * simi(jdrop, i);
          }
          x(j) = sim(j, np) + dx(j);
        }
        if (!evaluate()) {
          reason = StopReason::max_evaluations;
          goto finish;
        }
        load_con();
        for (int k = 1; k <= mpp; ++k) datmat(k, jdrop) = con(k);
        in_trust_step = true;
        continue;
      }

      // Trust-region step from the best vertex.
      full_step = trust_region_step(n, m, a, con, rho, dx);
      if (!full_step) {
        double len2 = 0.0;
        for (int i = 1; i <= n; ++i) len2 += dx(i) * dx(i);
        if (len2 < 0.25 * rho * rho) {
          in_trust_step = true;
          goto shrink;
        }
      }

      double resnew = 0.0, sum = 0.0;
      con(mp) = 0.0;
      for (int k = 1; k <= mp; ++k) {
        sum = con(k);
        for (int i = 1; i <= n; ++i) sum -= a(i, k) * dx(i);
        if (k < mp) resnew = std::max(resnew, sum);
      }

      // Raise the penalty parameter if the predicted violation reduction
      // calls for it; this may change which vertex is best.
      double barmu = 0.0;
      prerec = datmat(mpp, np) - resnew;
      if (prerec > 0.0) barmu = sum / prerec;
      if (parmu < 1.5 * barmu) {
        parmu = 2.0 * barmu;
        const double phi = datmat(mp, np) + parmu * datmat(mpp, np);
        for (int j = 1; j <= n; ++j) {
          const double t = datmat(mp, j) + parmu * datmat(mpp, j);
          if (t < phi) goto select_best;
          if (t == phi && parmu == 0.0 && datmat(mpp, j) < datmat(mpp, np)) {
            goto select_best;
          }
        }
      }
      prerem = parmu * prerec - sum;

      for (int i = 1; i <= n; ++i) x(i) = sim(i, np) + dx(i);
      in_trust_step = true;
      if (!evaluate()) {
        reason = StopReason::max_evaluations;
        goto finish;
      }
      load_con();

      const double vmold = datmat(mp, np) + parmu * datmat(mpp, np);
      const double vmnew = f_value_ + parmu * resmax_;
      double trured = vmold - vmnew;
      if (parmu == 0.0 && f_value_ == datmat(mp, np)) {
        prerem = prerec;
        trured = datmat(mpp, np) - resmax_;
      }

      // Pick the vertex that the trial point replaces; mandatory when the
      // merit function decreased.
      double ratio = trured <= 0.0 ? 1.0 : 0.0;
      jdrop = 0;
      for (int j = 1; j <= n; ++j) {
        double t = 0.0;
        for (int i = 1; i <= n; ++i) t += simi(j, i) * dx(i);
        t = std::abs(t);
        if (t > ratio) {
          jdrop = j;
          ratio = t;
        }
        sigbar(j) = t * vsig(j);
      }
      double edgmax = kDelta * rho;
      int ell = 0;
      for (int j = 1; j <= n; ++j) {
        if (sigbar(j) >= parsig || sigbar(j) >= vsig(j)) {
          double t = veta(j);
          if (trured > 0.0) {
            t = 0.0;
            for (int i = 1; i <= n; ++i) t += (dx(i) - sim(i, j)) * (dx(i) - sim(i, j));
            t = std::sqrt(t);
          }
          if (t > edgmax) {
            ell = j;
            edgmax = t;
          }
        }
      }
      if (ell > 0) jdrop = ell;
      if (jdrop == 0) goto shrink;

      {
        double t = 0.0;
        for (int i = 1; i <= n; ++i) {
          sim(i, jdrop) = dx(i);
          t += simi(jdrop, i) * dx(i);
        }
        for (int i = 1; i <= n; ++i) simi(jdrop, i) /= t;
        for (int j = 1; j <= n; ++j) {
          if (j == jdrop) continue;
          double s = 0.0;
          for (int i = 1; i <= n; ++i) s += simi(j, i) * dx(i);
          for (int i = 1; i <= n; ++i) simi(j, i) -= s * simi(jdrop, i);
        }
        for (int k = 1; k <= mpp; ++k) datmat(k, jdrop) = con(k);
      }
      if (trured > 0.0 && trured >= 0.1 * prerem) continue;
    }

  shrink:
    if (!acceptable) {
      in_trust_step = false;
      continue;
    }
    if (rho <= rhoend) break;
    rho *= 0.5;
    if (rho <= 1.5 * rhoend) rho = rhoend;
    if (parmu > 0.0) {
      double denom = 0.0, cmin = 0.0, cmax = 0.0;
      for (int k = 1; k <= mp; ++k) {
        cmin = cmax = datmat(k, np);
        for (int i = 1; i <= n; ++i) {
          cmin = std::min(cmin, datmat(k, i));
          cmax = std::max(cmax, datmat(k, i));
        }
        if (k <= m && cmin < 0.5 * cmax) {
          const double t = std::max(cmax, 0.0) - cmin;
          denom = denom <= 0.0 ? t : std::min(denom, t);
        }
      }
      if (denom == 0.0) {
        parmu = 0.0;
      } else if (cmax - cmin < parmu * denom) {
        parmu = (cmax - cmin) / denom;
      }
    }
  }

finish:
  OptimizerResult result;
  result.reason = reason;
  result.evaluations = evaluations_;
  result.x.resize(n);
  if (evaluations_ > n) {
    for (int i = 1; i <= n; ++i) result.x[i - 1] = sim(i, np);
    result.value = datmat(mp, np);
  } else {
    // Budget ran out while building the simplex.
    result.x = x_;
    result.value = f_value_;
  }
  return result;
}

void check_start(const std::vector<double>& x0, const OptimizerOptions& options) {
  if (x0.empty()) throw ContractError("optimizer needs at least one variable");
  if (!(options.rho_begin > 0.0) || !(options.rho_end > 0.0) ||
      options.rho_end > options.rho_begin) {
    throw ContractError("optimizer needs 0 < rho_end <= rho_begin");
  }
  if (options.max_evaluations < 1) throw ContractError("max_evaluations must be >= 1");
}

}  // namespace

OptimizerResult cobyla_minimize(const ConstrainedObjective& f, int constraints,
                                std::vector<double> x0, const OptimizerOptions& options) {
  check_start(x0, options);
  if (constraints < 0) throw ContractError("constraint count must be >= 0");
  return CobylaRun(f, constraints, std::move(x0), options).run();
}

OptimizerResult Cobyla::minimize(const Objective& f, std::vector<double> x0,
                                 const OptimizerOptions& options) const {
  return cobyla_minimize(
      [&f](std::span<const double> x, std::span<double>) { return f(x); }, 0,
      std::move(x0), options);
}

}  // namespace rotorq
