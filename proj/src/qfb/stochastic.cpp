#include "qfb/stochastic.hpp"

#include <cmath>
#include <random>

namespace qfb {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 applied to the combined counter.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct KickTable {
  Mat4 vectors;
  Eigen::Vector4d phases;
  bool trivial = true;
};

KickTable make_kick_table(const Mat4& f_op) {
  KickTable kt;
  kt.trivial = max_abs(f_op) == 0.0;
  if (kt.trivial) return kt;
  Eigen::SelfAdjointEigenSolver<Mat4> es(f_op);
  kt.vectors = es.eigenvectors();
  kt.phases = es.eigenvalues();
  return kt;
}

// exp(-i F x) rho exp(+i F x) through the cached eigendecomposition.
Mat4 apply_kick(const KickTable& kt, const Mat4& rho, double x) {
  if (kt.trivial || x == 0.0) return rho;
  Vec4c phase;
  for (int i = 0; i < 4; ++i)
    phase(i) = std::exp(cd(0.0, -kt.phases(i) * x));
  const Mat4 u = kt.vectors * phase.asDiagonal() * kt.vectors.adjoint();
  return u * rho * u.adjoint();
}

}  // namespace

ConditionedRecord simulate_trajectory(const Mat4& h,
                                      const KossakowskiMatrix& k_rest,
                                      const SmeConfig& cfg,
                                      const DensityMatrix& rho0) {
  if (!(cfg.eta > 0.0) || cfg.eta > 1.0)
    throw Error("eta_out_of_range", strfmt("eta = %g outside (0, 1]", cfg.eta));
  if (!(cfg.dt > 0.0) || cfg.T < 0.0 || (cfg.T > 0.0 && cfg.T < cfg.dt))
    throw Error("bad_grid",
                strfmt("need dt > 0 and T = 0 or T >= dt, got dt = %g, T = %g",
                       cfg.dt, cfg.T));
  const double fherm = max_abs(cfg.F - cfg.F.adjoint());
  if (fherm > 1e-12)
    throw Error("not_hermitian",
                strfmt("feedback operator: max |F - F^dag| = %.3e", fherm));

  const int n_steps = static_cast<int>(std::llround(cfg.T / cfg.dt));
  const double sqrt_eta = std::sqrt(cfg.eta);
  const Mat4 l_op = cfg.L.op;
  const Mat4 l_sum = l_op + l_op.adjoint();

  // Deterministic part: Hamiltonian + monitored channel + remaining channels.
  const Mat16 drift = commutator_super(h) +
                      dissipator_super(kossakowski_of(cfg.L)) +
                      dissipator_super(k_rest);
  const KickTable kick = make_kick_table(cfg.F);

  std::mt19937_64 rng(mix_seed(cfg.seed, 0));
  std::normal_distribution<double> normal(0.0, 1.0);
  const double sqrt_dt = std::sqrt(cfg.dt);

  ConditionedRecord rec;
  rec.times.reserve(n_steps + 1);
  rec.states.reserve(n_steps + 1);
  rec.photocurrent.reserve(n_steps);

  Mat4 rho = rho0.m;
  rec.times.push_back(0.0);
  rec.states.push_back(rho);

  for (int k = 0; k < n_steps; ++k) {
    const double dw = normal(rng) * sqrt_dt;
    const double expect = (l_sum * rho).trace().real();

    Mat4 next = rho + cfg.dt * unvec(drift * vec(rho));
    next += (sqrt_eta * dw) *
            (l_op * rho + rho * l_op.adjoint() - expect * rho);

    const double current = expect * cfg.dt + dw / sqrt_eta;
    next = apply_kick(kick, next, current);

    next = 0.5 * (next + next.adjoint()).eval();

    // Projection repair: one Euler step penetrates the state-space boundary
    // by O(dt) near pure states, so negative eigenvalues up to the noise
    // envelope are clamped to zero. Anything deeper is a genuine runaway
    // (step size too coarse for the coupling strengths).
    Eigen::SelfAdjointEigenSolver<Mat4> es(next);
    const double mineig = es.eigenvalues().minCoeff();
    if (!(mineig > kBlowUpFloor))
      throw Error("state_blow_up",
                  strfmt("conditioned state eigenvalue %.3e at t = %g "
                         "(below %g); reduce dt",
                         mineig, (k + 1) * cfg.dt, kBlowUpFloor));
    if (mineig < 0.0) {
      const Eigen::Vector4d lam = es.eigenvalues().cwiseMax(0.0);
      next = es.eigenvectors() * lam.asDiagonal() *
             es.eigenvectors().adjoint();
    }
    next /= next.trace().real();

    rho = next;
    rec.times.push_back((k + 1) * cfg.dt);
    rec.states.push_back(rho);
    rec.photocurrent.push_back(current);
  }
  return rec;
}

Trajectory ensemble_mean(int n, const Mat4& h,
                         const KossakowskiMatrix& k_rest, const SmeConfig& cfg,
                         const DensityMatrix& rho0,
                         const std::vector<double>& grid) {
  if (n < 1) throw Error("bad_grid", "ensemble size must be >= 1");
  if (grid.empty())
    throw Error("bad_grid", "sampling grid must be nonempty");

  std::vector<int> idx(grid.size());
  const int n_steps = static_cast<int>(std::llround(cfg.T / cfg.dt));
  for (size_t j = 0; j < grid.size(); ++j) {
    const int k = static_cast<int>(std::llround(grid[j] / cfg.dt));
    if (k < 0 || k > n_steps)
      throw Error("bad_grid",
                  strfmt("grid point %g outside [0, T = %g]", grid[j], cfg.T));
    idx[j] = k;
  }

  std::vector<Mat4> acc(grid.size(), Mat4::Zero());
  for (int traj = 0; traj < n; ++traj) {
    SmeConfig one = cfg;
    one.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(traj));
    const ConditionedRecord rec = simulate_trajectory(h, k_rest, one, rho0);
    for (size_t j = 0; j < grid.size(); ++j)
      acc[j] += rec.states[static_cast<size_t>(idx[j])];
  }

  Trajectory traj;
  traj.times = grid;
  for (size_t j = 0; j < grid.size(); ++j) {
    Mat4 mean = acc[j] / double(n);
    mean = 0.5 * (mean + mean.adjoint()).eval();
    mean /= mean.trace().real();
    traj.states.push_back(DensityMatrix{mean});
    traj.concurrences.push_back(concurrence(DensityMatrix{mean}));
    traj.tau.push_back(tau_of(mean));
  }
  return traj;
}

}  // namespace qfb
