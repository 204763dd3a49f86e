#include "origami/lyapunov.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "origami/error.hpp"
#include "origami/linalg.hpp"

namespace origami {

namespace {

using Mat = Eigen::MatrixXd;

Mat to_eigen(const IntMatrix& m) {
  Mat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).get_d();
  return r;
}

// Neumaier compensated sum
class Accumulator {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0, comp_ = 0.0;
};

// powers[g][a] = generator g to the a-th power, a = 0..cap
struct PowerTable {
  std::array<std::vector<Mat>, 2> powers;
  PowerTable(const IntMatrix& t, const IntMatrix& s, unsigned cap) {
    std::array<IntMatrix, 2> base{t, s};
    for (int g = 0; g < 2; ++g) {
      IntMatrix cur = IntMatrix::identity(base[g].rows());
      for (unsigned a = 0; a <= cap; ++a) {
        powers[g].push_back(to_eigen(cur));
        cur = cur * base[g];
      }
    }
  }
};

// Tracks a frame under left multiplication and accumulates log|R_ii|.
class Frame {
 public:
  explicit Frame(std::size_t dim) : q_(Mat::Identity(dim, dim)), logs_(dim) {}
  void apply(const Mat& a) { q_ = a * q_; }
  void normalize() {
    if (q_.rows() == 0) return;
    Eigen::HouseholderQR<Mat> qr(q_);
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    Mat q = qr.householderQ() * Mat::Identity(q_.rows(), q_.cols());
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      double d = r(i, i);
      logs_[i].add(std::log(std::abs(d)));
      if (d < 0) q.col(i) = -q.col(i);
    }
    q_ = q;
  }
  double max_abs() const { return q_.size() ? q_.cwiseAbs().maxCoeff() : 0.0; }
  std::vector<double> logs() const {
    std::vector<double> out;
    for (const auto& l : logs_) out.push_back(l.value());
    return out;
  }

 private:
  Mat q_;
  std::vector<Accumulator> logs_;
};

struct TrialResult {
  std::vector<double> spectrum;     // normalized, length 2g-2
  std::vector<double> inverse_top;  // normalized top g-1 of the inverse-transpose run
  std::array<double, 2> taut{0.0, 0.0};
};

// keeps the spread between top and bottom directions well inside double precision
constexpr double kGrowthLimit = 1e4;

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

TrialResult run_trial(const PowerTable& restricted, const PowerTable& inverse_transpose, const PowerTable& taut,
                      std::size_t dim, std::uint64_t seed, const LyapunovOptions& opt) {
  std::mt19937_64 rng(seed);
  Frame frame(dim), dual(opt.inverse_transpose_check ? dim : 0), tframe(2);
  auto fresh = [&] {
    double x = 0.0;
    while (x <= 0.0) x = uniform01(rng);
    return x;
  };
  double x = fresh();
  for (std::size_t step = 0; step < opt.iterations; ++step) {
    // Gauss map on a random slope; restart from a fresh slope if the orbit collapses
    if (x < 1e-12) x = fresh();
    double inv = 1.0 / x;
    double a = std::floor(inv);
    x = inv - a;
    unsigned digit = a < 1.0 ? 1u : static_cast<unsigned>(std::min<double>(a, opt.digit_cap));
    int g = static_cast<int>(step & 1);
    frame.apply(restricted.powers[g][digit]);
    if (opt.inverse_transpose_check) dual.apply(inverse_transpose.powers[g][digit]);
    tframe.apply(taut.powers[g][digit]);
    bool last = step + 1 == opt.iterations;
    if (last || (step + 1) % opt.reorthonormalize_every == 0 || std::max(frame.max_abs(), tframe.max_abs()) > kGrowthLimit) {
      frame.normalize();
      if (opt.inverse_transpose_check) dual.normalize();
      tframe.normalize();
    }
  }
  TrialResult r;
  auto tl = tframe.logs();
  double scale = tl[0];
  r.taut = {tl[0] / scale, tl[1] / scale};
  for (double l : frame.logs()) r.spectrum.push_back(l / scale);
  if (opt.inverse_transpose_check) {
    auto dl = dual.logs();
    for (std::size_t i = 0; i < dim / 2; ++i) r.inverse_top.push_back(dl[i] / scale);
  }
  return r;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

LyapunovEstimate estimate_exponents(const IntMatrix& restricted_T, const IntMatrix& restricted_S,
                                    const IntMatrix& tautological_T, const IntMatrix& tautological_S,
                                    const LyapunovOptions& opt) {
  require(opt.trials > 0, ErrorCode::DomainError, "trials must be positive");
  require(opt.iterations >= 1000, ErrorCode::DomainError, "iterations must be at least 1000");
  require(opt.digit_cap > 0 && opt.reorthonormalize_every > 0, ErrorCode::DomainError,
          "digit cap and re-orthonormalization interval must be positive");
  require(restricted_T.rows() == restricted_T.cols() && restricted_S.rows() == restricted_T.rows() &&
              restricted_S.cols() == restricted_T.rows() && restricted_T.rows() % 2 == 0,
          ErrorCode::ShapeMismatch, "restricted generators must be square of equal even size");
  require(tautological_T.rows() == 2 && tautological_T.cols() == 2 && tautological_S.rows() == 2 &&
              tautological_S.cols() == 2,
          ErrorCode::ShapeMismatch, "tautological blocks must be 2x2");
  const std::size_t dim = restricted_T.rows();

  PowerTable restricted(restricted_T, restricted_S, opt.digit_cap);
  PowerTable taut(tautological_T, tautological_S, opt.digit_cap);
  // (A^a)^{-T} = (A^{-T})^a
  IntMatrix itT = dim ? inverse_unimodular(restricted_T).transpose() : restricted_T;
  IntMatrix itS = dim ? inverse_unimodular(restricted_S).transpose() : restricted_S;
  PowerTable inverse_transpose(itT, itS, opt.inverse_transpose_check ? opt.digit_cap : 0);

  std::vector<std::uint64_t> seeds(opt.trials);
  std::uint64_t state = opt.seed;
  for (auto& s : seeds) s = splitmix64(state);

  std::vector<TrialResult> results(opt.trials);
  unsigned workers = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, opt.trials));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < opt.trials; t += workers)
          results[t] = run_trial(restricted, inverse_transpose, taut, dim, seeds[t], opt);
      });
  }

  LyapunovEstimate est;
  est.iterations = opt.iterations;
  est.trials = opt.trials;
  est.seed = opt.seed;
  est.digit_cap = opt.digit_cap;
  const double n = static_cast<double>(opt.trials);
  auto mean_of = [&](auto get) {
    Accumulator acc;
    for (const auto& r : results) acc.add(get(r));
    return acc.value() / n;
  };
  auto stderr_of = [&](auto get, double mean) {
    if (opt.trials < 2) return 0.0;
    Accumulator acc;
    for (const auto& r : results) acc.add((get(r) - mean) * (get(r) - mean));
    return std::sqrt(acc.value() / (n - 1) / n);
  };
  for (std::size_t i = 0; i < dim; ++i) est.spectrum.push_back(mean_of([i](const TrialResult& r) { return r.spectrum[i]; }));
  for (std::size_t i = 0; i < dim / 2; ++i) {
    auto get = [i](const TrialResult& r) { return r.spectrum[i]; };
    est.exponents.push_back(est.spectrum[i]);
    est.standard_errors.push_back(stderr_of(get, est.spectrum[i]));
    if (opt.inverse_transpose_check)
      est.inverse_transpose_exponents.push_back(mean_of([i](const TrialResult& r) { return r.inverse_top[i]; }));
  }
  est.tautological_exponents = {mean_of([](const TrialResult& r) { return r.taut[0]; }),
                                mean_of([](const TrialResult& r) { return r.taut[1]; })};
  Accumulator total;
  for (double l : est.spectrum) total.add(l);
  est.volume_residual = std::abs(total.value());
  return est;
}

LyapunovEstimate estimate_exponents(const MonodromyPair& mp, const LyapunovOptions& options) {
  return estimate_exponents(mp.restricted_T, mp.restricted_S, mp.tautological_T, mp.tautological_S, options);
}

}  // namespace origami
