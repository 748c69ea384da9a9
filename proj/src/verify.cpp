#include "sqjump/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "sqjump/bch.hpp"
#include "sqjump/fock.hpp"
#include "sqjump/protocol.hpp"
#include "sqjump/squeezed_state.hpp"

namespace sqjump {

bool RunReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

namespace {

constexpr double kPi = std::numbers::pi;

using Engine = std::mt19937_64;

double uniform(Engine& eng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(eng);
}

Complex random_complex(Engine& eng, double box) {
  return Complex(uniform(eng, -box, box), uniform(eng, -box, box));
}

// lambda coefficients of the physical two-jump family at (omega1, t), omega0=1
LambdaSet physical_lambdas(double omega1, double t) {
  const double eta = (omega1 * omega1 - 1.0) / 2.0;
  LambdaSet l;
  l.lambda_plus = Complex(0.0, -eta * t);
  l.lambda_minus = l.lambda_plus;
  l.lambda_three = Complex(0.0, -2.0 * (1.0 + eta) * t);
  return l;
}

// measured worst value across a sampling loop
struct Worst {
  double value = 0.0;
  void feed(double v) { value = std::max(value, std::abs(v)); }
};

struct CheckContext {
  const VerifyOptions& options;
  Engine& master;
  RunReport& report;

  void run(const std::string& name, double tolerance,
           const std::function<double(Engine&)>& body) {
    Engine eng(master());
    CheckResult result;
    result.name = name;
    result.tolerance = tolerance;
    const auto start = std::chrono::steady_clock::now();
    try {
      result.deviation = body(eng);
      result.passed = result.deviation <= tolerance;
    } catch (const std::exception& e) {
      result.passed = false;
      result.deviation = std::numeric_limits<double>::quiet_NaN();
      result.note = e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    report.checks.push_back(result);
  }
};

// 2x2 faithful non-unitary representation used for exact identity checks
double su11_two_dim_deviation(const LambdaSet& l, const FactorizedEvolution& fe) {
  ComplexMatrix Kp = ComplexMatrix::Zero(2, 2), Km = ComplexMatrix::Zero(2, 2),
                K3 = ComplexMatrix::Zero(2, 2);
  Kp(0, 1) = 1.0;
  Km(1, 0) = -1.0;
  K3(0, 0) = 0.5;
  K3(1, 1) = -0.5;
  const ComplexMatrix combined =
      expm(l.lambda_plus * Kp + l.lambda_minus * Km + l.lambda_three * K3);
  ComplexMatrix middle = ComplexMatrix::Zero(2, 2);
  middle(0, 0) = std::exp(0.5 * fe.log_Lambda_three);
  middle(1, 1) = std::exp(-0.5 * fe.log_Lambda_three);
  const ComplexMatrix product =
      expm(fe.Lambda_plus * Kp) * middle * expm(fe.Lambda_minus * Km);
  return max_abs_diff(combined, product);
}

}  // namespace

RunReport run_verification(const VerifyOptions& options) {
  if (options.n_random < 1) throw UsageError("verify: n_random must be >= 1");
  int fock_n = options.fock_truncation;
  if (fock_n < 8) throw UsageError("verify: fock truncation must be >= 8");
  fock_n -= fock_n % 2;

  RunReport report;
  Engine master(options.seed);
  CheckContext ctx{options, master, report};
  const int n = options.n_random;

  ctx.run("bch/identity-law", 1e-12, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < n; ++i) {
      LambdaSet l;
      l.lambda_plus = Complex(0.0, uniform(eng, -3.0, 3.0));
      l.lambda_minus = l.lambda_plus;
      l.lambda_three = Complex(0.0, uniform(eng, -6.0, 6.0));
      const FactorizedEvolution fe = factorize(l);
      worst.feed(std::abs(fe.Lambda_three) + std::norm(fe.Lambda_plus) - 1.0);
    }
    return worst.value;
  });

  ctx.run("bch/branch-invariance", 1e-13, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < n; ++i) {
      LambdaSet l;
      l.lambda_plus = random_complex(eng, 1.5);
      l.lambda_minus = random_complex(eng, 1.5);
      l.lambda_three = random_complex(eng, 1.5);
      l.sign = (i % 2 == 0) ? AlgebraSign::su11 : AlgebraSign::su2;
      const Complex nu = nu_of(l);
      FactorizedEvolution a, b;
      try {
        a = factorize_with_nu(l, nu);
        b = factorize_with_nu(l, -nu);
      } catch (const DegenerateFactorization&) {
        continue;
      }
      worst.feed(std::abs(a.Lambda_plus - b.Lambda_plus));
      worst.feed(std::abs(a.Lambda_minus - b.Lambda_minus));
      worst.feed(std::abs(a.Lambda_three - b.Lambda_three));
      worst.feed(std::abs(a.log_Lambda_three - b.log_Lambda_three));
    }
    return worst.value;
  });

  ctx.run("bch/nu-zero-continuity", 1e-8, [&](Engine&) {
    LambdaSet l;
    l.lambda_plus = Complex(0.7, 0.0);
    l.lambda_minus = Complex(0.35, 0.1);
    l.lambda_three = Complex(1.0, -0.2);
    const FactorizedEvolution fe = factorize_with_nu(l, Complex(0.0, 1e-10));
    const Complex denom = 1.0 - 0.5 * l.lambda_three;
    Worst worst;
    worst.feed(std::abs(fe.Lambda_plus - l.lambda_plus / denom));
    worst.feed(std::abs(fe.Lambda_minus - l.lambda_minus / denom));
    worst.feed(std::abs(fe.Lambda_three - 1.0 / (denom * denom)));
    return worst.value;
  });

  ctx.run("bch/su2-representation-2x2", 1e-12, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < n; ++i) {
      LambdaSet l;
      l.lambda_plus = random_complex(eng, 1.0);
      l.lambda_minus = random_complex(eng, 1.0);
      l.lambda_three = random_complex(eng, 1.0);
      l.sign = AlgebraSign::su2;
      worst.feed(verify_factorization(l, factorize(l), 2));
    }
    return worst.value;
  });

  ctx.run("bch/su11-representation-2x2", 1e-10, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < n; ++i) {
      LambdaSet l;
      l.lambda_plus = random_complex(eng, 1.0);
      l.lambda_minus = random_complex(eng, 1.0);
      l.lambda_three = random_complex(eng, 1.0);
      worst.feed(su11_two_dim_deviation(l, factorize(l)));
    }
    return worst.value;
  });

  ctx.run("bch/su11-representation-fock", 1e-8, [&](Engine& eng) {
    // small exponents: the truncated exponential of the combined generator
    // is only trustworthy when the flow stays far from the truncation edge
    Worst worst;
    for (int i = 0; i < n; ++i) {
      LambdaSet l;
      l.lambda_plus = random_complex(eng, 0.02);
      l.lambda_minus = random_complex(eng, 0.02);
      l.lambda_three = random_complex(eng, 0.02);
      worst.feed(verify_factorization(l, factorize(l), 64, 16));
    }
    return worst.value;
  });

  ctx.run("fock/hamiltonian-hermiticity", 1e-14, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < std::min(n, 16); ++i) {
      const double omega = uniform(eng, 0.3, 5.0);
      worst.feed(hermiticity_defect(hamiltonian(omega, 64).entries));
    }
    return worst.value;
  });

  const TruncationPolicy verify_policy{std::min(32, fock_n / 4), 1e-9};

  ctx.run("fock/propagation-unitarity", 1e-10, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < std::min(n, 16); ++i) {
      const double omega = uniform(eng, 1.0 / 3.0, 3.0);
      const double t = uniform(eng, 0.0, 2.0 * kPi);
      const FockVector out = propagate(vacuum_state(fock_n),
                                       hamiltonian(omega, fock_n), t, verify_policy);
      worst.feed(out.norm() - 1.0);
    }
    return worst.value;
  });

  ctx.run("fock/parity-conservation", 1e-12, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < std::min(n, 16); ++i) {
      const double omega = uniform(eng, 1.0 / 3.0, 3.0);
      const double t = uniform(eng, 0.0, 2.0 * kPi);
      const FockVector out = propagate(vacuum_state(fock_n),
                                       hamiltonian(omega, fock_n), t, verify_policy);
      double odd = 0.0;
      for (int m = 1; m <= out.truncation(); m += 2) odd += std::norm(out.amplitudes[m]);
      worst.feed(odd);
    }
    return worst.value;
  });

  ctx.run("fock/propagator-vs-expm", 1e-10, [&](Engine& eng) {
    Worst worst;
    const int small_n = 48;
    for (int i = 0; i < std::min(n, 8); ++i) {
      const double omega = uniform(eng, 0.5, 2.0);
      const double t = uniform(eng, 0.0, 2.0);
      const OperatorMatrix h = hamiltonian(omega, small_n);
      const FockVector via_eig =
          propagate(vacuum_state(small_n), h, t, TruncationPolicy{0, 1.0});
      const ComplexMatrix u = expm(Complex(0.0, -t) * h.entries);
      const ComplexVector via_expm = u * vacuum_state(small_n).amplitudes;
      worst.feed((via_eig.amplitudes - via_expm).cwiseAbs().maxCoeff());
    }
    return worst.value;
  });

  ctx.run("squeezed/expansion-parity", 0.0, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < std::min(n, 16); ++i) {
      const SqueezedState s(uniform(eng, 0.0, 1.5), uniform(eng, 0.0, 2.0 * kPi));
      const FockVector v = to_fock(s, recommended_truncation(s.r));
      for (int m = 1; m <= v.truncation(); m += 2) worst.feed(std::abs(v.amplitudes[m]));
    }
    return worst.value;
  });

  ctx.run("squeezed/variance-vs-oracle", 1e-8, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < std::min(n, 12); ++i) {
      const SqueezedState s(uniform(eng, 0.0, 2.0), uniform(eng, 0.0, 2.0 * kPi));
      const double lambda = uniform(eng, 0.0, kPi);
      const FockVector v = to_fock(s, recommended_truncation(s.r));
      worst.feed(variance(s, lambda) - variance_of_quadrature(v, lambda));
    }
    return worst.value;
  });

  ctx.run("squeezed/heisenberg-bound", 1e-12, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < n; ++i) {
      const SqueezedState s(uniform(eng, 0.0, 2.0), uniform(eng, 0.0, 2.0 * kPi));
      const double lambda = uniform(eng, 0.0, kPi);
      const double product = variance(s, lambda) * variance(s, lambda + kPi / 2.0);
      worst.feed(std::max(0.0, 0.25 - product));
    }
    return worst.value;
  });

  // protocol-level oracle comparisons; omega1/omega0 in [1/3, 3] keeps the
  // requested truncation honest (r <= ln 3)
  const auto random_protocol = [&](Engine& eng) {
    const double w1 = std::exp(uniform(eng, std::log(1.0 / 3.0), std::log(3.0)));
    const double tau = uniform(eng, 0.1, kPi);
    return JumpProtocol(1.0, w1, tau);
  };

  ctx.run("protocol/oracle-fidelity", 1e-8, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < n; ++i) {
      const JumpProtocol p = random_protocol(eng);
      const double t = uniform(eng, 0.0, 3.0 * p.tau);
      const ProtocolState analytic = state_at(p, t);
      const FockVector a = to_fock(analytic.squeezed, fock_n, 1e-6);

      FockVector b = vacuum_state(fock_n);
      b = propagate(b, hamiltonian(p.omega1, fock_n), std::min(t, p.tau),
                    verify_policy);
      if (t > p.tau) {
        b = propagate(b, hamiltonian(p.omega0, fock_n), t - p.tau, verify_policy);
      }
      worst.feed(1.0 - fidelity(a, b));
    }
    return worst.value;
  });

  ctx.run("protocol/distribution-vs-oracle", 1e-8, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < std::min(n, 12); ++i) {
      const JumpProtocol p = random_protocol(eng);
      const FockVector settled = propagate(vacuum_state(fock_n),
                                           hamiltonian(p.omega1, fock_n), p.tau,
                                           verify_policy);
      const std::vector<double> oracle = number_distribution(settled);
      const int n_max = std::min(128, fock_n);
      const std::vector<double> analytic = photon_distribution(p, n_max, 1e-6);
      for (int m = 0; m <= n_max; ++m) worst.feed(analytic[m] - oracle[m]);
    }
    return worst.value;
  });

  ctx.run("protocol/variance-vs-oracle", 1e-8, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < std::min(n, 12); ++i) {
      const JumpProtocol p = random_protocol(eng);
      const double t = uniform(eng, 0.0, 3.0 * p.tau);
      const double lambda = uniform(eng, 0.0, kPi);
      FockVector b = vacuum_state(fock_n);
      b = propagate(b, hamiltonian(p.omega1, fock_n), std::min(t, p.tau),
                    verify_policy);
      if (t > p.tau) {
        b = propagate(b, hamiltonian(p.omega0, fock_n), t - p.tau, verify_policy);
      }
      worst.feed(variance_at(p, t, lambda) - variance_of_quadrature(b, lambda));
    }
    return worst.value;
  });

  ctx.run("protocol/consistency-triangle", 1e-12, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < n; ++i) {
      const JumpProtocol p = random_protocol(eng);
      const double z = persistence(p);
      worst.feed(z - 1.0 / std::cosh(squeezing_parameter(p, p.tau)));
      worst.feed(z - photon_probability(p, 0));
    }
    return worst.value;
  });

  ctx.run("protocol/frozen-r", 0.0, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < n; ++i) {
      const JumpProtocol p = random_protocol(eng);
      const double later = p.tau + uniform(eng, 0.0, 5.0);
      worst.feed(squeezing_parameter(p, later) - squeezing_parameter(p, p.tau));
    }
    return worst.value;
  });

  ctx.run("protocol/r-continuity-at-zero", 1e-6, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < n; ++i) {
      worst.feed(squeezing_parameter(random_protocol(eng), 1e-7));
    }
    return worst.value;
  });

  ctx.run("protocol/variance-continuity-at-tau", 1e-9, [&](Engine& eng) {
    Worst worst;
    const double delta = 1e-12;
    for (int i = 0; i < n; ++i) {
      const JumpProtocol p = random_protocol(eng);
      const double lambda = uniform(eng, 0.0, kPi);
      worst.feed(variance_at(p, p.tau - delta, lambda) -
                 variance_at(p, p.tau + delta, lambda));
    }
    return worst.value;
  });

  ctx.run("protocol/persistence-specials", 1e-12, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < std::min(n, 16); ++i) {
      const double w1 = uniform(eng, 0.4, 4.0);
      for (int l = 1; l <= 5; ++l) {
        worst.feed(persistence(JumpProtocol(1.0, w1, l * kPi / w1)) - 1.0);
      }
    }
    worst.feed(persistence(JumpProtocol(1.0, 1.0, 1.0)) - 1.0);
    return worst.value;
  });

  ctx.run("protocol/heisenberg-floor", 1e-12, [&](Engine& eng) {
    Worst worst;
    for (int i = 0; i < std::min(n, 8); ++i) {
      const JumpProtocol p = random_protocol(eng);
      for (int k = 0; k <= 200; ++k) {
        const double t = 3.0 * p.tau * k / 200.0;
        for (int a = 0; a < 8; ++a) {
          const double lambda = kPi * a / 8.0;
          const double product =
              variance_at(p, t, lambda) * variance_at(p, t, lambda + kPi / 2.0);
          worst.feed(std::max(0.0, 0.25 - product));
        }
      }
    }
    return worst.value;
  });

  return report;
}

std::string format_report(const RunReport& report) {
  std::size_t width = 4;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());

  std::ostringstream out;
  char line[256];
  for (const auto& c : report.checks) {
    std::snprintf(line, sizeof line, "%-*s  %s  measured %-12.3e tol %-8.1e %7.3f s",
                  static_cast<int>(width), c.name.c_str(),
                  c.passed ? "PASS" : "FAIL", c.deviation, c.tolerance, c.seconds);
    out << line;
    if (!c.note.empty()) out << "  [" << c.note << "]";
    out << '\n';
  }
  int failed = 0;
  for (const auto& c : report.checks) failed += c.passed ? 0 : 1;
  out << (report.all_passed() ? "all checks passed"
                              : std::to_string(failed) + " check(s) failed")
      << " (" << report.checks.size() << " total)\n";
  return out.str();
}

std::string report_to_json(const RunReport& report, const VerifyOptions& options) {
  nlohmann::json j;
  j["n_random"] = options.n_random;
  j["seed"] = options.seed;
  j["fock_n"] = options.fock_truncation;
  j["all_passed"] = report.all_passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    jc["deviation"] = c.deviation;
    jc["tolerance"] = c.tolerance;
    jc["seconds"] = c.seconds;
    if (!c.note.empty()) jc["note"] = c.note;
    j["checks"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

}  // namespace sqjump
