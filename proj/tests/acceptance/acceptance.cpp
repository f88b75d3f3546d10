// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// The CLI criterion runs the binary named by MHORN_CLI_PATH.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "mhorn/combinatorics.hpp"
#include "mhorn/horn_body.hpp"
#include "mhorn/horn_system.hpp"
#include "mhorn/io.hpp"
#include "mhorn/spectra.hpp"
#include "mhorn/svf.hpp"
#include "oracles.hpp"

using namespace mhorn;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first failure message; later checks still run so the detail stays useful.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s); first: " + first_};
  }

 private:
  int failures_ = 0;
  std::string first_;
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

SingularSpectrum sp(std::vector<double> v) { return SingularSpectrum(std::move(v)); }

// ---------------------------------------------------------------- 1
// Brute-force c_IJK: LR tableau count by exhaustive filling, shapes computed here.
long long bruteTripleCoefficient(const std::vector<int>& i, const std::vector<int>& j, const std::vector<int>& k,
                                 int n) {
  const int r = static_cast<int>(i.size());
  if (r == 0) return 1;
  const auto a = oracle::schubertShape(i, n);
  const auto b = oracle::schubertShape(j, n);
  const auto c = oracle::schubertShape(k, n);
  int total = 0;
  for (int x : a) total += x;
  for (int x : b) total += x;
  for (int x : c) total += x;
  if (total != r * (n - r)) return 0;
  oracle::Shape dual(static_cast<std::size_t>(r));
  for (int l = 0; l < r; ++l) dual[static_cast<std::size_t>(l)] = (n - r) - oracle::partAt(c, static_cast<std::size_t>(r - 1 - l));
  return static_cast<long long>(oracle::bruteForceLr(a, b, oracle::trimmed(dual)));
}

Outcome catalogCorrectness() {
  Checker check;
  const std::vector<std::size_t> small{2, 5, 14};
  for (int n = 1; n <= 3; ++n) {
    std::size_t brute = 0;
    for (int r = 0; r <= n; ++r) {
      const auto subs = oracle::allSubsets(n, r);
      for (const auto& i : subs)
        for (const auto& j : subs)
          for (const auto& k : subs) brute += bruteTripleCoefficient(i, j, k, n) == 1;
    }
    const auto cat = enumerateCatalog(n);
    check.expect(brute == small[static_cast<std::size_t>(n - 1)], "brute-force count for n=" + std::to_string(n));
    check.expect(cat.size() == brute, "catalog size for n=" + std::to_string(n));
    for (const auto& t : cat.triples) {
      const std::vector<int> i(t.I().begin(), t.I().end()), j(t.J().begin(), t.J().end()),
          k(t.K().begin(), t.K().end());
      check.expect(bruteTripleCoefficient(i, j, k, n) == 1, "brute-force coefficient of " + t.toString());
    }
  }
  for (int n : {4, 5}) {
    const auto a = enumerateCatalog(n);
    const auto b = enumerateCatalog(n);
    check.expect(a.triples == b.triples && catalogToJson(a) == catalogToJson(b),
                 "catalog not deterministic for n=" + std::to_string(n));
    for (const auto& t : a.triples) {
      check.expect(t.satisfiesDimensionIdentity(), "dimension identity fails for " + t.toString());
      const std::vector<int> i(t.I().begin(), t.I().end()), j(t.J().begin(), t.J().end()),
          k(t.K().begin(), t.K().end());
      check.expect(oracle::pieriTripleCoefficient(i, j, k, n) == 1, "Pieri coefficient != 1 for " + t.toString());
    }
  }
  return check.outcome("sizes 2/5/14 match brute force; n=4,5 (43, 144 triples) deterministic, Pieri-verified");
}

// ---------------------------------------------------------------- 2
Outcome additiveGate() {
  Checker check;
  std::mt19937_64 rng(0xadd);
  int total = 0;
  for (int n = 2; n <= 5; ++n) {
    const auto cat = enumerateCatalog(n);
    for (int trial = 0; trial < 200; ++trial, ++total) {
      const auto a = oracle::randomHermitian(n, rng);
      const auto b = oracle::randomHermitian(n, rng);
      const auto alpha = oracle::eigenvaluesDescending(a);
      const auto beta = oracle::eigenvaluesDescending(b);
      const auto rho = oracle::eigenvaluesDescending(a + b);
      double norm = 1.0;
      for (const auto* v : {&alpha, &beta, &rho}) norm = std::max({norm, std::abs(v->front()), std::abs(v->back())});
      const auto rep = additiveHornCheck(alpha, beta, rho, cat, 1e-9 * norm);
      check.expect(rep.pass, "n=" + std::to_string(n) + ": " + (rep.worst() ? rep.worst()->describe() : ""));
    }
  }
  return check.outcome(std::to_string(total) + " Hermitian pairs pass");
}

// ---------------------------------------------------------------- 3
Outcome productValidity() {
  Checker check;
  std::mt19937_64 rng(0x3);
  double worst = INFINITY;
  int deficient = 0;
  for (int n = 2; n <= 5; ++n) {
    const auto cat = enumerateCatalog(n);
    for (int trial = 0; trial < 1000; ++trial) {
      // Every fourth pair is rank-deficient: zeros in A, in B, or in both.
      const bool degenerate = trial % 4 == 0;
      std::uniform_int_distribution<int> zeros(1, n - 1);
      const int mode = (trial / 4) % 3;
      const int za = degenerate && mode != 1 ? zeros(rng) : 0;
      const int zb = degenerate && mode != 0 ? zeros(rng) : 0;
      deficient += degenerate;
      const auto a = testing::matrixWithSpectrum(testing::randomSpectrum(n, rng, 0.05, 4.0, za), rng);
      const auto b = testing::matrixWithSpectrum(testing::randomSpectrum(n, rng, 0.05, 4.0, zb), rng);
      const auto rep = productInequalityCheck(a, b, cat, 1e-8);
      worst = std::min(worst, rep.worstSlack);
      check.expect(rep.pass, "n=" + std::to_string(n) + ": " + (rep.worst() ? rep.worst()->describe() : ""));
    }
  }
  return check.outcome("4000 pairs (" + std::to_string(deficient) + " rank-deficient), worst slack " + fmt(worst));
}

// ---------------------------------------------------------------- 4
Outcome samplingInclusion() {
  Checker check;
  const std::vector<BodySpec> battery{
      BodySpec(sp({2, 1}), sp({3, 0.5})),                 // invertible
      BodySpec(sp({2, 1}), sp({1, 0})),                   // one zero
      BodySpec(sp({3, 2, 1}), sp({2, 1.5, 0.5})),         // invertible
      BodySpec(sp({3, 1, 0}), sp({2, 2, 1})),             // one zero
      BodySpec(sp({2, 0, 0, 0}), sp({3, 2, 1, 0.5})),     // all-zero tail
      BodySpec(sp({2, 2, 1, 1}), sp({1.5, 1.5, 1.5, 0})), // repeated values
  };
  int total = 0;
  for (std::size_t s = 0; s < battery.size(); ++s) {
    const int count = s < 4 ? 1667 : 1666;
    const auto samples = sampleBody(battery[s], count, deriveSeed(RngSeed{0x4}, s));
    for (const auto& nu : samples) {
      ++total;
      const auto rep = membership(battery[s], nu, 1e-8);
      check.expect(rep.pass, "spec " + std::to_string(s) + ": " + (rep.worst() ? rep.worst()->describe() : ""));
    }
  }
  return check.outcome(std::to_string(total) + " Haar samples over 6 specs inside the body");
}

// ---------------------------------------------------------------- 5
Outcome invertibleEquivalence() {
  Checker check;
  std::mt19937_64 rng(0x5);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int members = 0;
  for (int n = 2; n <= 3; ++n) {
    const auto cat = std::make_shared<const TripleCatalog>(enumerateCatalog(n));
    for (int trial = 0; trial < 10000; ++trial) {
      const BodySpec spec(testing::randomSpectrum(n, rng), testing::randomSpectrum(n, rng), cat);
      SingularSpectrum nu = testing::randomSpectrum(n, rng);
      const double u = coin(rng);
      if (u < 0.4) {
        // Rescale to the right determinant so the proper inequalities decide the verdict.
        const double k = std::exp(
            (spec.lam().logProduct().value() + spec.mu().logProduct().value() - nu.logProduct().value()) / n);
        std::vector<double> v(nu.values().begin(), nu.values().end());
        for (double& x : v) x *= k;
        nu = SingularSpectrum(std::move(v));
      } else if (u < 0.7) {
        nu = sampleBody(spec, 1, RngSeed{rng()})[0];
      }
      const bool a = membership(spec, nu, 1e-9).pass;
      const bool b = membershipInvertible(spec, nu, 1e-9).pass;
      members += a;
      check.expect(a == b, "verdicts differ for n=" + std::to_string(n) + " trial " + std::to_string(trial));
    }
  }
  return check.outcome("20000 positive triples, identical verdicts (" + std::to_string(members) + " members)");
}

// ---------------------------------------------------------------- 6
Outcome realization() {
  Checker check;
  const BodySpec body(sp({2, 1}), sp({2, 1}));
  RealizeOptions opts;  // tol 1e-6, boundary 1e-4, budget 5000 per restart
  double worstInterior = 0.0, worstEnd = 0.0, worst3 = 0.0;
  int maxIterations = 0;
  for (int k = 0; k <= 10; ++k) {
    const double t = 2.0 + 0.2 * k;
    const auto nu = sp({t, std::min(t, 4.0 / t)});
    const auto r = realize(body, nu, opts, deriveSeed(RngSeed{0x6}, static_cast<std::uint64_t>(k)));
    maxIterations = std::max(maxIterations, r.iterations);
    check.expect(r.iterations <= 5000, "iteration cap exceeded at t=" + fmt(t));
    if (k == 0 || k == 10) {
      worstEnd = std::max(worstEnd, r.residual);
      check.expect(r.residual < 1e-4, "endpoint t=" + fmt(t) + " residual " + fmt(r.residual));
    } else {
      worstInterior = std::max(worstInterior, r.residual);
      check.expect(r.residual < 1e-6, "interior t=" + fmt(t) + " residual " + fmt(r.residual));
    }
  }

  // n = 3: sample, then perturb in log coordinates with the determinant fixed, keeping members.
  std::mt19937_64 rng(0x63);
  std::normal_distribution<double> g(0.0, 0.05);
  const std::vector<BodySpec> specs{BodySpec(sp({3, 2, 1}), sp({2, 1.5, 0.5})),
                                    BodySpec(sp({4, 1, 0.5}), sp({1, 1, 0.25}))};
  int made = 0;
  while (made < 20) {
    const auto& spec = specs[static_cast<std::size_t>(made % 2)];
    const auto base = sampleBody(spec, 1, RngSeed{rng()})[0];
    std::vector<double> d{g(rng), g(rng), g(rng)};
    const double mean = (d[0] + d[1] + d[2]) / 3.0;
    std::vector<double> v(3);
    for (std::size_t i = 0; i < 3; ++i) v[i] = base[i] * std::exp(d[i] - mean);
    if (v[0] < v[1] || v[1] < v[2]) continue;
    const auto nu = SingularSpectrum(v);
    if (!membership(spec, nu, 1e-8).pass) continue;
    const auto r = realize(spec, nu, opts, RngSeed{rng()});
    maxIterations = std::max(maxIterations, r.iterations);
    worst3 = std::max(worst3, r.residual);
    check.expect(r.residual < 1e-5, "n=3 target " + std::to_string(made) + " residual " + fmt(r.residual));
    ++made;
  }
  return check.outcome("n=2 interior max residual " + fmt(worstInterior) + ", endpoints " + fmt(worstEnd) +
                       "; n=3 max residual " + fmt(worst3) + "; max iterations " + std::to_string(maxIterations));
}

// ---------------------------------------------------------------- 7
Outcome noninvertibleShape() {
  Checker check;
  const BodySpec body(sp({1, 0}), sp({1, 0}));
  int accepted = 0;
  for (int i = 0; i <= 100; ++i)
    for (int j = 0; j <= 10; ++j) {
      const double a = i / 50.0, b = j / 10.0;
      const bool expected = j == 0 && i <= 50;
      bool got = false;
      if (a >= b) got = membership(body, sp({a, b}), 1e-10).pass;  // other candidates are not spectra
      accepted += got;
      check.expect(got == expected, "candidate (" + fmt(a) + ", " + fmt(b) + ")");
    }
  const auto samples = sampleBody(body, 10000, RngSeed{0x7});
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& s : samples) {
    lo = std::min(lo, s[0]);
    hi = std::max(hi, s[0]);
    check.expect(s[1] == 0.0, "sample with nonzero second value");
  }
  check.expect(lo < 0.01 && hi > 0.99, "samples span [" + fmt(lo) + ", " + fmt(hi) + "]");
  return check.outcome(std::to_string(accepted) + "/1111 grid points accepted (the segment t in [0,1]); samples span [" +
                       fmt(lo) + ", " + fmt(hi) + "]");
}

// ---------------------------------------------------------------- 8
Outcome vonNeumannLayer() {
  Checker check;
  std::mt19937_64 rng(0x8);
  double worstVn = INFINITY;
  for (int pair = 0; pair < 10; ++pair) {
    const auto f = testing::randomStep(rng, 8, 0.3);
    const auto g = testing::randomStep(rng, 8, 0.3);
    const auto model = matrixModel(f, g, 120, RngSeed{rng()});
    const auto h = spectrumToStep(model.product);
    const auto vn = vnMembership(f, g, h, 6, 1e-6);
    worstVn = std::min(worstVn, vn.worstSlack);
    check.expect(vn.pass, "pair " + std::to_string(pair) + ": " + (vn.worst() ? vn.worst()->describe() : ""));
    if (!vn.pass) continue;
    for (int n = 1; n <= 5; ++n) {
      // The integral over a cell of width 1/n is (1/n) times the log of the geometric
      // mean, so the finite check runs at n times the integral tolerance.
      const BodySpec body(discretize(f, n), discretize(g, n));
      const auto rep = membership(body, discretize(h, n), n * 1e-6);
      check.expect(rep.pass, "pair " + std::to_string(pair) + " n=" + std::to_string(n) + ": " +
                                 (rep.worst() ? rep.worst()->describe() : ""));
    }
  }
  double worstMargin = INFINITY;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 5;
    const auto a = trial % 2 ? testing::ginibre(n, rng)
                             : testing::matrixWithSpectrum(testing::randomSpectrum(n, rng, 0.1, 3.0, trial % 3 == 0), rng);
    const auto subsets = subsetsOfSize(n, 1 + trial % n);
    const auto& subset = subsets[static_cast<std::size_t>(trial) % subsets.size()];
    const auto res = schubertCompressionCheck(a, subset, RngSeed{rng()});
    const double norm = singularValues(a).largest();
    worstMargin = std::min(worstMargin, res.margin / norm);
    check.expect(res.margin >= -1e-9 * norm, "compression margin " + fmt(res.margin));
  }
  return check.outcome("10 matrix models pass at maxN=6 (worst slack " + fmt(worstVn) +
                       "), discretizations pass for n<=5; 500 compressions, worst margin/|A| " + fmt(worstMargin));
}

// ---------------------------------------------------------------- 9
struct Run {
  int code = -1;
  std::string out;
};

Run runCli(const std::string& cli, const std::string& args) {
  Run r;
  const std::string command = "'" + cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome determinismAndInterfaces() {
  Checker check;
  const char* cli = std::getenv("MHORN_CLI_PATH");
  if (!cli) return {false, "MHORN_CLI_PATH is not set"};

  const std::vector<std::string> seeded{
      "body-sample --lam '[3,2,1]' --mu '[2,0.5,0]' --count 300 --seed 42",
      "body-sample --lam '[3,2,1]' --mu '[2,0.5,0]' --count 300 --seed 42 --format csv",
      "export-slice --lam '[2,1]' --mu '[2,1]' --count 2000 --seed 7",
      "realize --lam '[2,1]' --mu '[2,1]' --nu '[3,1.3333333333333333]' --seed 9",
      "triples --n 5",
  };
  for (const auto& args : seeded) {
    const auto a = runCli(cli, args), b = runCli(cli, args);
    check.expect(a.code == 0 && b.code == 0 && !a.out.empty() && a.out == b.out, "not byte-identical: " + args);
  }

  const std::vector<std::pair<std::string, int>> battery{
      {"triples --n 3", 0},
      {"triples --n 0", 2},
      {"triples --n 9", 2},
      {"", 2},
      {"frobnicate", 2},
      {"body-member --lam '[2,1]' --mu '[2,1]' --nu '[5,0.8]'", 1},
      {"body-member --lam '[2,1]' --mu '[2,1]' --nu '[4,1]'", 0},
      {"body-member --lam '[2,1]' --mu '[2,1]' --nu '[1,2]'", 2},
      {"body-member --lam '[2,1]' --mu '[2,1]' --nu '[4,1]' --tol -1", 2},
      {"body-member --lam '[2,1]' --mu '[2,1,0]' --nu '[4,1]'", 2},
      {"check-product --A '[[1,0],[0,0]]' --B '[[0,0],[0,1]]'", 0},
      {"check-product --A '[[1,0],[0,0]]' --B 'not json'", 2},
      {"realize --lam '[2,1]' --mu '[2,1]' --nu '[2.8284271247461903,1.4142135623730951]' --seed 1", 0},
      {"realize --lam '[2,1]' --mu '[2,1]' --nu '[5,0.8]' --seed 1", 1},
      {"vn-member --f '{\"breakpoints\":[0,1],\"values\":[1]}' --g '{\"breakpoints\":[0,1],\"values\":[1]}' "
       "--h '{\"breakpoints\":[0,1],\"values\":[2]}' --max-n 2",
       1},
      {"vn-member --f '{\"breakpoints\":[0,1],\"values\":[1]}' --g '{\"breakpoints\":[0,1],\"values\":[1]}' "
       "--h '{\"breakpoints\":[0,1],\"values\":[1]}' --max-n 6",
       0},
      {"discretize --s '{\"breakpoints\":[\"0\",\"1/2\",\"1\"],\"values\":[2,1]}' --n 1", 0},
      {"export-slice --lam '[1,0]' --mu '[1,0]' --count 10 --seed 3", 0},
  };
  for (const auto& [args, code] : battery) {
    const auto r = runCli(cli, args);
    check.expect(r.code == code, "'" + args + "' exited " + std::to_string(r.code) + ", expected " + std::to_string(code));
  }

  const auto triples = runCli(cli, "triples --n 3");
  try {
    check.expect(parseCatalog(triples.out).size() == 14, "triples --n 3 did not emit 14 triples");
  } catch (const std::exception& e) {
    check.expect(false, std::string("catalog output unreadable: ") + e.what());
  }
  return check.outcome(std::to_string(seeded.size()) + " seeded commands byte-identical; " +
                       std::to_string(battery.size()) + "-case exit-code battery passes");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"catalog correctness", catalogCorrectness},
      {"additive oracle gate", additiveGate},
      {"multiplicative inequality validity", productValidity},
      {"sampling inside membership", samplingInclusion},
      {"invertible-case equivalence", invertibleEquivalence},
      {"constructive realization", realization},
      {"non-invertible body shape", noninvertibleShape},
      {"von Neumann layer consistency", vonNeumannLayer},
      {"determinism and interfaces", determinismAndInterfaces},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !outcome.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << "  " << criteria[i].first << "  ["
              << timing << "]  " << outcome.detail << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criterion/criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
