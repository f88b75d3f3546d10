#include "mhorn/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "mhorn/catalog_store.hpp"
#include "mhorn/errors.hpp"
#include "mhorn/horn_body.hpp"
#include "mhorn/io.hpp"
#include "mhorn/spectra.hpp"
#include "mhorn/svf.hpp"

namespace mhorn::cli {
namespace {

using json = nlohmann::ordered_json;

struct Options {
  int n = 0;
  std::string lam, mu, nu, a, b, f, g, h, s;
  int maxN = 6;
  std::optional<std::uint64_t> seed;
  double tol = 1e-9;
  double boundaryTol = 1e-4;
  int count = 1000;
  int budget = 5000;
  int restarts = 8;
  bool invertible = false;
  std::string out;
  std::string format = "json";
};

// Inline JSON, or the contents of a file when the value starts with '@'.
std::string load(const std::string& value, const char* what) {
  if (value.empty()) throw ParseError(std::string("missing input --") + what);
  if (value.front() != '@') return value;
  std::ifstream in(value.substr(1));
  if (!in) throw ParseError("cannot read " + value.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string number(double x) {
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  char buf[32];
  const auto end = std::to_chars(buf, buf + sizeof buf, x).ptr;
  return std::string(buf, end);
}

json extended(double x) {
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  return x;
}

json extended(const ExtendedReal& x) { return x.isNegInfinity() ? json("-inf") : json(x.value()); }

json subsetJson(const IndexSubset& s) { return std::vector<int>(s.begin(), s.end()); }

json recordJson(const InequalityRecord& rec) {
  return {{"n", rec.triple.ambient()},
          {"r", rec.triple.rank()},
          {"I", subsetJson(rec.triple.I())},
          {"J", subsetJson(rec.triple.J())},
          {"K", subsetJson(rec.triple.K())},
          {"family", toString(rec.family)},
          {"lhs", extended(rec.lhs)},
          {"rhs", extended(rec.rhs)},
          {"slack", extended(rec.slack)},
          {"description", rec.describe()}};
}

json reportJson(const std::string& command, const MembershipReport& rep) {
  json doc{{"command", command}, {"pass", rep.pass}, {"tol", rep.tol}, {"worst_slack", extended(rep.worstSlack)}};
  if (!rep.note.empty()) doc["note"] = rep.note;
  json violations = json::array();
  for (const auto& rec : rep.violations()) violations.push_back(recordJson(rec));
  doc["violations"] = std::move(violations);
  json records = json::array();
  for (const auto& rec : rep.records) records.push_back(recordJson(rec));
  doc["records"] = std::move(records);
  return doc;
}

std::string reportCsv(const MembershipReport& rep) {
  std::string text = "n,r,I,J,K,family,lhs,rhs,slack\n";
  for (const auto& rec : rep.records) {
    text += std::to_string(rec.triple.ambient()) + "," + std::to_string(rec.triple.rank()) + ",";
    for (const auto* s : {&rec.triple.I(), &rec.triple.J(), &rec.triple.K()}) {
      std::string cell;
      for (int e : *s) cell += (cell.empty() ? "" : " ") + std::to_string(e);
      text += cell + ",";
    }
    text += toString(rec.family) + "," + (rec.lhs.isNegInfinity() ? "-inf" : number(rec.lhs.value())) + "," +
            (rec.rhs.isNegInfinity() ? "-inf" : number(rec.rhs.value())) + "," + number(rec.slack) + "\n";
  }
  return text;
}

json spectrumJson(const SingularSpectrum& s) { return std::vector<double>(s.values().begin(), s.values().end()); }

std::string spectrumRow(const SingularSpectrum& s) {
  std::string row;
  for (std::size_t i = 0; i < s.values().size(); ++i) row += (i ? "," : "") + number(s[i]);
  return row;
}

std::string columns(const char* prefix, int n) {
  std::string row;
  for (int i = 1; i <= n; ++i) row += (i > 1 ? "," : "") + std::string(prefix) + std::to_string(i);
  return row;
}

RngSeed resolveSeed(const Options& o) {
  if (o.seed) return RngSeed{*o.seed};
  std::random_device rd;
  return RngSeed{(static_cast<std::uint64_t>(rd()) << 32) ^ rd()};
}

struct Output {
  std::string text;
  int code = kPass;
};

Output triples(const Options& o) {
  if (o.n < 1) throw DomainError("--n must be at least 1");
  const auto catalog = catalogFor(o.n);
  if (o.format == "json") return {catalogToJson(*catalog) + "\n"};
  std::string text = "r,I,J,K\n";
  for (const auto& t : catalog->triples) {
    text += std::to_string(t.rank());
    for (const auto* s : {&t.I(), &t.J(), &t.K()}) {
      std::string cell;
      for (int e : *s) cell += (cell.empty() ? "" : " ") + std::to_string(e);
      text += "," + cell;
    }
    text += "\n";
  }
  return {text};
}

Output emitReport(const Options& o, const std::string& command, const MembershipReport& rep) {
  Output res;
  res.text = o.format == "json" ? reportJson(command, rep).dump(2) + "\n" : reportCsv(rep);
  res.code = rep.pass ? kPass : kMathFail;
  return res;
}

Output checkProduct(const Options& o) {
  const auto a = parseMatrix(load(o.a, "A"));
  const auto b = parseMatrix(load(o.b, "B"));
  if (a.rows() != b.rows()) throw DimensionError("A and B must have the same size");
  const auto catalog = catalogFor(static_cast<int>(a.rows()));
  return emitReport(o, "check-product", productInequalityCheck(a, b, *catalog, o.tol));
}

BodySpec bodyFrom(const Options& o) {
  return BodySpec(parseSpectrum(load(o.lam, "lam")), parseSpectrum(load(o.mu, "mu")));
}

Output bodyMember(const Options& o) {
  const auto spec = bodyFrom(o);
  const auto nu = parseSpectrum(load(o.nu, "nu"));
  const auto rep = o.invertible ? membershipInvertible(spec, nu, o.tol) : membership(spec, nu, o.tol);
  return emitReport(o, "body-member", rep);
}

Output bodySample(const Options& o) {
  if (o.count < 1) throw DomainError("--count must be at least 1");
  const auto spec = bodyFrom(o);
  const auto seed = resolveSeed(o);
  const auto samples = sampleBody(spec, o.count, seed);
  if (o.format == "json") {
    json list = json::array();
    for (const auto& s : samples) list.push_back(spectrumJson(s));
    return {json{{"command", "body-sample"}, {"seed", seed.value}, {"samples", std::move(list)}}.dump(1) + "\n"};
  }
  std::string text = "# seed=" + std::to_string(seed.value) + "\n" + columns("nu", spec.size()) + "\n";
  for (const auto& s : samples) text += spectrumRow(s) + "\n";
  return {text};
}

Output realizeCommand(const Options& o) {
  const auto spec = bodyFrom(o);
  const auto nu = parseSpectrum(load(o.nu, "nu"));
  const auto seed = resolveSeed(o);
  RealizeOptions opts;
  opts.tol = o.tol;
  opts.boundaryTol = o.boundaryTol;
  opts.budget = o.budget;
  opts.restarts = o.restarts;
  try {
    const auto r = realize(spec, nu, opts, seed);
    json doc{{"command", "realize"},    {"seed", seed.value},         {"converged", r.converged},
             {"boundary", r.boundary},  {"success_tol", r.successTol}, {"residual", r.residual},
             {"iterations", r.iterations}, {"restart", r.restart},    {"target", spectrumJson(nu)},
             {"achieved", spectrumJson(r.achieved)}, {"unitary", json::parse(matrixToJson(r.unitary))}};
    return {doc.dump(2) + "\n", r.converged ? kPass : kMathFail};
  } catch (const PreconditionError& e) {
    json doc = reportJson("realize", e.report());
    doc["seed"] = seed.value;
    doc["error"] = e.what();
    return {doc.dump(2) + "\n", kMathFail};
  }
}

Output vnMember(const Options& o) {
  const auto f = parseStepFunction(load(o.f, "f"));
  const auto g = parseStepFunction(load(o.g, "g"));
  const auto h = parseStepFunction(load(o.h, "h"));
  return emitReport(o, "vn-member", vnMembership(f, g, h, o.maxN, o.tol));
}

Output discretizeCommand(const Options& o) {
  if (o.n < 1) throw DomainError("--n must be at least 1");
  const auto s = discretize(parseStepFunction(load(o.s, "s")), o.n);
  if (o.format == "json") return {spectrumToJson(s) + "\n"};
  std::string text = "j,value\n";
  for (int j = 0; j < s.size(); ++j) text += std::to_string(j + 1) + "," + number(s[static_cast<std::size_t>(j)]) + "\n";
  return {text};
}

// Endpoints of {t : (t, det / t) in the body} for n = 2 (det = 0: points (t, 0)).
// The slice is an interval whose upper end lam1 * mu1 is attained by U = I.
std::pair<double, double> sliceEnds(const BodySpec& spec, double tol) {
  const double det = spec.lam()[0] * spec.lam()[1] * spec.mu()[0] * spec.mu()[1];
  const double hi = spec.lam()[0] * spec.mu()[0];
  auto point = [&](double t) { return SingularSpectrum({t, det > 0 ? std::min(t, det / t) : 0.0}); };
  double lo = det > 0 ? std::sqrt(det) : 0.0;
  if (membership(spec, point(lo), tol).pass) return {lo, hi};
  double inside = hi;
  for (int it = 0; it < 200 && inside - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + inside);
    (membership(spec, point(mid), tol).pass ? inside : lo) = mid;
  }
  return {inside, hi};
}

Output exportSlice(const Options& o, std::ostream& err) {
  if (o.count < 1) throw DomainError("--count must be at least 1");
  const auto spec = bodyFrom(o);
  if (spec.size() < 2) throw DomainError("export-slice needs n >= 2");
  const auto seed = resolveSeed(o);
  const auto samples = sampleBody(spec, o.count, seed);
  std::vector<SingularSpectrum> curve;
  if (spec.size() == 2) {
    const double det = spec.lam()[0] * spec.lam()[1] * spec.mu()[0] * spec.mu()[1];
    const auto [lo, hi] = sliceEnds(spec, o.tol);
    const int points = 101;
    for (int i = 0; i < points; ++i) {
      const double t = i + 1 == points ? hi : lo + (hi - lo) * i / (points - 1);
      curve.emplace_back(std::vector<double>{t, det > 0 ? std::min(t, det / t) : 0.0});
    }
  } else {
    err << "notice: boundary tracing is only implemented for n = 2; emitting samples only\n";
  }
  const int n = spec.size();
  if (o.format == "json") {
    json list = json::array(), bound = json::array();
    for (const auto& s : samples) list.push_back(spectrumJson(s));
    for (const auto& s : curve) bound.push_back(spectrumJson(s));
    json doc{{"command", "export-slice"}, {"seed", seed.value}, {"samples", std::move(list)}};
    if (n == 2) doc["boundary"] = std::move(bound);
    return {doc.dump(1) + "\n"};
  }
  std::string text = "# seed=" + std::to_string(seed.value) + " lam=" + spectrumToJson(spec.lam()) +
                     " mu=" + spectrumToJson(spec.mu()) + "\n";
  text += "kind," + columns("nu", n) + "\n";
  for (const auto& s : samples) text += "sample," + spectrumRow(s) + "\n";
  for (const auto& s : curve) text += "boundary," + spectrumRow(s) + "\n";
  return {text};
}

void addCommon(CLI::App* cmd, Options& o, bool formats) {
  cmd->add_option("--out", o.out, "Write the result to this file instead of stdout");
  if (formats) cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

void addTol(CLI::App* cmd, Options& o, const char* help) {
  cmd->add_option("--tol", o.tol, help)->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Multiplicative Horn inequalities: catalogs, membership, sampling and realization"};
  app.name("mhorn");
  app.set_help_flag("--help", "Print help and exit");
  app.require_subcommand(1, 1);

  auto* triplesCmd = app.add_subcommand("triples", "Horn triple catalog for size n");
  triplesCmd->add_option("--n", o.n, "Matrix size, 1..8")->required();
  addCommon(triplesCmd, o, true);

  auto* checkCmd = app.add_subcommand("check-product", "Check the inequalities for s(A), s(B), s(AB)");
  checkCmd->add_option("--A", o.a, "Square complex matrix (JSON or @file)")->required();
  checkCmd->add_option("--B", o.b, "Square complex matrix (JSON or @file)")->required();
  addTol(checkCmd, o, "Absolute log-slack tolerance");
  addCommon(checkCmd, o, true);

  auto* memberCmd = app.add_subcommand("body-member", "Decide nu in the product body of (lam, mu)");
  memberCmd->add_option("--lam", o.lam)->required();
  memberCmd->add_option("--mu", o.mu)->required();
  memberCmd->add_option("--nu", o.nu)->required();
  memberCmd->add_flag("--invertible", o.invertible, "Use the determinant plus forward inequalities test");
  addTol(memberCmd, o, "Absolute log-slack tolerance");
  addCommon(memberCmd, o, true);

  auto* sampleCmd = app.add_subcommand("body-sample", "Product spectra for Haar unitaries");
  sampleCmd->add_option("--lam", o.lam)->required();
  sampleCmd->add_option("--mu", o.mu)->required();
  sampleCmd->add_option("--count", o.count, "Number of samples");
  sampleCmd->add_option("--seed", o.seed, "RNG seed (random if omitted; always echoed)");
  addCommon(sampleCmd, o, true);

  auto* realizeCmd = app.add_subcommand("realize", "Search for U with s(diag(lam) U diag(mu)) = nu");
  realizeCmd->add_option("--lam", o.lam)->required();
  realizeCmd->add_option("--mu", o.mu)->required();
  realizeCmd->add_option("--nu", o.nu)->required();
  realizeCmd->add_option("--seed", o.seed, "RNG seed (random if omitted; always echoed)");
  realizeCmd->add_option("--budget", o.budget, "Iterations per restart")->check(CLI::NonNegativeNumber);
  realizeCmd->add_option("--restarts", o.restarts, "Independent restarts")->check(CLI::PositiveNumber);
  realizeCmd->add_option("--boundary-tol", o.boundaryTol, "Residual threshold for boundary targets")
      ->check(CLI::PositiveNumber);
  addTol(realizeCmd, o, "Residual threshold for interior targets (default 1e-6)");
  addCommon(realizeCmd, o, false);

  auto* vnCmd = app.add_subcommand("vn-member", "Truncated integral inequality check for step functions");
  vnCmd->add_option("--f", o.f)->required();
  vnCmd->add_option("--g", o.g)->required();
  vnCmd->add_option("--h", o.h)->required();
  vnCmd->add_option("--max-n", o.maxN, "Use catalogs n = 1..max-n (at most 8)");
  addTol(vnCmd, o, "Absolute log-slack tolerance");
  addCommon(vnCmd, o, true);

  auto* discCmd = app.add_subcommand("discretize", "Geometric means of a step function on n cells");
  discCmd->add_option("--s", o.s)->required();
  discCmd->add_option("--n", o.n)->required();
  addCommon(discCmd, o, true);

  auto* sliceCmd = app.add_subcommand("export-slice", "Plot data: samples and, for n = 2, the body curve");
  sliceCmd->add_option("--lam", o.lam)->required();
  sliceCmd->add_option("--mu", o.mu)->required();
  sliceCmd->add_option("--count", o.count, "Number of samples");
  sliceCmd->add_option("--seed", o.seed, "RNG seed (random if omitted; always echoed)");
  addTol(sliceCmd, o, "Membership tolerance used while tracing the curve");
  addCommon(sliceCmd, o, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "mhorn: " << e.what() << "\n";
    return kUsageError;
  }

  if (realizeCmd->parsed() && realizeCmd->count("--tol") == 0) o.tol = 1e-6;
  if (sliceCmd->parsed()) {
    if (sliceCmd->count("--format") == 0) o.format = "csv";
    if (sliceCmd->count("--tol") == 0) o.tol = 1e-10;
  }

  Output result;
  try {
    if (triplesCmd->parsed()) result = triples(o);
    else if (checkCmd->parsed()) result = checkProduct(o);
    else if (memberCmd->parsed()) result = bodyMember(o);
    else if (sampleCmd->parsed()) result = bodySample(o);
    else if (realizeCmd->parsed()) result = realizeCommand(o);
    else if (vnCmd->parsed()) result = vnMember(o);
    else if (discCmd->parsed()) result = discretizeCommand(o);
    else result = exportSlice(o, err);
  } catch (const NumericalError& e) {
    err << "mhorn: numerical failure: " << e.what() << "\n";
    return kNumericalError;
  } catch (const Error& e) {
    err << "mhorn: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "mhorn: " << e.what() << "\n";
    return kUsageError;
  }

  if (o.out.empty()) {
    out << result.text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file || !(file << result.text)) {
      err << "mhorn: cannot write " << o.out << "\n";
      return kUsageError;
    }
  }
  if (result.code == kMathFail) err << "mhorn: result: fail\n";
  return result.code;
}

}  // namespace mhorn::cli
