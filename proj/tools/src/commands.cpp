// Copyright 2026 The edmkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edmkit/commands.hpp"

#include <exception>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "edm/composition.hpp"
#include "edm/edm_core.hpp"
#include "edm/errors.hpp"
#include "edm/generators.hpp"
#include "edm/qap.hpp"
#include "edmkit/matrix_file.hpp"
#include "json.hpp"

namespace edmkit {
namespace {

using edm::Error;
using edm::ErrorCode;
using nlohmann::json;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotEdm:
    case ErrorCode::kNotSpherical:
    case ErrorCode::kDegenerateSample:
      return kExitNegative;
    default:
      return kExitUsage;
  }
}

template <typename Fn>
int Guarded(std::ostream& err, Fn&& fn) {
  try {
    return std::forward<Fn>(fn)();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

std::size_t Require(const std::optional<std::size_t>& value, const char* flag,
                    const std::string& family) {
  if (!value) {
    throw Error(ErrorCode::kInvalidArgument,
                "family '" + family + "' requires " + flag);
  }
  return *value;
}

void RequireOrder(std::size_t n, std::size_t max_order) {
  if (n > max_order) {
    throw Error(ErrorCode::kTooLarge, "order " + std::to_string(n) +
                                          " exceeds max order " +
                                          std::to_string(max_order));
  }
}

MatrixFormat FormatFor(const GlobalOptions& opts) {
  return opts.json ? MatrixFormat::kJson : MatrixFormat::kText;
}

std::string Bool(bool b) { return b ? "true" : "false"; }

std::string VectorText(const edm::Vector& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += FormatNumber(v(i));
  }
  return s + "]";
}

json VectorJson(const edm::Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

std::string ClassificationText(const edm::EdmClassification& c) {
  std::ostringstream os;
  os << "is_edm          " << Bool(c.verdict.is_edm) << '\n'
     << "embedding_dim   " << c.verdict.embedding_dim << '\n'
     << "rank_D          " << c.verdict.rank_d << '\n';
  if (!c.verdict.is_edm) {
    os << "psd_defect      " << FormatNumber(c.verdict.psd_defect) << '\n';
  }
  os << "spherical       " << Bool(c.spherical) << '\n'
     << "regular         " << Bool(c.regular) << '\n';
  if (c.sphere) {
    os << "radius_sq       " << FormatNumber(c.sphere->radius_sq) << '\n'
       << "min_shift       " << FormatNumber(c.sphere->min_shift) << '\n'
       << "center          "
       << VectorText(c.sphere->center.value_or(edm::Vector())) << '\n';
  }
  if (c.verdict.is_edm) {
    const auto& d = c.diagnostics;
    os << "diagnostics     rank_test=" << Bool(d.rank_test)
       << " psd_shift_test=" << Bool(d.psd_shift_test)
       << " center_residual=" << FormatNumber(d.center_residual)
       << " indeterminate=" << Bool(d.indeterminate) << '\n';
  }
  os << "tolerance       " << FormatNumber(c.tolerance.rel) << '\n';
  return os.str();
}

}  // namespace

std::string ClassificationJson(const edm::EdmClassification& c) {
  json report;
  report["is_edm"] = c.verdict.is_edm;
  report["embedding_dim"] = c.verdict.embedding_dim;
  report["rank_D"] = c.verdict.rank_d;
  report["spherical"] = c.spherical;
  report["regular"] = c.regular;
  if (c.sphere) {
    report["radius_sq"] = c.sphere->radius_sq;
    report["min_shift"] = c.sphere->min_shift;
    report["center"] = VectorJson(c.sphere->center.value_or(edm::Vector()));
  } else {
    report["radius_sq"] = nullptr;
    report["min_shift"] = nullptr;
    report["center"] = json::array();
  }
  report["diagnostics"] = {
      {"rank_test", c.diagnostics.rank_test},
      {"psd_shift_test", c.diagnostics.psd_shift_test},
      {"center_residual", c.diagnostics.center_residual},
  };
  report["tolerance"] = c.tolerance.rel;
  return report.dump(2) + "\n";
}

int CmdGen(const GenParams& params, const GlobalOptions& opts, std::ostream& out,
           std::ostream& err) {
  return Guarded(err, [&] {
    const std::string& family = params.family;
    edm::Matrix m;
    if (family == "path") {
      const std::size_t n = Require(params.n, "--n", family);
      RequireOrder(n, opts.max_order);
      m = edm::MakePathEdm(n).matrix.dense();
    } else if (family == "grid") {
      m = edm::ManhattanGrid(Require(params.m, "--m", family),
                             Require(params.n, "--n", family), opts.max_order)
              .dense();
    } else if (family == "hypercube") {
      m = edm::HypercubeHamming(Require(params.r, "--r", family), opts.max_order)
              .matrix.dense();
    } else if (family == "collinear") {
      const std::size_t n = Require(params.n, "--n", family);
      RequireOrder(n, opts.max_order);
      m = edm::CollinearSqEdm(n).dense();
    } else if (family == "random-spherical") {
      m = edm::RandomSphericalEdm(Require(params.n, "--n", family),
                                  Require(params.r, "--r", family), opts.seed,
                                  opts.tol, opts.max_order)
              .dense();
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown family '" + family + "'");
    }
    if (params.output == "-") {
      out << FormatMatrix(m, FormatFor(opts));
    } else {
      WriteMatrixFile(params.output, m, FormatFor(opts));
    }
    return kExitOk;
  });
}

int CmdClassify(const std::filesystem::path& input, const GlobalOptions& opts,
                std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const auto d = edm::DistanceMatrix::FromDense(ReadMatrixFile(input, opts.max_order));
    const edm::EdmClassification c = edm::Classify(d, opts.tol);
    out << (opts.json ? ClassificationJson(c) : ClassificationText(c));
    return c.verdict.is_edm ? kExitOk : kExitNegative;
  });
}

int CmdCompose(const std::filesystem::path& first,
               const std::filesystem::path& second,
               const std::filesystem::path& output, const GlobalOptions& opts,
               std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const auto d1 = edm::DistanceMatrix::FromDense(ReadMatrixFile(first, opts.max_order));
    const auto d2 = edm::DistanceMatrix::FromDense(ReadMatrixFile(second, opts.max_order));
    const edm::EdmClassification c1 = edm::Classify(d1, opts.tol);
    const edm::EdmClassification c2 = edm::Classify(d2, opts.tol);
    if (!c1.verdict.is_edm || !c2.verdict.is_edm) {
      throw Error(ErrorCode::kNotEdm, std::string(c1.verdict.is_edm ? "second" : "first") +
                                          " input is not an EDM");
    }
    const edm::DistanceMatrix composed = edm::KronSumEdm(d1, d2, opts.tol, opts.max_order);
    WriteMatrixFile(output, composed.dense(), FormatFor(opts));

    const edm::EdmVerdict verdict = edm::CheckEdm(composed, opts.tol);
    std::optional<edm::SphereInfo> sphere;
    if (c1.sphere && c2.sphere) sphere = edm::ComposedSphere(*c1.sphere, *c2.sphere);

    if (opts.json) {
      json report;
      report["order"] = composed.order();
      report["embedding_dim"] = verdict.embedding_dim;
      report["factor_embedding_dims"] = {c1.verdict.embedding_dim,
                                         c2.verdict.embedding_dim};
      report["spherical"] = sphere.has_value();
      if (sphere) {
        report["radius_sq"] = sphere->radius_sq;
        report["min_shift"] = sphere->min_shift;
      }
      report["tolerance"] = opts.tol.rel;
      out << report.dump(2) << '\n';
    } else {
      out << "order           " << composed.order() << '\n'
          << "embedding_dim   " << verdict.embedding_dim << '\n'
          << "spherical       " << Bool(sphere.has_value()) << '\n';
      if (sphere) {
        out << "radius_sq       " << FormatNumber(sphere->radius_sq) << '\n'
            << "min_shift       " << FormatNumber(sphere->min_shift) << '\n';
      }
      out << "tolerance       " << FormatNumber(opts.tol.rel) << '\n';
    }
    return kExitOk;
  });
}

int CmdQap(const std::filesystem::path& flow, const std::filesystem::path& dist,
           bool bound, bool solve, const GlobalOptions& opts, std::ostream& out,
           std::ostream& err) {
  return Guarded(err, [&] {
    if (!bound && !solve) {
      throw Error(ErrorCode::kInvalidArgument, "qap needs --bound and/or --solve");
    }
    const edm::QapInstance inst(
        edm::SymMatrix::FromDense(ReadMatrixFile(flow, opts.max_order)),
        edm::DistanceMatrix::FromDense(ReadMatrixFile(dist, opts.max_order)));
    if (solve && inst.order() > edm::kDefaultBruteForceMaxOrder) {
      throw Error(ErrorCode::kTooLarge,
                  "--solve supports n <= " +
                      std::to_string(edm::kDefaultBruteForceMaxOrder) +
                      ", got " + std::to_string(inst.order()));
    }

    std::optional<edm::QapBoundReport> report;
    if (bound) report = edm::QapShiftLowerBound(inst, opts.tol);
    std::optional<edm::QapSolution> solution;
    if (solve) solution = edm::QapBruteForce(inst);

    if (opts.json) {
      json doc;
      if (report) {
        doc["bound"] = {
            {"lower_bound", report->lower_bound},
            {"shift", report->shift},
            {"spectrum_flow", VectorJson(report->spectrum_flow)},
            {"spectrum_shifted", VectorJson(report->spectrum_shifted)},
            {"method", report->method},
        };
      }
      if (solution) {
        json perm = json::array();
        for (const std::size_t p : solution->perm) perm.push_back(p + 1);
        doc["solution"] = {{"optimum", solution->value}, {"permutation", perm}};
      }
      doc["tolerance"] = opts.tol.rel;
      out << doc.dump(2) << '\n';
    } else {
      if (report) {
        out << "lower_bound       " << FormatNumber(report->lower_bound) << '\n'
            << "shift             " << FormatNumber(report->shift) << '\n'
            << "spectrum_flow     " << VectorText(report->spectrum_flow) << '\n'
            << "spectrum_shifted  " << VectorText(report->spectrum_shifted) << '\n'
            << "method            " << report->method << '\n';
      }
      if (solution) {
        out << "optimum           " << FormatNumber(solution->value) << '\n'
            << "permutation      ";
        for (const std::size_t p : solution->perm) out << ' ' << p + 1;
        out << '\n';
      }
      out << "tolerance         " << FormatNumber(opts.tol.rel) << '\n';
    }
    return kExitOk;
  });
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"edmkit: Euclidean distance matrix toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = edm::kDefaultRelTolerance;
  GlobalOptions opts;
  app.add_option("--tol", tol, "Relative tolerance for rank and PSD tests")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-order", opts.max_order, "Largest matrix order accepted")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", opts.json, "Structured output");
  app.add_option("--seed", opts.seed, "Seed for random families");

  GenParams gen_params;
  std::size_t gen_n = 0;
  std::size_t gen_m = 0;
  std::size_t gen_r = 0;
  auto* gen = app.add_subcommand("gen", "Generate a structured distance matrix");
  gen->add_option("family", gen_params.family,
                  "path | grid | hypercube | collinear | random-spherical")
      ->required()
      ->check(CLI::IsMember({"path", "grid", "hypercube", "collinear",
                             "random-spherical"}));
  auto* n_opt = gen->add_option("--n", gen_n, "Order / columns / points");
  auto* m_opt = gen->add_option("--m", gen_m, "Grid rows");
  auto* r_opt = gen->add_option("--r", gen_r, "Hypercube or sphere dimension");
  gen->add_option("-o,--out", gen_params.output, "Output file ('-' for stdout)");

  std::string classify_in;
  auto* classify = app.add_subcommand("classify", "Classify a distance matrix");
  classify->add_option("input", classify_in, "Matrix file")->required();

  std::string compose_a;
  std::string compose_b;
  std::string compose_out;
  auto* compose = app.add_subcommand("compose", "Kronecker-sum composition of two EDMs");
  compose->add_option("first", compose_a, "m x m EDM file")->required();
  compose->add_option("second", compose_b, "n x n EDM file")->required();
  compose->add_option("-o,--out", compose_out, "Output file for the composed matrix")
      ->required();

  std::string qap_flow;
  std::string qap_dist;
  bool qap_bound = false;
  bool qap_solve = false;
  auto* qap = app.add_subcommand("qap", "Quadratic assignment bound / exact solve");
  qap->add_option("flow", qap_flow, "Symmetric flow matrix file")->required();
  qap->add_option("dist", qap_dist, "Distance matrix file")->required();
  qap->add_flag("--bound", qap_bound, "Spherical-shift eigenvalue lower bound");
  qap->add_flag("--solve", qap_solve, "Exhaustive optimum (n <= 8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  opts.tol = edm::Tolerance{tol};

  if (gen->parsed()) {
    if (n_opt->count() > 0) gen_params.n = gen_n;
    if (m_opt->count() > 0) gen_params.m = gen_m;
    if (r_opt->count() > 0) gen_params.r = gen_r;
    return CmdGen(gen_params, opts, out, err);
  }
  if (classify->parsed()) return CmdClassify(classify_in, opts, out, err);
  if (compose->parsed()) {
    return CmdCompose(compose_a, compose_b, compose_out, opts, out, err);
  }
  return CmdQap(qap_flow, qap_dist, qap_bound, qap_solve, opts, out, err);
}

}  // namespace edmkit
