#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace subsetmetric::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct DistRequest {
  std::string file;
  std::string set_a;
  std::string set_b;
  std::string metric = "subset";
  std::optional<std::string> m;
  bool oracle = false;
};

struct MatrixRequest {
  std::string file;
  std::string metric = "subset";
  std::optional<std::string> m;
  std::string format = "csv";
};

struct ValidateRequest {
  std::string file;
  std::optional<std::string> m;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

struct DemoRequest {
  int n_max = 8;
  std::string format = "text";
};

/// Prints one JSON object: value, witness (subset metric), and with the
/// oracle flag the oracle value and whether both routes agree.
int cmd_dist(const DistRequest& request, std::ostream& out, std::ostream& err);

/// All-pairs matrix over the named sets, as CSV or JSON.
int cmd_matrix(const MatrixRequest& request, std::ostream& out, std::ostream& err);

/// Checks condition (2) for M, the positive lower bound on M, and the
/// metric axioms of d_S on sampled triples. Exit code 0 iff everything holds.
int cmd_validate(const ValidateRequest& request, std::ostream& out, std::ostream& err);

/// Tabulates d_S on A_k = {0, 1/k} in [0, 1] with M(y) = max(y, 1 - y): a
/// Cauchy sequence of finite sets without a finite-set limit.
int cmd_demo_incompleteness(const DemoRequest& request, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 9 significant digits, '.' decimal separator in every locale.
std::string format_real(double x);

}  // namespace subsetmetric::cli
