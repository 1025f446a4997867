/*
 * Copyright 2026 The detident Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cli/matrix_io.hpp"
#include "detident/det.hpp"
#include "detident/jacobi.hpp"
#include "detident/pfaffian.hpp"
#include "detident/pluecker.hpp"
#include "detident/random.hpp"

namespace detident::cli {
namespace {

// Stream ids for the sampled sweeps of `verify`.
constexpr std::uint64_t kThreeTermStream = 1;
constexpr std::uint64_t kGeneralizedStream = 10;
constexpr std::uint64_t kPlueckerStream = 20;

using Choice = std::pair<IndexSet, IndexSet>;

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

Json index_array(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t x : v) out.push_back(x);
  return out;
}

CheckRecord residual_record(std::string check, Json operands, const Scalar& residual) {
  return CheckRecord{std::move(check), std::move(operands), residual.to_string(),
                     residual.is_zero()};
}

void append_identity_report(RunReport& report, const IdentityReport& identity) {
  const std::string name(identity_name(identity.identity));
  auto witness_for = [&](const IndexChoice& choice) -> const Witness* {
    for (const auto& w : identity.witnesses) {
      if (w.choice == choice) return &w;
    }
    return nullptr;
  };
  for (const auto& choice : identity.choices) {
    Json operands;
    if (identity.identity == IdentityKind::jacobi) {
      operands["i"] = choice.rows.front();
      operands["j"] = choice.cols.front();
    } else {
      operands["rows"] = index_array(choice.rows);
      operands["cols"] = index_array(choice.cols);
    }
    const Witness* w = witness_for(choice);
    report.results.push_back(residual_record(name, std::move(operands),
                                             w != nullptr ? w->residual : Scalar(0)));
  }
}

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) {
    throw UsageError(std::string(what) + " needs a square matrix, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

IndexSet index_set_option(const std::vector<std::size_t>& v, std::size_t bound, const char* what) {
  IndexSet s = IndexSet::from_unsorted(v);
  if (s.max() > bound) {
    throw UsageError(std::string(what) + " index " + std::to_string(s.max()) +
                     " out of range 1.." + std::to_string(bound));
  }
  return s;
}

std::vector<Choice> row_col_sweep(std::size_t n, std::size_t row_count, std::size_t col_count,
                                  std::uint64_t seed, std::uint64_t stream) {
  std::vector<Choice> out;
  if (n <= kExhaustiveMaxOrder) {
    const auto cols = k_subsets(n, col_count);
    for (const auto& rows : k_subsets(n, row_count)) {
      for (const auto& c : cols) out.emplace_back(rows, c);
    }
    return out;
  }
  SeededStream rng(seed, stream);
  for (std::size_t k = 0; k < kSampledChoices; ++k) {
    IndexSet rows = rng.subset(n, row_count);
    IndexSet cols = rng.subset(n, col_count);
    out.emplace_back(std::move(rows), std::move(cols));
  }
  return out;
}

// Pool choices for the column form of the Plücker relation: first the
// columns forming M, then the 2r vector columns.
std::vector<Choice> pool_sweep(std::size_t n, std::size_t m, std::size_t r, std::uint64_t seed) {
  const std::size_t used = n + r;
  const std::uint64_t total = binomial(m, used) * binomial(used, 2 * r);
  std::vector<Choice> out;
  auto split = [&](const IndexSet& columns, const IndexSet& vector_positions) {
    std::vector<std::size_t> m_cols, v_cols;
    for (std::size_t p = 1; p <= columns.size(); ++p) {
      (vector_positions.contains(p) ? v_cols : m_cols).push_back(columns[p - 1]);
    }
    out.emplace_back(IndexSet(std::move(m_cols)), IndexSet(std::move(v_cols)));
  };
  if (total <= kExhaustiveCap) {
    const auto positions = k_subsets(used, 2 * r);
    for (const auto& columns : k_subsets(m, used)) {
      for (const auto& vp : positions) split(columns, vp);
    }
    return out;
  }
  SeededStream rng(seed, kPlueckerStream + r);
  for (std::size_t k = 0; k < kSampledChoices; ++k) {
    const IndexSet columns = rng.subset(m, used);
    split(columns, rng.subset(used, 2 * r));
  }
  return out;
}

void pluecker_checks(RunReport& report, const Matrix& pool, const IndexSet& m_cols,
                     const IndexSet& v_cols) {
  const std::size_t r = v_cols.size() / 2;
  const Matrix m = submatrix_select(pool, IndexSet::all(pool.rows()), m_cols);
  std::vector<Column> vectors;
  for (std::size_t c : v_cols) vectors.push_back(pool.column(c));
  Json operands;
  operands["r"] = r;
  operands["m_cols"] = index_array(m_cols.values());
  operands["cols"] = index_array(v_cols.values());
  report.results.push_back(residual_record("pluecker", operands, pluecker_sum(m, vectors)));
  if (r == 2) {
    report.results.push_back(residual_record(
        "pluecker-three-term", operands,
        three_term_residual(m, vectors[0], vectors[1], vectors[2], vectors[3])));
  }
}

bool verify_jacobi(RunReport& report, const Matrix& a, const VerifyOptions& o, bool required) {
  if (!a.is_square() || a.rows() < 2) {
    if (required) throw UsageError("jacobi needs a square matrix of order >= 2");
    return false;
  }
  if (o.pair) {
    if (o.pair->size() != 2) throw UsageError("--pair takes exactly two indices i,j");
    const std::size_t i = (*o.pair)[0], j = (*o.pair)[1];
    Json operands;
    operands["i"] = i;
    operands["j"] = j;
    report.results.push_back(residual_record("jacobi", operands, jacobi_residual(a, i, j)));
    return true;
  }
  append_identity_report(report, verify_all_jacobi(a));
  return true;
}

bool verify_three_term(RunReport& report, const Matrix& a, const VerifyOptions& o, bool required) {
  if (!a.is_square() || a.rows() < 4) {
    if (required) throw UsageError("three-term needs a square matrix of order >= 4");
    return false;
  }
  std::vector<Choice> choices;
  if (o.rows || o.cols) {
    if (!o.rows || !o.cols) throw UsageError("three-term selection needs both --rows and --cols");
    choices.emplace_back(index_set_option(*o.rows, a.rows(), "row"),
                         index_set_option(*o.cols, a.cols(), "column"));
  } else {
    choices = row_col_sweep(a.rows(), 2, 4, o.seed, kThreeTermStream);
  }
  append_identity_report(report, verify_minor_three_term(a, choices));
  return true;
}

bool verify_generalized(RunReport& report, const Matrix& a, const VerifyOptions& o,
                        bool required) {
  if (!a.is_square() || a.rows() < 2) {
    if (required) throw UsageError("generalized needs a square matrix of order >= 2");
    return false;
  }
  const std::size_t n = a.rows();
  if (o.rows || o.cols) {
    if (!o.rows || !o.cols) throw UsageError("generalized selection needs both --rows and --cols");
    const std::vector<Choice> one{{index_set_option(*o.rows, n, "row"),
                                   index_set_option(*o.cols, n, "column")}};
    append_identity_report(report, verify_generalized_pluecker(a, one));
    return true;
  }
  std::vector<std::size_t> rs;
  if (o.r) {
    if (*o.r == 0 || 2 * *o.r > n) throw UsageError("generalized needs 1 <= r <= n/2");
    rs.push_back(*o.r);
  } else {
    for (std::size_t r = 1; r <= std::min<std::size_t>(3, n / 2); ++r) rs.push_back(r);
  }
  for (std::size_t r : rs) {
    const auto choices = row_col_sweep(n, r, 2 * r, o.seed, kGeneralizedStream + r);
    append_identity_report(report, verify_generalized_pluecker(a, choices));
  }
  return true;
}

bool verify_pluecker(RunReport& report, const Matrix& a, const VerifyOptions& o, bool required) {
  const std::size_t n = a.rows(), m = a.cols();
  if (m < n + 1) {
    if (required) {
      throw UsageError("pluecker needs an n x m column pool with m >= n+1, got " +
                       std::to_string(n) + "x" + std::to_string(m));
    }
    return false;
  }
  if (o.cols || o.m_cols) {
    if (!o.cols || !o.m_cols) throw UsageError("pluecker selection needs both --m-cols and --cols");
    const IndexSet m_cols = index_set_option(*o.m_cols, m, "column");
    const IndexSet v_cols = index_set_option(*o.cols, m, "column");
    if (v_cols.empty() || v_cols.size() % 2 != 0) {
      throw UsageError("pluecker --cols needs an even, nonzero number of columns");
    }
    if (m_cols.size() + v_cols.size() / 2 != n) {
      throw UsageError("pluecker needs |m-cols| = n - r with r = |cols|/2");
    }
    pluecker_checks(report, a, m_cols, v_cols);
    return true;
  }
  std::vector<std::size_t> rs;
  const std::size_t r_max = std::min({std::size_t{3}, n, m - n});
  if (o.r) {
    if (*o.r == 0 || *o.r > n || *o.r > m - n) throw UsageError("pluecker needs 1 <= r <= min(n, m-n)");
    rs.push_back(*o.r);
  } else {
    for (std::size_t r = 1; r <= r_max; ++r) rs.push_back(r);
  }
  for (std::size_t r : rs) {
    for (const auto& [m_cols, v_cols] : pool_sweep(n, m, r, o.seed)) {
      pluecker_checks(report, a, m_cols, v_cols);
    }
  }
  return true;
}

std::string first_nonzero(const IdentityReport& r) {
  return r.witnesses.empty() ? "0" : r.witnesses.front().residual.to_string();
}

Json witness_json(const IdentityReport& r) {
  Json out = Json::array();
  for (const auto& w : r.witnesses) {
    Json item;
    item["rows"] = index_array(w.choice.rows);
    item["cols"] = index_array(w.choice.cols);
    item["residual"] = w.residual.to_string();
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<Choice> sample_choices(SeededStream& rng, std::size_t n, std::size_t row_count,
                                   std::size_t col_count, std::size_t limit) {
  std::vector<Choice> out;
  if (binomial(n, row_count) * binomial(n, col_count) <= limit) {
    const auto cols = k_subsets(n, col_count);
    for (const auto& rows : k_subsets(n, row_count)) {
      for (const auto& c : cols) out.emplace_back(rows, c);
    }
    return out;
  }
  for (std::size_t k = 0; k < limit; ++k) {
    IndexSet rows = rng.subset(n, row_count);
    IndexSet cols = rng.subset(n, col_count);
    out.emplace_back(std::move(rows), std::move(cols));
  }
  return out;
}

bool selected(FuzzSelection chosen, FuzzSelection check) {
  return chosen == FuzzSelection::all || chosen == check;
}

CheckRecord identity_record(const char* name, std::size_t trial, std::size_t n,
                            const IdentityReport& r, std::optional<std::size_t> rank = {}) {
  Json operands;
  operands["trial"] = trial;
  operands["n"] = n;
  if (rank) operands["r"] = *rank;
  operands["residuals"] = r.residuals_checked;
  if (!r.passed()) operands["witnesses"] = witness_json(r);
  return CheckRecord{name, std::move(operands), first_nonzero(r), r.passed()};
}

// Everything one fuzz trial does. Draw order from the stream: n, then the
// n x n matrix, then per-check draws in the order below.
std::vector<CheckRecord> fuzz_trial(const FuzzOptions& o, std::size_t trial) {
  SeededStream rng(o.seed, trial);
  const auto n = static_cast<std::size_t>(rng.uniform(2, static_cast<std::int64_t>(o.size_max)));
  const Matrix a = rng.integer_matrix(n, n, o.entry_bound);
  std::vector<CheckRecord> out;

  auto base = [&] {
    Json operands;
    operands["trial"] = trial;
    operands["n"] = n;
    return operands;
  };

  if (selected(o.selection, FuzzSelection::engines)) {
    const Scalar bareiss = det_bareiss(a);
    const DodgsonResult dodgson = det_dodgson(a);
    bool agree = dodgson.value == bareiss;
    Json operands = base();
    operands["laplace"] = n <= kLaplaceMaxOrder;
    if (n <= kLaplaceMaxOrder) agree = agree && det_laplace(a) == bareiss;
    operands["fallback_used"] = dodgson.fallback_used;
    operands["fallback_depth"] = dodgson.fallback_depth;
    out.push_back(CheckRecord{"engines", std::move(operands), bareiss.to_string(), agree});
  }
  if (selected(o.selection, FuzzSelection::jacobi)) {
    out.push_back(identity_record("jacobi", trial, n, verify_all_jacobi(a)));
  }
  if (selected(o.selection, FuzzSelection::three_term) && n >= 4) {
    const auto choices = sample_choices(rng, n, 2, 4, 32);
    out.push_back(identity_record("three-term", trial, n, verify_minor_three_term(a, choices)));
  }
  if (selected(o.selection, FuzzSelection::generalized)) {
    const auto r = static_cast<std::size_t>(
        rng.uniform(1, static_cast<std::int64_t>(std::min<std::size_t>(3, n / 2))));
    const auto choices = sample_choices(rng, n, r, 2 * r, 16);
    out.push_back(
        identity_record("generalized", trial, n, verify_generalized_pluecker(a, choices), r));
  }
  if (selected(o.selection, FuzzSelection::pluecker)) {
    const auto r = static_cast<std::size_t>(
        rng.uniform(1, static_cast<std::int64_t>(std::min<std::size_t>(3, n))));
    const Matrix m = rng.integer_matrix(n, n - r, o.entry_bound);
    std::vector<Column> vectors;
    for (std::size_t k = 0; k < 2 * r; ++k) vectors.push_back(rng.integer_column(n, o.entry_bound));
    Json operands = base();
    operands["r"] = r;
    out.push_back(residual_record("pluecker", operands, pluecker_sum(m, vectors)));
    if (r == 2) {
      out.push_back(residual_record(
          "pluecker-three-term", operands,
          three_term_residual(m, vectors[0], vectors[1], vectors[2], vectors[3])));
    }
  }
  if (selected(o.selection, FuzzSelection::pfaffian)) {
    const std::size_t order = n + n % 2;
    const AntisymmetricMatrix s = rng.antisymmetric(order, o.entry_bound);
    const Scalar pf = pfaffian(s);
    const RecurrenceTerms terms = recurrence_terms(s);
    Json operands;
    operands["trial"] = trial;
    operands["order"] = order;
    operands["square_residual"] = (pf * pf - terms.det).to_string();
    operands["recurrence_residual"] = terms.residual().to_string();
    const bool ok = (pf * pf == terms.det) && terms.residual().is_zero() && terms.minors_consistent();
    out.push_back(CheckRecord{"pfaffian", std::move(operands), pf.to_string(), ok});
  }
  if (selected(o.selection, FuzzSelection::embed)) {
    const Scalar pf = pfaffian(determinant_embedding(a));
    const Scalar det = det_bareiss(a);
    Json operands = base();
    operands["det"] = det.to_string();
    out.push_back(CheckRecord{"embed", std::move(operands), pf.to_string(), pf == det});
  }
  return out;
}

Json json_list(const std::optional<std::vector<std::size_t>>& v) {
  return v ? index_array(*v) : Json(nullptr);
}

}  // namespace

RunReport cmd_det(const Matrix& a, Engine engine) {
  require_square(a, "det");
  RunReport report;
  const std::size_t n = a.rows();
  std::vector<std::pair<std::string, Scalar>> values;
  Json order;
  order["n"] = n;
  if (engine == Engine::laplace || (engine == Engine::all && n <= kLaplaceMaxOrder)) {
    values.emplace_back("laplace", det_laplace(a));
    report.results.push_back(CheckRecord{"det-laplace", order, values.back().second.to_string(), true});
  }
  if (engine == Engine::bareiss || engine == Engine::all) {
    values.emplace_back("bareiss", det_bareiss(a));
    report.results.push_back(CheckRecord{"det-bareiss", order, values.back().second.to_string(), true});
  }
  if (engine == Engine::dodgson || engine == Engine::all) {
    const DodgsonResult d = det_dodgson(a);
    values.emplace_back("dodgson", d.value);
    Json operands = order;
    operands["fallback_used"] = d.fallback_used;
    operands["fallback_depth"] = d.fallback_depth;
    report.results.push_back(CheckRecord{"det-dodgson", std::move(operands), d.value.to_string(), true});
  }
  if (engine == Engine::all) {
    bool agree = true;
    Json engines = Json::array();
    for (const auto& [name, value] : values) {
      engines.push_back(name);
      agree = agree && value == values.front().second;
    }
    Json operands = order;
    operands["engines"] = std::move(engines);
    report.results.push_back(
        CheckRecord{"engine-agreement", std::move(operands), values.front().second.to_string(), agree});
  }
  return report;
}

RunReport cmd_verify(const Matrix& a, const VerifyOptions& options) {
  RunReport report;
  const bool all = options.identity == Identity::all;
  if (all && (options.pair || options.rows || options.cols || options.m_cols)) {
    throw UsageError("index selections need a single --identity");
  }
  bool any = false;
  if (all || options.identity == Identity::jacobi) any |= verify_jacobi(report, a, options, !all);
  if (all || options.identity == Identity::three_term) {
    any |= verify_three_term(report, a, options, !all);
  }
  if (all || options.identity == Identity::generalized) {
    any |= verify_generalized(report, a, options, !all);
  }
  if (all || options.identity == Identity::pluecker) any |= verify_pluecker(report, a, options, !all);
  if (!any) {
    throw UsageError("no identity applies to a " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " matrix");
  }
  return report;
}

RunReport cmd_pfaffian(const Matrix& a, PfaffianCheck check) {
  const AntisymmetricMatrix s = AntisymmetricMatrix::from_matrix(a);
  RunReport report;
  Json order;
  order["order"] = s.order();
  const Scalar pf = pfaffian(s);
  report.results.push_back(CheckRecord{"pfaffian", order, pf.to_string(), true});
  if (check == PfaffianCheck::square) {
    const Scalar det = det_bareiss(a);
    report.results.push_back(CheckRecord{"det", order, det.to_string(), true});
    report.results.push_back(residual_record("pfaffian-square", order, pf * pf - det));
  }
  if (check == PfaffianCheck::recurrence) {
    const RecurrenceTerms t = recurrence_terms(s);
    Json operands = order;
    operands["comp12"] = t.comp12.to_string();
    operands["det"] = t.det.to_string();
    operands["M12"] = t.m12.to_string();
    report.results.push_back(residual_record("jacobi-recurrence", operands, t.residual()));
    Json minors = order;
    minors["M11"] = t.m11.to_string();
    minors["M22"] = t.m22.to_string();
    minors["M12"] = t.m12.to_string();
    minors["M21"] = t.m21.to_string();
    report.results.push_back(
        CheckRecord{"recurrence-minors", std::move(minors), (t.m12 + t.m21).to_string(),
                    t.minors_consistent()});
  }
  return report;
}

RunReport cmd_embed(const Matrix& a, bool minors) {
  require_square(a, "embed");
  const AntisymmetricMatrix b = determinant_embedding(a);
  RunReport report;
  const Scalar det = det_bareiss(a);
  const Scalar pf = pfaffian(b);
  Json operands;
  operands["n"] = a.rows();
  operands["det"] = det.to_string();
  report.results.push_back(CheckRecord{"embedding-pfaffian", operands, pf.to_string(), pf == det});
  if (minors) {
    const std::size_t n = a.rows();
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        const Scalar via = embedded_minor(a, LabelRemoval{{i}, {j}});
        const Scalar direct = first_minor(a, i, j);
        Json op;
        op["remove"] = std::to_string(i) + "," + std::to_string(j) + "*";
        op["minor"] = direct.to_string();
        report.results.push_back(CheckRecord{"embedded-minor", std::move(op), via.to_string(), via == direct});
      }
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        const Scalar via = embedded_minor(a, LabelRemoval{{i, j}, {i, j}});
        const Scalar direct = complementary_minor(a, IndexSet{i, j}, IndexSet{i, j});
        Json op;
        op["remove"] = std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(i) + "*," +
                       std::to_string(j) + "*";
        op["minor"] = direct.to_string();
        report.results.push_back(CheckRecord{"embedded-minor", std::move(op), via.to_string(), via == direct});
      }
    }
  }
  return report;
}

RunReport cmd_fuzz(const FuzzOptions& options) {
  if (options.trials < 1) throw UsageError("--trials must be >= 1");
  if (options.size_max < 2 || options.size_max > kFuzzMaxSize) {
    throw UsageError("--size-max must be in 2.." + std::to_string(kFuzzMaxSize));
  }
  if (options.entry_bound < 1 || options.entry_bound > 1'000'000'000) {
    throw UsageError("--entry-bound must be in 1..1000000000");
  }

  std::vector<std::vector<CheckRecord>> per_trial(options.trials);
  unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, options.trials));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < options.trials; t = next++) per_trial[t] = fuzz_trial(options, t);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  }

  RunReport report;
  report.seed = options.seed;
  for (auto& records : per_trial) {
    for (auto& r : records) report.results.push_back(std::move(r));
  }
  return report;
}

int exit_code(const RunReport& report) { return report.passed() ? kExitPass : kExitViolation; }

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact determinant, minor and Pfaffian identities"};
  app.name("detident");
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.set_help_all_flag("--help-all", "Expand all help");

  const std::map<std::string, Engine> engines{{"laplace", Engine::laplace},
                                              {"bareiss", Engine::bareiss},
                                              {"dodgson", Engine::dodgson},
                                              {"all", Engine::all}};
  const std::map<std::string, Identity> identities{{"jacobi", Identity::jacobi},
                                                   {"three-term", Identity::three_term},
                                                   {"generalized", Identity::generalized},
                                                   {"pluecker", Identity::pluecker},
                                                   {"all", Identity::all}};
  const std::map<std::string, PfaffianCheck> checks{{"none", PfaffianCheck::none},
                                                    {"square", PfaffianCheck::square},
                                                    {"recurrence", PfaffianCheck::recurrence}};
  const std::map<std::string, MatrixFormat> formats{{"text", MatrixFormat::text},
                                                    {"json", MatrixFormat::json}};
  const std::map<std::string, FuzzSelection> fuzz_sel{
      {"jacobi", FuzzSelection::jacobi},     {"three-term", FuzzSelection::three_term},
      {"generalized", FuzzSelection::generalized}, {"pluecker", FuzzSelection::pluecker},
      {"engines", FuzzSelection::engines},   {"pfaffian", FuzzSelection::pfaffian},
      {"embed", FuzzSelection::embed},       {"all", FuzzSelection::all}};

  std::string file;
  bool json = false;
  MatrixFormat format = MatrixFormat::text;

  auto* det = app.add_subcommand("det", "Determinant by one or all engines");
  Engine engine = Engine::all;
  std::string engine_text = "all";
  det->add_option("file", file, "MatrixFile path, '-' for stdin")->required();
  det->add_option("--engine", engine_text, "laplace|bareiss|dodgson|all (all skips laplace above n=8)")
      ->check(CLI::IsMember({"laplace", "bareiss", "dodgson", "all"}));
  det->add_flag("--json", json, "Print the JSON report");

  auto* verify = app.add_subcommand(
      "verify",
      "Check identities as exact-zero residuals. Without selections every index choice is "
      "checked for n <= 6 (pluecker pools: while the choice count is <= 4096); larger sweeps sample 256 choices from --seed.");
  VerifyOptions vopt;
  std::string identity_text = "all";
  std::vector<std::size_t> pair, rows, cols, m_cols;
  std::size_t r = 0;
  verify->add_option("file", file, "MatrixFile path, '-' for stdin")->required();
  verify->add_option("--identity", identity_text, "jacobi|three-term|generalized|pluecker|all")
      ->check(CLI::IsMember({"jacobi", "three-term", "generalized", "pluecker", "all"}));
  auto* pair_opt = verify->add_option("--pair", pair, "jacobi: ordered pair i,j")->delimiter(',');
  auto* rows_opt = verify->add_option("--rows", rows, "deleted rows (three-term, generalized)")->delimiter(',');
  auto* cols_opt =
      verify->add_option("--cols", cols, "chosen columns (three-term, generalized, pluecker vectors)")
          ->delimiter(',');
  auto* mcols_opt = verify->add_option("--m-cols", m_cols, "pluecker: columns forming M")->delimiter(',');
  auto* r_opt = verify->add_option("--r", r, "generalized/pluecker rank r");
  verify->add_option("--seed", vopt.seed, "seed for sampled sweeps");
  verify->add_flag("--json", json, "Print the JSON report");

  auto* pf = app.add_subcommand("pfaffian", "Pfaffian of an antisymmetric matrix");
  std::string check_text = "none";
  pf->add_option("file", file, "MatrixFile path, '-' for stdin")->required();
  pf->add_option("--check", check_text, "none|square|recurrence")
      ->check(CLI::IsMember({"none", "square", "recurrence"}));
  pf->add_flag("--json", json, "Print the JSON report");

  auto* embed = app.add_subcommand(
      "embed", "Emit the Pfaffian embedding of a square matrix and check Pf = det");
  bool minors = false;
  std::string format_text = "text";
  embed->add_option("file", file, "MatrixFile path, '-' for stdin")->required();
  embed->add_flag("--minors", minors, "Also check the embedded minor correspondences");
  embed->add_option("--format", format_text, "text|json for the emitted matrix")
      ->check(CLI::IsMember({"text", "json"}));
  embed->add_flag("--json", json, "Print the JSON report instead of the matrix");

  auto* fuzz = app.add_subcommand("fuzz", "Seeded differential fuzzing of engines and identities");
  FuzzOptions fopt;
  std::string selection_text = "all";
  fuzz->add_option("--seed", fopt.seed, "generator seed");
  fuzz->add_option("--trials", fopt.trials, "number of trials (>= 1)");
  fuzz->add_option("--size-max", fopt.size_max, "largest matrix order, 2..10");
  fuzz->add_option("--entry-bound", fopt.entry_bound, "entries uniform in [-b, b]");
  fuzz->add_option("--identity", selection_text,
                   "jacobi|three-term|generalized|pluecker|engines|pfaffian|embed|all")
      ->check(CLI::IsMember({"jacobi", "three-term", "generalized", "pluecker", "engines",
                             "pfaffian", "embed", "all"}));
  fuzz->add_option("--jobs", fopt.jobs, "worker threads, 0 = hardware concurrency");
  fuzz->add_flag("--json", json, "Print the JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "detident: " << e.what() << '\n';
    return kExitUsage;
  }

  engine = engines.at(engine_text);
  format = formats.at(format_text);

  try {
    RunReport report;
    Json command;
    if (det->parsed()) {
      command["name"] = "det";
      command["file"] = file;
      command["engine"] = engine_text;
      report = cmd_det(read_matrix_file(file, in), engine);
    } else if (verify->parsed()) {
      vopt.identity = identities.at(identity_text);
      if (pair_opt->count() > 0) vopt.pair = pair;
      if (rows_opt->count() > 0) vopt.rows = rows;
      if (cols_opt->count() > 0) vopt.cols = cols;
      if (mcols_opt->count() > 0) vopt.m_cols = m_cols;
      if (r_opt->count() > 0) vopt.r = r;
      command["name"] = "verify";
      command["file"] = file;
      command["identity"] = identity_text;
      command["pair"] = json_list(vopt.pair);
      command["rows"] = json_list(vopt.rows);
      command["cols"] = json_list(vopt.cols);
      command["m_cols"] = json_list(vopt.m_cols);
      command["r"] = vopt.r ? Json(*vopt.r) : Json(nullptr);
      command["seed"] = vopt.seed;
      report = cmd_verify(read_matrix_file(file, in), vopt);
    } else if (pf->parsed()) {
      command["name"] = "pfaffian";
      command["file"] = file;
      command["check"] = check_text;
      report = cmd_pfaffian(read_matrix_file(file, in), checks.at(check_text));
    } else if (embed->parsed()) {
      command["name"] = "embed";
      command["file"] = file;
      command["minors"] = minors;
      const Matrix a = read_matrix_file(file, in);
      report = cmd_embed(a, minors);
      report.command = command;
      if (json) {
        report.results.front().operands["embedding"] =
            nlohmann::ordered_json::parse(format_matrix(determinant_embedding(a).to_matrix(),
                                                        MatrixFormat::json));
        report.write_json(out);
      } else {
        write_matrix(out, determinant_embedding(a).to_matrix(), format);
        if (format == MatrixFormat::text) report.write_text(out, "# ");
      }
      return exit_code(report);
    } else if (fuzz->parsed()) {
      fopt.selection = fuzz_sel.at(selection_text);
      command["name"] = "fuzz";
      command["seed"] = fopt.seed;
      command["trials"] = fopt.trials;
      command["size_max"] = fopt.size_max;
      command["entry_bound"] = fopt.entry_bound;
      command["identity"] = selection_text;
      report = cmd_fuzz(fopt);
    }
    report.command = command;
    if (json) {
      report.write_json(out);
    } else {
      report.write_text(out);
    }
    return exit_code(report);
  } catch (const AntisymmetryError& e) {
    err << "detident: " << e.what() << " (first violating entry i=" << e.row() << ", j=" << e.col()
        << ")\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "detident: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace detident::cli
