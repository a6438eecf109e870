#include <algorithm>
#include <map>
#include <thread>

#include "zir/errors.hpp"
#include "zir/graph6.hpp"
#include "zir/report.hpp"
#include "zir/verify.hpp"

namespace zir {

namespace {

struct GraphOutcome {
  std::string graph6;
  bool connected = false;
  std::optional<int> upper_zir;
  std::optional<std::array<int, 4>> tuple;
  std::vector<CheckReport> reports;
  std::string profile_line;
};

struct Shard {
  std::vector<GraphOutcome> outcomes;
};

void check_deadline(const SurveyOptions& o) {
  if (o.deadline && std::chrono::steady_clock::now() > *o.deadline) {
    throw BudgetExceeded("survey: time limit reached");
  }
}

GraphOutcome survey_one(const Graph& g, const std::vector<std::string>& checks, bool emit_profile) {
  GraphOutcome out;
  const ParamProfile p = parameter_profile(g);
  out.graph6 = p.id;
  out.connected = p.connected;
  out.upper_zir = p.value(Param::ZIR);
  const auto zir = p.value(Param::zir), z = p.value(Param::Z), zbar = p.value(Param::Zbar);
  if (zir && z && zbar && out.upper_zir) out.tuple = std::array<int, 4>{*zir, *z, *zbar, *out.upper_zir};
  out.reports = run_checks(p, checks);
  if (emit_profile) out.profile_line = profile_json(p, true).dump();
  return out;
}

/// Masks [begin, end) of order n, in ascending order.
Shard run_range(int n, std::uint64_t begin, std::uint64_t end, const SurveyOptions& o,
                const std::vector<std::string>& checks) {
  Shard shard;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    if ((mask & 0xFF) == 0) check_deadline(o);
    const Graph g = labeled_graph(n, mask);
    if (o.connected_only && !g.is_connected()) continue;
    if (o.dedup && canonical_mask(g) != mask) continue;
    shard.outcomes.push_back(survey_one(g, checks, o.emit_profiles));
  }
  return shard;
}

std::vector<Shard> run_order(int n, const SurveyOptions& o, const std::vector<std::string>& checks) {
  const std::uint64_t total = labeled_graph_count(n);
  const int workers = static_cast<int>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(o.threads, total)));
  // Contiguous ranges keep the merged order equal to the mask order.
  std::vector<Shard> shards(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto bounds = [&](int w) { return std::pair{total * w / workers, total * (w + 1) / workers}; };
  if (workers == 1) {
    shards[0] = run_range(n, 0, total, o, checks);
    return shards;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        auto [b, e] = bounds(w);
        shards[w] = run_range(n, b, e, o, checks);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return shards;
}

}  // namespace

SurveyReport survey(const SurveyOptions& o) {
  if (o.order < 1) throw InvalidSpec("survey order must be at least 1");
  const int ceiling = std::min(o.max_order, 7);
  if (o.order > ceiling) {
    throw BudgetExceeded("survey order " + std::to_string(o.order) + " exceeds the budget of " +
                         std::to_string(ceiling) + (ceiling < 7 ? " (raise --max-order, at most 7)" : ""));
  }
  if (o.dedup && o.order > 7) throw BudgetExceeded("dedup is limited to order 7");
  std::vector<std::string> checks = o.checks;
  if (checks.empty()) {
    for (const auto& info : check_catalog()) checks.emplace_back(info.name);
  }

  SurveyReport report;
  std::map<std::string, CheckTally> tallies;
  for (const auto& name : checks) tallies[name].check = name;

  for (int n = 1; n <= o.order; ++n) {
    LeaderboardEntry best{n, -1, {}, 0};
    std::map<std::array<int, 4>, RealizedTuple> tuples;
    for (auto& shard : run_order(n, o, checks)) {
      for (auto& g : shard.outcomes) {
        ++report.graphs;
        for (auto& r : g.reports) {
          auto& t = tallies[r.check];
          switch (r.status) {
            case CheckStatus::pass: ++t.pass; break;
            case CheckStatus::fail:
              ++t.fail;
              report.failures.push_back(std::move(r));
              break;
            case CheckStatus::skipped: ++t.skipped; break;
            case CheckStatus::finding:
              ++t.findings;
              report.findings.push_back(std::move(r));
              break;
          }
        }
        if (g.connected && g.upper_zir) {
          if (best.min_upper_zir < 0 || *g.upper_zir < best.min_upper_zir) {
            best = {n, *g.upper_zir, g.graph6, 1};
          } else if (*g.upper_zir == best.min_upper_zir) {
            ++best.attained_by;
          }
        }
        if (g.tuple) {
          auto [it, fresh] = tuples.try_emplace(*g.tuple, RealizedTuple{n, *g.tuple, 0, g.graph6});
          ++it->second.count;
        }
        if (o.emit_profiles) report.profile_lines.push_back(std::move(g.profile_line));
      }
    }
    if (best.min_upper_zir >= 0) report.leaderboard.push_back(best);
    for (auto& [key, t] : tuples) report.tuples.push_back(std::move(t));
  }
  for (const auto& name : checks) report.tallies.push_back(tallies[name]);
  return report;
}

}  // namespace zir
