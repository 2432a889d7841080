#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "mpendo/endoscopy.hpp"
#include "mpendo/levi.hpp"
#include "mpendo/sweeps.hpp"

using namespace mpendo;

namespace {

struct Outcome {
  bool ok = true;
  std::string summary;
};

struct Tally {
  std::size_t pass = 0, fail = 0, skip = 0;
  std::string first_failure;

  void add(const std::vector<Report>& reports)
  {
    for (const auto& r : reports) {
      if (r.status == Status::Pass)
        ++pass;
      else if (r.status == Status::Skip)
        ++skip;
      else {
        ++fail;
        if (first_failure.empty())
          first_failure = r.to_text();
      }
    }
  }
  std::string text() const
  {
    std::string s = std::to_string(pass) + " pass, " + std::to_string(fail) + " fail";
    if (skip)
      s += ", " + std::to_string(skip) + " vacuous";
    if (!first_failure.empty())
      s += "; first failure: " + first_failure;
    return s;
  }
};

Outcome sign_lemma()
{
  Tally t;
  const auto reports = sweep_sign_lemma(8, Exec::Parallel);
  t.add(reports);
  std::size_t oracle_mismatch = 0;
  for (const auto& r : reports) {
    const int a = r.params["k_p"], b = r.params["k_pp"];
    if (r.details.contains("direct") && r.details["direct"].get<std::int64_t>() != oracle::signed_triple_count(a, b))
      ++oracle_mismatch;
  }
  return {t.fail == 0 && oracle_mismatch == 0 && t.pass == 81,
          t.text() + ", oracle mismatches " + std::to_string(oracle_mismatch)};
}

Outcome levi_preimages_identity()
{
  Tally t;
  t.add(sweep_levi_preimages(8, Exec::Parallel));
  std::size_t oracle_levis = 0, oracle_bad = 0;
  for (int n = 0; n <= 6; ++n)
    for (const auto& d : elliptic_data(n))
      for (const auto& L : enumerate_levis_so_pair(d.n_p, d.n_pp)) {
        std::int64_t sum = 0;
        for (const auto& [shape, s] : oracle::brute_force_preimages(L, d))
          sum += parity_sign(n - static_cast<int>(shape.first.size()));
        ++oracle_levis;
        if (sum != parity_sign(n - L.k_p() - L.k_pp()))
          ++oracle_bad;
      }
  return {t.fail == 0 && oracle_bad == 0,
          t.text() + "; brute-force oracle on " + std::to_string(oracle_levis) + " Levis (n <= 6), " +
              std::to_string(oracle_bad) + " bad"};
}

Outcome fiber_bijection()
{
  FiberSweepOptions opt;
  opt.nmax = 5;
  opt.primes = {7, 11, 13};
  opt.trials = 100;
  Tally t;
  t.add(sweep_fiber_bijection(opt, Exec::Parallel));
  return {t.fail == 0 && t.pass > 0, t.text()};
}

Outcome commutation_elliptic()
{
  Tally t;
  t.add(sweep_commutation(6, Exec::Parallel));
  return {t.fail == 0 && t.pass > 0, t.text()};
}

Outcome commutation_ambient()
{
  Tally t;
  t.add(sweep_commutation_ambient(5, Exec::Parallel));
  return {t.fail == 0 && t.pass > 0, t.text()};
}

Outcome structural_counts()
{
  std::size_t bad = 0;
  for (int n = 0; n <= 14; ++n) {
    const auto levis = enumerate_levis_sp(n);
    std::set<std::pair<Parts, int>> shapes;
    for (const auto& l : levis) {
      shapes.insert({l.gl_parts(), l.m()});
      if (semisimple_rank_sp(l) != n - l.k())
        ++bad;
    }
    if (levis.size() != (std::size_t{1} << n) || shapes != oracle::levi_shapes_from_root_subsets(n))
      ++bad;
    for (const auto& d : elliptic_data(n))
      for (const auto& L : enumerate_levis_so_pair(d.n_p, d.n_pp))
        if (semisimple_rank_so_pair(L) != n - (L.k_p() + L.k_pp()))
          ++bad;
  }
  return {bad == 0, "n <= 14, " + std::to_string(bad) + " mismatches"};
}

Outcome lparam_partition()
{
  LParamSweepOptions opt;
  opt.nmax = 6;
  opt.trials = 1000;
  Tally t;
  t.add(sweep_lparam_partition(opt, Exec::Parallel));
  return {t.fail == 0 && t.pass == 6, t.text() + " (" + std::to_string(opt.trials) + " parameters per n)"};
}

} // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"sign lemma f(k',k'') for k',k'' <= 8", sign_lemma},
      {"Levi-preimage identity for n <= 8", levi_preimages_identity},
      {"fiber bijection for n <= 5, p in {7,11,13}, 100 trials", fiber_bijection},
      {"D.T = T.D elliptic case for n <= 6", commutation_elliptic},
      {"D.T = T.D through proper Levis for n <= 5", commutation_ambient},
      {"Levi counts 2^n and rank formulas for n <= 14", structural_counts},
      {"L-parameter partition for n <= 6", lparam_partition},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s -- %s [%.1fs]\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.summary.c_str(), secs);
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
