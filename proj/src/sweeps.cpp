#include "mpendo/sweeps.hpp"

#include <functional>
#include <random>

#include "mpendo/endoscopy.hpp"
#include "mpendo/lparams.hpp"
#include "mpendo/opcalc.hpp"
#include "mpendo/ssclasses.hpp"

namespace mpendo {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

template <class Case>
std::vector<Report> run_cases(const std::vector<Case>& cases, Exec exec, const std::function<Report(const Case&)>& body,
                              const std::function<Report(const Case&, const std::string&)>& on_error)
{
  std::vector<Report> out(cases.size());
  auto one = [&](std::size_t i) {
    try {
      out[i] = body(cases[i]);
    } catch (const std::exception& ex) {
      out[i] = on_error(cases[i], ex.what());
    }
  };
  const long long count = static_cast<long long>(cases.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i)
      one(static_cast<std::size_t>(i));
  } else {
    for (long long i = 0; i < count; ++i)
      one(static_cast<std::size_t>(i));
  }
  return out;
}

Json datum_json(const EndoDatum& d) { return Json::array({d.n_p, d.n_pp}); }

std::uint64_t binomial(int n, int k)
{
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

struct NdCase {
  int n;
  EndoDatum d;
};

std::vector<NdCase> nd_cases(int nmax)
{
  std::vector<NdCase> cases;
  for (int n = 0; n <= nmax; ++n)
    for (const auto& d : elliptic_data(n))
      cases.push_back({n, d});
  return cases;
}

Json nd_params(const NdCase& c)
{
  Json p = Json::object();
  p["n"] = c.n;
  p["d"] = datum_json(c.d);
  return p;
}

} // namespace

std::vector<Report> sweep_sign_lemma(int kmax, Exec exec)
{
  std::vector<std::pair<int, int>> cases;
  for (int a = 0; a <= kmax; ++a)
    for (int b = 0; b <= kmax; ++b)
      cases.emplace_back(a, b);
  auto params = [](const std::pair<int, int>& c) {
    Json p = Json::object();
    p["k_p"] = c.first;
    p["k_pp"] = c.second;
    return p;
  };
  return run_cases<std::pair<int, int>>(
      cases, exec,
      [&](const std::pair<int, int>& c) {
        Json details = Json::object();
        const auto direct = sign_sum(c.first, c.second);
        const auto rec = sign_sum_recursive(c.first, c.second);
        const auto closed = sign_sum_closed_form(c.first, c.second);
        details["direct"] = direct;
        details["recursive"] = rec;
        details["closed_form"] = closed;
        details["triples"] = marker_patterns(c.first, c.second).size();
        if (direct == rec && rec == closed)
          return Report::pass("sign-lemma", params(c), details);
        return Report::fail("sign-lemma", params(c), details, details);
      },
      [&](const std::pair<int, int>& c, const std::string& err) { return Report::fail("sign-lemma", params(c), err); });
}

std::vector<Report> sweep_levi_preimages(int nmax, Exec exec)
{
  return run_cases<NdCase>(
      nd_cases(nmax), exec,
      [](const NdCase& c) {
        std::size_t levis = 0, preimages = 0;
        for (const auto& levi : enumerate_levis_so_pair(c.d.n_p, c.d.n_pp)) {
          std::int64_t sum = 0;
          const auto pre = levi_preimages(levi, c.d);
          for (const auto& x : pre)
            sum += parity_sign(semisimple_rank_sp(x.levi));
          const int expected = parity_sign(semisimple_rank_so_pair(levi));
          ++levis;
          preimages += pre.size();
          if (sum != expected) {
            Json cx = Json::object();
            cx["levi"] = levi.to_string();
            cx["sum"] = sum;
            cx["expected"] = expected;
            return Report::fail("levi-preimages", nd_params(c), cx);
          }
        }
        Json details = Json::object();
        details["levis"] = levis;
        details["preimages"] = preimages;
        return Report::pass("levi-preimages", nd_params(c), details);
      },
      [](const NdCase& c, const std::string& err) { return Report::fail("levi-preimages", nd_params(c), err); });
}

namespace {

struct FiberCase {
  std::uint32_t p;
  int n;
  std::size_t levi_index;
  LeviSp levi;
  EndoDatum d;
};

Json fiber_params(const FiberCase& c)
{
  Json p = Json::object();
  p["p"] = c.p;
  p["n"] = c.n;
  p["levi"] = c.levi.to_string();
  p["d"] = datum_json(c.d);
  return p;
}

} // namespace

std::vector<Report> sweep_fiber_bijection(const FiberSweepOptions& opt, Exec exec)
{
  std::vector<FiberCase> cases;
  for (std::uint32_t p : opt.primes)
    for (int n = 0; n <= opt.nmax; ++n) {
      const auto levis = enumerate_levis_sp(n);
      for (std::size_t li = 0; li < levis.size(); ++li)
        for (const auto& d : elliptic_data(n))
          cases.push_back({p, n, li, levis[li], d});
    }
  return run_cases<FiberCase>(
      cases, exec,
      [&](const FiberCase& c) {
        const PrimeField f(c.p);
        if (c.n > f.pair_count())
          return Report::skip("fiber-bijection", fiber_params(c),
                              "vacuous: Sp(" + std::to_string(2 * c.n) + ") has no regular semisimple class over F_" +
                                  std::to_string(c.p) + " (needs n <= (p-3)/2)");
        const std::uint64_t key = ((static_cast<std::uint64_t>(c.p) * 64 + static_cast<std::uint64_t>(c.n)) * 4096 +
                                   c.levi_index) * 64 + static_cast<std::uint64_t>(c.d.n_p);
        std::mt19937_64 rng(mix_seed(opt.seed, key));
        std::size_t fiber_total = 0;
        for (int t = 0; t < opt.trials; ++t) {
          auto gamma = random_regular_class(f, c.levi, rng);
          if (!gamma)
            return Report::fail("fiber-bijection", fiber_params(c), "sampler found no G-regular class");
          const auto rep = check_fiber_bijection(f, *gamma, c.d);
          fiber_total += rep.fiber_size;
          Json cx = Json::object();
          cx["gamma"] = gamma->to_string();
          cx["trial"] = t;
          if (!rep.bijective()) {
            cx["reason"] = rep.counterexample.value_or("map is not bijective");
            return Report::fail("fiber-bijection", fiber_params(c), cx);
          }
          if (c.levi.is_whole_group() && rep.fiber_size != binomial(c.n, c.d.n_p)) {
            cx["reason"] = "fiber size " + std::to_string(rep.fiber_size) + " != C(n,n')";
            return Report::fail("fiber-bijection", fiber_params(c), cx);
          }
        }
        Json details = Json::object();
        details["trials"] = opt.trials;
        details["fiber_elements"] = fiber_total;
        return Report::pass("fiber-bijection", fiber_params(c), details);
      },
      [](const FiberCase& c, const std::string& err) { return Report::fail("fiber-bijection", fiber_params(c), err); });
}

namespace {

Report commutation_report(const std::string& check, Json params, const CommutationReport& rep)
{
  Json details = Json::object();
  details["assumption"] = rep.assumption;
  details["levis"] = rep.table.size();
  details["jacquet_rewrites"] = rep.stats.jacquet_rewrites;
  details["absorb_rewrites"] = rep.stats.absorb_rewrites;
  details["twist_cancellations"] = rep.stats.twist_cancellations;
  details["residual"] = rep.residual.to_string();
  if (!rep.chain.empty() && rep.ambient_levi)
    details["chain"] = rep.chain;
  if (rep.passed())
    return Report::pass(check, std::move(params), details);
  Json cx = Json::object();
  if (rep.error)
    cx["error"] = *rep.error;
  if (rep.first_residual)
    cx["residual_word"] = *rep.first_residual;
  for (const auto& row : rep.table)
    if (!row.ok()) {
      cx["levi"] = row.levi.to_string();
      cx["engine"] = row.engine;
      cx["expected"] = row.expected;
      cx["preimage_sum"] = row.preimage_sum;
      break;
    }
  if (cx.empty())
    cx["chain"] = rep.chain;
  return Report::fail(check, std::move(params), cx, details);
}

struct AmbientCase {
  int n;
  LeviSp levi;
  EndoDatum d;
};

Json ambient_params(const AmbientCase& c)
{
  Json p = Json::object();
  p["n"] = c.n;
  p["ambient"] = c.levi.to_string();
  p["d"] = datum_json(c.d);
  return p;
}

} // namespace

std::vector<Report> sweep_commutation(int nmax, Exec exec)
{
  return run_cases<NdCase>(
      nd_cases(nmax), exec,
      [](const NdCase& c) { return commutation_report("commutation", nd_params(c), check_commutation(c.n, c.d)); },
      [](const NdCase& c, const std::string& err) { return Report::fail("commutation", nd_params(c), err); });
}

std::vector<Report> sweep_commutation_ambient(int nmax, Exec exec)
{
  std::vector<AmbientCase> cases;
  for (int n = 1; n <= nmax; ++n)
    for (const auto& levi : enumerate_levis_sp(n)) {
      if (levi.is_whole_group())
        continue;
      for (const auto& d : elliptic_data(levi.m()))
        cases.push_back({n, levi, d});
    }
  return run_cases<AmbientCase>(
      cases, exec,
      [](const AmbientCase& c) {
        return commutation_report("commutation-ambient", ambient_params(c), check_commutation(c.n, c.d, c.levi));
      },
      [](const AmbientCase& c, const std::string& err) {
        return Report::fail("commutation-ambient", ambient_params(c), err);
      });
}

std::vector<Report> sweep_lparam_partition(const LParamSweepOptions& opt, Exec exec)
{
  std::vector<int> cases;
  for (int n = 1; n <= opt.nmax; ++n)
    cases.push_back(n);
  auto params = [&](int n) {
    Json p = Json::object();
    p["n"] = n;
    p["trials"] = opt.trials;
    p["seed"] = opt.seed;
    return p;
  };
  return run_cases<int>(
      cases, exec,
      [&](const int& n) {
        std::mt19937_64 rng(mix_seed(opt.seed, static_cast<std::uint64_t>(n)));
        std::size_t factorization_count = 0, blocks_checked = 0;
        for (int t = 0; t < opt.trials; ++t) {
          const LParameter phi = random_discrete_parameter(n, rng);
          Json cx = Json::object();
          cx["phi"] = phi.to_string();
          if (!validate_discrete(phi).empty()) {
            cx["reason"] = validate_discrete(phi).front().message;
            return Report::fail("lparam-partition", params(n), cx);
          }
          for (const auto& d : elliptic_data(n))
            for (const auto& fz : factorizations(phi, d)) {
              ++factorization_count;
              for (const auto& block : phi.blocks) {
                ++blocks_checked;
                const bool in_p = fz.phi_p.contains(block);
                const bool in_pp = fz.phi_pp.contains(block);
                std::string bad;
                if (in_p == in_pp) {
                  bad = "block in both or neither factor";
                } else {
                  const auto data = corollary_data(fz.phi_p, fz.phi_pp, block);
                  const SplitPart side = in_p ? SplitPart{block.rho.dim, 0} : SplitPart{0, block.rho.dim};
                  const int alpha = in_p ? 1 : block.rho.omega_m1;
                  if (data.alpha != alpha || (data.alpha != 1 && data.alpha != -1))
                    bad = "alpha mismatch";
                  else if (data.twice_x != block.a - 1 || data.twice_x < 0)
                    bad = "x mismatch";
                  else if (data.levi_choice != side)
                    bad = "levi choice on the wrong side";
                }
                if (!bad.empty()) {
                  cx["d"] = datum_json(d);
                  cx["block"] = block.to_string();
                  cx["reason"] = bad;
                  return Report::fail("lparam-partition", params(n), cx);
                }
              }
            }
        }
        Json details = Json::object();
        details["factorizations"] = factorization_count;
        details["blocks_checked"] = blocks_checked;
        return Report::pass("lparam-partition", params(n), details);
      },
      [&](const int& n, const std::string& err) { return Report::fail("lparam-partition", params(n), err); });
}

} // namespace mpendo
