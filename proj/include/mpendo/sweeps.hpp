#pragma once

#include <cstdint>
#include <vector>

#include "mpendo/report.hpp"

namespace mpendo {

/// Serial runs the reference loop; Parallel distributes cases over OpenMP threads.
/// Both return the reports in the same canonical order.
enum class Exec { Serial, Parallel };

/// splitmix64 of seed + stream: an independent, order-free seed per case.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// f(k', k'') by enumeration, recursion and closed form, for 0 <= k', k'' <= kmax.
std::vector<Report> sweep_sign_lemma(int kmax, Exec exec);

/// Sum over M(L) of (-1)^{r(M)} = (-1)^{r(L)} for every L, one report per (n, d), n <= nmax.
std::vector<Report> sweep_levi_preimages(int nmax, Exec exec);

struct FiberSweepOptions {
  int nmax = 5;
  std::vector<std::uint32_t> primes{11};
  int trials = 100;
  std::uint64_t seed = 0;
};

/// One report per (p, n, M, d) over `trials` random G-regular classes of M.
std::vector<Report> sweep_fiber_bijection(const FiberSweepOptions& opt, Exec exec);

/// D . T = T . D for every elliptic datum, one report per (n, d), n <= nmax.
std::vector<Report> sweep_commutation(int nmax, Exec exec);

/// The same through every proper standard Levi, one report per (n, M, d), n <= nmax.
std::vector<Report> sweep_commutation_ambient(int nmax, Exec exec);

struct LParamSweepOptions {
  int nmax = 6;
  int trials = 1000;
  std::uint64_t seed = 0;
};

/// One report per rank n in 1..nmax over `trials` random discrete parameters.
std::vector<Report> sweep_lparam_partition(const LParamSweepOptions& opt, Exec exec);

} // namespace mpendo
