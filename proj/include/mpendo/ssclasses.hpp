#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mpendo/endoscopy.hpp"
#include "mpendo/levi.hpp"

namespace mpendo {

using Residue = std::uint32_t;

class EigPair;

/// The prime field F_p for an odd prime p >= 7. Eigenvalues live in F_p^x.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  Residue reduce(std::int64_t a) const;
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const;
  Residue pow(Residue a, std::uint64_t e) const;
  /// Throws std::domain_error on 0.
  Residue inv(Residue a) const;

  bool is_plus_minus_one(Residue a) const { return a == 1 || a == p_ - 1; }

  /// Number of inverse pairs {a, a^-1} with a != 0, +-1; the largest rank of a
  /// regular semisimple class of Sp(2n) in this model.
  int pair_count() const { return static_cast<int>((p_ - 3) / 2); }

  /// Every inverse pair, by increasing canonical representative.
  std::vector<EigPair> all_pairs() const;

private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p);

/// An inverse pair {a, a^-1}, a != 0, +-1, stored by its smaller residue.
class EigPair {
public:
  EigPair() = default;
  EigPair(const PrimeField& f, Residue a);

  Residue lo() const { return lo_; }
  Residue hi() const { return hi_; }
  bool contains(Residue x) const { return x == lo_ || x == hi_; }

  /// {-a, -a^-1}.
  EigPair negated(const PrimeField& f) const { return EigPair(f, f.neg(lo_)); }

  auto operator<=>(const EigPair&) const = default;
  std::string to_string() const;

private:
  Residue lo_ = 0;
  Residue hi_ = 0;
};

/// A multiset of inverse pairs, kept sorted. Semisimple class of Sp(2n) (eigenvalues
/// listed in full) or of SO(2n+1) (the eigenvalue 1 left implicit).
class PairMultiset {
public:
  PairMultiset() = default;
  explicit PairMultiset(std::vector<EigPair> pairs);

  const std::vector<EigPair>& pairs() const { return pairs_; }
  int rank() const { return static_cast<int>(pairs_.size()); }

  /// All eigenvalues pairwise distinct. Pairs are either equal or disjoint, so this
  /// is the same as the pairs being distinct.
  bool is_regular() const;

  std::vector<Residue> eigenvalues() const;
  PairMultiset negated(const PrimeField& f) const;
  PairMultiset merged(const PairMultiset& other) const;

  auto operator<=>(const PairMultiset&) const = default;
  std::string to_string() const;

private:
  std::vector<EigPair> pairs_;
};

using SpClass = PairMultiset;
using SOClass = PairMultiset;

/// A class of SO(2n'+1) x SO(2n''+1).
struct EndoClass {
  SOClass primed;
  SOClass doubleprimed;

  auto operator<=>(const EndoClass&) const = default;
  std::string to_string() const;
};

/// Sorted eigenvalue multiset of a GL factor.
using GLEigen = std::vector<Residue>;

/// A class of a standard Levi M = prod GL(n_i) x Sp(2m) of Sp(2n).
class LeviClass {
public:
  LeviClass(LeviSp levi, std::vector<GLEigen> gl_evs, SpClass sp_part);

  const LeviSp& levi() const { return levi_; }
  const std::vector<GLEigen>& gl_evs() const { return gl_evs_; }
  const SpClass& sp_part() const { return sp_part_; }

  /// The 2n eigenvalues of the class viewed inside Sp(2n).
  std::vector<Residue> ambient_eigenvalues(const PrimeField& f) const;
  /// Regular as an element of Sp(2n).
  bool is_g_regular(const PrimeField& f) const;
  /// The induced class of Sp(2n); empty when a GL eigenvalue is +-1.
  std::optional<SpClass> induced_sp_class(const PrimeField& f) const;

  auto operator<=>(const LeviClass&) const = default;
  std::string to_string() const;

private:
  LeviSp levi_;
  std::vector<GLEigen> gl_evs_;
  SpClass sp_part_;
};

/// A class of M_s^! = (prod GL(n_i') x SO(2m'+1)) x (prod GL(n_i'') x SO(2m''+1)).
struct LeviEndoClass {
  std::vector<GLEigen> gl_p;
  SOClass so_p;
  std::vector<GLEigen> gl_pp;
  SOClass so_pp;

  /// All eigenvalues distinct and none equal to 1 (GL factors counted with their
  /// inverses, as inside SO).
  bool is_strongly_regular(const PrimeField& f) const;

  auto operator<=>(const LeviEndoClass&) const = default;
  std::string to_string() const;
};

/// Multiplication by z_s: negates the double-primed GL eigenvalues.
LeviEndoClass apply_twist(const PrimeField& f, const ZTwist& z, const LeviEndoClass& delta);

/// Psi_{G!,G}: primed pairs unchanged, double-primed pairs negated.
SpClass psi(const PrimeField& f, const EndoClass& delta, const EndoDatum& d);

bool is_g_regular(const PrimeField& f, const EndoClass& delta, const EndoDatum& d);

/// Psi_{M_s^!, M}: GL factor i of M collects GL(n_i') and GL(n_i'') eigenvalues; the
/// Sp tail is Psi of the SO tails. No twist applied.
LeviClass psi_levi(const PrimeField& f, const LeviEndoClass& delta, const LeviSp& levi, const SplitSeq& s);

/// {delta in Sigma_reg(G!) : Psi(delta) = gamma}. Throws std::invalid_argument when gamma
/// is not G-regular.
std::vector<EndoClass> fiber(const PrimeField& f, const LeviClass& gamma, const EndoDatum& d);

struct LeviFiberElement {
  SplitSeq s;
  LeviEndoClass delta_s;

  auto operator<=>(const LeviFiberElement&) const = default;
  std::string to_string() const;
};

/// {(s, delta_s) : s in E(M, G!), Psi_{M_s^!,M}(delta_s z_s) = gamma}. Throws
/// std::invalid_argument when gamma is not G-regular.
std::vector<LeviFiberElement> levi_fiber_pairs(const PrimeField& f, const LeviClass& gamma,
                                               const EndoDatum& d);

/// The map of the bijection: n_i' is half the number of eigenvalues of delta' shared
/// with gamma_i (embedded in Sp), n_i'' likewise for delta'' against -gamma_i.
LeviFiberElement fiber_to_levi_pair(const PrimeField& f, const LeviClass& gamma, const EndoDatum& d,
                                    const EndoClass& delta);

struct FiberBijectionReport {
  bool g_regular = false;
  std::size_t fiber_size = 0;
  std::size_t levi_pairs_size = 0;
  bool injective = false;
  bool lands_in_target = false;
  bool surjective = false;
  std::optional<std::string> counterexample;

  bool bijective() const { return g_regular && injective && lands_in_target && surjective; }
};

FiberBijectionReport check_fiber_bijection(const PrimeField& f, const LeviClass& gamma, const EndoDatum& d);

inline constexpr std::uint64_t kRegularDrawCap = 100000;

/// Rejection-samples a G-regular class of `levi`. Empty after kRegularDrawCap draws.
std::optional<LeviClass> random_regular_class(const PrimeField& f, const LeviSp& levi, std::mt19937_64& rng,
                                              std::uint64_t max_draws = kRegularDrawCap);

} // namespace mpendo
