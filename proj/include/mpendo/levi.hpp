#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace mpendo {

/// Ordered sizes of the GL factors of a standard Levi.
using Parts = std::vector<int>;

int sum_parts(const Parts& parts);

/// All compositions of `total` (ordered tuples of positive integers), in
/// lexicographic order. compositions(0) is the single empty tuple.
std::vector<Parts> compositions(int total);

/// True when `fine` is obtained from `coarse` by splitting each entry into
/// consecutive positive pieces.
bool is_refinement(const Parts& fine, const Parts& coarse);

/// Splits the GL parts of a candidate Levi (lev_parts, lev_m) of the standard
/// Levi (par_parts, par_m) of the same classical group into the prefix that
/// refines par_parts and the remaining parts cut out of the classical tail.
/// Returns false when (lev_parts, lev_m) is not a standard Levi of the parent.
bool split_sub_levi(const Parts& lev_parts, int lev_m, const Parts& par_parts, int par_m,
                    Parts* refined_prefix = nullptr, Parts* tail_parts = nullptr);

/// Every standard Levi (parts, m) contained in the standard Levi (par_parts, par_m),
/// including the parent itself, in lexicographic order.
std::vector<std::pair<Parts, int>> sub_levis(const Parts& par_parts, int par_m);

namespace detail {

struct SpTail {
  static constexpr const char* name = "Sp";
};
struct SOTail {
  static constexpr const char* name = "SO";
};

} // namespace detail

/// A standard Levi GL(n_1) x ... x GL(n_k) x H(m) of a classical group H(n)
/// (H = Sp(2n) or SO(2n+1)), identified with its combinatorial data.
/// GL(0) factors are rejected.
template <class Tail>
class StandardLevi {
public:
  StandardLevi() = default;
  StandardLevi(Parts gl_parts, int m);
  StandardLevi(Parts gl_parts, int m, int n);

  const Parts& gl_parts() const { return gl_parts_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int k() const { return static_cast<int>(gl_parts_.size()); }

  bool is_whole_group() const { return gl_parts_.empty(); }

  auto operator<=>(const StandardLevi&) const = default;

  std::string to_string() const;

private:
  Parts gl_parts_;
  int m_ = 0;
  int n_ = 0;
};

using LeviSp = StandardLevi<detail::SpTail>;
using LeviSO = StandardLevi<detail::SOTail>;

/// Standard Levi of SO(2n'+1) x SO(2n''+1).
struct LeviSOPair {
  LeviSO primed;
  LeviSO doubleprimed;

  int k_p() const { return primed.k(); }
  int k_pp() const { return doubleprimed.k(); }

  auto operator<=>(const LeviSOPair&) const = default;
  std::string to_string() const;
};

/// Standard Levis of Sp(2n), lexicographic on gl_parts. |result| = 2^n.
std::vector<LeviSp> enumerate_levis_sp(int n);
std::vector<LeviSO> enumerate_levis_so(int n);
std::vector<LeviSOPair> enumerate_levis_so_pair(int n_p, int n_pp);

/// Sum (n_i - 1) + m, i.e. n - k.
int semisimple_rank_sp(const LeviSp& levi);
int semisimple_rank_so(const LeviSO& levi);
int semisimple_rank_so_pair(const LeviSOPair& levi);

inline int parity_sign(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

} // namespace mpendo
