#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mpendo/levi.hpp"

namespace mpendo {

/// Elliptic endoscopic datum (n', n'') of the metaplectic group of rank n' + n'',
/// with endoscopic group SO(2n'+1) x SO(2n''+1). Ordered: (a,b) and (b,a) differ.
struct EndoDatum {
  int n_p = 0;
  int n_pp = 0;

  int n() const { return n_p + n_pp; }
  auto operator<=>(const EndoDatum&) const = default;
  std::string to_string() const;
};

/// All n+1 elliptic data of rank n, increasing in n'.
std::vector<EndoDatum> elliptic_data(int n);

/// One entry (n_i', n_i'') of a split sequence.
struct SplitPart {
  int p = 0;
  int pp = 0;

  int total() const { return p + pp; }
  auto operator<=>(const SplitPart&) const = default;
};

using SplitSeq = std::vector<SplitPart>;

std::string to_string(const SplitSeq& s);

/// Primed / double-primed parts of s with zero entries dropped, in subscript order.
Parts primed_parts(const SplitSeq& s);
Parts doubleprimed_parts(const SplitSeq& s);

bool is_split_sequence(const LeviSp& levi, const SplitSeq& s, const EndoDatum& d);

/// The set E(M, G!) of split sequences of the GL parts of M, bounded by (n', n'').
/// Within each index the primed share decreases, so ((1,0)) precedes ((0,1)).
std::vector<SplitSeq> split_sequences(const LeviSp& levi, const EndoDatum& d);

/// Central element z_s of M_s^!: +1 on primed GL factors, -1 on double-primed ones,
/// trivial on the SO factors.
struct ZTwist {
  std::vector<int> signs_p;
  std::vector<int> signs_pp;

  bool is_trivial() const;
  ZTwist compose(const ZTwist& other) const;
  auto operator<=>(const ZTwist&) const = default;
};

ZTwist twist_for(const LeviSOPair& levi);

struct EndoscopicLevi {
  /// (prod GL(n_i') x prod GL(n_i'')) x Sp(2m), zero parts omitted.
  LeviSp m_s;
  LeviSOPair m_s_bang;
  ZTwist z;
};

/// Builds M_s, M_s^! and z_s. Throws std::invalid_argument when s is not in E(M, G!).
EndoscopicLevi endoscopic_levi(const LeviSp& levi, const SplitSeq& s, const EndoDatum& d);

/// Encoding (k, Ibar', Ibar'') of an element of M(L).
struct LeviTriple {
  int k = 0;
  Parts bar_p;
  Parts bar_pp;

  auto operator<=>(const LeviTriple&) const = default;
};

struct LeviPreimage {
  LeviSp levi;
  SplitSeq s;
  LeviTriple triple;
};

/// Column pattern of an abstract triple: which of Ibar', Ibar'' is nonzero.
enum class Marker : std::uint8_t { Primed, DoublePrimed, Both };

/// The abstract triple set M(k', k''): every column pattern with exactly k' columns
/// touching the primed side and k'' touching the double-primed side.
std::vector<std::vector<Marker>> marker_patterns(int k_p, int k_pp);

LeviTriple fill_pattern(const std::vector<Marker>& pattern, const LeviSOPair& levi);

/// triple -> (M, s). `d` supplies the ambient rank.
LeviPreimage preimage_from_triple(const LeviTriple& triple, const LeviSOPair& levi, const EndoDatum& d);

/// (M, s) -> triple; the split sequence already is the interleaved part list.
LeviTriple triple_from_split(const SplitSeq& s);

/// M(L) = {(M, s) : s in E(M, G!), M_s^! = L}. Throws std::invalid_argument when L is
/// not a standard Levi of the endoscopic group of d.
std::vector<LeviPreimage> levi_preimages(const LeviSOPair& levi, const EndoDatum& d);

/// f(k', k'') = sum over M(k', k'') of (-1)^k, by direct enumeration.
std::int64_t sign_sum(int k_p, int k_pp);

/// f via f(k',k'') = -f(k'-1,k'') - f(k',k''-1) - f(k'-1,k''-1), f(0,0) = 1.
std::int64_t sign_sum_recursive(int k_p, int k_pp);

inline std::int64_t sign_sum_closed_form(int k_p, int k_pp) { return parity_sign(k_p + k_pp); }

} // namespace mpendo
