#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mpendo/endoscopy.hpp"
#include "mpendo/levi.hpp"

namespace mpendo {

/// GL(n_1) x ... x GL(n_k) x MSp(2m). With no GL parts this is the metaplectic group itself.
struct MetaType {
  Parts gl_parts;
  int m = 0;

  int rank() const { return sum_parts(gl_parts) + m; }
  LeviSp as_levi() const { return LeviSp(gl_parts, m); }
  auto operator<=>(const MetaType&) const = default;
  std::string to_string() const;
};

/// Endoscopic side: GL factors shared with the metaplectic side, then a standard Levi of
/// SO(2n'+1) x SO(2n''+1).
struct EndoObj {
  Parts shared;
  LeviSO primed;
  LeviSO doubleprimed;

  int rank() const { return sum_parts(shared) + primed.n() + doubleprimed.n(); }
  int gl_count() const { return static_cast<int>(shared.size()) + primed.k() + doubleprimed.k(); }
  /// True when both SO factors are whole groups.
  bool so_whole() const { return primed.is_whole_group() && doubleprimed.is_whole_group(); }
  LeviSOPair so_pair() const { return {primed, doubleprimed}; }
  auto operator<=>(const EndoObj&) const = default;
  std::string to_string() const;
};

using GroupObj = std::variant<MetaType, EndoObj>;

std::string to_string(const GroupObj& g);
int rank_of(const GroupObj& g);
/// Semisimple rank: rank minus the number of GL factors.
int semisimple_rank(const GroupObj& g);

/// Parabolic induction from a standard Levi.
struct IndAtom {
  GroupObj parent;
  GroupObj levi;
  auto operator<=>(const IndAtom&) const = default;
};

/// Jacquet restriction to a standard Levi.
struct ResAtom {
  GroupObj parent;
  GroupObj levi;
  auto operator<=>(const ResAtom&) const = default;
};

/// Action of z_s, the central element acting by -1 on the double-primed GL factors.
struct TwistAtom {
  EndoObj obj;
  auto operator<=>(const TwistAtom&) const = default;
};

/// Spectral transfer. `split` records how the target's GL parts beyond `source.shared`
/// are distributed between the two SO sides; it is empty exactly for elliptic transfer.
struct TransferAtom {
  EndoObj source;
  MetaType target;
  SplitSeq split;

  bool elliptic() const { return split.empty(); }
  auto operator<=>(const TransferAtom&) const = default;
};

/// Unexpanded Aubert-Zelevinski involution.
struct AzAtom {
  GroupObj group;
  auto operator<=>(const AzAtom&) const = default;
};

using Atom = std::variant<IndAtom, ResAtom, TwistAtom, TransferAtom, AzAtom>;

GroupObj domain_of(const Atom& a);
GroupObj codomain_of(const Atom& a);
std::string to_string(const Atom& a);

/// Written left to right; the composition is right to left, so the last atom acts first.
using Word = std::vector<Atom>;

std::string to_string(const Word& w);

class TypeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public std::runtime_error {
public:
  SyntaxError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class StuckPattern : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Constructors validating the Levi relation and the transfer datum.
Atom make_ind(const GroupObj& parent, const GroupObj& levi);
Atom make_res(const GroupObj& parent, const GroupObj& levi);
Atom make_twist(const EndoObj& obj);
Atom make_transfer(const EndoObj& source, const MetaType& target, const SplitSeq& split);
Atom make_az(const GroupObj& group);

/// Every split sequence that makes (source -> target) a well-typed transfer.
std::vector<SplitSeq> transfer_splits(const EndoObj& source, const MetaType& target);

/// Z-linear combination of words.
class OpExpr {
public:
  OpExpr() = default;
  static OpExpr identity();
  static OpExpr word(Word w, std::int64_t coefficient = 1);
  static OpExpr atom(Atom a, std::int64_t coefficient = 1);

  const std::map<Word, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const Word& w) const;

  void add(const Word& w, std::int64_t coefficient);

  OpExpr& operator+=(const OpExpr& other);
  OpExpr& operator-=(const OpExpr& other);
  OpExpr operator+(const OpExpr& other) const;
  OpExpr operator-(const OpExpr& other) const;
  OpExpr operator*(std::int64_t scalar) const;
  bool operator==(const OpExpr& other) const = default;

  std::string to_string() const;

private:
  std::map<Word, std::int64_t> terms_;
};

/// a . b, i.e. a after b. Throws TypeError when a junction does not compose.
OpExpr compose(const OpExpr& a, const OpExpr& b);

/// (domain, codomain) of a single word; nullopt for the empty word.
std::optional<std::pair<GroupObj, GroupObj>> word_type(const Word& w);

/// Checks every word and that all words share one type. Returns it (nullopt when
/// the expression is zero or only multiples of Id).
std::optional<std::pair<GroupObj, GroupObj>> type_check(const OpExpr& e);

OpExpr parse(const std::string& text);

/// Sum over standard Levis L of H of (-1)^{r(L)} i_L^H r_L^H.
OpExpr expand_D(const GroupObj& h);

/// D[G] . i(G <- M) -> i(G <- M) . D[M] wherever an unexpanded D meets an induction
/// from its own group. Returns the number of rewrites performed.
OpExpr commute_d_past_induction(const OpExpr& e, int* rewrites = nullptr);

struct NormalizeStats {
  int d_expansions = 0;
  int jacquet_rewrites = 0;
  int absorb_rewrites = 0;
  int twist_cancellations = 0;
  int rounds = 0;
};

OpExpr normalize(const OpExpr& e, NormalizeStats* stats = nullptr);

/// Elliptic transfer T(G!, G~) for the datum d of MSp(2n).
TransferAtom elliptic_transfer(const MetaType& target, const EndoDatum& d);

struct CoefficientRow {
  EndoObj levi;
  std::int64_t engine = 0;
  int expected = 0;
  std::int64_t preimage_sum = 0;

  bool ok() const { return engine == expected && preimage_sum == expected; }
};

struct CommutationReport {
  int n = 0;
  EndoDatum d;
  std::optional<LeviSp> ambient_levi;
  OpExpr residual;
  std::vector<CoefficientRow> table;
  std::vector<std::string> chain;
  bool chain_ok = true;
  NormalizeStats stats;
  std::string assumption = "Theta stable";
  std::optional<std::string> first_residual;
  std::optional<std::string> error;

  bool passed() const;
};

/// Checks D . T - T . D = 0. Without an ambient Levi, d is elliptic for MSp(2n); with
/// one, d is elliptic for its metaplectic tail and the check runs through the
/// induction-commutation rule.
CommutationReport check_commutation(int n, const EndoDatum& d, const std::optional<LeviSp>& ambient_levi = std::nullopt);

} // namespace mpendo
