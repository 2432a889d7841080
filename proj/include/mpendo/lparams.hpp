#pragma once

#include <compare>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mpendo/endoscopy.hpp"
#include "mpendo/levi.hpp"

namespace mpendo {

enum class Duality { Orthogonal, Symplectic };

/// Abstract irreducible representation rho of the Weil group, known only through the
/// attributes the Jordan-block combinatorics uses.
struct RhoLabel {
  std::string id;
  int dim = 1;
  Duality duality = Duality::Orthogonal;
  /// omega_rho(-1).
  int omega_m1 = 1;

  auto operator<=>(const RhoLabel&) const = default;
  std::string to_string() const;
};

/// Throws std::invalid_argument for dim <= 0, odd-dimensional symplectic rho or omega not +-1.
void validate_label(const RhoLabel& rho);

/// rho x S_a, with a the dimension of the SL(2) factor.
struct JordanBlock {
  RhoLabel rho;
  int a = 1;

  int dimension() const { return rho.dim * a; }
  /// rho symplectic with a odd, or rho orthogonal with a even.
  bool is_symplectic() const;
  auto operator<=>(const JordanBlock&) const = default;
  std::string to_string() const;
};

/// L-parameter of SO(2n+1) given by its Jordan blocks, kept sorted.
struct LParameter {
  std::vector<JordanBlock> blocks;
  int n = 0;

  LParameter() = default;
  LParameter(std::vector<JordanBlock> blocks, int n);

  bool contains(const JordanBlock& b) const;
  auto operator<=>(const LParameter&) const = default;
  std::string to_string() const;
};

struct ValidationError {
  /// "multiplicity", "non-symplectic block", "dimension" or "label".
  std::string kind;
  std::string message;
};

/// Empty when phi is discrete.
std::vector<ValidationError> validate_discrete(const LParameter& phi);

struct Factorization {
  LParameter phi_p;
  LParameter phi_pp;
};

/// Every 2-colouring of the blocks of phi with dimensions 2n' and 2n''.
std::vector<Factorization> factorizations(const LParameter& phi, const EndoDatum& d);

struct CorollaryData {
  /// (d, 0) for a block of phi', (0, d) for a block of phi''.
  SplitPart levi_choice;
  /// M^!_{levi_choice}; empty when GL(d) does not fit in the relevant SO factor.
  std::optional<LeviSOPair> m_bang;
  /// 2x = a - 1.
  int twice_x = 0;
  int alpha = 1;
  /// n - d.
  int m = 0;
};

/// Throws std::invalid_argument when the block lies in neither or both factors.
CorollaryData corollary_data(const LParameter& phi_p, const LParameter& phi_pp, const JordanBlock& block);

/// Reads one block per line:
///   rho <id> dim=<d> duality=<orth|sympl> omega=-1|+1 ; a=<int>
/// Blank lines and text after '#' are ignored. n is half the total dimension.
/// Throws std::invalid_argument with the line number on malformed input.
LParameter parse_lparameter(const std::string& text);

std::string format_lparameter(const LParameter& phi);

/// A random discrete parameter of SO(2n+1); labels may be shared between blocks.
LParameter random_discrete_parameter(int n, std::mt19937_64& rng);

} // namespace mpendo
