#include "mpendo/lparams.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace mpendo {

std::string RhoLabel::to_string() const
{
  std::ostringstream os;
  os << "rho " << id << " dim=" << dim << " duality=" << (duality == Duality::Symplectic ? "sympl" : "orth")
     << " omega=" << (omega_m1 < 0 ? "-1" : "+1");
  return os.str();
}

void validate_label(const RhoLabel& rho)
{
  if (rho.id.empty())
    throw std::invalid_argument("rho label without an id");
  if (rho.dim <= 0)
    throw std::invalid_argument("rho " + rho.id + ": dim must be positive");
  if (rho.duality == Duality::Symplectic && rho.dim % 2 != 0)
    throw std::invalid_argument("rho " + rho.id + ": a symplectic rho has even dimension");
  if (rho.omega_m1 != 1 && rho.omega_m1 != -1)
    throw std::invalid_argument("rho " + rho.id + ": omega(-1) must be +1 or -1");
}

bool JordanBlock::is_symplectic() const
{
  return rho.duality == Duality::Symplectic ? a % 2 == 1 : a % 2 == 0;
}

std::string JordanBlock::to_string() const { return "(" + rho.id + "," + std::to_string(a) + ")"; }

LParameter::LParameter(std::vector<JordanBlock> b, int rank) : blocks(std::move(b)), n(rank)
{
  std::sort(blocks.begin(), blocks.end());
}

bool LParameter::contains(const JordanBlock& b) const { return std::binary_search(blocks.begin(), blocks.end(), b); }

std::string LParameter::to_string() const
{
  std::string out = "{";
  for (std::size_t i = 0; i < blocks.size(); ++i)
    out += (i ? "," : "") + blocks[i].to_string();
  return out + "}";
}

std::vector<ValidationError> validate_discrete(const LParameter& phi)
{
  std::vector<ValidationError> errors;
  std::map<std::string, RhoLabel> labels;
  int total = 0;
  for (std::size_t i = 0; i < phi.blocks.size(); ++i) {
    const auto& b = phi.blocks[i];
    try {
      validate_label(b.rho);
    } catch (const std::invalid_argument& ex) {
      errors.push_back({"label", ex.what()});
    }
    auto [it, fresh] = labels.emplace(b.rho.id, b.rho);
    if (!fresh && it->second != b.rho)
      errors.push_back({"label", "rho " + b.rho.id + " declared with different attributes"});
    if (b.a <= 0)
      errors.push_back({"non-symplectic block", "block " + b.to_string() + " has a <= 0"});
    else if (!b.is_symplectic())
      errors.push_back({"non-symplectic block", "block " + b.to_string() + " is orthogonal"});
    if (i > 0 && phi.blocks[i - 1].rho.id == b.rho.id && phi.blocks[i - 1].a == b.a)
      errors.push_back({"multiplicity", "block " + b.to_string() + " occurs more than once"});
    total += b.dimension();
  }
  if (total != 2 * phi.n)
    errors.push_back({"dimension", "blocks have total dimension " + std::to_string(total) + ", expected " +
                                       std::to_string(2 * phi.n)});
  return errors;
}

std::vector<Factorization> factorizations(const LParameter& phi, const EndoDatum& d)
{
  const std::size_t k = phi.blocks.size();
  if (k >= 63)
    throw std::invalid_argument("factorizations: too many blocks");
  std::vector<Factorization> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<JordanBlock> p, pp;
    int dim_p = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        p.push_back(phi.blocks[i]);
        dim_p += phi.blocks[i].dimension();
      } else {
        pp.push_back(phi.blocks[i]);
      }
    }
    if (dim_p != 2 * d.n_p || 2 * phi.n - dim_p != 2 * d.n_pp)
      continue;
    out.push_back({LParameter(std::move(p), d.n_p), LParameter(std::move(pp), d.n_pp)});
  }
  std::sort(out.begin(), out.end(), [](const Factorization& x, const Factorization& y) {
    return std::tie(x.phi_p, x.phi_pp) < std::tie(y.phi_p, y.phi_pp);
  });
  return out;
}

CorollaryData corollary_data(const LParameter& phi_p, const LParameter& phi_pp, const JordanBlock& block)
{
  const bool in_p = phi_p.contains(block);
  const bool in_pp = phi_pp.contains(block);
  if (!in_p && !in_pp)
    throw std::invalid_argument("corollary_data: block " + block.to_string() + " is in neither factor");
  if (in_p && in_pp)
    throw std::invalid_argument("corollary_data: block " + block.to_string() + " is in both factors");
  const int d = block.rho.dim;
  const int n = phi_p.n + phi_pp.n;
  CorollaryData out;
  out.twice_x = block.a - 1;
  out.m = n - d;
  if (in_p) {
    out.levi_choice = {d, 0};
    out.alpha = 1;
    if (d <= phi_p.n)
      out.m_bang = LeviSOPair{LeviSO({d}, phi_p.n - d), LeviSO({}, phi_pp.n)};
  } else {
    out.levi_choice = {0, d};
    out.alpha = block.rho.omega_m1;
    if (d <= phi_pp.n)
      out.m_bang = LeviSOPair{LeviSO({}, phi_p.n), LeviSO({d}, phi_pp.n - d)};
  }
  return out;
}

namespace {

int parse_int(const std::string& text, const std::string& what, int line)
{
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw std::invalid_argument("line " + std::to_string(line) + ": bad " + what + " '" + text + "'");
  return v;
}

std::string field_value(const std::string& token, const std::string& key, int line)
{
  if (token.rfind(key + "=", 0) != 0)
    throw std::invalid_argument("line " + std::to_string(line) + ": expected " + key + "=..., got '" + token + "'");
  return token.substr(key.size() + 1);
}

} // namespace

LParameter parse_lparameter(const std::string& text)
{
  std::istringstream in(text);
  std::string raw;
  std::vector<JordanBlock> blocks;
  int line = 0;
  int total = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    auto semi = raw.find(';');
    std::istringstream head(raw.substr(0, semi));
    std::vector<std::string> tokens;
    for (std::string t; head >> t;)
      tokens.push_back(t);
    if (tokens.empty() && semi == std::string::npos)
      continue;
    if (semi == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(line) + ": missing '; a=<int>'");
    if (tokens.size() != 5 || tokens[0] != "rho")
      throw std::invalid_argument("line " + std::to_string(line) +
                                  ": expected 'rho <id> dim=<d> duality=<orth|sympl> omega=-1|+1'");
    RhoLabel rho;
    rho.id = tokens[1];
    rho.dim = parse_int(field_value(tokens[2], "dim", line), "dim", line);
    const std::string duality = field_value(tokens[3], "duality", line);
    if (duality == "orth")
      rho.duality = Duality::Orthogonal;
    else if (duality == "sympl")
      rho.duality = Duality::Symplectic;
    else
      throw std::invalid_argument("line " + std::to_string(line) + ": duality must be orth or sympl");
    const std::string omega = field_value(tokens[4], "omega", line);
    if (omega == "+1" || omega == "1")
      rho.omega_m1 = 1;
    else if (omega == "-1")
      rho.omega_m1 = -1;
    else
      throw std::invalid_argument("line " + std::to_string(line) + ": omega must be -1 or +1");
    std::istringstream tail(raw.substr(semi + 1));
    std::vector<std::string> rest;
    for (std::string t; tail >> t;)
      rest.push_back(t);
    if (rest.size() != 1)
      throw std::invalid_argument("line " + std::to_string(line) + ": expected 'a=<int>' after ';'");
    JordanBlock b{rho, parse_int(field_value(rest[0], "a", line), "a", line)};
    total += b.dimension();
    blocks.push_back(std::move(b));
  }
  return LParameter(std::move(blocks), total / 2);
}

std::string format_lparameter(const LParameter& phi)
{
  std::string out;
  for (const auto& b : phi.blocks)
    out += b.rho.to_string() + " ; a=" + std::to_string(b.a) + "\n";
  return out;
}

LParameter random_discrete_parameter(int n, std::mt19937_64& rng)
{
  if (n < 0)
    throw std::invalid_argument("random_discrete_parameter: negative rank");
  std::vector<RhoLabel> labels;
  std::vector<JordanBlock> blocks;
  int remaining = 2 * n;
  while (remaining > 0) {
    std::uniform_int_distribution<int> coin(0, 2);
    std::optional<JordanBlock> pick;
    if (!labels.empty() && coin(rng) == 0) {
      // Another block on an existing rho, if some admissible a is unused.
      const RhoLabel& rho = labels[std::uniform_int_distribution<std::size_t>(0, labels.size() - 1)(rng)];
      const int first = rho.duality == Duality::Symplectic ? 1 : 2;
      std::vector<int> free_a;
      for (int a = first; rho.dim * a <= remaining; a += 2)
        if (std::none_of(blocks.begin(), blocks.end(),
                         [&](const JordanBlock& b) { return b.rho == rho && b.a == a; }))
          free_a.push_back(a);
      if (!free_a.empty())
        pick = JordanBlock{rho, free_a[std::uniform_int_distribution<std::size_t>(0, free_a.size() - 1)(rng)]};
    }
    if (!pick) {
      RhoLabel rho;
      rho.id = "r" + std::to_string(labels.size() + 1);
      rho.omega_m1 = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
      const bool sympl = remaining >= 2 && std::uniform_int_distribution<int>(0, 1)(rng) == 1;
      rho.duality = sympl ? Duality::Symplectic : Duality::Orthogonal;
      if (sympl) {
        rho.dim = 2 * std::uniform_int_distribution<int>(1, std::min(3, remaining / 2))(rng);
        std::vector<int> as;
        for (int a = 1; rho.dim * a <= remaining; a += 2)
          as.push_back(a);
        pick = JordanBlock{rho, as[std::uniform_int_distribution<std::size_t>(0, as.size() - 1)(rng)]};
      } else {
        rho.dim = std::uniform_int_distribution<int>(1, std::max(1, std::min(3, remaining / 2)))(rng);
        std::vector<int> as;
        for (int a = 2; rho.dim * a <= remaining; a += 2)
          as.push_back(a);
        pick = JordanBlock{rho, as[std::uniform_int_distribution<std::size_t>(0, as.size() - 1)(rng)]};
      }
      labels.push_back(rho);
    }
    remaining -= pick->dimension();
    blocks.push_back(std::move(*pick));
  }
  return LParameter(std::move(blocks), n);
}

} // namespace mpendo
