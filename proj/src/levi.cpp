#include "mpendo/levi.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mpendo {

int sum_parts(const Parts& parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

namespace {

void compositions_into(int remaining, Parts& prefix, std::vector<Parts>& out)
{
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    compositions_into(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

std::string parts_text(const Parts& parts)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i)
    os << (i ? "," : "") << parts[i];
  return os.str();
}

} // namespace

std::vector<Parts> compositions(int total)
{
  if (total < 0)
    throw std::invalid_argument("compositions: negative total");
  std::vector<Parts> out;
  Parts prefix;
  compositions_into(total, prefix, out);
  return out;
}

bool is_refinement(const Parts& fine, const Parts& coarse)
{
  std::size_t j = 0;
  for (int block : coarse) {
    int acc = 0;
    while (acc < block && j < fine.size())
      acc += fine[j++];
    if (acc != block)
      return false;
  }
  return j == fine.size();
}

bool split_sub_levi(const Parts& lev_parts, int lev_m, const Parts& par_parts, int par_m,
                    Parts* refined_prefix, Parts* tail_parts)
{
  std::size_t j = 0;
  for (int block : par_parts) {
    int acc = 0;
    while (acc < block && j < lev_parts.size())
      acc += lev_parts[j++];
    if (acc != block)
      return false;
  }
  Parts rest(lev_parts.begin() + static_cast<std::ptrdiff_t>(j), lev_parts.end());
  if (lev_m < 0 || sum_parts(rest) + lev_m != par_m)
    return false;
  if (refined_prefix)
    refined_prefix->assign(lev_parts.begin(), lev_parts.begin() + static_cast<std::ptrdiff_t>(j));
  if (tail_parts)
    *tail_parts = std::move(rest);
  return true;
}

std::vector<std::pair<Parts, int>> sub_levis(const Parts& par_parts, int par_m)
{
  // Refine each GL block independently, then cut a composition out of the tail.
  std::vector<Parts> prefixes{Parts{}};
  for (int block : par_parts) {
    std::vector<Parts> next;
    for (const auto& pre : prefixes)
      for (const auto& comp : compositions(block)) {
        Parts p = pre;
        p.insert(p.end(), comp.begin(), comp.end());
        next.push_back(std::move(p));
      }
    prefixes = std::move(next);
  }
  std::vector<std::pair<Parts, int>> out;
  for (const auto& pre : prefixes)
    for (int cut = 0; cut <= par_m; ++cut)
      for (const auto& comp : compositions(cut)) {
        Parts p = pre;
        p.insert(p.end(), comp.begin(), comp.end());
        out.emplace_back(std::move(p), par_m - cut);
      }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Tail>
StandardLevi<Tail>::StandardLevi(Parts gl_parts, int m)
    : StandardLevi(gl_parts, m, sum_parts(gl_parts) + m)
{
}

template <class Tail>
StandardLevi<Tail>::StandardLevi(Parts gl_parts, int m, int n)
    : gl_parts_(std::move(gl_parts)), m_(m), n_(n)
{
  if (m_ < 0 || n_ < 0)
    throw std::invalid_argument("Levi: negative rank");
  for (int part : gl_parts_)
    if (part < 1)
      throw std::invalid_argument("Levi: GL parts must be positive");
  if (sum_parts(gl_parts_) + m_ != n_)
    throw std::invalid_argument("Levi: sum(gl_parts) + m must equal n");
}

template <>
std::string StandardLevi<detail::SpTail>::to_string() const
{
  std::ostringstream os;
  if (!gl_parts_.empty())
    os << "GL(" << parts_text(gl_parts_) << ")x";
  os << "Sp(" << 2 * m_ << ")";
  return os.str();
}

template <>
std::string StandardLevi<detail::SOTail>::to_string() const
{
  std::ostringstream os;
  if (!gl_parts_.empty())
    os << "GL(" << parts_text(gl_parts_) << ")x";
  os << "SO(" << 2 * m_ + 1 << ")";
  return os.str();
}

template class StandardLevi<detail::SpTail>;
template class StandardLevi<detail::SOTail>;

std::string LeviSOPair::to_string() const
{
  return "(" + primed.to_string() + ")x(" + doubleprimed.to_string() + ")";
}

std::vector<LeviSp> enumerate_levis_sp(int n)
{
  if (n < 0)
    throw std::invalid_argument("enumerate_levis_sp: negative rank");
  std::vector<LeviSp> out;
  for (auto& [parts, m] : sub_levis({}, n))
    out.emplace_back(std::move(parts), m, n);
  return out;
}

std::vector<LeviSO> enumerate_levis_so(int n)
{
  if (n < 0)
    throw std::invalid_argument("enumerate_levis_so: negative rank");
  std::vector<LeviSO> out;
  for (auto& [parts, m] : sub_levis({}, n))
    out.emplace_back(std::move(parts), m, n);
  return out;
}

std::vector<LeviSOPair> enumerate_levis_so_pair(int n_p, int n_pp)
{
  std::vector<LeviSOPair> out;
  const auto firsts = enumerate_levis_so(n_p);
  const auto seconds = enumerate_levis_so(n_pp);
  out.reserve(firsts.size() * seconds.size());
  for (const auto& a : firsts)
    for (const auto& b : seconds)
      out.push_back({a, b});
  return out;
}

int semisimple_rank_sp(const LeviSp& levi) { return levi.n() - levi.k(); }
int semisimple_rank_so(const LeviSO& levi) { return levi.n() - levi.k(); }

int semisimple_rank_so_pair(const LeviSOPair& levi)
{
  return semisimple_rank_so(levi.primed) + semisimple_rank_so(levi.doubleprimed);
}

} // namespace mpendo
