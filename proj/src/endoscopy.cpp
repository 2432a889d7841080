#include "mpendo/endoscopy.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace mpendo {

std::string EndoDatum::to_string() const
{
  std::ostringstream os;
  os << "(" << n_p << "," << n_pp << ")";
  return os.str();
}

std::vector<EndoDatum> elliptic_data(int n)
{
  if (n < 0)
    throw std::invalid_argument("elliptic_data: negative rank");
  std::vector<EndoDatum> out;
  for (int a = 0; a <= n; ++a)
    out.push_back({a, n - a});
  return out;
}

std::string to_string(const SplitSeq& s)
{
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < s.size(); ++i)
    os << (i ? "," : "") << "(" << s[i].p << "," << s[i].pp << ")";
  os << ")";
  return os.str();
}

Parts primed_parts(const SplitSeq& s)
{
  Parts out;
  for (const auto& part : s)
    if (part.p > 0)
      out.push_back(part.p);
  return out;
}

Parts doubleprimed_parts(const SplitSeq& s)
{
  Parts out;
  for (const auto& part : s)
    if (part.pp > 0)
      out.push_back(part.pp);
  return out;
}

bool is_split_sequence(const LeviSp& levi, const SplitSeq& s, const EndoDatum& d)
{
  if (levi.n() != d.n() || static_cast<int>(s.size()) != levi.k())
    return false;
  int sum_p = 0;
  int sum_pp = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].p < 0 || s[i].pp < 0 || s[i].total() != levi.gl_parts()[i])
      return false;
    sum_p += s[i].p;
    sum_pp += s[i].pp;
  }
  return sum_p <= d.n_p && sum_pp <= d.n_pp;
}

namespace {

void split_into(const Parts& parts, std::size_t i, int room_p, int room_pp, SplitSeq& prefix,
                std::vector<SplitSeq>& out)
{
  if (i == parts.size()) {
    out.push_back(prefix);
    return;
  }
  for (int p = parts[i]; p >= 0; --p) {
    const int pp = parts[i] - p;
    if (p > room_p || pp > room_pp)
      continue;
    prefix.push_back({p, pp});
    split_into(parts, i + 1, room_p - p, room_pp - pp, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<SplitSeq> split_sequences(const LeviSp& levi, const EndoDatum& d)
{
  if (levi.n() != d.n())
    throw std::invalid_argument("split_sequences: Levi and datum have different rank");
  std::vector<SplitSeq> out;
  SplitSeq prefix;
  split_into(levi.gl_parts(), 0, d.n_p, d.n_pp, prefix, out);
  return out;
}

bool ZTwist::is_trivial() const
{
  for (int s : signs_p)
    if (s != 1)
      return false;
  for (int s : signs_pp)
    if (s != 1)
      return false;
  return true;
}

ZTwist ZTwist::compose(const ZTwist& other) const
{
  if (signs_p.size() != other.signs_p.size() || signs_pp.size() != other.signs_pp.size())
    throw std::invalid_argument("ZTwist::compose: shape mismatch");
  ZTwist out = *this;
  for (std::size_t i = 0; i < signs_p.size(); ++i)
    out.signs_p[i] *= other.signs_p[i];
  for (std::size_t i = 0; i < signs_pp.size(); ++i)
    out.signs_pp[i] *= other.signs_pp[i];
  return out;
}

ZTwist twist_for(const LeviSOPair& levi)
{
  return {std::vector<int>(levi.primed.gl_parts().size(), 1),
          std::vector<int>(levi.doubleprimed.gl_parts().size(), -1)};
}

EndoscopicLevi endoscopic_levi(const LeviSp& levi, const SplitSeq& s, const EndoDatum& d)
{
  if (!is_split_sequence(levi, s, d))
    throw std::invalid_argument("endoscopic_levi: " + to_string(s) + " is not in E(" +
                                levi.to_string() + ", " + d.to_string() + ")");
  Parts p = primed_parts(s);
  Parts pp = doubleprimed_parts(s);
  const int m_p = d.n_p - sum_parts(p);
  const int m_pp = d.n_pp - sum_parts(pp);

  Parts both = p;
  both.insert(both.end(), pp.begin(), pp.end());
  LeviSOPair bang{LeviSO(p, m_p, d.n_p), LeviSO(pp, m_pp, d.n_pp)};
  ZTwist z = twist_for(bang);
  return {LeviSp(std::move(both), levi.m(), levi.n()), std::move(bang), std::move(z)};
}

namespace {

void patterns_into(int left_p, int left_pp, std::vector<Marker>& prefix,
                   std::vector<std::vector<Marker>>& out)
{
  if (left_p == 0 && left_pp == 0) {
    out.push_back(prefix);
    return;
  }
  if (left_p > 0) {
    prefix.push_back(Marker::Primed);
    patterns_into(left_p - 1, left_pp, prefix, out);
    prefix.pop_back();
  }
  if (left_pp > 0) {
    prefix.push_back(Marker::DoublePrimed);
    patterns_into(left_p, left_pp - 1, prefix, out);
    prefix.pop_back();
  }
  if (left_p > 0 && left_pp > 0) {
    prefix.push_back(Marker::Both);
    patterns_into(left_p - 1, left_pp - 1, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<std::vector<Marker>> marker_patterns(int k_p, int k_pp)
{
  if (k_p < 0 || k_pp < 0)
    throw std::invalid_argument("marker_patterns: negative count");
  std::vector<std::vector<Marker>> out;
  std::vector<Marker> prefix;
  patterns_into(k_p, k_pp, prefix, out);
  return out;
}

LeviTriple fill_pattern(const std::vector<Marker>& pattern, const LeviSOPair& levi)
{
  const Parts& src_p = levi.primed.gl_parts();
  const Parts& src_pp = levi.doubleprimed.gl_parts();
  LeviTriple t;
  t.k = static_cast<int>(pattern.size());
  std::size_t ip = 0;
  std::size_t ipp = 0;
  for (Marker mk : pattern) {
    const bool has_p = mk != Marker::DoublePrimed;
    const bool has_pp = mk != Marker::Primed;
    if ((has_p && ip >= src_p.size()) || (has_pp && ipp >= src_pp.size()))
      throw std::invalid_argument("fill_pattern: pattern does not match Levi");
    t.bar_p.push_back(has_p ? src_p[ip++] : 0);
    t.bar_pp.push_back(has_pp ? src_pp[ipp++] : 0);
  }
  if (ip != src_p.size() || ipp != src_pp.size())
    throw std::invalid_argument("fill_pattern: pattern does not match Levi");
  return t;
}

LeviPreimage preimage_from_triple(const LeviTriple& triple, const LeviSOPair& levi, const EndoDatum& d)
{
  SplitSeq s;
  Parts parts;
  for (int i = 0; i < triple.k; ++i) {
    s.push_back({triple.bar_p[i], triple.bar_pp[i]});
    parts.push_back(triple.bar_p[i] + triple.bar_pp[i]);
  }
  const int m = levi.primed.m() + levi.doubleprimed.m();
  return {LeviSp(std::move(parts), m, d.n()), std::move(s), triple};
}

LeviTriple triple_from_split(const SplitSeq& s)
{
  LeviTriple t;
  t.k = static_cast<int>(s.size());
  for (const auto& part : s) {
    t.bar_p.push_back(part.p);
    t.bar_pp.push_back(part.pp);
  }
  return t;
}

std::vector<LeviPreimage> levi_preimages(const LeviSOPair& levi, const EndoDatum& d)
{
  if (levi.primed.n() != d.n_p || levi.doubleprimed.n() != d.n_pp)
    throw std::invalid_argument("levi_preimages: " + levi.to_string() +
                                " is not a standard Levi of the endoscopic group of " + d.to_string());
  std::vector<LeviPreimage> out;
  for (const auto& pattern : marker_patterns(levi.k_p(), levi.k_pp()))
    out.push_back(preimage_from_triple(fill_pattern(pattern, levi), levi, d));
  return out;
}

std::int64_t sign_sum(int k_p, int k_pp)
{
  std::int64_t total = 0;
  for (const auto& pattern : marker_patterns(k_p, k_pp))
    total += parity_sign(static_cast<int>(pattern.size()));
  return total;
}

namespace {

std::int64_t recursive_f(int a, int b, std::map<std::pair<int, int>, std::int64_t>& memo)
{
  if (a < 0 || b < 0)
    return 0;
  if (a == 0 && b == 0)
    return 1;
  auto key = std::make_pair(a, b);
  if (auto it = memo.find(key); it != memo.end())
    return it->second;
  const std::int64_t v = -recursive_f(a - 1, b, memo) - recursive_f(a, b - 1, memo) -
                         recursive_f(a - 1, b - 1, memo);
  memo.emplace(key, v);
  return v;
}

} // namespace

std::int64_t sign_sum_recursive(int k_p, int k_pp)
{
  if (k_p < 0 || k_pp < 0)
    throw std::invalid_argument("sign_sum_recursive: negative count");
  std::map<std::pair<int, int>, std::int64_t> memo;
  return recursive_f(k_p, k_pp, memo);
}

} // namespace mpendo
