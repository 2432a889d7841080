#include "mpendo/ssclasses.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mpendo {

bool is_prime(std::uint32_t p)
{
  if (p < 2)
    return false;
  for (std::uint32_t q = 2; q * q <= p; ++q)
    if (p % q == 0)
      return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
  if (p < 7 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument("PrimeField: p must be an odd prime >= 7, got " + std::to_string(p));
}

Residue PrimeField::reduce(std::int64_t a) const
{
  const std::int64_t r = a % static_cast<std::int64_t>(p_);
  return static_cast<Residue>(r < 0 ? r + p_ : r);
}

Residue PrimeField::mul(Residue a, Residue b) const
{
  return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const
{
  Residue result = 1;
  Residue base = a % p_;
  while (e) {
    if (e & 1)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const
{
  if (a % p_ == 0)
    throw std::domain_error("PrimeField::inv: zero has no inverse");
  return pow(a, p_ - 2);
}

std::vector<EigPair> PrimeField::all_pairs() const
{
  std::vector<EigPair> out;
  for (Residue a = 2; a + 1 < p_; ++a)
    if (a < inv(a))
      out.emplace_back(*this, a);
  return out;
}

EigPair::EigPair(const PrimeField& f, Residue a)
{
  a = f.reduce(a);
  if (a == 0 || f.is_plus_minus_one(a))
    throw std::invalid_argument("EigPair: eigenvalue must differ from 0 and +-1");
  const Residue b = f.inv(a);
  lo_ = std::min(a, b);
  hi_ = std::max(a, b);
}

std::string EigPair::to_string() const
{
  std::ostringstream os;
  os << "{" << lo_ << "," << hi_ << "}";
  return os.str();
}

PairMultiset::PairMultiset(std::vector<EigPair> pairs) : pairs_(std::move(pairs))
{
  std::sort(pairs_.begin(), pairs_.end());
}

bool PairMultiset::is_regular() const
{
  return std::adjacent_find(pairs_.begin(), pairs_.end()) == pairs_.end();
}

std::vector<Residue> PairMultiset::eigenvalues() const
{
  std::vector<Residue> out;
  for (const auto& pr : pairs_) {
    out.push_back(pr.lo());
    out.push_back(pr.hi());
  }
  std::sort(out.begin(), out.end());
  return out;
}

PairMultiset PairMultiset::negated(const PrimeField& f) const
{
  std::vector<EigPair> out;
  out.reserve(pairs_.size());
  for (const auto& pr : pairs_)
    out.push_back(pr.negated(f));
  return PairMultiset(std::move(out));
}

PairMultiset PairMultiset::merged(const PairMultiset& other) const
{
  std::vector<EigPair> out = pairs_;
  out.insert(out.end(), other.pairs_.begin(), other.pairs_.end());
  return PairMultiset(std::move(out));
}

std::string PairMultiset::to_string() const
{
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    os << (i ? " " : "") << pairs_[i].to_string();
  os << "]";
  return os.str();
}

std::string EndoClass::to_string() const { return primed.to_string() + "x" + doubleprimed.to_string(); }

namespace {

std::string gl_text(const std::vector<GLEigen>& gl)
{
  std::ostringstream os;
  for (const auto& block : gl) {
    os << "<";
    for (std::size_t i = 0; i < block.size(); ++i)
      os << (i ? "," : "") << block[i];
    os << ">";
  }
  return os.str();
}

bool all_distinct(std::vector<Residue> values)
{
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

/// Index subsets of {0..n-1} of size k, lexicographic.
std::vector<std::vector<int>> index_subsets(int n, int k)
{
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n)
    return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
      --i;
    if (i < 0)
      break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

template <class T>
void partition_by(const std::vector<T>& items, const std::vector<int>& chosen, std::vector<T>& in,
                  std::vector<T>& out)
{
  std::size_t c = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (c < chosen.size() && chosen[c] == static_cast<int>(i)) {
      in.push_back(items[i]);
      ++c;
    } else {
      out.push_back(items[i]);
    }
  }
}

GLEigen negated_sorted(const PrimeField& f, const GLEigen& values)
{
  GLEigen out;
  for (Residue x : values)
    out.push_back(f.neg(x));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

LeviClass::LeviClass(LeviSp levi, std::vector<GLEigen> gl_evs, SpClass sp_part)
    : levi_(std::move(levi)), gl_evs_(std::move(gl_evs)), sp_part_(std::move(sp_part))
{
  if (static_cast<int>(gl_evs_.size()) != levi_.k())
    throw std::invalid_argument("LeviClass: number of GL blocks does not match the Levi");
  for (std::size_t i = 0; i < gl_evs_.size(); ++i) {
    if (static_cast<int>(gl_evs_[i].size()) != levi_.gl_parts()[i])
      throw std::invalid_argument("LeviClass: GL block size does not match the Levi");
    for (Residue x : gl_evs_[i])
      if (x == 0)
        throw std::invalid_argument("LeviClass: GL eigenvalues must be invertible");
    std::sort(gl_evs_[i].begin(), gl_evs_[i].end());
  }
  if (sp_part_.rank() != levi_.m())
    throw std::invalid_argument("LeviClass: Sp tail rank does not match the Levi");
}

std::vector<Residue> LeviClass::ambient_eigenvalues(const PrimeField& f) const
{
  std::vector<Residue> out = sp_part_.eigenvalues();
  for (const auto& block : gl_evs_)
    for (Residue x : block) {
      out.push_back(x);
      out.push_back(f.inv(x));
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool LeviClass::is_g_regular(const PrimeField& f) const { return all_distinct(ambient_eigenvalues(f)); }

std::optional<SpClass> LeviClass::induced_sp_class(const PrimeField& f) const
{
  std::vector<EigPair> pairs = sp_part_.pairs();
  for (const auto& block : gl_evs_)
    for (Residue x : block) {
      if (f.is_plus_minus_one(x))
        return std::nullopt;
      pairs.emplace_back(f, x);
    }
  return SpClass(std::move(pairs));
}

std::string LeviClass::to_string() const
{
  return levi_.to_string() + ":" + gl_text(gl_evs_) + sp_part_.to_string();
}

bool LeviEndoClass::is_strongly_regular(const PrimeField& f) const
{
  std::vector<Residue> primed = so_p.eigenvalues();
  std::vector<Residue> doubleprimed = so_pp.eigenvalues();
  auto add_gl = [&](const std::vector<GLEigen>& gl, std::vector<Residue>& into) {
    for (const auto& block : gl)
      for (Residue x : block) {
        into.push_back(x);
        into.push_back(f.inv(x));
      }
  };
  add_gl(gl_p, primed);
  add_gl(gl_pp, doubleprimed);
  for (const auto* side : {&primed, &doubleprimed}) {
    if (std::find(side->begin(), side->end(), Residue{1}) != side->end())
      return false;
    if (!all_distinct(*side))
      return false;
  }
  return true;
}

std::string LeviEndoClass::to_string() const
{
  return "(" + gl_text(gl_p) + so_p.to_string() + ")x(" + gl_text(gl_pp) + so_pp.to_string() + ")";
}

LeviEndoClass apply_twist(const PrimeField& f, const ZTwist& z, const LeviEndoClass& delta)
{
  if (z.signs_p.size() != delta.gl_p.size() || z.signs_pp.size() != delta.gl_pp.size())
    throw std::invalid_argument("apply_twist: twist does not match the Levi");
  LeviEndoClass out = delta;
  auto twist = [&](const std::vector<int>& signs, std::vector<GLEigen>& gl) {
    for (std::size_t i = 0; i < gl.size(); ++i)
      if (signs[i] == -1)
        gl[i] = negated_sorted(f, gl[i]);
  };
  twist(z.signs_p, out.gl_p);
  twist(z.signs_pp, out.gl_pp);
  return out;
}

SpClass psi(const PrimeField& f, const EndoClass& delta, const EndoDatum& d)
{
  if (delta.primed.rank() != d.n_p || delta.doubleprimed.rank() != d.n_pp)
    throw std::invalid_argument("psi: class shape does not match datum " + d.to_string());
  return delta.primed.merged(delta.doubleprimed.negated(f));
}

bool is_g_regular(const PrimeField& f, const EndoClass& delta, const EndoDatum& d)
{
  return all_distinct(psi(f, delta, d).eigenvalues());
}

LeviClass psi_levi(const PrimeField& f, const LeviEndoClass& delta, const LeviSp& levi, const SplitSeq& s)
{
  if (static_cast<int>(s.size()) != levi.k())
    throw std::invalid_argument("psi_levi: split sequence not aligned with the Levi");
  std::vector<GLEigen> gl;
  std::size_t ip = 0;
  std::size_t ipp = 0;
  for (const auto& part : s) {
    GLEigen block;
    if (part.p > 0) {
      if (ip >= delta.gl_p.size())
        throw std::invalid_argument("psi_levi: class shape does not match split");
      block.insert(block.end(), delta.gl_p[ip].begin(), delta.gl_p[ip].end());
      ++ip;
    }
    if (part.pp > 0) {
      if (ipp >= delta.gl_pp.size())
        throw std::invalid_argument("psi_levi: class shape does not match split");
      block.insert(block.end(), delta.gl_pp[ipp].begin(), delta.gl_pp[ipp].end());
      ++ipp;
    }
    gl.push_back(std::move(block));
  }
  if (ip != delta.gl_p.size() || ipp != delta.gl_pp.size())
    throw std::invalid_argument("psi_levi: class shape does not match split");
  return LeviClass(levi, std::move(gl), delta.so_p.merged(delta.so_pp.negated(f)));
}

namespace {

SpClass require_regular(const PrimeField& f, const LeviClass& gamma, const char* where)
{
  auto induced = gamma.induced_sp_class(f);
  if (!gamma.is_g_regular(f) || !induced)
    throw std::invalid_argument(std::string(where) + ": class " + gamma.to_string() + " is not G-regular");
  return *induced;
}

} // namespace

std::vector<EndoClass> fiber(const PrimeField& f, const LeviClass& gamma, const EndoDatum& d)
{
  const SpClass target = require_regular(f, gamma, "fiber");
  if (target.rank() != d.n())
    throw std::invalid_argument("fiber: datum rank does not match class");
  std::vector<EndoClass> out;
  for (const auto& chosen : index_subsets(target.rank(), d.n_p)) {
    std::vector<EigPair> keep;
    std::vector<EigPair> flip;
    partition_by(target.pairs(), chosen, keep, flip);
    out.push_back({SOClass(std::move(keep)), SOClass(std::move(flip)).negated(f)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string LeviFiberElement::to_string() const { return mpendo::to_string(s) + ":" + delta_s.to_string(); }

std::vector<LeviFiberElement> levi_fiber_pairs(const PrimeField& f, const LeviClass& gamma, const EndoDatum& d)
{
  require_regular(f, gamma, "levi_fiber_pairs");
  const LeviSp& levi = gamma.levi();
  std::set<LeviFiberElement> out;
  for (const auto& s : split_sequences(levi, d)) {
    const int m_p = d.n_p - sum_parts(primed_parts(s));
    // Partial assignments, extended one GL factor at a time.
    std::vector<LeviEndoClass> partial{LeviEndoClass{}};
    for (std::size_t i = 0; i < s.size(); ++i) {
      const GLEigen& block = gamma.gl_evs()[i];
      std::vector<LeviEndoClass> next;
      for (const auto& chosen : index_subsets(static_cast<int>(block.size()), s[i].p)) {
        GLEigen keep;
        GLEigen rest;
        partition_by(block, chosen, keep, rest);
        for (const auto& base : partial) {
          LeviEndoClass ext = base;
          if (s[i].p > 0)
            ext.gl_p.push_back(keep);
          // delta_i'' is chosen so that its z_s-twist recovers the remaining eigenvalues.
          if (s[i].pp > 0)
            ext.gl_pp.push_back(negated_sorted(f, rest));
          next.push_back(std::move(ext));
        }
      }
      partial = std::move(next);
    }
    const SpClass& tail = gamma.sp_part();
    for (const auto& chosen : index_subsets(tail.rank(), m_p)) {
      std::vector<EigPair> keep;
      std::vector<EigPair> flip;
      partition_by(tail.pairs(), chosen, keep, flip);
      SOClass so_p(std::move(keep));
      SOClass so_pp = SOClass(std::move(flip)).negated(f);
      for (const auto& base : partial) {
        LeviEndoClass full = base;
        full.so_p = so_p;
        full.so_pp = so_pp;
        out.insert({s, std::move(full)});
      }
    }
  }
  return {out.begin(), out.end()};
}

LeviFiberElement fiber_to_levi_pair(const PrimeField& f, const LeviClass& gamma, const EndoDatum& d,
                                    const EndoClass& delta)
{
  require_regular(f, gamma, "fiber_to_levi_pair");
  if (delta.primed.rank() != d.n_p || delta.doubleprimed.rank() != d.n_pp)
    throw std::invalid_argument("fiber_to_levi_pair: class shape does not match datum");
  const std::vector<Residue> eig_p = delta.primed.eigenvalues();
  const std::vector<Residue> eig_pp = delta.doubleprimed.eigenvalues();
  auto occurs = [](const std::vector<Residue>& values, Residue x) {
    return std::count(values.begin(), values.end(), x);
  };

  LeviFiberElement out;
  std::set<EigPair> used_p;
  std::set<EigPair> used_pp;
  for (std::size_t i = 0; i < gamma.gl_evs().size(); ++i) {
    const GLEigen& block = gamma.gl_evs()[i];
    // Eigenvalues of gamma_i inside Sp(2n): the block and its inverses.
    std::vector<Residue> embedded;
    for (Residue x : block) {
      embedded.push_back(x);
      embedded.push_back(f.inv(x));
    }
    long shared_p = 0;
    long shared_pp = 0;
    for (Residue y : embedded) {
      shared_p += occurs(eig_p, y);
      shared_pp += occurs(eig_pp, f.neg(y));
    }
    if (shared_p % 2 != 0 || shared_pp % 2 != 0 ||
        shared_p / 2 + shared_pp / 2 != static_cast<long>(block.size()))
      throw std::logic_error("fiber_to_levi_pair: eigenvalue counts inconsistent for " + delta.to_string());
    const SplitPart part{static_cast<int>(shared_p / 2), static_cast<int>(shared_pp / 2)};
    out.s.push_back(part);

    GLEigen gl_p;
    GLEigen gl_pp;
    for (Residue x : block) {
      const EigPair pr(f, x);
      if (std::binary_search(delta.primed.pairs().begin(), delta.primed.pairs().end(), pr)) {
        gl_p.push_back(x);
        used_p.insert(pr);
      } else {
        const EigPair neg = pr.negated(f);
        if (!std::binary_search(delta.doubleprimed.pairs().begin(), delta.doubleprimed.pairs().end(), neg))
          throw std::logic_error("fiber_to_levi_pair: eigenvalue " + std::to_string(x) + " not covered by " +
                                 delta.to_string());
        gl_pp.push_back(f.neg(x));
        used_pp.insert(neg);
      }
    }
    std::sort(gl_p.begin(), gl_p.end());
    std::sort(gl_pp.begin(), gl_pp.end());
    if (part.p > 0)
      out.delta_s.gl_p.push_back(std::move(gl_p));
    if (part.pp > 0)
      out.delta_s.gl_pp.push_back(std::move(gl_pp));
  }
  std::vector<EigPair> rest_p;
  for (const auto& pr : delta.primed.pairs())
    if (!used_p.count(pr))
      rest_p.push_back(pr);
  std::vector<EigPair> rest_pp;
  for (const auto& pr : delta.doubleprimed.pairs())
    if (!used_pp.count(pr))
      rest_pp.push_back(pr);
  out.delta_s.so_p = SOClass(std::move(rest_p));
  out.delta_s.so_pp = SOClass(std::move(rest_pp));
  return out;
}

FiberBijectionReport check_fiber_bijection(const PrimeField& f, const LeviClass& gamma, const EndoDatum& d)
{
  FiberBijectionReport rep;
  rep.g_regular = gamma.is_g_regular(f) && gamma.induced_sp_class(f).has_value();
  if (!rep.g_regular) {
    rep.counterexample = "not G-regular: " + gamma.to_string();
    return rep;
  }
  const auto source = fiber(f, gamma, d);
  const auto target = levi_fiber_pairs(f, gamma, d);
  rep.fiber_size = source.size();
  rep.levi_pairs_size = target.size();

  std::set<LeviFiberElement> images;
  rep.lands_in_target = true;
  for (const auto& delta : source) {
    LeviFiberElement img = fiber_to_levi_pair(f, gamma, d, delta);
    if (!std::binary_search(target.begin(), target.end(), img)) {
      rep.lands_in_target = false;
      if (!rep.counterexample)
        rep.counterexample = "image outside target: " + delta.to_string() + " -> " + img.to_string();
    }
    images.insert(std::move(img));
  }
  rep.injective = images.size() == source.size();
  rep.surjective = std::equal(images.begin(), images.end(), target.begin(), target.end());
  if (!rep.injective && !rep.counterexample)
    rep.counterexample = "two fiber elements share an image";
  if (!rep.surjective && !rep.counterexample)
    rep.counterexample = "target element missed by the map";
  return rep;
}

std::optional<LeviClass> random_regular_class(const PrimeField& f, const LeviSp& levi, std::mt19937_64& rng,
                                              std::uint64_t max_draws)
{
  const std::vector<EigPair> pairs = f.all_pairs();
  if (levi.m() > 0 && pairs.empty())
    return std::nullopt;
  std::uniform_int_distribution<Residue> unit(1, f.p() - 1);
  std::uniform_int_distribution<std::size_t> pick(0, pairs.empty() ? 0 : pairs.size() - 1);
  for (std::uint64_t draw = 0; draw < max_draws; ++draw) {
    std::vector<GLEigen> gl;
    for (int part : levi.gl_parts()) {
      GLEigen block;
      for (int j = 0; j < part; ++j)
        block.push_back(unit(rng));
      gl.push_back(std::move(block));
    }
    std::vector<EigPair> tail;
    for (int j = 0; j < levi.m(); ++j)
      tail.push_back(pairs[pick(rng)]);
    LeviClass candidate(levi, std::move(gl), SpClass(std::move(tail)));
    if (candidate.is_g_regular(f))
      return candidate;
  }
  return std::nullopt;
}

} // namespace mpendo
