#include <algorithm>
#include <sstream>

#include "mpendo/opcalc.hpp"

namespace mpendo {

namespace {

std::string parts_text(const Parts& parts)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i)
    os << (i ? "," : "") << parts[i];
  return os.str();
}

std::string so_factor_text(const LeviSO& levi)
{
  if (levi.is_whole_group())
    return levi.to_string();
  return "(" + levi.to_string() + ")";
}

bool is_sub_object(const GroupObj& parent, const GroupObj& levi)
{
  if (parent.index() != levi.index())
    return false;
  if (const auto* p = std::get_if<MetaType>(&parent)) {
    const auto& l = std::get<MetaType>(levi);
    return split_sub_levi(l.gl_parts, l.m, p->gl_parts, p->m);
  }
  const auto& p = std::get<EndoObj>(parent);
  const auto& l = std::get<EndoObj>(levi);
  return is_refinement(l.shared, p.shared) &&
         split_sub_levi(l.primed.gl_parts(), l.primed.m(), p.primed.gl_parts(), p.primed.m()) &&
         split_sub_levi(l.doubleprimed.gl_parts(), l.doubleprimed.m(), p.doubleprimed.gl_parts(), p.doubleprimed.m());
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

} // namespace

std::string MetaType::to_string() const
{
  std::ostringstream os;
  if (!gl_parts.empty())
    os << "GL(" << parts_text(gl_parts) << ")x";
  os << "MSp(" << m << ")";
  return os.str();
}

std::string EndoObj::to_string() const
{
  std::ostringstream os;
  if (!shared.empty())
    os << "GL(" << parts_text(shared) << ")x";
  os << so_factor_text(primed) << "x" << so_factor_text(doubleprimed);
  return os.str();
}

std::string to_string(const GroupObj& g)
{
  return std::visit([](const auto& x) { return x.to_string(); }, g);
}

int rank_of(const GroupObj& g)
{
  return std::visit([](const auto& x) { return x.rank(); }, g);
}

int semisimple_rank(const GroupObj& g)
{
  if (const auto* m = std::get_if<MetaType>(&g))
    return m->rank() - static_cast<int>(m->gl_parts.size());
  const auto& e = std::get<EndoObj>(g);
  return e.rank() - e.gl_count();
}

GroupObj domain_of(const Atom& a)
{
  return std::visit(Overloaded{
                        [](const IndAtom& x) -> GroupObj { return x.levi; },
                        [](const ResAtom& x) -> GroupObj { return x.parent; },
                        [](const TwistAtom& x) -> GroupObj { return x.obj; },
                        [](const TransferAtom& x) -> GroupObj { return x.source; },
                        [](const AzAtom& x) -> GroupObj { return x.group; },
                    },
                    a);
}

GroupObj codomain_of(const Atom& a)
{
  return std::visit(Overloaded{
                        [](const IndAtom& x) -> GroupObj { return x.parent; },
                        [](const ResAtom& x) -> GroupObj { return x.levi; },
                        [](const TwistAtom& x) -> GroupObj { return x.obj; },
                        [](const TransferAtom& x) -> GroupObj { return x.target; },
                        [](const AzAtom& x) -> GroupObj { return x.group; },
                    },
                    a);
}

std::string to_string(const Atom& a)
{
  return std::visit(Overloaded{
                        [](const IndAtom& x) { return "I[" + to_string(x.parent) + " <- " + to_string(x.levi) + "]"; },
                        [](const ResAtom& x) { return "R[" + to_string(x.parent) + " -> " + to_string(x.levi) + "]"; },
                        [](const TwistAtom& x) { return "Z[" + x.obj.to_string() + "]"; },
                        [](const TransferAtom& x) {
                          std::string s = "T[" + x.source.to_string() + " -> " + x.target.to_string();
                          if (!x.split.empty())
                            s += "; " + mpendo::to_string(x.split);
                          return s + "]";
                        },
                        [](const AzAtom& x) { return "D[" + to_string(x.group) + "]"; },
                    },
                    a);
}

std::string to_string(const Word& w)
{
  if (w.empty())
    return "Id";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i)
    out += (i ? " . " : "") + to_string(w[i]);
  return out;
}

SyntaxError::SyntaxError(const std::string& what, std::size_t position)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + what), position_(position)
{
}

Atom make_ind(const GroupObj& parent, const GroupObj& levi)
{
  if (!is_sub_object(parent, levi))
    throw TypeError(to_string(levi) + " is not a standard Levi of " + to_string(parent));
  return IndAtom{parent, levi};
}

Atom make_res(const GroupObj& parent, const GroupObj& levi)
{
  if (!is_sub_object(parent, levi))
    throw TypeError(to_string(levi) + " is not a standard Levi of " + to_string(parent));
  return ResAtom{parent, levi};
}

Atom make_twist(const EndoObj& obj) { return TwistAtom{obj}; }

std::vector<SplitSeq> transfer_splits(const EndoObj& source, const MetaType& target)
{
  const auto& g = target.gl_parts;
  if (source.shared.size() > g.size() || !std::equal(source.shared.begin(), source.shared.end(), g.begin()))
    return {};
  Parts q(g.begin() + static_cast<std::ptrdiff_t>(source.shared.size()), g.end());
  if (sum_parts(q) + target.m != source.primed.n() + source.doubleprimed.n())
    return {};
  std::vector<SplitSeq> out;
  const EndoDatum d{source.primed.n(), source.doubleprimed.n()};
  for (auto& s : split_sequences(LeviSp(q, target.m), d))
    if (primed_parts(s) == source.primed.gl_parts() && doubleprimed_parts(s) == source.doubleprimed.gl_parts())
      out.push_back(std::move(s));
  return out;
}

Atom make_transfer(const EndoObj& source, const MetaType& target, const SplitSeq& split)
{
  const auto splits = transfer_splits(source, target);
  if (std::find(splits.begin(), splits.end(), split) == splits.end())
    throw TypeError("no transfer " + source.to_string() + " -> " + target.to_string() + " with split " +
                    to_string(split));
  return TransferAtom{source, target, split};
}

Atom make_az(const GroupObj& group) { return AzAtom{group}; }

OpExpr OpExpr::identity() { return word({}); }

OpExpr OpExpr::word(Word w, std::int64_t coefficient)
{
  OpExpr e;
  e.add(w, coefficient);
  return e;
}

OpExpr OpExpr::atom(Atom a, std::int64_t coefficient) { return word(Word{std::move(a)}, coefficient); }

std::int64_t OpExpr::coefficient(const Word& w) const
{
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void OpExpr::add(const Word& w, std::int64_t coefficient)
{
  if (coefficient == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0)
      terms_.erase(it);
  }
}

OpExpr& OpExpr::operator+=(const OpExpr& other)
{
  for (const auto& [w, c] : other.terms_)
    add(w, c);
  return *this;
}

OpExpr& OpExpr::operator-=(const OpExpr& other)
{
  for (const auto& [w, c] : other.terms_)
    add(w, -c);
  return *this;
}

OpExpr OpExpr::operator+(const OpExpr& other) const
{
  OpExpr out = *this;
  out += other;
  return out;
}

OpExpr OpExpr::operator-(const OpExpr& other) const
{
  OpExpr out = *this;
  out -= other;
  return out;
}

OpExpr OpExpr::operator*(std::int64_t scalar) const
{
  OpExpr out;
  for (const auto& [w, c] : terms_)
    out.add(w, c * scalar);
  return out;
}

std::string OpExpr::to_string() const
{
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::int64_t mag = c;
    if (first) {
      if (c < 0) {
        os << "-";
        mag = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      mag = c < 0 ? -c : c;
    }
    if (mag != 1)
      os << mag << "*";
    os << mpendo::to_string(w);
    first = false;
  }
  return os.str();
}

OpExpr compose(const OpExpr& a, const OpExpr& b)
{
  OpExpr out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      if (!wa.empty() && !wb.empty() && domain_of(wa.back()) != codomain_of(wb.front()))
        throw TypeError("cannot compose " + to_string(wa.back()) + " after " + to_string(wb.front()));
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  return out;
}

std::optional<std::pair<GroupObj, GroupObj>> word_type(const Word& w)
{
  if (w.empty())
    return std::nullopt;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (domain_of(w[i]) != codomain_of(w[i + 1]))
      throw TypeError("cannot compose " + to_string(w[i]) + " after " + to_string(w[i + 1]));
  return std::make_pair(domain_of(w.back()), codomain_of(w.front()));
}

std::optional<std::pair<GroupObj, GroupObj>> type_check(const OpExpr& e)
{
  std::optional<std::pair<GroupObj, GroupObj>> type;
  const Word* witness = nullptr;
  bool has_identity = false;
  for (const auto& [w, c] : e.terms()) {
    auto t = word_type(w);
    if (!t) {
      has_identity = true;
      continue;
    }
    if (!type) {
      type = t;
      witness = &w;
    } else if (*type != *t) {
      throw TypeError("terms of different types: " + to_string(witness->front()) + " and " + to_string(w.front()));
    }
  }
  if (has_identity && type && type->first != type->second)
    throw TypeError("Id added to " + to_string(witness->front()) + ", which is not an endomorphism");
  return type;
}

} // namespace mpendo
