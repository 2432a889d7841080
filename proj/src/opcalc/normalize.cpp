#include <optional>

#include "mpendo/opcalc.hpp"

namespace mpendo {

namespace {

using Rewrite = std::vector<std::pair<Word, std::int64_t>>;

bool is_trivial(const Atom& a)
{
  if (const auto* i = std::get_if<IndAtom>(&a))
    return i->parent == i->levi;
  if (const auto* r = std::get_if<ResAtom>(&a))
    return r->parent == r->levi;
  return false;
}

Word canonical(Word w)
{
  std::erase_if(w, is_trivial);
  return w;
}

Word splice(const Word& w, std::size_t at, std::size_t len, const Word& middle)
{
  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), middle.begin(), middle.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(at + len), w.end());
  return canonical(std::move(out));
}

/// Applies `rule` to every word until no word has a redex.
template <class Rule>
OpExpr exhaust(const OpExpr& e, Rule rule, int& count)
{
  OpExpr out;
  std::vector<std::pair<Word, std::int64_t>> stack(e.terms().begin(), e.terms().end());
  while (!stack.empty()) {
    auto [w, c] = std::move(stack.back());
    stack.pop_back();
    std::optional<Rewrite> r = rule(w);
    if (!r) {
      out.add(w, c);
      continue;
    }
    ++count;
    for (auto& [w2, c2] : *r)
      stack.emplace_back(std::move(w2), c * c2);
  }
  return out;
}

std::optional<Rewrite> expand_first_d(const Word& w)
{
  for (std::size_t i = 0; i < w.size(); ++i)
    if (const auto* az = std::get_if<AzAtom>(&w[i])) {
      Rewrite out;
      const OpExpr expanded = expand_D(az->group);
      for (const auto& [mid, c] : expanded.terms())
        out.emplace_back(splice(w, i, 1, mid), c);
      return out;
    }
  return std::nullopt;
}

// r(P -> L) . T(E, P) = sum_s T(E_s, L, s) . z_s . r(E -> E_s)
std::optional<Rewrite> jacquet(const Word& w)
{
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const auto* res = std::get_if<ResAtom>(&w[i]);
    const auto* tr = std::get_if<TransferAtom>(&w[i + 1]);
    if (!res || !tr)
      continue;
    if (!tr->elliptic())
      throw StuckPattern("no rule for " + to_string(w[i]) + " . " + to_string(w[i + 1]));
    const auto& parent = std::get<MetaType>(res->parent);
    const auto& levi = std::get<MetaType>(res->levi);
    Parts prefix, q;
    split_sub_levi(levi.gl_parts, levi.m, parent.gl_parts, parent.m, &prefix, &q);
    const EndoDatum d{tr->source.primed.n(), tr->source.doubleprimed.n()};
    Rewrite out;
    for (const auto& s : split_sequences(LeviSp(q, levi.m), d)) {
      const auto el = endoscopic_levi(LeviSp(q, levi.m), s, d);
      EndoObj e_s{prefix, el.m_s_bang.primed, el.m_s_bang.doubleprimed};
      Word mid{TransferAtom{e_s, levi, s}, TwistAtom{e_s}, ResAtom{tr->source, e_s}};
      out.emplace_back(splice(w, i, 2, mid), 1);
    }
    return out;
  }
  return std::nullopt;
}

// i(P <- L) . T(E', L, s) = T(E, P) . i(E <- E') . z_s, when E' shares exactly the GL
// factors of L that refine those of P.
std::optional<Rewrite> absorb(const Word& w)
{
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const auto* ind = std::get_if<IndAtom>(&w[i]);
    const auto* tr = std::get_if<TransferAtom>(&w[i + 1]);
    if (!ind || !tr)
      continue;
    const auto& parent = std::get<MetaType>(ind->parent);
    const auto& levi = std::get<MetaType>(ind->levi);
    Parts prefix, q;
    split_sub_levi(levi.gl_parts, levi.m, parent.gl_parts, parent.m, &prefix, &q);
    if (tr->source.shared != prefix)
      continue;
    EndoObj e{parent.gl_parts, LeviSO({}, tr->source.primed.n()), LeviSO({}, tr->source.doubleprimed.n())};
    Word mid{TransferAtom{e, parent, {}}, IndAtom{e, tr->source}, TwistAtom{tr->source}};
    return Rewrite{{splice(w, i, 2, mid), 1}};
  }
  return std::nullopt;
}

std::optional<Rewrite> cancel_twists(const Word& w)
{
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (std::holds_alternative<TwistAtom>(w[i]) && std::holds_alternative<TwistAtom>(w[i + 1]))
      return Rewrite{{splice(w, i, 2, {}), 1}};
  return std::nullopt;
}

} // namespace

OpExpr expand_D(const GroupObj& h)
{
  OpExpr out;
  auto add_levi = [&](const GroupObj& levi) {
    const int sign = parity_sign(semisimple_rank(levi));
    if (levi == h)
      out.add({}, sign);
    else
      out.add({IndAtom{h, levi}, ResAtom{h, levi}}, sign);
  };
  if (const auto* m = std::get_if<MetaType>(&h)) {
    for (auto& [parts, tail] : sub_levis(m->gl_parts, m->m))
      add_levi(MetaType{parts, tail});
    return out;
  }
  const auto& e = std::get<EndoObj>(h);
  for (const auto& [shared, zero] : sub_levis(e.shared, 0))
    for (const auto& [pp, pm] : sub_levis(e.primed.gl_parts(), e.primed.m()))
      for (const auto& [qp, qm] : sub_levis(e.doubleprimed.gl_parts(), e.doubleprimed.m()))
        add_levi(EndoObj{shared, LeviSO(pp, pm), LeviSO(qp, qm)});
  return out;
}

OpExpr commute_d_past_induction(const OpExpr& e, int* rewrites)
{
  int count = 0;
  OpExpr out = exhaust(
      e,
      [](const Word& w) -> std::optional<Rewrite> {
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          const auto* az = std::get_if<AzAtom>(&w[i]);
          const auto* ind = std::get_if<IndAtom>(&w[i + 1]);
          if (az && ind && ind->parent == az->group)
            return Rewrite{{splice(w, i, 2, {IndAtom{ind->parent, ind->levi}, AzAtom{ind->levi}}), 1}};
        }
        return std::nullopt;
      },
      count);
  if (rewrites)
    *rewrites = count;
  return out;
}

OpExpr normalize(const OpExpr& e, NormalizeStats* stats)
{
  NormalizeStats local;
  OpExpr cur;
  for (const auto& [w, c] : e.terms())
    cur.add(canonical(w), c);
  cur = exhaust(cur, expand_first_d, local.d_expansions);
  while (true) {
    ++local.rounds;
    const int before = local.jacquet_rewrites + local.absorb_rewrites + local.twist_cancellations;
    cur = exhaust(cur, jacquet, local.jacquet_rewrites);
    cur = exhaust(cur, absorb, local.absorb_rewrites);
    cur = exhaust(cur, cancel_twists, local.twist_cancellations);
    if (local.jacquet_rewrites + local.absorb_rewrites + local.twist_cancellations == before)
      break;
  }
  if (stats)
    *stats = local;
  return cur;
}

TransferAtom elliptic_transfer(const MetaType& target, const EndoDatum& d)
{
  if (d.n_p < 0 || d.n_pp < 0 || d.n() != target.m)
    throw std::invalid_argument("elliptic_transfer: datum " + d.to_string() + " does not match " + target.to_string());
  return TransferAtom{EndoObj{target.gl_parts, LeviSO({}, d.n_p), LeviSO({}, d.n_pp)}, target, {}};
}

} // namespace mpendo
