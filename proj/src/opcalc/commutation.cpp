#include "mpendo/opcalc.hpp"

namespace mpendo {

namespace {

OpExpr atom_expr(Atom a) { return OpExpr::atom(std::move(a)); }

/// Sum over (M, s) in M(L) of (-1)^{r(M)}, where M runs over Levis of GL(P) x MSp(2m)
/// whose GL(P) part is refined exactly as in L.
std::int64_t preimage_sum(const EndoObj& levi, const EndoDatum& d)
{
  const int prefix_rank = sum_parts(levi.shared) - static_cast<int>(levi.shared.size());
  std::int64_t total = 0;
  for (const auto& pre : levi_preimages(levi.so_pair(), d))
    total += parity_sign(prefix_rank + semisimple_rank_sp(pre.levi));
  return total;
}

std::vector<CoefficientRow> coefficient_table(const OpExpr& lhs, const TransferAtom& t, const EndoDatum& d)
{
  std::vector<CoefficientRow> rows;
  const GroupObj g_bang = t.source;
  const OpExpr d_bang = expand_D(g_bang);
  for (const auto& [w, c] : d_bang.terms()) {
    EndoObj levi = w.empty() ? t.source : std::get<EndoObj>(std::get<IndAtom>(w.front()).levi);
    Word basis{t};
    basis.insert(basis.end(), w.begin(), w.end());
    rows.push_back({levi, lhs.coefficient(basis), parity_sign(semisimple_rank(GroupObj{levi})), preimage_sum(levi, d)});
  }
  return rows;
}

std::optional<std::string> first_word(const OpExpr& e)
{
  if (e.is_zero())
    return std::nullopt;
  const auto& [w, c] = *e.terms().begin();
  return std::to_string(c) + "*" + to_string(w);
}

} // namespace

bool CommutationReport::passed() const
{
  if (error || !chain_ok || !residual.is_zero())
    return false;
  for (const auto& row : table)
    if (!row.ok())
      return false;
  return true;
}

CommutationReport check_commutation(int n, const EndoDatum& d, const std::optional<LeviSp>& ambient_levi)
{
  CommutationReport rep;
  rep.n = n;
  rep.d = d;
  rep.ambient_levi = ambient_levi;
  try {
    const MetaType g{{}, n};
    const MetaType ambient = ambient_levi ? MetaType{ambient_levi->gl_parts(), ambient_levi->m()} : g;
    if (ambient.rank() != n)
      throw std::invalid_argument("ambient Levi " + ambient.to_string() + " is not a Levi of " + g.to_string());
    const TransferAtom t = elliptic_transfer(ambient, d);
    const GroupObj g_bang = t.source;

    // D_M . T(G!, M) against T(G!, M) . D_{G!} on the ambient Levi.
    const OpExpr lhs = normalize(compose(atom_expr(AzAtom{ambient}), atom_expr(t)), &rep.stats);
    const OpExpr rhs = normalize(compose(atom_expr(t), atom_expr(AzAtom{g_bang})));
    rep.table = coefficient_table(lhs, t, d);
    OpExpr elliptic_residual = lhs - rhs;

    if (ambient == g) {
      rep.residual = elliptic_residual;
      rep.chain.push_back("D[" + g.to_string() + "] . " + to_string(Atom{t}) + " - " + to_string(Atom{t}) + " . D[" +
                          to_string(g_bang) + "] = " + elliptic_residual.to_string());
    } else {
      const Atom ind = make_ind(g, ambient);
      const OpExpr start = compose(atom_expr(AzAtom{g}), compose(atom_expr(ind), atom_expr(t)));
      int commuted = 0;
      const OpExpr step1 = commute_d_past_induction(start, &commuted);
      const OpExpr expected1 = compose(atom_expr(ind), compose(atom_expr(AzAtom{ambient}), atom_expr(t)));
      rep.chain_ok = commuted == 1 && step1 == expected1;
      rep.chain.push_back("induction commutes with D: " + start.to_string() + " = " + step1.to_string());
      rep.chain.push_back("elliptic case on " + ambient.to_string() + ": D . T - T . D = " +
                          elliptic_residual.to_string());
      rep.chain_ok = rep.chain_ok && elliptic_residual.is_zero();

      const OpExpr folded_t = compose(atom_expr(ind), atom_expr(t));
      const OpExpr lhs_full = normalize(step1);
      const OpExpr rhs_full = normalize(compose(folded_t, atom_expr(AzAtom{g_bang})));
      rep.residual = lhs_full - rhs_full;
      rep.chain.push_back("re-absorb T(" + to_string(g_bang) + " -> " + g.to_string() + ") = " + folded_t.to_string() +
                          ": residual " + rep.residual.to_string());
    }
    if (rep.residual.is_zero())
      rep.first_residual = first_word(elliptic_residual);
    else
      rep.first_residual = first_word(rep.residual);
  } catch (const std::exception& ex) {
    rep.error = ex.what();
  }
  return rep;
}

} // namespace mpendo
