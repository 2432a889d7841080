#include <cctype>

#include "mpendo/opcalc.hpp"

namespace mpendo {

namespace {

struct BareGL {
  Parts parts;
};

using GroupSpec = std::variant<MetaType, EndoObj, BareGL>;

struct PendingTwist {
  SplitSeq s;
  std::size_t position;
};

using Slot = std::variant<Atom, PendingTwist>;

class Parser {
public:
  explicit Parser(const std::string& text)
  {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        s_.push_back(text[i]);
        pos_.push_back(i);
      }
    end_pos_ = text.size();
  }

  OpExpr parse_expr()
  {
    if (s_ == "0")
      return {};
    OpExpr out;
    std::int64_t sign = 1;
    if (accept("-"))
      sign = -1;
    else
      accept("+");
    while (true) {
      out += parse_term() * sign;
      if (at_end())
        break;
      if (accept("+"))
        sign = 1;
      else if (accept("-"))
        sign = -1;
      else
        fail("expected '+', '-' or '.'");
    }
    type_check(out);
    return out;
  }

private:
  std::string s_;
  std::vector<std::size_t> pos_;
  std::size_t end_pos_ = 0;
  std::size_t i_ = 0;

  bool at_end() const { return i_ >= s_.size(); }
  std::size_t here() const { return i_ < pos_.size() ? pos_[i_] : end_pos_; }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, here()); }

  bool looking_at(const char* lit) const { return s_.compare(i_, std::char_traits<char>::length(lit), lit) == 0; }

  bool accept(const char* lit)
  {
    if (!looking_at(lit))
      return false;
    i_ += std::char_traits<char>::length(lit);
    return true;
  }

  void expect(const char* lit)
  {
    if (!accept(lit))
      fail(std::string("expected '") + lit + "'");
  }

  bool digit_next() const { return !at_end() && std::isdigit(static_cast<unsigned char>(s_[i_])); }

  long long number()
  {
    if (!digit_next())
      fail("expected a number");
    long long v = 0;
    while (digit_next()) {
      v = v * 10 + (s_[i_] - '0');
      if (v > 1000000)
        fail("number too large");
      ++i_;
    }
    return v;
  }

  int int_arg()
  {
    if (accept("(")) {
      int v = static_cast<int>(number());
      expect(")");
      return v;
    }
    return static_cast<int>(number());
  }

  Parts parts_arg()
  {
    Parts parts;
    if (accept("(")) {
      do
        parts.push_back(static_cast<int>(number()));
      while (accept(","));
      expect(")");
    } else {
      parts.push_back(static_cast<int>(number()));
    }
    for (int p : parts)
      if (p <= 0)
        fail("GL parts must be positive");
    return parts;
  }

  LeviSO so_arg(const Parts& gl)
  {
    const std::size_t at = here();
    const int a = int_arg();
    if (a % 2 == 0)
      throw SyntaxError("SO(a) needs odd a", at);
    return LeviSO(gl, (a - 1) / 2);
  }

  OpExpr parse_term()
  {
    std::int64_t coefficient = 1;
    if (digit_next()) {
      coefficient = number();
      expect("*");
    }
    return parse_word() * coefficient;
  }

  OpExpr parse_word()
  {
    std::vector<Slot> slots;
    do {
      if (accept("Id"))
        continue;
      slots.push_back(parse_atom());
    } while (accept("."));
    Word w = resolve_twists(slots);
    word_type(w);
    return OpExpr::word(std::move(w));
  }

  SplitSeq splitseq()
  {
    SplitSeq s;
    expect("(");
    if (accept(")"))
      return s;
    do {
      expect("(");
      SplitPart part;
      part.p = static_cast<int>(number());
      expect(",");
      part.pp = static_cast<int>(number());
      expect(")");
      s.push_back(part);
    } while (accept(","));
    expect(")");
    return s;
  }

  GroupSpec group()
  {
    const std::size_t start = here();
    Parts gl;
    std::optional<int> msp;
    std::vector<LeviSO> sos;
    do {
      if (accept("MSp")) {
        if (msp || !sos.empty())
          fail("misplaced MSp factor");
        msp = int_arg();
      } else if (accept("GL")) {
        if (msp || !sos.empty())
          fail("GL factor after the classical factor");
        auto p = parts_arg();
        gl.insert(gl.end(), p.begin(), p.end());
      } else if (accept("SO")) {
        if (msp)
          fail("SO factor in a metaplectic group");
        sos.push_back(so_arg({}));
      } else if (accept("(")) {
        Parts inner;
        while (accept("GL")) {
          auto p = parts_arg();
          inner.insert(inner.end(), p.begin(), p.end());
          expect("x");
        }
        expect("SO");
        sos.push_back(so_arg(inner));
        expect(")");
      } else {
        fail("expected a group");
      }
    } while (accept("x"));
    if (msp)
      return MetaType{gl, *msp};
    if (sos.empty())
      return BareGL{gl};
    if (sos.size() != 2)
      throw SyntaxError("an endoscopic group needs exactly two SO factors", start);
    return EndoObj{gl, sos[0], sos[1]};
  }

  static GroupObj concrete(const GroupSpec& g, std::size_t at)
  {
    if (const auto* m = std::get_if<MetaType>(&g))
      return *m;
    if (const auto* e = std::get_if<EndoObj>(&g))
      return *e;
    throw SyntaxError("a bare GL group needs an enclosing I[] or R[] parent", at);
  }

  static GroupObj levi_of(const GroupSpec& levi, const GroupObj& parent, std::size_t at)
  {
    if (const auto* bare = std::get_if<BareGL>(&levi)) {
      const auto* p = std::get_if<MetaType>(&parent);
      if (!p)
        throw TypeError("bare GL Levi of the endoscopic group " + to_string(parent));
      const int tail = p->rank() - sum_parts(bare->parts);
      if (tail < 0)
        throw TypeError("GL parts exceed the rank of " + p->to_string());
      return MetaType{bare->parts, tail};
    }
    return concrete(levi, at);
  }

  Slot parse_atom()
  {
    const std::size_t at = here();
    const std::size_t start = i_;
    auto text_so_far = [&] { return s_.substr(start, i_ - start); };
    if (accept("I[")) {
      GroupObj parent = concrete(group(), at);
      if (looking_at("->")) {
        skip_to_close();
        throw TypeError("Ind domain written backwards: " + text_so_far());
      }
      expect("<-");
      GroupSpec levi = group();
      expect("]");
      return make_ind(parent, levi_of(levi, parent, at));
    }
    if (accept("R[")) {
      const std::size_t parent_at = here();
      GroupSpec first = group();
      if (looking_at("<-")) {
        skip_to_close();
        throw TypeError("Res codomain written backwards: " + text_so_far());
      }
      GroupObj parent = concrete(first, parent_at);
      expect("->");
      GroupSpec levi = group();
      expect("]");
      return make_res(parent, levi_of(levi, parent, at));
    }
    if (accept("T[")) {
      GroupObj src = concrete(group(), at);
      expect("->");
      GroupObj dst = concrete(group(), at);
      std::optional<SplitSeq> split;
      if (accept(";"))
        split = splitseq();
      expect("]");
      const auto* e = std::get_if<EndoObj>(&src);
      const auto* m = std::get_if<MetaType>(&dst);
      if (!e || !m)
        throw TypeError("transfer must go from an endoscopic group to a metaplectic one: " + text_so_far());
      if (split)
        return make_transfer(*e, *m, *split);
      const auto splits = transfer_splits(*e, *m);
      if (splits.empty())
        throw TypeError("no transfer " + e->to_string() + " -> " + m->to_string());
      if (splits.size() > 1)
        throw TypeError("transfer " + e->to_string() + " -> " + m->to_string() + " needs an explicit split");
      return make_transfer(*e, *m, splits.front());
    }
    if (accept("D[")) {
      GroupObj g = concrete(group(), at);
      expect("]");
      return make_az(g);
    }
    if (accept("Z[")) {
      if (looking_at("((") || looking_at("()")) {
        SplitSeq s = splitseq();
        expect("]");
        return PendingTwist{s, at};
      }
      GroupObj g = concrete(group(), at);
      expect("]");
      const auto* e = std::get_if<EndoObj>(&g);
      if (!e)
        throw TypeError("z_s acts on an endoscopic group, not " + to_string(g));
      return make_twist(*e);
    }
    fail("expected an atom (Id, I[, R[, T[, Z[ or D[)");
  }

  void skip_to_close()
  {
    while (!at_end() && s_[i_] != ']')
      ++i_;
    accept("]");
  }

  static Word resolve_twists(const std::vector<Slot>& slots)
  {
    std::vector<std::optional<EndoObj>> obj(slots.size());
    auto known = [&](std::size_t j) -> std::optional<GroupObj> {
      if (std::holds_alternative<Atom>(slots[j]))
        return std::nullopt;
      if (obj[j])
        return GroupObj{*obj[j]};
      return std::nullopt;
    };
    auto neighbour = [&](std::size_t j, bool right) -> std::optional<GroupObj> {
      if (right) {
        if (j + 1 >= slots.size())
          return std::nullopt;
        if (const auto* a = std::get_if<Atom>(&slots[j + 1]))
          return codomain_of(*a);
        return known(j + 1);
      }
      if (j == 0)
        return std::nullopt;
      if (const auto* a = std::get_if<Atom>(&slots[j - 1]))
        return domain_of(*a);
      return known(j - 1);
    };
    auto assign = [&](std::size_t j, const GroupObj& g) {
      const auto& pending = std::get<PendingTwist>(slots[j]);
      const auto* e = std::get_if<EndoObj>(&g);
      if (!e)
        throw TypeError("Z" + to_string(pending.s) + " next to the metaplectic group " + to_string(g));
      if (e->primed.gl_parts() != primed_parts(pending.s) ||
          e->doubleprimed.gl_parts() != doubleprimed_parts(pending.s))
        throw TypeError("Z" + to_string(pending.s) + " does not match " + e->to_string());
      obj[j] = *e;
    };
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t j = 0; j < slots.size(); ++j) {
        if (!std::holds_alternative<PendingTwist>(slots[j]) || obj[j])
          continue;
        if (auto g = neighbour(j, true)) {
          assign(j, *g);
          progress = true;
        } else if (auto g2 = neighbour(j, false)) {
          assign(j, *g2);
          progress = true;
        }
      }
      if (!progress)
        for (std::size_t j = slots.size(); j-- > 0;)
          if (std::holds_alternative<PendingTwist>(slots[j]) && !obj[j]) {
            const auto& s = std::get<PendingTwist>(slots[j]).s;
            obj[j] = EndoObj{{}, LeviSO(primed_parts(s), 0), LeviSO(doubleprimed_parts(s), 0)};
            progress = true;
            break;
          }
    }
    Word w;
    for (std::size_t j = 0; j < slots.size(); ++j) {
      if (const auto* a = std::get_if<Atom>(&slots[j]))
        w.push_back(*a);
      else
        w.push_back(make_twist(*obj[j]));
    }
    return w;
  }
};

} // namespace

OpExpr parse(const std::string& text)
{
  Parser p(text);
  return p.parse_expr();
}

} // namespace mpendo
