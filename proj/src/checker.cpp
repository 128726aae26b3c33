#include "sylres/checker.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "sylres/errors.hpp"

namespace sylres {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::trivial_strong: return "trivial-strong";
    case CheckStatus::strong: return "strong";
    case CheckStatus::weak_only: return "weak-only";
    case CheckStatus::fails: return "fails";
    case CheckStatus::capped: return "capped";
  }
  return "?";
}

namespace {

struct ColumnSet {
  DecompositionInstance inst;  // columns, degrees, provenance; target unset
  std::vector<bool> linear;    // column came from a linear lambda
  std::vector<std::pair<int, int>> linear_origin;  // first linear origin
  size_t subgroup_class_count = 0;
};

// induced-character columns for all Q <= P of the given index, merged
ColumnSet build_columns(const PermGroup& p_grp, const CharacterTable& tab_p,
                        u64 index) {
  ColumnSet cs;
  cs.inst.row_degrees = tab_p.degrees;
  auto recs = subgroups_of_index(p_grp, index);
  cs.subgroup_class_count = recs.size();
  std::map<IntVec, size_t> seen;
  for (size_t qi = 0; qi < recs.size(); ++qi) {
    const PermGroup& q = recs[qi].subgroup;
    CharacterTable tab_q = character_table(q);
    for (size_t li = 0; li < tab_q.irr.size(); ++li) {
      ClassFunction ind = induce(tab_q.irr[li], q, p_grp);
      IntVec col = decompose(ind, tab_p);
      bool lin = tab_q.degrees[li] == 1;
      auto it = seen.find(col);
      if (it == seen.end()) {
        seen.emplace(col, cs.inst.columns.size());
        cs.inst.columns.push_back(col);
        cs.inst.provenance.push_back({{int(qi), int(li)}});
        cs.linear.push_back(lin);
        cs.linear_origin.emplace_back(lin ? int(qi) : -1,
                                      lin ? int(li) : -1);
      } else {
        cs.inst.provenance[it->second].push_back({int(qi), int(li)});
        if (lin && !cs.linear[it->second]) {
          cs.linear[it->second] = true;
          cs.linear_origin[it->second] = {int(qi), int(li)};
        }
      }
    }
  }
  return cs;
}

// re-solve with linear-lambda columns first; report the first linear
// column carrying a positive coefficient, if any
std::optional<LinearWitness> extract_linear_witness(const ColumnSet& cs,
                                                    const IntVec& target) {
  std::vector<size_t> order;
  for (size_t c = 0; c < cs.inst.columns.size(); ++c)
    if (cs.linear[c]) order.push_back(c);
  size_t linear_count = order.size();
  for (size_t c = 0; c < cs.inst.columns.size(); ++c)
    if (!cs.linear[c]) order.push_back(c);

  DecompositionInstance re;
  re.row_degrees = cs.inst.row_degrees;
  re.target = target;
  for (size_t c : order) {
    re.columns.push_back(cs.inst.columns[c]);
    re.provenance.push_back(cs.inst.provenance[c]);
  }
  SolveVerdict v = strong_solve(re);
  if (v.status != SolveStatus::feasible) return std::nullopt;
  for (size_t i = 0; i < linear_count; ++i) {
    if (v.witness[i] <= 0) continue;
    size_t orig = order[i];
    LinearWitness lw;
    lw.coefficient = v.witness[i];
    lw.q_class_index = cs.linear_origin[orig].first;
    lw.lambda_index = cs.linear_origin[orig].second;
    return lw;
  }
  return std::nullopt;
}

struct GroupContext {
  PermGroup g;
  u64 p = 2;
  CharacterTable tab_g;
  PermGroup p_grp;  // the p-subgroup checked against (Sylow by default)
  CharacterTable tab_p;
  ClassFusion fusion;
  u64 sylow_order = 1;  // |G|_p
  std::map<u64, ColumnSet> columns_by_index;  // |P':Q| -> columns
};

CheckVerdict check_one(GroupContext& ctx, int chi_index, CheckMode mode,
                       const std::string& name) {
  auto start = std::chrono::steady_clock::now();
  CheckVerdict v;
  v.group_name = name;
  v.p = ctx.p;
  v.char_index = chi_index;
  v.degree = ctx.tab_g.degrees[size_t(chi_index)];
  v.degree_p_part = p_part(v.degree, ctx.p);

  u64 p_order = ctx.tab_p.cls->order;
  // admissible subgroups Q <= P' have |G:Q|_p = chi(1)_p, i.e.
  // |Q| = |G|_p / chi(1)_p
  if (ctx.sylow_order % v.degree_p_part != 0 ||
      ctx.sylow_order / v.degree_p_part > p_order)
    throw PreconditionViolated(
        "chi(1)_p below the index of the checked p-subgroup");
  u64 q_order = ctx.sylow_order / v.degree_p_part;
  u64 index = p_order / q_order;  // |P':Q|
  v.target_index = index;

  ClassFunction chi_p =
      restrict_to(ctx.tab_g.irr[size_t(chi_index)], ctx.tab_p.cls, ctx.fusion);
  IntVec target = decompose(chi_p, ctx.tab_p);

  try {
    if (index == 1) {
      // Q = P': chi_P decomposes into Irr(P') directly
      v.status = CheckStatus::trivial_strong;
      v.strong.status = SolveStatus::feasible;
      v.strong.witness = target;
      v.weak = v.strong;
      v.subgroup_class_count = 1;
      v.column_count = ctx.tab_p.irr.size();
      for (size_t i = 0; i < ctx.tab_p.irr.size(); ++i)
        v.column_provenance.push_back({{0, int(i)}});
      v.note = "index 1: multiplicities in Irr(P) are the witness";
    } else {
      auto it = ctx.columns_by_index.find(index);
      if (it == ctx.columns_by_index.end())
        it = ctx.columns_by_index
                 .emplace(index, build_columns(ctx.p_grp, ctx.tab_p, index))
                 .first;
      ColumnSet& cs = it->second;
      v.subgroup_class_count = cs.subgroup_class_count;
      v.column_count = cs.inst.columns.size();
      v.column_provenance = cs.inst.provenance;
      DecompositionInstance inst = cs.inst;
      inst.target = target;

      if (mode != CheckMode::strong) v.weak = weak_solve(inst);
      if (mode != CheckMode::weak) v.strong = strong_solve(inst);

      if (mode != CheckMode::weak &&
          v.strong.status == SolveStatus::capped) {
        v.status = CheckStatus::capped;
        v.note = v.strong.certificate;
      } else if (v.strong.status == SolveStatus::feasible) {
        if (mode == CheckMode::both &&
            v.weak.status != SolveStatus::feasible)
          throw Error("strong feasible but weak infeasible");
        v.status = CheckStatus::strong;
        v.linear_witness = extract_linear_witness(cs, target);
      } else if (mode != CheckMode::strong &&
                 v.weak.status == SolveStatus::feasible) {
        v.status = CheckStatus::weak_only;
      } else {
        v.status = CheckStatus::fails;
      }
    }
  } catch (const CapExceeded& e) {
    v.status = CheckStatus::capped;
    v.note = e.what();
  } catch (const NodeBudgetExceeded& e) {
    v.status = CheckStatus::capped;
    v.note = e.what();
  }

  v.seconds = std::chrono::duration<double>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return v;
}

GroupContext make_context(const PermGroup& g, u64 p,
                          const PermGroup* p_sub) {
  GroupContext ctx;
  ctx.g = g;
  ctx.p = p;
  ctx.tab_g = character_table(g);
  ctx.sylow_order = p_part(g.order_u64(caps().element_cap), p);
  ctx.p_grp = p_sub ? *p_sub : sylow_subgroup(g, p);
  u64 po = ctx.p_grp.order_u64(caps().element_cap);
  if (p_part(po, p) != po) throw NotAPGroup("checked subgroup not a p-group");
  if (!ctx.p_grp.is_subgroup_of(g))
    throw NotASubgroup("checked subgroup not inside the group");
  ctx.tab_p = character_table(ctx.p_grp);
  ctx.fusion = class_fusion(ctx.tab_p.cls, ctx.tab_g.cls);
  return ctx;
}

}  // namespace

std::vector<CheckVerdict> check_group(const PermGroup& g, u64 p,
                                      CheckMode mode,
                                      const std::string& name) {
  if (!is_prime(p)) throw PreconditionViolated("p must be prime");
  if (g.order() % (unsigned long)p != 0) return {};
  GroupContext ctx = make_context(g, p, nullptr);
  std::vector<CheckVerdict> out;
  for (size_t i = 0; i < ctx.tab_g.irr.size(); ++i)
    out.push_back(check_one(ctx, int(i), mode, name));
  return out;
}

CheckVerdict check_character(const PermGroup& g, u64 p, int chi_index,
                             CheckMode mode) {
  GroupContext ctx = make_context(g, p, nullptr);
  return check_one(ctx, chi_index, mode, "");
}

CheckVerdict check_p_subgroup(const PermGroup& g, u64 p,
                              const PermGroup& p_sub, int chi_index,
                              CheckMode mode) {
  GroupContext ctx = make_context(g, p, &p_sub);
  return check_one(ctx, chi_index, mode, "");
}

std::vector<std::pair<int, bool>> brauer_nesbitt_check(const PermGroup& g,
                                                       u64 p) {
  CharacterTable t = character_table(g);
  u64 gp = p_part(t.cls->order, p);
  std::vector<std::pair<int, bool>> out;
  for (size_t i = 0; i < t.irr.size(); ++i) {
    if (p_part(t.degrees[i], p) != gp) continue;
    bool ok = true;
    for (size_t c = 0; c < t.cls->reps.size(); ++c)
      if (t.cls->rep_orders[c] % p == 0 && !t.irr[i].values[c].is_zero())
        ok = false;
    out.emplace_back(int(i), ok);
  }
  return out;
}

std::vector<WildeViolation> wilde_vanishing_check(const PermGroup& g, u64 p) {
  CharacterTable t = character_table(g);
  u64 gp = p_part(t.cls->order, p);
  std::vector<WildeViolation> out;
  for (size_t c = 0; c < t.cls->reps.size(); ++c) {
    u64 o = t.cls->rep_orders[c];
    if (o == 1 || p_part(o, p) != o) continue;  // p-elements only
    u64 bound = gp / o;  // |G : <g>|_p
    for (size_t i = 0; i < t.irr.size(); ++i)
      if (p_part(t.degrees[i], p) > bound && !t.irr[i].values[c].is_zero())
        out.push_back({int(c), int(i)});
  }
  return out;
}

std::vector<CyclicSylowResult> cyclic_sylow_check(const PermGroup& g,
                                                  u64 p) {
  CharacterTable t = character_table(g);
  PermGroup p_grp = sylow_subgroup(g, p);
  auto cdp = p_grp.classes();
  u64 po = cdp->order;
  if (cdp->exponent() != po)
    throw PreconditionViolated("Sylow p-subgroup is not cyclic");
  // a generator of the cyclic Sylow subgroup
  Permutation gen = Permutation::identity(g.degree());
  for (const auto& x : p_grp.elements(caps().element_cap))
    if (x.order() == po) {
      gen = x;
      break;
    }
  ClassFusion fus_p = class_fusion(cdp, t.cls);

  std::vector<CyclicSylowResult> out;
  for (size_t i = 0; i < t.irr.size(); ++i) {
    u64 d = p_part(t.degrees[i], p);
    PermGroup q = (d >= po) ? PermGroup::trivial(g.degree())
                            : subgroup(g, {gen.power((long long)d)});
    CyclicSylowResult r{int(i), true, true};
    // (i) chi vanishes on P \ Q
    for (const auto& x : p_grp.elements(caps().element_cap)) {
      if (q.contains(x)) continue;
      if (!t.irr[i].values[size_t(t.cls->class_of(x))].is_zero())
        r.vanishes_outside_q = false;
    }
    // (ii) chi_P = (1/|P:Q|) (chi_Q)^P
    auto cdq = q.classes();
    ClassFunction chi_q =
        restrict_to(t.irr[i], cdq, class_fusion(cdq, t.cls));
    ClassFunction lhs = restrict_to(t.irr[i], cdp, fus_p);
    ClassFunction rhs =
        induce(chi_q, q, p_grp) * mpq_class(1, long(po / q.order_u64(po)));
    r.induction_identity = lhs == rhs;
    out.push_back(r);
  }
  return out;
}

FilterReport mincounter_filter(const PermGroup& g, u64 p, int chi_index) {
  FilterReport rep;
  rep.order = g.order();
  PermGroup z = center(g);
  rep.center_index = g.order() / z.order();
  CharacterTable t = character_table(g);
  const ClassFunction& chi = t.irr[size_t(chi_index)];

  // (d) kernel of chi trivial: chi(g) = chi(1) only on the identity class
  rep.chi_faithful = true;
  for (size_t c = 1; c < t.cls->reps.size(); ++c)
    if (chi.values[c] == chi.values[0]) rep.chi_faithful = false;

  // (a) O^{p'}(G) = G
  rep.equals_o_upper_pprime = o_upper_pprime(g, p).order() == g.order();

  try {
    auto normals = normal_subgroups(g);
    // (b) no direct decomposition G = N1 x N2 with both proper
    rep.directly_indecomposable = true;
    for (size_t i = 0; i < normals.size(); ++i)
      for (size_t j = i + 1; j < normals.size(); ++j) {
        const auto& n1 = normals[i];
        const auto& n2 = normals[j];
        if (n1.order() == 1 || n2.order() == 1) continue;
        if (n1.order() * n2.order() != g.order()) continue;
        if (intersection(n1, n2).order() == 1)
          rep.directly_indecomposable = false;
      }
    // (e) abelian normal subgroups are cyclic and central
    rep.abelian_normals_cyclic_central = true;
    for (const auto& n : normals) {
      if (!n.is_abelian()) continue;
      bool cyclic = n.classes()->exponent() == n.order_u64(caps().element_cap);
      bool central = n.is_subgroup_of(z) || n.order() == 1;
      if (!(cyclic && central)) rep.abelian_normals_cyclic_central = false;
    }
    // (f) O_{p'}(G) <= Z(G) and <= G'
    PermGroup opp = o_lower(g, p, Core::p_prime_core);
    rep.o_pprime_in_center_and_derived =
        opp.is_subgroup_of(z) && opp.is_subgroup_of(derived_subgroup(g));
    rep.evaluated = true;
  } catch (const ClassCountExceeded& e) {
    rep.evaluated = false;
    rep.note = e.what();
  }
  return rep;
}

bool quotient_metamorphic_check(const PermGroup& g, const PermGroup& n,
                                u64 p) {
  auto act = coset_action(g, n);
  if (act.image.order() == 1) return true;
  auto verdicts = check_group(act.image, p, CheckMode::both, "quotient");
  for (const auto& v : verdicts)
    if (v.status != CheckStatus::strong &&
        v.status != CheckStatus::trivial_strong)
      return false;
  return true;
}

}  // namespace sylres
