"""Group actions on covers: covering group, fibre action, quotients, audits.

The covering group is the kernel of a group's action on the fibre set; it is
computed with the extended-domain trick (append one point per fibre, take the
pointwise stabilizer of the appended points).  Quotients by subgroups of the
covering group inherit the cover structure with fibre size divided and mu
multiplied by the subgroup order, which quotient_cover re-verifies rather
than assumes.  The audit functions turn the assertable group-theoretic
identities (arc orbits vs rank, displacement counts, fixed subgraphs of
involutions, rank-3 subdegree relations) into pass/fail reports on concrete
instances.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .autgroup import automorphism_generators
from .graphcore import CoverGraph, GraphStructureError, verify_cover
from .perms import PermGroup, Permutation


# -- basic actions -----------------------------------------------------------

def extend_to_fibres(g: CoverGraph, perm: Permutation) -> Permutation:
    """Action on vertices followed by the induced action on fibre points.

    The extended domain is 0..v-1 plus one point v+i per fibre i.
    """
    img = list(perm.img)
    for i, f in enumerate(g.fibres):
        img.append(g.v + g.fibre_of[perm[f[0]]])
    return Permutation(img)


def fibre_image(g: CoverGraph, perm: Permutation) -> Permutation:
    """The permutation induced on the fibre set."""
    return Permutation(tuple(g.fibre_of[perm[f[0]]] for f in g.fibres))


def is_cover_automorphism(g: CoverGraph, perm) -> bool:
    p = perm if isinstance(perm, Permutation) else Permutation(perm)
    if p.degree != g.v:
        return False
    return all(g.has_edge(p[u], p[w]) for u, w in g.edges)


def covering_group(g: CoverGraph, group: PermGroup | None = None):
    """Kernel of the action on fibres, with regularity/abelianity report.

    With group = None the fibre-preserving automorphisms are searched
    directly (vertex colouring by fibre), which is cheap and does not require
    the full automorphism group.
    Returns (K: PermGroup, info: dict).
    """
    if group is None:
        gens = automorphism_generators(g.adj, colors=list(g.fibre_of))
        kernel = PermGroup(gens, g.v)
    else:
        extended = [extend_to_fibres(g, p) for p in group.generators]
        chain = PermGroup(extended, g.v + g.n,
                          base_hint=tuple(range(g.v, g.v + g.n)))
        kept = chain.stabilizer_prefix_gens(g.n)
        kernel = PermGroup([Permutation(p.img[:g.v]) for p in kept], g.v)

    order = kernel.order()
    abelian = kernel.is_abelian()
    regular = order == g.r and all(
        kernel.orbit(f[0]) == set(f) for f in g.fibres)
    info = {"order": order, "is_abelian": abelian,
            "regular_on_fibres": regular,
            "abelian_cover": abelian and regular}
    return kernel, info


@dataclass
class FibreActionReport:
    group: PermGroup
    transitive: bool
    rank: int | None
    subdegrees: tuple[int, ...] | None


def require_automorphisms(g: CoverGraph, group: PermGroup) -> None:
    for p in group.generators:
        if not is_cover_automorphism(g, p):
            raise ValueError("group generator is not a graph automorphism")


def fibre_action(g: CoverGraph, group: PermGroup) -> FibreActionReport:
    """Induced group on the fibre set with its transitivity, rank, subdegrees."""
    require_automorphisms(g, group)
    image = PermGroup([fibre_image(g, p) for p in group.generators], g.n)
    transitive = image.is_transitive()
    if not transitive:
        return FibreActionReport(image, False, None, None)
    stab = image.point_stabilizer(0)
    orbs = stab.orbits()
    sizes = tuple(sorted(len(o) for o in orbs))
    return FibreActionReport(image, True, len(orbs), sizes)


def arc_orbit_count(g: CoverGraph, group: PermGroup) -> dict:
    """Number of orbits on ordered adjacent pairs, plus hypothesis checks.

    The rank identity (arc orbits = rank on fibres minus one) needs the group
    to be vertex-transitive and to contain the covering group with order
    exactly r; both are checked and reported, the count is returned anyway.
    """
    require_automorphisms(g, group)
    arcs = []
    for u, w in g.edges:
        arcs.append((u, w))
        arcs.append((w, u))
    index = {a: i for i, a in enumerate(arcs)}
    seen = [False] * len(arcs)
    count = 0
    for start in range(len(arcs)):
        if seen[start]:
            continue
        count += 1
        queue = [arcs[start]]
        seen[start] = True
        while queue:
            u, w = queue.pop()
            for p in group.generators:
                im = (p[u], p[w])
                i = index[im]
                if not seen[i]:
                    seen[i] = True
                    queue.append(im)

    vertex_transitive = group.is_transitive()
    kernel, kinfo = covering_group(g, group)
    hypotheses_met = vertex_transitive and kinfo["order"] == g.r
    return {"arc_orbits": count,
            "vertex_transitive": vertex_transitive,
            "covering_group_order": kinfo["order"],
            "rank_identity_applicable": hypotheses_met}


# -- quotient covers -----------------------------------------------------------

class QuotientError(ValueError):
    pass


def quotient_cover(g: CoverGraph, sub: PermGroup) -> CoverGraph:
    """Quotient by a subgroup of the covering group, re-verified.

    Requires every generator to fix each fibre setwise and 1 <= |U| < r.
    The result is checked to be an (n, r/|U|, mu |U|)-cover; a failure raises,
    since it would contradict the quotient-closure property for valid input.
    """
    for p in sub.generators:
        for i, f in enumerate(g.fibres):
            if any(g.fibre_of[p[x]] != i for x in f):
                raise QuotientError("subgroup is not fibre-fixing")
    u_order = sub.order()
    if u_order >= g.r:
        raise QuotientError(f"|U| = {u_order} must be smaller than r = {g.r}")
    if g.r % u_order != 0:
        raise QuotientError(f"|U| = {u_order} does not divide r = {g.r}")

    orbits = sub.orbits()
    if any(len(o) != u_order for o in orbits):
        raise QuotientError("subgroup does not act semiregularly")
    orbit_of = {}
    for idx, orb in enumerate(sorted(orbits, key=lambda o: o[0])):
        for x in orb:
            orbit_of[x] = idx
    edges = {(min(orbit_of[u], orbit_of[w]), max(orbit_of[u], orbit_of[w]))
             for u, w in g.edges if orbit_of[u] != orbit_of[w]}
    fibres = [sorted({orbit_of[x] for x in f}) for f in g.fibres]
    quot = CoverGraph(fibres, edges)

    base = verify_cover(g)
    if base.is_cover:
        rep = verify_cover(quot)
        if not (rep.is_cover and (rep.n, rep.r) == (g.n, g.r // u_order)
                and rep.mu == base.mu * u_order):
            raise QuotientError(
                f"quotient is not an ({g.n}, {g.r // u_order}, "
                f"{base.mu * u_order})-cover")
    return quot


def quotient_by_orbits(g: CoverGraph, perms) -> CoverGraph:
    """Convenience wrapper accepting raw image tuples."""
    return quotient_cover(g, PermGroup([Permutation(p) for p in perms], g.v))


# -- displacement and involution audits ---------------------------------------

def displacement_profile(g: CoverGraph, x) -> tuple[int, int, int, int]:
    """Counts of vertices moved to distance 0, 1, 2, 3 by an automorphism.

    Distances use the cover metric: same fibre means 0 or 3, other fibres 1
    when adjacent, else 2.  g must be a verified cover for this to be valid.
    """
    p = x if isinstance(x, Permutation) else Permutation(x)
    if not is_cover_automorphism(g, p):
        raise ValueError("permutation is not an automorphism of the cover")
    alpha = [0, 0, 0, 0]
    for u in range(g.v):
        w = p[u]
        if w == u:
            alpha[0] += 1
        elif g.fibre_of[w] == g.fibre_of[u]:
            alpha[3] += 1
        elif g.has_edge(u, w):
            alpha[1] += 1
        else:
            alpha[2] += 1
    return tuple(alpha)


@dataclass
class AuditItem:
    lemma: str
    item: str
    status: str  # 'pass' | 'fail' | 'inapplicable'
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"lemma": self.lemma, "item": self.item,
                "status": self.status, "witness": self.witness}


def involution_audit(g: CoverGraph, x) -> list[AuditItem]:
    """Fixed-subgraph identities for an involution with Fix != empty.

    Checks: the fixed subgraph is regular of degree l-1 on l*f vertices,
    the displacement identities alpha_3 = (r-f) l and alpha_1+alpha_2 =
    (n-l) r, plus the case distinctions that are assertable on a concrete
    cover (l = 1: fixed subgraph is one fibre; f = 1, l > 1: it is a clique;
    outside vertices see at most l fixed vertices).  Inequality chains that
    presuppose lambda >= mu are marked inapplicable otherwise.
    """
    p = x if isinstance(x, Permutation) else Permutation(x)
    lemma = "involution-fixed-subgraph"
    out: list[AuditItem] = []
    if not is_cover_automorphism(g, p):
        raise ValueError("permutation is not an automorphism of the cover")
    if p.order() != 2:
        raise ValueError("permutation is not an involution")

    fixed = [u for u in range(g.v) if p[u] == u]
    if not fixed:
        return [AuditItem(lemma, "applicability", "inapplicable",
                          {"reason": "fixed-point-free involution"})]
    rep = verify_cover(g)
    if not rep.is_cover:
        raise GraphStructureError("audit needs a valid cover")
    n, r, mu, lam = rep.n, rep.r, rep.mu, rep.lam

    fixed_set = set(fixed)
    fixed_fibres = [i for i, f in enumerate(g.fibres)
                    if all(g.fibre_of[p[z]] == i for z in f)]
    l = len(fixed_fibres)
    per_fibre = [len(fixed_set & set(g.fibres[i])) for i in fixed_fibres]
    f_counts = sorted(set(per_fibre))
    if len(f_counts) != 1:
        out.append(AuditItem(lemma, "constant-f", "fail",
                             {"per_fibre": per_fibre}))
        return out
    f = f_counts[0]
    out.append(AuditItem(lemma, "constant-f", "pass", {"f": f, "l": l}))

    ok = len(fixed) == l * f
    out.append(AuditItem(lemma, "size-lf", "pass" if ok else "fail",
                         {"fixed": len(fixed), "l*f": l * f}))
    degs = sorted({sum(1 for w in fixed if g.has_edge(u, w)) for u in fixed})
    ok = degs == [l - 1]
    out.append(AuditItem(lemma, "regular-degree-l-1",
                         "pass" if ok else "fail",
                         {"degrees": degs, "expected": l - 1}))

    alpha = displacement_profile(g, p)
    ok = alpha[3] == (r - f) * l
    out.append(AuditItem(lemma, "alpha3", "pass" if ok else "fail",
                         {"alpha3": alpha[3], "(r-f)l": (r - f) * l}))
    ok = alpha[1] + alpha[2] == (n - l) * r
    out.append(AuditItem(lemma, "alpha1+alpha2", "pass" if ok else "fail",
                         {"alpha1+alpha2": alpha[1] + alpha[2],
                          "(n-l)r": (n - l) * r}))

    # vertices outside see at most l fixed vertices
    worst = 0
    for u in range(g.v):
        if u not in fixed_set:
            worst = max(worst, sum(1 for w in fixed if g.has_edge(u, w)))
    out.append(AuditItem(lemma, "outside-neighbours<=l",
                         "pass" if worst <= l else "fail",
                         {"max_outside": worst, "l": l}))

    from .params import derive_params
    pp = derive_params(n, r, mu)
    t_int = -int(pp.tau) if pp.tau.is_integer else None

    if l == 1:
        fibre = set(g.fibres[fixed_fibres[0]])
        ok = alpha[3] == 0 and fixed_set <= fibre
        out.append(AuditItem(lemma, "case-l=1", "pass" if ok else "fail",
                             {"alpha3": alpha[3]}))
        if t_int is not None:
            out.append(AuditItem(lemma, "case-l=1-t-even",
                                 "pass" if t_int % 2 == 0 else "fail",
                                 {"t": t_int}))
        else:
            out.append(AuditItem(lemma, "case-l=1-t-even", "inapplicable",
                                 {"reason": "tau is not an integer"}))
    if f == 1 and l > 1:
        clique = all(g.has_edge(u, w) for i, u in enumerate(fixed)
                     for w in fixed[i + 1:])
        out.append(AuditItem(lemma, "case-f=1-clique",
                             "pass" if clique else "fail", {"l": l}))
        if t_int is not None and t_int >= 2:
            bound = Fraction(r * mu, t_int - 1)
            out.append(AuditItem(lemma, "case-f=1-hoffman",
                                 "pass" if l <= bound else "fail",
                                 {"l": l, "r*mu/(t-1)": str(bound)}))
    if l > 1:
        if lam >= mu:
            xset = [u for u in range(g.v) if u not in fixed_set
                    and any(g.has_edge(u, w) for w in fixed)]
            lhs = Fraction(len(xset), n - l)
            middle = len(fixed)
            rhs = Fraction((lam - mu) * alpha[1], n - l) + r * mu
            chain_ok = (f <= lhs <= middle <= rhs <= r * lam)
            out.append(AuditItem(lemma, "case-l>1-chain",
                                 "pass" if chain_ok else "fail",
                                 {"f": f, "|X|/(n-l)": str(lhs),
                                  "|Omega|": middle, "bound": str(rhs),
                                  "r*lambda": r * lam}))
        else:
            out.append(AuditItem(lemma, "case-l>1-chain", "inapplicable",
                                 {"reason": "needs lambda >= mu"}))
    return out


# -- rank-3 subdegree identities ----------------------------------------------

def subdegree_identity_check(g: CoverGraph, group: PermGroup) -> dict:
    """Check the rank-3 relations k1(lam-lam1) = k2(lam-lam2) and the
    mu-companion k1(mu-mu1) = k2(mu-mu2) for every fixed companion vertex.

    Needs the induced fibre group to have rank 3 and the vertex stabilizer to
    have exactly two orbits on the neighbourhood; otherwise inapplicable.
    """
    require_automorphisms(g, group)
    fa = fibre_action(g, group)
    if not fa.transitive or fa.rank != 3:
        return {"applicable": False,
                "reason": f"fibre action rank is {fa.rank}, need 3"}
    rep = verify_cover(g)
    if not rep.is_cover:
        raise GraphStructureError("need a valid cover")
    lam, mu = rep.lam, rep.mu

    a = 0
    stab = group.point_stabilizer(a)
    nbrs = g.neighbours(a)
    orbit_sets = []
    seen: set[int] = set()
    for x in nbrs:
        if x in seen:
            continue
        orb = stab.orbit(x) & set(nbrs)
        orb_full = stab.orbit(x)
        if orb_full != orb:
            return {"applicable": False,
                    "reason": "stabilizer orbit leaves the neighbourhood"}
        seen |= orb
        orbit_sets.append(sorted(orb))
    if len(orbit_sets) != 2:
        return {"applicable": False,
                "reason": f"{len(orbit_sets)} stabilizer orbits on the "
                          "neighbourhood, need 2"}
    orbit_sets.sort(key=len)
    (x1, x2) = orbit_sets
    k1, k2 = len(x1), len(x2)

    def lam_inside(orb) -> int:
        vals = {sum(1 for w in orb if g.has_edge(x, w)) for x in orb}
        assert len(vals) == 1  # constant on a stabilizer orbit
        return vals.pop()

    lam1, lam2 = lam_inside(x1), lam_inside(x2)
    eq_lambda = k1 * (lam - lam1) == k2 * (lam - lam2)
    result = {"applicable": True, "k1": k1, "k2": k2,
              "lambda1": lam1, "lambda2": lam2,
              "eq_lambda_holds": eq_lambda, "mu_checks": []}

    # companion identity for each a* fixed by the stabilizer in F(a) - {a}
    home = [x for x in g.fibres[g.fibre_of[a]] if x != a]
    fixed_companions = [x for x in home
                        if all(s[x] == x for s in stab.generators)]
    for astar in fixed_companions:
        star_nbrs = g.neighbours(astar)
        star_orbits = []
        seen = set()
        for x in star_nbrs:
            if x in seen:
                continue
            orb = sorted(stab.orbit(x))
            seen |= set(orb)
            star_orbits.append(orb)
        sized = {}
        for orb in star_orbits:
            sized.setdefault(len(orb), []).append(orb)
        if sorted(len(o) for o in star_orbits) != sorted([k1, k2]):
            result["mu_checks"].append(
                {"a_star": astar, "status": "inapplicable",
                 "reason": "orbit sizes on the companion neighbourhood "
                           "do not match (k1, k2)"})
            continue
        # all assignments of star orbits to (k1, k2); ambiguous when k1 == k2
        assignments = []
        if k1 != k2:
            assignments.append((sized[k1][0], sized[k2][0]))
        else:
            o1, o2 = sized[k1][0], sized[k1][1]
            assignments.extend([(o1, o2), (o2, o1)])
        for x1s, x2s in assignments:
            mu1 = len(set(g.neighbours(x1s[0])) & set(x1))
            mu2 = len(set(g.neighbours(x2[0])) & set(x2s))
            holds = k1 * (mu - mu1) == k2 * (mu - mu2)
            result["mu_checks"].append(
                {"a_star": astar, "mu1": mu1, "mu2": mu2,
                 "status": "pass" if holds else "fail"})
    return result


# -- structural audit (stabilizers, normalizers, fixed points) -----------------

def structure_audit(g: CoverGraph, group: PermGroup,
                    enumeration_bound: int = 100_000) -> list[AuditItem]:
    """Assertable identities tying M = G_{F}, C = G_F, K and G_a together.

    Checks, on the concrete group: C = C_G(K) meet G_a and M = K : G_a
    (semidirect with trivial intersection); the index |G : M| equals the
    fibre count; |Fix(G_a)| = |N_G(G_a) : G_a| divides nr; and
    |Fix_Sigma(M)| = |N_G(M) : M| divides n.  Items using normalizers scan
    group elements and are skipped above the enumeration bound.
    """
    lemma = "stabilizer-structure"
    out: list[AuditItem] = []
    if not group.is_transitive():
        return [AuditItem(lemma, "applicability", "inapplicable",
                          {"reason": "group is not vertex-transitive"})]
    kernel, kinfo = covering_group(g, group)
    if not kinfo["abelian_cover"]:
        return [AuditItem(lemma, "applicability", "inapplicable",
                          {"reason": "covering group is not abelian-regular"})]

    a = 0
    fa_idx = g.fibre_of[a]
    fibre = g.fibres[fa_idx]
    g_a = group.point_stabilizer(a)
    c_point = group.pointwise_stabilizer(fibre)          # C = G_F
    # M = setwise stabilizer of F, via the extended domain
    ext = [extend_to_fibres(g, p) for p in group.generators]
    ext_group = PermGroup(ext, g.v + g.n, base_hint=(g.v + fa_idx,))
    m_gens = [Permutation(p.img[:g.v])
              for p in ext_group.stabilizer_prefix_gens(1)]
    m_group = PermGroup(m_gens, g.v)

    order_g = group.order()
    order_m = m_group.order()
    ok = order_g == order_m * g.n
    out.append(AuditItem(lemma, "index-G:M-equals-n",
                         "pass" if ok else "fail",
                         {"|G|": order_g, "|M|": order_m, "n": g.n}))

    # M = K : G_a  (orders multiply, intersection trivial)
    ok = (order_m == kernel.order() * g_a.order()
          and _intersection_trivial(kernel, g_a))
    out.append(AuditItem(lemma, "M=K:Ga", "pass" if ok else "fail",
                         {"|M|": order_m, "|K|": kernel.order(),
                          "|Ga|": g_a.order()}))

    if order_g <= enumeration_bound:
        cgk = group.centralizer_of_group(kernel, enumeration_bound)
        lhs = sorted(p.img for p in _group_elements(c_point))
        rhs_group = _intersection(cgk, g_a)
        rhs = sorted(p.img for p in _group_elements(rhs_group))
        out.append(AuditItem(lemma, "C=CG(K)^Ga",
                             "pass" if lhs == rhs else "fail",
                             {"|C|": len(lhs), "|CG(K) meet Ga|": len(rhs)}))

        norm = group.normalizer(g_a, enumeration_bound)
        fix_ga = [u for u in range(g.v)
                  if all(p[u] == u for p in g_a.generators)]
        idx = norm.order() // g_a.order()
        ok = len(fix_ga) == idx and g.v % len(fix_ga) == 0
        out.append(AuditItem(
            lemma, "Fix(Ga)=index-in-normalizer-divides-nr",
            "pass" if ok else "fail",
            {"|Fix(Ga)|": len(fix_ga), "|N:Ga|": idx, "nr": g.v}))

        norm_m = group.normalizer(m_group, enumeration_bound)
        fixed_fibres = [i for i in range(g.n)
                        if all(fibre_image(g, p)[i] == i
                               for p in m_group.generators)]
        idx_m = norm_m.order() // m_group.order()
        ok = (len(fixed_fibres) == idx_m
              and g.n % max(len(fixed_fibres), 1) == 0)
        out.append(AuditItem(
            lemma, "FixSigma(M)=index-in-normalizer-divides-n",
            "pass" if ok else "fail",
            {"|FixSigma(M)|": len(fixed_fibres), "|N:M|": idx_m, "n": g.n}))
    else:
        out.append(AuditItem(lemma, "normalizer-items", "inapplicable",
                             {"reason": f"|G| = {order_g} exceeds "
                                        f"enumeration bound"}))
    return out


def _group_elements(group: PermGroup):
    return list(group.elements())


def _intersection(g1: PermGroup, g2: PermGroup) -> PermGroup:
    els = [p for p in g1.elements() if p in g2]
    return PermGroup([p for p in els if not p.is_identity()] or [],
                     g1.degree)


def _intersection_trivial(g1: PermGroup, g2: PermGroup) -> bool:
    small, big = (g1, g2) if g1.order() <= g2.order() else (g2, g1)
    return all(p.is_identity() or p not in big for p in small.elements())
