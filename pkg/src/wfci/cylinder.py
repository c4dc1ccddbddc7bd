"""Cylindricity verdicts with machine-checkable certificates.

Constructive side: a quasi-smooth well-formed hypersurface whose degree is the
sum of two weights can be brought to the shape x_i*x_j + G by graded
triangular coordinate changes; projecting away one of the two distinguished
coordinates then exhibits an anti-canonically polar cylinder.  In codimension
two the analogous double projection needs six distinct indices splitting both
degrees over two pivots, and the pattern generalizes to codimension c with
c + c^2 distinct indices.  Linear cones reduce to a smaller weighted space.

Obstruction side: descriptors matching the embedded classification tables are
certified non-cylindrical where the literature proves it (KKW24 Thm 4.7 for
the infinite hypersurface series with n > 2, its family 4 for every n, and
the alpha-invariant >= 1 classification of KP15/KW19 with CPPZ Thm 1.26 for
the codimension-2 index-1 tables minus the two known alpha < 1 exceptions).

Every certificate carries the data needed to re-check it arithmetically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import tables
from .poly import Coeff, GradedPolynomial, substitute
from .wci import (WciDescriptor, adjunction, general_qs, linear_cone_flags,
                  well_formed_ci, FANO)
from .wps import (ChartDescription, WeightVector, WpsCylinder, is_well_formed,
                  normalize, torus_chart, wps_cylinder)

CYLINDRICAL = "Cylindrical"
NOT_CYLINDRICAL = "NotCylindrical"
UNKNOWN = "Unknown"

CIT_SUM_OF_TWO = ("cylinder: degree is a sum of two weights "
                  "(quadratically closed base field)")
CIT_WPS_CHART = "cylinder: weighted projective space chart"
CIT_LINEAR_CONE = "cylinder: linear cone, eliminate the matched variable"
CIT_CODIM2 = "cylinder: codimension-2 double projection, six distinct indices"
CIT_CODIMC = "cylinder: codimension-c multi-projection"
CIT_SERIES_NONCYL = ("non-cylindrical: infinite del Pezzo hypersurface series "
                     "for n > 2 [KKW24, Thm 4.7]")
CIT_FAMILY4_NONCYL = ("non-cylindrical: family 4 of the infinite series for "
                      "every n [KKW24; KPZ0, Prop 5.1 for n = 1]")
CIT_ALPHA = ("non-cylindrical: alpha-invariant >= 1 "
             "[KP15; KW19; CPPZ, Thm 1.26]")
CIT_CONJECTURE = ("conjecture: a del Pezzo hypersurface is cylindrical "
                  "iff its degree is a sum of two weights")


class ClassificationInconsistency(RuntimeError):
    """A constructive cylinder and a non-cylindricity certificate both fired."""


class NormalFormError(ValueError):
    """No enabling cross term; cannot happen for quasi-smooth members."""


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SumOfTwoWeights:
    i: int
    j: int

    def recheck(self, desc: WciDescriptor) -> bool:
        ws = desc.weights
        return (desc.codim == 1 and self.i != self.j
                and ws[self.i] + ws[self.j] == desc.multidegree[0])

    def to_json(self) -> dict:
        return {"kind": "SumOfTwoWeights", "i": self.i, "j": self.j}


@dataclass(frozen=True)
class Codim2Projection:
    pivot_a: int
    pivot_b: int
    partners_a: tuple[int, int]   # partner of pivot_a for d_1, d_2
    partners_b: tuple[int, int]

    def indices(self) -> tuple[int, ...]:
        return (self.pivot_a, self.pivot_b) + self.partners_a + self.partners_b

    def recheck(self, desc: WciDescriptor) -> bool:
        ws, (d1, d2) = desc.weights, desc.multidegree
        six = self.indices()
        return (len(set(six)) == 6
                and ws[self.pivot_a] + ws[self.partners_a[0]] == d1
                and ws[self.pivot_b] + ws[self.partners_b[0]] == d1
                and ws[self.pivot_a] + ws[self.partners_a[1]] == d2
                and ws[self.pivot_b] + ws[self.partners_b[1]] == d2)

    def to_json(self) -> dict:
        return {"kind": "Codim2Projection", "pivots": [self.pivot_a, self.pivot_b],
                "partners": [list(self.partners_a), list(self.partners_b)]}


@dataclass(frozen=True)
class CodimCGeneralized:
    pivots: tuple[int, ...]                 # c pivot indices
    partners: tuple[tuple[int, ...], ...]   # partners[l][j]: pivot l, degree j

    def recheck(self, desc: WciDescriptor) -> bool:
        ws, ds = desc.weights, desc.multidegree
        c = desc.codim
        used = list(self.pivots) + [p for row in self.partners for p in row]
        if len(self.pivots) != c or len(set(used)) != c + c * c:
            return False
        return all(ws[self.pivots[l]] + ws[self.partners[l][j]] == ds[j]
                   for l in range(c) for j in range(c))

    def to_json(self) -> dict:
        return {"kind": "CodimCGeneralized", "pivots": list(self.pivots),
                "partners": [list(r) for r in self.partners]}


@dataclass(frozen=True)
class AlphaAtLeastOne:
    citation: str

    def to_json(self) -> dict:
        return {"kind": "AlphaAtLeastOne", "citation": self.citation}


@dataclass(frozen=True)
class TableNonCyl:
    table_id: str
    row_id: int
    n: Optional[int]
    alpha: Optional[AlphaAtLeastOne] = None

    def to_json(self) -> dict:
        return {"kind": "TableNonCyl", "table": self.table_id, "row": self.row_id,
                "n": self.n, "alpha": self.alpha.to_json() if self.alpha else None}


@dataclass(frozen=True)
class WpsChart:
    """Cylinder chart of a weighted projective space itself."""
    weights: tuple[int, ...]
    chart_subset: tuple[int, ...]
    torus_rank: int
    affine_rank: int
    polar: tuple[tuple[int, Fraction], ...]

    @classmethod
    def from_cylinder(cls, cyl: WpsCylinder) -> "WpsChart":
        return cls(tuple(cyl.trace.output.weights), cyl.chart.chart_subset,
                   cyl.chart.torus_rank, cyl.chart.affine_rank,
                   cyl.polar.multiplicities)

    def to_json(self) -> dict:
        return {"kind": "WpsChart", "weights": list(self.weights),
                "chart_subset": list(self.chart_subset),
                "torus_rank": self.torus_rank, "affine_rank": self.affine_rank,
                "polar": [[i, str(c)] for i, c in self.polar]}


@dataclass(frozen=True)
class LinearCone:
    degree_index: int
    weight_index: int
    target_weights: tuple[int, ...]
    target_degrees: tuple[int, ...]
    inner: Optional[object] = None   # certificate of the reduction target

    def to_json(self) -> dict:
        return {"kind": "LinearCone", "degree_index": self.degree_index,
                "weight_index": self.weight_index,
                "target": {"weights": list(self.target_weights),
                           "degrees": list(self.target_degrees)},
                "inner": self.inner.to_json() if self.inner is not None else None}


@dataclass(frozen=True)
class CylinderVerdict:
    status: str
    certificate: Optional[object]
    citations: tuple[str, ...] = ()
    conjectural_prediction: Optional[bool] = None
    notes: tuple[str, ...] = ()
    flags: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "certificate": self.certificate.to_json() if self.certificate else None,
            "citations": list(self.citations),
            "conjectural": self.conjectural_prediction,
            "notes": list(self.notes),
            "flags": dict(self.flags),
        }


# ---------------------------------------------------------------------------
# constructive searches (deterministic: ascending scans, first witness)
# ---------------------------------------------------------------------------

def weight_pairs(weights: Sequence[int], d: int) -> list[tuple[int, int]]:
    n1 = len(weights)
    return [(i, j) for i in range(n1) for j in range(i + 1, n1)
            if weights[i] + weights[j] == d]


def check_sum_of_two_weights(desc: WciDescriptor) -> Optional[tuple[int, int]]:
    """First index pair (i < j) with d = a_i + a_j; None if absent or n < 3."""
    if desc.codim != 1:
        raise ValueError("criterion needs codimension 1")
    if desc.ambient.n < 3:
        return None
    pairs = weight_pairs(desc.weights, desc.multidegree[0])
    return pairs[0] if pairs else None


def check_codim2_projection(desc: WciDescriptor) -> Optional[Codim2Projection]:
    """Six distinct indices with d_1 = a_i + a_{i1} = a_j + a_{j1} and
    d_2 = a_i + a_{i2} = a_j + a_{j2}; exhaustive ascending scan."""
    if desc.codim != 2:
        raise ValueError("criterion needs codimension 2")
    if desc.ambient.n < 6:
        return None
    ws = desc.weights
    d1, d2 = desc.multidegree
    n1 = len(ws)
    by_target_1 = [[k for k in range(n1) if k != p and ws[p] + ws[k] == d1]
                   for p in range(n1)]
    by_target_2 = [[k for k in range(n1) if k != p and ws[p] + ws[k] == d2]
                   for p in range(n1)]
    for i in range(n1):
        for j in range(i + 1, n1):
            for i1 in by_target_1[i]:
                if i1 == j:
                    continue
                for j1 in by_target_1[j]:
                    if j1 in (i, i1):
                        continue
                    for i2 in by_target_2[i]:
                        if i2 in (j, i1, j1):
                            continue
                        for j2 in by_target_2[j]:
                            if j2 in (i, i1, j1, i2):
                                continue
                            return Codim2Projection(i, j, (i1, i2), (j1, j2))
    return None


def check_codimc_generalized(desc: WciDescriptor) -> Optional[CodimCGeneralized]:
    """Backtracking search for c pivots plus c^2 partners, all distinct, with
    d_j = a_{pivot_l} + a_{partner_{l,j}} for every degree j and pivot l.
    Requires n >= c(c+1); returns None below that arity."""
    c = desc.codim
    n = desc.ambient.n
    if n < c * (c + 1):
        return None
    ws = desc.weights
    ds = desc.multidegree
    n1 = len(ws)
    candidates = [[[k for k in range(n1) if k != p and ws[p] + ws[k] == d]
                   for d in ds] for p in range(n1)]

    from itertools import combinations

    def extend(pivots: tuple[int, ...], assignment: list[tuple[int, int]],
               used: set[int], pos: int) -> Optional[list[int]]:
        # assignment slots ordered degree-major: (j, l) for j in degrees, l in pivots
        if pos == len(assignment):
            return []
        j, l = assignment[pos]
        for k in candidates[pivots[l]][j]:
            if k in used:
                continue
            used.add(k)
            rest = extend(pivots, assignment, used, pos + 1)
            if rest is not None:
                return [k] + rest
            used.discard(k)
        return None

    slots = [(j, l) for j in range(c) for l in range(c)]
    for pivots in combinations(range(n1), c):
        if any(not candidates[p][j] for p in pivots for j in range(c)):
            continue
        flat = extend(pivots, slots, set(pivots), 0)
        if flat is not None:
            partners = tuple(tuple(flat[j * c + l] for j in range(c))
                             for l in range(c))
            return CodimCGeneralized(pivots, partners)
    return None


# ---------------------------------------------------------------------------
# normal form x_i x_j + G
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChangeOp:
    """One replayable step: a graded substitution or a global rescale."""

    kind: str                                   # "substitute" | "scale"
    var: Optional[int] = None
    replacement: Optional[GradedPolynomial] = None
    factor: Optional[Coeff] = None

    def apply(self, p: GradedPolynomial) -> GradedPolynomial:
        if self.kind == "substitute":
            return substitute(p, self.var, self.replacement)
        if self.kind == "scale":
            return p.scale(self.factor)
        raise ValueError(f"unknown change op {self.kind}")

    def to_json(self) -> dict:
        if self.kind == "substitute":
            return {"op": "substitute", "var": self.var,
                    "replacement": self.replacement.to_json()}
        return {"op": "scale", "factor": self.factor.to_json()}


@dataclass(frozen=True)
class NormalFormResult:
    pair: tuple[int, int]                 # final pivot pair (after re-indexing)
    requested_pair: tuple[int, int]
    change_sequence: tuple[ChangeOp, ...]
    result: GradedPolynomial              # x_i x_j + G, cross coefficient 1
    remainder: GradedPolynomial           # G, free of both pivot variables
    extension_used: Optional[int] = None  # radicand when a square root was adjoined

    def to_json(self) -> dict:
        return {"pair": list(self.pair),
                "requested_pair": list(self.requested_pair),
                "changes": [op.to_json() for op in self.change_sequence],
                "result": self.result.to_json(),
                "remainder": self.remainder.to_json(),
                "radicand": self.extension_used}


def replay_changes(p: GradedPolynomial, ops: Sequence[ChangeOp]) -> GradedPolynomial:
    for op in ops:
        p = op.apply(p)
    return p


def _unit_exp(n: int, *indices: int) -> tuple[int, ...]:
    e = [0] * n
    for i in indices:
        e[i] += 1
    return tuple(e)


def _mono_poly(weights, degree, exps, coeff) -> GradedPolynomial:
    return GradedPolynomial(weights, degree, {tuple(exps): coeff})


def _field_sqrt(value: Coeff, current_m: int) -> tuple[Coeff, int]:
    """Square root of a rational Coeff inside Q(sqrt(m)), adjoining at most one
    new radicand.  Returns (root, radicand actually in play)."""
    if not value.is_rational:
        raise NormalFormError("second radical adjunction unsupported")
    root = Coeff.sqrt_of(value.base)
    if root.is_rational:
        return root, current_m
    if current_m not in (1, root.m):
        raise NormalFormError(
            f"incompatible radicands {root.m} and {current_m}")
    return root, root.m


def _enabling_pairs(F: GradedPolynomial, i: int, j: int) -> list[tuple[int, int]]:
    """Candidate pivot pairs: the requested one first, then re-indexings that
    keep one of the requested indices (a cross term x_k x_i or x_k x_j of the
    right degree exists only when a_k complements the kept weight)."""
    d = F.degree
    w = F.weights
    out = [(i, j)]
    for keep in (i, j):
        for k in range(len(w)):
            if k in (i, j):
                continue
            if w[keep] + w[k] == d:
                pair = (min(keep, k), max(keep, k))
                if pair not in out:
                    out.append(pair)
    return out


def _pair_usable(F: GradedPolynomial, u: int, v: int) -> bool:
    n = F.nvars
    cross = F.coefficient(_unit_exp(n, u, v))
    if F.weights[u] != F.weights[v]:
        return not cross.is_zero
    lam = F.coefficient(_unit_exp(n, u, u))
    mu = F.coefficient(_unit_exp(n, v, v))
    if cross.is_zero and (lam.is_zero or mu.is_zero):
        return False
    disc = cross * cross - lam * mu * 4
    return not disc.is_zero


def normal_form(F: GradedPolynomial, pair: tuple[int, int]) -> NormalFormResult:
    """Bring F of degree a_i + a_j to the exact shape x_i*x_j + G(others).

    The change sequence consists of graded triangular substitutions plus one
    global rescale; replaying it on the input reproduces the result term for
    term.  When both pivot weights agree and the binary quadratic part needs
    diagonalizing off, a single square root of its discriminant is adjoined.
    Fails only when no enabling term exists, which the quasi-smoothness of the
    member rules out.
    """
    i, j = pair
    n = F.nvars
    if not (0 <= i < n and 0 <= j < n and i != j):
        raise ValueError("bad pivot pair")
    if F.weights[i] + F.weights[j] != F.degree:
        raise ValueError("pair weights do not sum to the degree")

    chosen = None
    for u, v in _enabling_pairs(F, i, j):
        if _pair_usable(F, u, v):
            chosen = (u, v)
            break
    if chosen is None:
        raise NormalFormError("cross term absent: no enabling term for the pivot pair")
    u, v = chosen

    ops: list[ChangeOp] = []
    cur = F
    radicand = 1
    w = F.weights
    d = F.degree

    def push(op: ChangeOp):
        nonlocal cur
        ops.append(op)
        cur = op.apply(cur)

    def sub_op(var: int, replacement: GradedPolynomial):
        push(ChangeOp("substitute", var=var, replacement=replacement))

    if w[u] == w[v]:
        lam = cur.coefficient(_unit_exp(n, u, u))
        mu = cur.coefficient(_unit_exp(n, v, v))
        if lam.is_zero and not mu.is_zero:
            u, v = v, u
            lam, mu = mu, lam
        if not lam.is_zero:
            cross = cur.coefficient(_unit_exp(n, u, v))
            if mu.is_zero:
                # lam x_u^2 + cross x_u x_v: clear the square off the pivot
                u, v = v, u   # now the square sits on x_v
                repl = _mono_poly(w, w[u], _unit_exp(n, u), Coeff.of(1)) \
                    - _mono_poly(w, w[u], _unit_exp(n, v), lam / cross)
                sub_op(u, repl)
            else:
                disc = cross * cross - lam * mu * 4
                root, radicand = _field_sqrt(disc, radicand)
                beta = (cross + root) / (lam * 2)
                repl = _mono_poly(w, w[u], _unit_exp(n, u), Coeff.of(1)) \
                    - _mono_poly(w, w[u], _unit_exp(n, v), beta)
                sub_op(u, repl)
                c1 = cur.coefficient(_unit_exp(n, u, v))
                repl2 = _mono_poly(w, w[v], _unit_exp(n, v), Coeff.of(1)) \
                    - _mono_poly(w, w[v], _unit_exp(n, u), lam / c1)
                sub_op(v, repl2)
    else:
        if w[u] > w[v]:
            u, v = v, u   # keep the larger weight on x_v: it then occurs linearly

    cross = cur.coefficient(_unit_exp(n, u, v))
    assert not cross.is_zero
    if cross != Coeff.of(1):
        push(ChangeOp("scale", factor=cross.inverse()))

    # absorb the x_v-linear coefficient into x_u
    coeff_v = {}
    for exps, c in cur.terms.items():
        if exps[v] == 1:
            stripped = tuple(0 if k == v else e for k, e in enumerate(exps))
            if stripped != _unit_exp(n, u):
                coeff_v[stripped] = c
        elif exps[v] > 1:
            raise AssertionError("pivot variable occurs nonlinearly")
    if coeff_v:
        repl = _mono_poly(w, w[u], _unit_exp(n, u), Coeff.of(1)) \
            - GradedPolynomial(w, w[u], coeff_v)
        sub_op(u, repl)

    # absorb every remaining x_u-divisible term into x_v
    bulk = {}
    for exps, c in cur.terms.items():
        if exps[u] >= 1 and exps[v] == 0:
            lowered = tuple(e - 1 if k == u else e for k, e in enumerate(exps))
            bulk[lowered] = c
    if bulk:
        repl = _mono_poly(w, w[v], _unit_exp(n, v), Coeff.of(1)) \
            - GradedPolynomial(w, w[v], bulk)
        sub_op(v, repl)

    cross_exp = _unit_exp(n, u, v)
    remainder_terms = {e: c for e, c in cur.terms.items() if e != cross_exp}
    if cur.coefficient(cross_exp) != Coeff.of(1) or any(
            e[u] or e[v] for e in remainder_terms):
        raise AssertionError("normal form postcondition failed")
    remainder = GradedPolynomial(w, d, remainder_terms)
    final_pair = (min(u, v), max(u, v))
    return NormalFormResult(final_pair, (min(i, j), max(i, j)), tuple(ops), cur,
                            remainder, radicand if radicand != 1 else None)


# ---------------------------------------------------------------------------
# the cylinder chart attached to a normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HypersurfaceCylinder:
    """Cylinder of a degree a_i + a_j hypersurface, assembled from the normal
    form: X meets the chart {x_kept != 0} in a principal chart of the smaller
    space obtained by dropping x_dropped, where the usual torus chart supplies
    the cylinder.  The polar divisor lives on the original hyperplane classes
    and sums to the anti-canonical degree."""

    pair: tuple[int, int]
    kept_index: int
    dropped_index: int
    projected_weights: tuple[int, ...]       # original order, dropped removed
    reduced_weights: tuple[int, ...]         # after well-forming, same positions
    chart: ChartDescription                  # on the reduced weights
    complement: tuple[int, ...]              # original indices of the support
    polar: tuple[tuple[int, Fraction], ...]  # (original index, multiplicity)
    torus_rank: int
    affine_rank: int

    def to_json(self) -> dict:
        return {"kind": "SumOfTwoWeightsChart", "pair": list(self.pair),
                "kept": self.kept_index, "dropped": self.dropped_index,
                "projected_weights": list(self.projected_weights),
                "reduced_weights": list(self.reduced_weights),
                "chart_subset": list(self.chart.chart_subset),
                "complement": list(self.complement),
                "polar": [[i, str(c)] for i, c in self.polar],
                "torus_rank": self.torus_rank, "affine_rank": self.affine_rank}


def cylinder_chart(desc: WciDescriptor, nf: NormalFormResult) -> HypersurfaceCylinder:
    """Chart data for the cylinder produced by a normal form on `desc`."""
    if desc.codim != 1:
        raise ValueError("chart construction needs codimension 1")
    u, v = nf.pair
    kept, dropped = u, v
    ws = desc.weights
    proj = tuple(a for k, a in enumerate(ws) if k != dropped)
    to_original = [k for k in range(len(ws)) if k != dropped]
    kept_pos = to_original.index(kept)

    # positions survive both reduction steps (y_l = x_l^{d_l}), so reuse them;
    # proj is still ascending, so the trace keeps its order
    trace = normalize(WeightVector.of(proj))
    reduced = trace.reduced
    subset = _smallest_coprime_subset(reduced, kept_pos)
    chart = torus_chart(reduced, subset)

    complement = tuple(to_original[p] for p in subset)
    index = desc.ambient.total() - desc.multidegree[0]   # anti-canonical degree
    polar = tuple((orig, Fraction(index, len(complement) * ws[orig]))
                  for orig in complement)
    assert sum(c * ws[i] for i, c in polar) == index
    dim = desc.dim
    torus_rank = len(subset) - 1
    return HypersurfaceCylinder(nf.pair, kept, dropped, proj, reduced, chart,
                                complement, polar, torus_rank, dim - torus_rank)


def _smallest_coprime_subset(weights: tuple[int, ...], required: int) -> tuple[int, ...]:
    from itertools import combinations
    from .intarith import gcd_many
    n = len(weights)
    pool = [p for p in range(n) if p != required]
    for size in range(1, n):
        for extra in combinations(pool, size - 1):
            idx = tuple(sorted((required,) + extra))
            if gcd_many(tuple(weights[p] for p in idx)) == 1:
                return idx
    raise AssertionError("no proper coprime subset; weights not well-formed")


# ---------------------------------------------------------------------------
# table-backed non-cylindricity
# ---------------------------------------------------------------------------

ALPHA_EXCEPTIONS = {("T3", 1): "the (2n,2n) series in P(1,1,n,n,2n-1) has alpha < 1",
                    ("T2", 2): ("the (6,8) family in P(1,2,3,4,5) splits on a "
                                "coefficient condition the descriptor does not carry")}


def check_nonexistence(desc: WciDescriptor) -> Optional[TableNonCyl]:
    """Match the descriptor against the embedded tables and return a
    non-cylindricity certificate where the classification provides one."""
    hit = tables.match(desc)
    if hit is None:
        return None
    tid, rid, n = hit
    if tid == "T1":
        if rid == 4:
            return TableNonCyl(tid, rid, n)
        if n is not None and n > 2:
            return TableNonCyl(tid, rid, n)
        return None
    if (tid, rid) in ALPHA_EXCEPTIONS:
        return None
    return TableNonCyl(tid, rid, n, AlphaAtLeastOne(CIT_ALPHA))


# ---------------------------------------------------------------------------
# the assembled verdict
# ---------------------------------------------------------------------------

def verdict(desc: WciDescriptor) -> CylinderVerdict:
    """Apply every criterion and certificate; Cylindrical and NotCylindrical
    must never both fire (raises ClassificationInconsistency if they do)."""
    notes: list[str] = []
    ambient_wf = is_well_formed(desc.ambient)
    wf = well_formed_ci(desc) if ambient_wf else False
    if not ambient_wf:
        notes.append("ambient weights not well-formed: normalize first")
    cones = linear_cone_flags(desc)
    qs_verdict = general_qs(desc, witnesses=False) if not cones else None
    qs = qs_verdict.holds if qs_verdict is not None else None
    flags = {"ambient_well_formed": ambient_wf, "well_formed": wf,
             "quasi_smooth": qs, "linear_cones": [list(f) for f in cones]}

    if cones:
        return _linear_cone_verdict(desc, cones[0], notes, flags)

    constructive: Optional[tuple[object, tuple[str, ...]]] = None
    conditional: Optional[object] = None
    if wf and qs:
        c, n = desc.codim, desc.ambient.n
        if c == 1 and n >= 3:
            pair = check_sum_of_two_weights(desc)
            if pair is not None:
                constructive = (SumOfTwoWeights(*pair), (CIT_SUM_OF_TWO,))
        elif c == 2:
            cert = check_codim2_projection(desc)
            if cert is not None:
                constructive = (cert, (CIT_CODIM2,))
    elif wf and qs is None and desc.codim >= 3:
        # no quasi-smoothness criterion exists at this codimension, so a
        # found assignment certifies nothing unconditionally
        conditional = check_codimc_generalized(desc)
        if conditional is not None:
            notes.append("multi-projection assignment found; cylindricity "
                         "follows if a general member is quasi-smooth, which "
                         "no criterion decides at codimension >= 3")

    table_cert = check_nonexistence(desc)
    if table_cert is not None and not (wf and qs):
        notes.append("table row matched but well-formedness/quasi-smoothness "
                     "hypotheses fail; no non-cylindricity asserted")
        table_cert = None

    if constructive is not None and table_cert is not None:
        raise ClassificationInconsistency(
            f"{desc}: constructive certificate {constructive[0]} contradicts "
            f"table certificate {table_cert}")

    hit = tables.match(desc)
    if hit is not None and (hit[0], hit[1]) in ALPHA_EXCEPTIONS and wf and qs:
        notes.append(ALPHA_EXCEPTIONS[(hit[0], hit[1])])
    if hit is not None and hit[0] == "T1" and hit[2] is not None \
            and hit[2] <= 2 and hit[1] != 4 and table_cert is None and wf and qs:
        notes.append("infinite-series row at n <= 2: no non-cylindricity "
                     "statement applies at this parameter")

    conjectural = None
    if desc.codim == 1 and desc.ambient.n == 3 and wf and qs \
            and adjunction(desc).amplitude == FANO:
        conjectural = bool(weight_pairs(desc.weights, desc.multidegree[0]))
        notes.append(CIT_CONJECTURE)

    if constructive is not None:
        cert, cites = constructive
        return CylinderVerdict(CYLINDRICAL, cert, cites, conjectural,
                               tuple(notes), flags)
    if table_cert is not None:
        cites = _table_citations(table_cert)
        return CylinderVerdict(NOT_CYLINDRICAL, table_cert, cites, conjectural,
                               tuple(notes), flags)
    cites = (CIT_CODIMC,) if conditional is not None else ()
    return CylinderVerdict(UNKNOWN, conditional, cites, conjectural,
                           tuple(notes), flags)


def _table_citations(cert: TableNonCyl) -> tuple[str, ...]:
    if cert.table_id == "T1":
        return (CIT_FAMILY4_NONCYL,) if cert.row_id == 4 else (CIT_SERIES_NONCYL,)
    return (CIT_ALPHA,)


def _linear_cone_verdict(desc: WciDescriptor, flag: tuple[int, int],
                         notes: list[str], flags: dict) -> CylinderVerdict:
    """A degree equal to a weight lets the general member eliminate that
    variable: the variety is isomorphic to a complete intersection in the
    smaller space (the space itself in codimension 1), and the verdict is
    inherited through that isomorphism."""
    j, i = flag
    ws = tuple(a for k, a in enumerate(desc.weights) if k != i)
    ds = tuple(d for k, d in enumerate(desc.multidegree) if k != j)
    notes.append(f"linear cone: degree {desc.multidegree[j]} matches weight "
                 f"index {i}; reduces to weights {ws}, degrees {ds or '()'}")
    if not ds:
        cyl = wps_cylinder(ws)
        cert = LinearCone(j, i, ws, ds, WpsChart.from_cylinder(cyl))
        return CylinderVerdict(CYLINDRICAL, cert, (CIT_LINEAR_CONE, CIT_WPS_CHART),
                               None, tuple(notes), flags)
    inner = verdict(WciDescriptor.of(ws, ds))
    cert = LinearCone(j, i, ws, ds, inner.certificate)
    notes.extend(inner.notes)
    if inner.status == UNKNOWN:
        notes.append("reduction target undecided")
        return CylinderVerdict(UNKNOWN, cert, (CIT_LINEAR_CONE,), None,
                               tuple(notes), flags)
    return CylinderVerdict(inner.status, cert,
                           (CIT_LINEAR_CONE,) + inner.citations, None,
                           tuple(notes), flags)


def wps_verdict(w) -> CylinderVerdict:
    """Verdict for a weighted projective space itself: always cylindrical."""
    cyl = wps_cylinder(w)
    cert = WpsChart.from_cylinder(cyl)
    return CylinderVerdict(CYLINDRICAL, cert, (CIT_WPS_CHART,), None, (),
                           {"ambient_well_formed": True, "well_formed": True,
                            "quasi_smooth": True, "linear_cones": []})
