"""Dual graphs of the Veronese surfaces, their special modules, and the
subspace-equation oracle that re-derives speciality from scratch.

For a positive non-torsion x with normal form sum(a_i x_i) + a c, the minimal
resolution has a star-shaped dual graph: center -(a + v) where v counts the
nonzero arms, and arm i carrying the negated continued-fraction expansion of
p_i/(p_i - a_i).  One or zero nonzero arms degenerate to a chain or a single
vertex.  The rank-one special modules are indexed by the i-series value sets
I(p_j, p_j - a_j), one module per exceptional curve plus the ring itself.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import NotMinimalError, ParameterError, PreconditionError
from .gradedring import graded_basis, piece_product
from .hj import hj_expand, i_set
from .lgroup import (
    LElement,
    Parameters,
    coprime_criterion,
    in_interval_0_c,
    is_positive,
    l_add,
    l_scale,
    special_elements,
)
from .linalg import rref

POINT = "point"
CHAIN = "chain"
STAR = "star"


@dataclass(frozen=True)
class DualGraph:
    """Labelled tree with a distinguished center and arms listed center-outward.

    ``arm_sources[k]`` records which weight index produced arm k (None for
    synthetic graphs).  ``flags`` carries advisory notes such as
    "non-minimal".
    """

    labels: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    shape: str
    center: int
    arms: tuple[tuple[int, ...], ...]
    arm_sources: tuple[int | None, ...]
    flags: tuple[str, ...] = ()

    @property
    def size(self) -> int:
        return len(self.labels)

    def to_json(self) -> dict:
        return {
            "labels": list(self.labels),
            "edges": [list(e) for e in self.edges],
            "shape": self.shape,
            "center": self.center,
            "arms": [list(arm) for arm in self.arms],
            "arm_sources": list(self.arm_sources),
            "flags": list(self.flags),
        }


def graph_from_json(obj: dict) -> DualGraph:
    return DualGraph(
        labels=tuple(obj["labels"]),
        edges=tuple((e[0], e[1]) for e in obj["edges"]),
        shape=obj["shape"],
        center=obj["center"],
        arms=tuple(tuple(arm) for arm in obj["arms"]),
        arm_sources=tuple(obj["arm_sources"]),
        flags=tuple(obj.get("flags", [])),
    )


def make_star(center_label: int, arm_labels, arm_sources=None) -> DualGraph:
    """Assemble a star graph from a center label and per-arm label lists."""
    arm_labels = [tuple(arm) for arm in arm_labels]
    labels = [center_label]
    edges = []
    arms = []
    for arm in arm_labels:
        prev = 0
        indices = []
        for lab in arm:
            labels.append(lab)
            idx = len(labels) - 1
            edges.append((prev, idx))
            indices.append(idx)
            prev = idx
        arms.append(tuple(indices))
    if arm_sources is None:
        arm_sources = (None,) * len(arms)
    nonempty = len([a for a in arm_labels if a])
    shape = POINT if nonempty == 0 else CHAIN if nonempty == 1 else STAR
    return DualGraph(
        labels=tuple(labels),
        edges=tuple(edges),
        shape=shape,
        center=0,
        arms=tuple(arms),
        arm_sources=tuple(arm_sources),
    )


def _require_valid(params: Parameters, x: LElement) -> None:
    if x.weights != params.weights:
        raise ParameterError("element does not belong to this parameter set")
    if not is_positive(x) or (x.c_coeff == 0 and not any(x.arms)):
        raise PreconditionError("need a nonzero positive element")


def dual_graph(params: Parameters, x: LElement) -> DualGraph:
    """The labelled dual graph of the graded resolution attached to x."""
    _require_valid(params, x)
    a = x.c_coeff
    nonzero = [i for i, ai in enumerate(x.arms) if ai != 0]
    v = len(nonzero)
    flags = () if not in_interval_0_c(x) else ("non-minimal",)
    if v == 0:
        return replace(
            make_star(-a, [], arm_sources=()), flags=flags
        )
    center_label = -(a + v) if v >= 2 else -1 - a
    arm_labels = []
    for i in nonzero:
        p, ai = params.weights[i], x.arms[i]
        arm_labels.append([-q for q in hj_expand(p, p - ai).alphas])
    return replace(
        make_star(center_label, arm_labels, arm_sources=tuple(nonzero)), flags=flags
    )


def is_minimal(params: Parameters, x: LElement) -> bool:
    """The graded resolution is minimal exactly when x lies outside [0, c]."""
    _require_valid(params, x)
    return not in_interval_0_c(x)


def blow_down_chain(g: DualGraph) -> DualGraph:
    """Contract (-1)-vertices of a chain until none remain or one vertex is left.

    Contracting a vertex raises each neighbor's label by one and joins the
    neighbors.  A final single (-1)-vertex is flagged "exceptional-free": it
    contracts to a smooth point.
    """
    if g.shape not in (CHAIN, POINT):
        raise PreconditionError(f"blow-down works on chains, got a {g.shape}")
    labels = [g.labels[g.center]] + [g.labels[i] for arm in g.arms for i in arm]
    while len(labels) > 1 and any(l == -1 for l in labels):
        k = labels.index(-1)
        if k > 0:
            labels[k - 1] += 1
        if k + 1 < len(labels):
            labels[k + 1] += 1
        del labels[k]
    flags = tuple(f for f in g.flags if f != "non-minimal")
    if len(labels) == 1 and labels[0] == -1:
        flags += ("exceptional-free",)
    out = make_star(labels[0], [labels[1:]] if len(labels) > 1 else [])
    return replace(out, flags=flags)


@dataclass(frozen=True)
class ModuleLabel:
    """A rank-one module in the classification, with its graph vertex if any.

    kind "free" is the ring itself (no vertex), "c" the degree-c shift at the
    center, "arm" the shift by u*x_j sitting on arm j.
    """

    kind: str
    arm: int | None = None
    u: int | None = None
    vertex: int | None = None

    @property
    def display(self) -> str:
        if self.kind == "free":
            return "R"
        if self.kind == "c":
            return "S(c)"
        coeff = "" if self.u == 1 else str(self.u)
        return f"S({coeff}x{self.arm + 1})"


def specials(params: Parameters, x: LElement) -> tuple[ModuleLabel, ...]:
    """All indecomposable special modules, assigned to dual-graph vertices.

    The ring sits at no vertex, the degree-c shift at the center, and arm j
    carries S(u*x_j) for u in I(p_j, p_j - a_j) minus its endpoints, ordered
    outward by decreasing u.
    """
    _require_valid(params, x)
    if in_interval_0_c(x):
        raise NotMinimalError("special modules are defined via the minimal resolution")
    g = dual_graph(params, x)
    out = [ModuleLabel("free"), ModuleLabel("c", vertex=g.center)]
    for arm_idx, j in enumerate(g.arm_sources):
        p, aj = params.weights[j], x.arms[j]
        us = sorted(i_set(p, p - aj) - {0, p}, reverse=True)
        for pos, u in enumerate(us):
            out.append(ModuleLabel("arm", arm=j, u=u, vertex=g.arms[arm_idx][pos]))
    return tuple(out)


@dataclass(frozen=True)
class OracleResult:
    special: bool
    witness: int | None = None

    def __bool__(self) -> bool:
        return self.special


def speciality_oracle(params: Parameters, x: LElement, y: LElement, l_max: int = 8) -> OracleResult:
    """Decide speciality of the shifted module S(y) by graded subspace equations.

    For each l in [1, l_max] checks, inside the graded piece of degree
    y + omega + l*x, that the whole piece equals the sum over m in [1, l] of
    the products of the pieces in degrees omega + m*x and y + (l - m)*x.
    A failing l is returned as the witness; passing every l up to the cutoff
    is strong evidence, not proof, of speciality.
    """
    _require_valid(params, x)
    if in_interval_0_c(x):
        raise NotMinimalError("the oracle needs x outside [0, c]")
    if not coprime_criterion(params, x):
        raise PreconditionError(
            "oracle requires coprime arm coefficients; reduce parameters first"
        )
    omega = special_elements(params).omega
    for l in range(1, l_max + 1):
        target = graded_basis(params, l_add(y, l_add(omega, l_scale(l, x))))
        rows = []
        for m in range(1, l + 1):
            left = l_add(omega, l_scale(m, x))
            right = l_add(y, l_scale(l - m, x))
            rows.extend(piece_product(params, left, right).rows)
        # the sum is contained in the piece, so equality is a rank count
        if len(rref(rows)) != target.dim:
            return OracleResult(False, l)
    return OracleResult(True)


def _vertex_names(g: DualGraph) -> list[str]:
    names = [""] * g.size
    names[g.center] = "center"
    for arm_idx, arm in enumerate(g.arms):
        src = g.arm_sources[arm_idx]
        tag = arm_idx + 1 if src is None else src + 1
        for pos, vtx in enumerate(arm):
            names[vtx] = f"E_{tag}_{pos + 1}"
    return names


def to_dot(g: DualGraph, labels: tuple[ModuleLabel, ...] | None = None) -> str:
    """DOT rendering; module labels become vertex tooltips when given."""
    names = _vertex_names(g)
    tooltips = {}
    if labels is not None:
        for lab in labels:
            if lab.vertex is not None:
                tooltips[lab.vertex] = lab.display
    lines = ["graph dualgraph {"]
    for idx, name in enumerate(names):
        attrs = [f'label="{g.labels[idx]}"']
        if idx in tooltips:
            attrs.append(f'tooltip="{tooltips[idx]}"')
        lines.append(f"    {name} [{', '.join(attrs)}];")
    for i, j in g.edges:
        lines.append(f"    {names[i]} -- {names[j]};")
    lines.append("}")
    return "\n".join(lines)
