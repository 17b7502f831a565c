"""Minimal-resolution dual graphs for the germ G_r(u, v) + t^d = 0.

The weighted-homogeneous resolution is a star: a central curve of genus
(r-2)(gcd(r,d)-1)/2 and self-intersection -b, carrying r identical arms whose
weights are the continued fraction terms of alpha/beta.  The star is already
minimal unless d = 1 (mod r), in which case the central curve is a (-1)-curve
and blowing it down leaves r chains whose roots are pairwise adjacent, with
the root weight dropped by one.  For r = 2 the germ is an A_{d-1} singularity
and we emit its chain directly.

Vertex order is fixed everywhere: central first (when present), then arm 1
root to tip, arm 2, and so on.  DOT node names follow the same order:
``c`` and ``a<arm>_<pos>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import BadMultiplicity, NotSymmetric
from .hjcf import hj_expand, modular_beta

CHAIN = "chain"
STAR = "star"
BLOWN_DOWN_STAR = "blown_down_star"


@dataclass(frozen=True)
class WeightData:
    """Weights and central-vertex data for the germ with parameters (r, d)."""

    r: int
    d: int
    g: int          # gcd(r, d)
    w1: int         # = w2 = d/g
    w2: int
    w3: int         # = r/g
    N: int          # degree r*d/g
    alpha: int      # = w1
    bprime: int     # = w3
    beta: int       # modular inverse datum, 0 when alpha = 1
    b: int          # central self-intersection weight
    genus0: int     # genus of the central curve


@dataclass(frozen=True)
class ResolutionGraph:
    """Dual graph of the minimal resolution, one of three shapes.

    central is (genus, weight) for the star shape, None otherwise.
    arms holds the weight chains root to tip; the chain shape stores its
    single run of weight-2 vertices as one "arm" with no central vertex.
    """

    r: int
    d: int
    shape: str
    central: Optional[tuple[int, int]]
    arms: tuple[tuple[int, ...], ...]
    minimal: bool = True

    @property
    def lam(self) -> int:
        """Arm length (the chain length for the r = 2 shape)."""
        return len(self.arms[0]) if self.arms else 0

    @property
    def vertex_count(self) -> int:
        return (1 if self.central is not None else 0) + sum(len(a) for a in self.arms)

    def iter_vertices(self):
        """Yield (name, genus, weight) in the documented order."""
        if self.central is not None:
            yield ("c", self.central[0], self.central[1])
        for ai, arm in enumerate(self.arms, start=1):
            for k, w in enumerate(arm, start=1):
                yield (f"a{ai}_{k}", 0, w)

    def arm_root_indices(self) -> tuple[int, ...]:
        offset = 1 if self.central is not None else 0
        return tuple(offset + ai * self.lam for ai in range(len(self.arms)))

    def edge_list(self) -> tuple[tuple[int, int], ...]:
        """Undirected edges as index pairs, deterministic order."""
        if self.lam == 0:
            return ()
        edges = []
        roots = self.arm_root_indices()
        for base in roots:
            if self.central is not None:
                edges.append((0, base))
            for k in range(self.lam - 1):
                edges.append((base + k, base + k + 1))
        if self.shape == BLOWN_DOWN_STAR:
            for i in range(len(roots)):
                for j in range(i + 1, len(roots)):
                    edges.append((roots[i], roots[j]))
        return tuple(edges)


def weight_data(r: int, d: int) -> WeightData:
    """Compute the weight system, beta, central weight b and central genus."""
    if r < 2 or r > d:
        raise BadMultiplicity(f"need 2 <= r <= d, got r={r}, d={d}")
    g = gcd(r, d)
    alpha = d // g
    bprime = r // g
    beta = modular_beta(alpha, bprime)
    num = g * (1 + bprime * beta)
    if num % alpha != 0:
        raise AssertionError(f"central weight not integral for (r, d)=({r}, {d})")
    twice_genus = (r - 2) * (g - 1)
    if twice_genus % 2 != 0:
        raise AssertionError(f"central genus not integral for (r, d)=({r}, {d})")
    return WeightData(r, d, g, alpha, alpha, bprime, r * d // g,
                      alpha, bprime, beta, num // alpha, twice_genus // 2)


def build_resolution_graph(r: int, d: int) -> ResolutionGraph:
    """Build the minimal dual graph, blowing the central vertex down when
    d = 1 (mod r) with r >= 3; r = 2 always yields the A_{d-1} chain."""
    wd = weight_data(r, d)
    if r == 2:
        return ResolutionGraph(r, d, CHAIN, None, ((2,) * (d - 1),))
    exp = hj_expand(wd.alpha, wd.beta)
    if d % r == 1:
        # here alpha = d, bprime = r, beta = (d-1)/r and n_1 = r+1, so the
        # blown-down root weight r stays >= 3: no cascading blow-downs
        assert exp.terms and exp.terms[0] == r + 1
        arm = (exp.terms[0] - 1,) + exp.terms[1:]
        return ResolutionGraph(r, d, BLOWN_DOWN_STAR, None, (arm,) * r)
    return ResolutionGraph(r, d, STAR, (wd.genus0, wd.b), (exp.terms,) * r)


def intersection_matrix(graph: ResolutionGraph) -> list[list[int]]:
    """Symmetric matrix: diagonal -weight, 1 on adjacent vertex pairs."""
    n = graph.vertex_count
    m = [[0] * n for _ in range(n)]
    for i, (_, _, weight) in enumerate(graph.iter_vertices()):
        m[i][i] = -weight
    for i, j in graph.edge_list():
        m[i][j] = m[j][i] = 1
    return m


def check_negative_definite(m) -> bool:
    """Exact Sylvester test: (-1)^k det M_k > 0 for all leading minors M_k.

    Implemented as symmetric elimination over Fractions, processed from the
    highest index down; each pivot is a ratio of consecutive leading
    principal minors of the index-reversed matrix, so the matrix is negative
    definite iff every pivot is negative (a zero pivot means a zero minor and
    already fails).  Reversal is a symmetric permutation and cannot change
    definiteness; for the tree-shaped intersection matrices, where arms come
    after the central vertex, this order eliminates tips first and produces
    no fill-in.
    """
    n = len(m)
    for i, row in enumerate(m):
        if len(row) != n:
            raise NotSymmetric("matrix is not square")
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")
    rows = [{j: Fraction(v) for j, v in enumerate(row) if v} for row in m]
    for k in range(n - 1, -1, -1):
        piv = rows[k].get(k, Fraction(0))
        if piv >= 0:
            return False
        for i in [i for i in rows[k] if i < k]:
            factor = rows[i][k] / piv
            for j, v in rows[k].items():
                if j >= k:
                    continue
                new = rows[i].get(j, Fraction(0)) - factor * v
                if new:
                    rows[i][j] = new
                else:
                    rows[i].pop(j, None)
            del rows[i][k]
    return True


def to_dot(graph: ResolutionGraph) -> str:
    """Deterministic DOT rendering of the dual graph."""
    out = [f'graph "resolution_r{graph.r}_d{graph.d}" {{']
    names = []
    for name, genus, weight in graph.iter_vertices():
        label = f"w={weight}"
        if name == "c":
            label += f" g={genus}"
        out.append(f'  {name} [label="{label}"];')
        names.append(name)
    for i, j in graph.edge_list():
        out.append(f"  {names[i]} -- {names[j]};")
    out.append("}")
    return "\n".join(out) + "\n"
