"""Resistor networks: exact Laplacian oracle, Wu's double sum and the 2xN closed forms.

Grid nodes are addressed as ``(row, col)`` with 0-based indices and are
numbered row-major, ``row * cols + col``.  In Wu's formula the row index is
``x`` (running over M = rows values) and the column index is ``y``.

Edge-list files: the first non-comment line is ``nodes <count>``; every other
non-blank line is ``u v`` with 0-based node indices (one unit resistor).
Text after ``#`` is ignored.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Sequence, Tuple

import mpmath

from .errors import CoordinateOutOfRange, DisconnectedGraph, ParityViolation, SameNode
from .exact import ONE, SQRT3, TWO_MINUS_ROOT3, QuadraticValue, as_rational, quad_pow, quad_to_rational
from .power_sums import DEFAULT_PRECISION_BITS, check_precision

Edge = Tuple[int, int]


@dataclass(frozen=True)
class UnitGraph:
    """Undirected multigraph of resistors; unit resistance unless ``resistances`` is given."""

    node_count: int
    edges: Tuple[Edge, ...]
    resistances: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        if not isinstance(self.node_count, int) or self.node_count < 1:
            raise ValueError(f"node_count must be a positive integer, got {self.node_count!r}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise ValueError(f"edge ({u}, {v}) references a node outside 0..{self.node_count - 1}")
        object.__setattr__(self, "edges", edges)
        if self.resistances is not None:
            rs = tuple(as_rational(r) for r in self.resistances)
            if len(rs) != len(edges):
                raise ValueError("one resistance per edge is required")
            if any(r <= 0 for r in rs):
                raise ValueError("resistances must be positive")
            object.__setattr__(self, "resistances", rs)

    def conductances(self) -> Iterable[Tuple[int, int, Fraction]]:
        for i, (u, v) in enumerate(self.edges):
            r = Fraction(1) if self.resistances is None else self.resistances[i]
            yield u, v, 1 / r

    def is_connected(self) -> bool:
        adj = [[] for _ in range(self.node_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        queue = deque([0])
        while queue:
            for nxt in adj[queue.popleft()]:
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return len(seen) == self.node_count

    def require_connected(self) -> None:
        if not self.is_connected():
            raise DisconnectedGraph("the graph is not connected")

    # -- edge-list text format ---------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "UnitGraph":
        count = None
        edges = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if count is None:
                if len(fields) != 2 or fields[0] != "nodes":
                    raise ValueError(f"line {lineno}: expected 'nodes <count>'")
                count = int(fields[1])
                continue
            if len(fields) != 2:
                raise ValueError(f"line {lineno}: expected 'u v'")
            edges.append((int(fields[0]), int(fields[1])))
        if count is None:
            raise ValueError("missing 'nodes <count>' header")
        return cls(count, tuple(edges))

    @classmethod
    def from_file(cls, path) -> "UnitGraph":
        return cls.parse(Path(path).read_text())

    def format(self) -> str:
        if self.resistances is not None:
            raise ValueError("the edge-list format only describes unit resistors")
        lines = [f"nodes {self.node_count}"] + [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def path_graph(n: int) -> UnitGraph:
    return UnitGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> UnitGraph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 nodes")
    return UnitGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


@dataclass(frozen=True)
class GridNetwork:
    rows: int
    cols: int
    horizontal_resistance: Fraction = Fraction(1)
    vertical_resistance: Fraction = Fraction(1)

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1 or self.rows * self.cols < 2:
            raise ValueError("a grid needs positive dimensions and at least two nodes")
        object.__setattr__(self, "horizontal_resistance", as_rational(self.horizontal_resistance))
        object.__setattr__(self, "vertical_resistance", as_rational(self.vertical_resistance))

    def node(self, row: int, col: int) -> int:
        if not (0 <= row < self.rows and 0 <= col < self.cols):
            raise CoordinateOutOfRange(f"({row}, {col}) is outside a {self.rows}x{self.cols} grid")
        return row * self.cols + col

    def coordinates(self, index: int) -> Tuple[int, int]:
        return divmod(index, self.cols)

    def to_graph(self) -> UnitGraph:
        edges, res = [], []
        for r in range(self.rows):
            for c in range(self.cols):
                if c + 1 < self.cols:
                    edges.append((self.node(r, c), self.node(r, c + 1)))
                    res.append(self.horizontal_resistance)
                if r + 1 < self.rows:
                    edges.append((self.node(r, c), self.node(r + 1, c)))
                    res.append(self.vertical_resistance)
        unit = all(x == 1 for x in res)
        return UnitGraph(self.rows * self.cols, tuple(edges), None if unit else tuple(res))


def grid_graph(rows: int, cols: int) -> UnitGraph:
    return GridNetwork(rows, cols).to_graph()


# -- exact Laplacian oracle ------------------------------------------------------

def _reduced_laplacian(graph: UnitGraph, ground: int):
    n = graph.node_count
    L = [[Fraction(0)] * n for _ in range(n)]
    for u, v, g in graph.conductances():
        L[u][u] += g
        L[v][v] += g
        L[u][v] -= g
        L[v][u] -= g
    keep = [i for i in range(n) if i != ground]
    return [[L[i][j] for j in keep] for i in keep], keep


def _solve(A, b):
    """Gaussian elimination over the rationals; A is square and nonsingular."""
    n = len(A)
    M = [row[:] + [b[i]] for i, row in enumerate(A)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[pivot] = M[pivot], M[col]
        p = M[col][col]
        for r in range(col + 1, n):
            f = M[r][col]
            if f:
                f /= p
                row, prow = M[r], M[col]
                for k in range(col, n + 1):
                    row[k] -= f * prow[k]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = M[i][n] - sum(M[i][k] * x[k] for k in range(i + 1, n))
        x[i] = acc / M[i][i]
    return x


def _inverse(A):
    n = len(A)
    M = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[pivot] = M[pivot], M[col]
        inv_p = 1 / M[col][col]
        M[col] = [x * inv_p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                row, prow = M[r], M[col]
                for k in range(2 * n):
                    if prow[k]:
                        row[k] -= f * prow[k]
    return [row[n:] for row in M]


def laplacian_resistance(graph: UnitGraph, a: int, b: int) -> Fraction:
    """Effective resistance between ``a`` and ``b``: ground b, inject unit current at a, read V_a."""
    if a == b:
        raise SameNode(f"resistance between node {a} and itself")
    for x in (a, b):
        if not 0 <= x < graph.node_count:
            raise CoordinateOutOfRange(f"node {x} is outside 0..{graph.node_count - 1}")
    graph.require_connected()
    A, keep = _reduced_laplacian(graph, b)
    rhs = [Fraction(int(i == a)) for i in keep]
    return _solve(A, rhs)[keep.index(a)]


def effective_resistances(graph: UnitGraph) -> dict:
    """All pairwise effective resistances ``{(a, b): R}`` for a < b.

    With G the inverse of the Laplacian grounded at the last node (and
    G = 0 on that node), R_ab = G_aa + G_bb - 2 G_ab.
    """
    graph.require_connected()
    n = graph.node_count
    if n == 1:
        return {}
    A, _ = _reduced_laplacian(graph, n - 1)
    G = _inverse(A)
    m = n - 1
    out = {}
    for i in range(m):
        out[(i, m)] = G[i][i]
        for j in range(i + 1, m):
            out[(i, j)] = G[i][i] + G[j][j] - 2 * G[i][j]
    return out


def kirchhoff_exact(graph: UnitGraph) -> Fraction:
    """Sum of effective resistances over unordered node pairs."""
    return sum(effective_resistances(graph).values(), Fraction(0))


def path_kirchhoff(N: int) -> Fraction:
    """Kirchhoff index (N^3 - N)/6 of the path on N nodes."""
    if not isinstance(N, int) or N < 1:
        raise ValueError("N must be a positive integer")
    return Fraction(N ** 3 - N, 6)


# -- Wu's double sum --------------------------------------------------------------

def wu_resistance(net: GridNetwork, p1: Sequence[int], p2: Sequence[int],
                  precision_bits: int = DEFAULT_PRECISION_BITS):
    """Two-point resistance of a free-boundary M x N grid from Wu's double sum.

    ``p = (x, y)`` with x the row (0..M-1, angle theta_m = m pi/M) and y the
    column (0..N-1, angle phi_n = n pi/N).  r is the resistance of bonds
    along x and s of bonds along y.
    """
    check_precision(precision_bits)
    M, N = net.rows, net.cols
    (x1, y1), (x2, y2) = p1, p2
    net.node(x1, y1)
    net.node(x2, y2)
    r, s = net.vertical_resistance, net.horizontal_resistance
    with mpmath.workprec(precision_bits):
        rm = mpmath.mpf(r.numerator) / r.denominator
        sm = mpmath.mpf(s.numerator) / s.denominator
        total = rm * abs(x1 - x2) / N + sm * abs(y1 - y2) / M
        half = mpmath.mpf(1) / 2
        th = [m * mpmath.pi / M for m in range(M)]
        ph = [n * mpmath.pi / N for n in range(N)]
        cx1 = [mpmath.cos((x1 + half) * t) for t in th]
        cx2 = [mpmath.cos((x2 + half) * t) for t in th]
        cy1 = [mpmath.cos((y1 + half) * t) for t in ph]
        cy2 = [mpmath.cos((y2 + half) * t) for t in ph]
        wx = [(1 - mpmath.cos(t)) / rm for t in th]
        wy = [(1 - mpmath.cos(t)) / sm for t in ph]
        terms = [(cx1[m] * cy1[n] - cx2[m] * cy2[n]) ** 2 / (wx[m] + wy[n])
                 for m in range(1, M) for n in range(1, N)]
        return +(total + 2 * mpmath.fsum(terms) / (M * N))


# -- 2 x N closed forms in Q(sqrt 3) ----------------------------------------------

def _geometric_ratio(n: int) -> QuadraticValue:
    """rho^n / (1 - rho^n) with rho = 2 - sqrt 3."""
    p = quad_pow(TWO_MINUS_ROOT3, n)
    return p / (ONE - p)


def corner_to_corner_2xN_quadratic(N: int) -> QuadraticValue:
    """(N - 1)/2 + sqrt3 rho^N/(1 - rho^N) + (sqrt3 - 1)/2, kept in Q(sqrt 3)."""
    if not isinstance(N, int) or N < 1:
        raise ValueError("N must be a positive integer")
    return Fraction(N - 1, 2) + SQRT3 * _geometric_ratio(N) + (SQRT3 - 1) / 2


def corner_to_corner_2xN(N: int) -> Fraction:
    """Corner-to-corner resistance of the 2 x N grid; every N >= 1, odd or even."""
    return quad_to_rational(corner_to_corner_2xN_quadratic(N))


def geometric_cos_ratio_sum(N: int, part: str = "full") -> QuadraticValue:
    """Closed forms for sums of 1/(1 - (2/3) cos^2 t).

    ``full``: t = n pi/N, n = 1..N-1 (any N >= 1).
    ``half``: t = n pi/N, n = 1..N/2-1 (N even).
    ``odd``:  t = (2n-1) pi/(2N), n = 1..N/2 (N even).
    """
    if not isinstance(N, int) or N < 1:
        raise ValueError("N must be a positive integer")
    if part == "full":
        return -3 + 6 * N * _geometric_ratio(N) / SQRT3 + SQRT3 * N
    if part not in ("half", "odd"):
        raise ValueError(f"unknown part {part!r}")
    if N % 2:
        raise ParityViolation(f"the {part} sum is defined for even N")
    if part == "half":
        return -2 + 3 * N * _geometric_ratio(N) / SQRT3 + SQRT3 * N / 2
    p_n = quad_pow(TWO_MINUS_ROOT3, N)
    p_2n = p_n * p_n
    return (3 * N * p_2n - 3 * N * p_n) / (SQRT3 * (ONE - p_2n)) + SQRT3 * N / 2


def oracle_cos_ratio_sum(N: int, part: str = "full", precision_bits: int = DEFAULT_PRECISION_BITS):
    check_precision(precision_bits)
    with mpmath.workprec(precision_bits):
        if part == "full":
            angles = [n * mpmath.pi / N for n in range(1, N)]
        elif part == "half":
            angles = [n * mpmath.pi / N for n in range(1, N // 2)]
        elif part == "odd":
            angles = [(2 * n - 1) * mpmath.pi / (2 * N) for n in range(1, N // 2 + 1)]
        else:
            raise ValueError(f"unknown part {part!r}")
        return +mpmath.fsum(1 / (1 - mpmath.mpf(2) / 3 * mpmath.cos(t) ** 2) for t in angles)


def kirchhoff_2xN_quadratic(N: int) -> QuadraticValue:
    if not isinstance(N, int) or N < 1:
        raise ValueError("N must be a positive integer")
    bracket = -2 + 6 * N * _geometric_ratio(2 * N) / SQRT3 + SQRT3 * N
    return Fraction(N) + Fraction(N ** 3 - N, 3) + bracket * Fraction(N, 3)


def kirchhoff_2xN(N: int) -> Fraction:
    """Kirchhoff index of the 2 x N grid, exact, for every N >= 1."""
    return quad_to_rational(kirchhoff_2xN_quadratic(N))


def kirchhoff_2xN_spectral(N: int, precision_bits: int = DEFAULT_PRECISION_BITS):
    """N + (N^3 - N)/3 + N sum_{n=1}^{N-1} 1/(3 (1 - (2/3) cos^2(n pi/2N))), numerically."""
    check_precision(precision_bits)
    with mpmath.workprec(precision_bits):
        s = mpmath.fsum(1 / (3 * (1 - mpmath.mpf(2) / 3 * mpmath.cos(n * mpmath.pi / (2 * N)) ** 2))
                        for n in range(1, N))
        return +(N + mpmath.mpf(N ** 3 - N) / 3 + N * s)
