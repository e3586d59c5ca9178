"""Local invariants of two-qubit operators under unit-determinant local actions.

A 4x4 operator R has one linear invariant (its trace) and ten quadratic
invariants built by contracting two copies of R with the epsilon and delta
tensors.  Six linear identities reduce those ten to five independent ones.
Each quadratic invariant is implemented twice: as a closed matrix expression
(fast path) and as the literal index contraction (oracle), and the two are
kept as mutual checks.

Invariance caveat: I1 and I2_1..I2_8 contract both copies of R on the same
two qubits and are invariant under independent (Q1, Q2).  The two-copy pair
I2_9, I2_10 places the second copy on qubits 2 and 3, so the contraction
pairs a Q2-transforming slot with a Q1-transforming one: individually they
are invariant only under the diagonal action Q1 = Q2, while their sum equals
I1^2 identically and is therefore fully invariant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .matrix_core import (
    PAULI_Y,
    as_matrix,
    default_tol,
    partial_trace,
    partial_transpose,
    tensor_product,
)
from .yang_baxter import CatalogEntry, assemble, catalog_entry

__all__ = [
    "InvariantSet",
    "EigenReport",
    "linear_invariant",
    "quadratic_invariants",
    "contraction_oracle",
    "two_copy_invariants",
    "check_identities",
    "xtype_closed_forms",
    "reconstruct_params",
    "class_eigen_report",
    "random_sl2",
    "INDEPENDENT_COUNTS",
]

_EPS = np.array([[0, 1], [-1, 0]], dtype=complex)


@dataclass(frozen=True)
class InvariantSet:
    """The linear invariant I1 and quadratic invariants I2_1 .. I2_10."""

    I1: complex
    I2: tuple[complex, ...]

    def __post_init__(self):
        if len(self.I2) != 10:
            raise ValueError("expected ten quadratic invariants")

    def q(self, r: int) -> complex:
        """The r-th quadratic invariant (1-based)."""
        return self.I2[r - 1]

    def to_json(self) -> dict:
        out = {"I1": [self.I1.real, self.I1.imag]}
        for r, v in enumerate(self.I2, start=1):
            out[f"I2_{r}"] = [v.real, v.imag]
        return out


def linear_invariant(r) -> complex:
    """I1 = Tr R."""
    return complex(np.trace(_as4(r)))


def _as4(r) -> np.ndarray:
    r = as_matrix(r)
    if r.shape != (4, 4):
        raise ValueError("invariants are defined for 4x4 operators")
    return r


def quadratic_invariants(r) -> InvariantSet:
    """All ten quadratic invariants via their closed matrix expressions."""
    r = _as4(r)
    y1 = tensor_product(PAULI_Y, np.eye(2))
    y2 = tensor_product(np.eye(2), PAULI_Y)
    yy = tensor_product(PAULI_Y, PAULI_Y)
    t1r = partial_trace(r, 1)
    t2r = partial_trace(r, 2)
    th1 = partial_transpose(r, 1)
    th2 = partial_transpose(r, 2)
    vals = (
        np.trace(r @ r),
        np.trace(t2r @ t2r),
        np.trace(t1r @ t1r),
        np.trace(y1 @ th1 @ y1 @ r),
        np.trace(r @ y2 @ th2 @ y2),
        np.trace(PAULI_Y @ partial_trace(th1, 2) @ PAULI_Y @ t2r),
        np.trace(t1r @ PAULI_Y @ partial_trace(th2, 1) @ PAULI_Y),
        np.trace(r.T @ yy @ r @ yy),
        np.trace(t1r @ t2r),
        np.trace(PAULI_Y @ partial_trace(th2, 1) @ PAULI_Y @ t2r),
    )
    return InvariantSet(I1=linear_invariant(r), I2=tuple(complex(v) for v in vals))


# Literal contraction patterns.  Index order of one R copy is
# (row1, row2, col1, col2); the one-copy constructions pair two copies of R
# on the two-qubit space, the two-copy ones (9, 10) attach the second R to
# qubits 2 and 3.
def contraction_oracle(r, which: str) -> complex:
    """Evaluate one invariant as the literal sum over all index assignments."""
    r4 = _as4(r).reshape(2, 2, 2, 2)
    rng2 = (0, 1)

    def eps(a, b):
        return complex(_EPS[a, b])

    def delta(a, b):
        return 1.0 + 0j if a == b else 0j

    if which == "I1":
        return complex(sum(r4[i1, i2, i1, i2] for i1, i2 in itertools.product(rng2, rng2)))

    single = {
        "I2_1": lambda i1, i2, ti1, ti2, j1, j2, tj1, tj2: delta(i1, tj1) * delta(ti1, j1) * delta(i2, tj2) * delta(ti2, j2),
        "I2_2": lambda i1, i2, ti1, ti2, j1, j2, tj1, tj2: delta(i1, tj1) * delta(ti1, j1) * delta(i2, ti2) * delta(j2, tj2),
        "I2_3": lambda i1, i2, ti1, ti2, j1, j2, tj1, tj2: delta(i1, ti1) * delta(j1, tj1) * delta(i2, tj2) * delta(ti2, j2),
        "I2_4": lambda i1, i2, ti1, ti2, j1, j2, tj1, tj2: eps(i1, j1) * eps(ti1, tj1) * delta(i2, tj2) * delta(ti2, j2),
        "I2_5": lambda i1, i2, ti1, ti2, j1, j2, tj1, tj2: delta(i1, tj1) * delta(ti1, j1) * eps(i2, j2) * eps(ti2, tj2),
        "I2_6": lambda i1, i2, ti1, ti2, j1, j2, tj1, tj2: eps(i1, j1) * eps(ti1, tj1) * delta(i2, ti2) * delta(j2, tj2),
        "I2_7": lambda i1, i2, ti1, ti2, j1, j2, tj1, tj2: delta(i1, ti1) * delta(j1, tj1) * eps(i2, j2) * eps(ti2, tj2),
        "I2_8": lambda i1, i2, ti1, ti2, j1, j2, tj1, tj2: eps(i1, j1) * eps(ti1, tj1) * eps(i2, j2) * eps(ti2, tj2),
    }
    if which in single:
        weight = single[which]
        total = 0j
        for idx in itertools.product(rng2, repeat=8):
            i1, i2, ti1, ti2, j1, j2, tj1, tj2 = idx
            w = weight(*idx)
            if w:
                total += r4[i1, i2, ti1, ti2] * r4[j1, j2, tj1, tj2] * w
        return complex(total)

    if which in ("I2_9", "I2_10"):
        total = 0j
        for i1, i2, ti2, j2, j3, tj2, tj3 in itertools.product(rng2, repeat=7):
            if j3 != tj3:
                continue
            if which == "I2_9":
                w = delta(i2, tj2) * delta(ti2, j2)
            else:
                w = eps(i2, j2) * eps(ti2, tj2)
            if w:
                total += r4[i1, i2, i1, ti2] * r4[j2, j3, tj2, tj3] * w
        return complex(total)

    raise ValueError(f"unknown invariant id {which!r}")


def two_copy_invariants(r) -> tuple[complex, complex]:
    """I2_9 and I2_10 via the explicit 8x8 two-copy operators R12 and R23."""
    r = _as4(r)
    i2 = np.eye(2, dtype=complex)
    r12 = tensor_product(r, i2)
    r23 = tensor_product(i2, r)
    i29 = complex(np.trace(r12 @ r23))
    # middle-qubit partial transpose of R23, sandwiched by Y on qubit 2
    t = r23.reshape(2, 2, 2, 2, 2, 2)
    th = np.einsum("abcdef->aecdbf", t).reshape(8, 8)
    y2 = tensor_product(tensor_product(i2, PAULI_Y), i2)
    i210 = complex(np.trace(r12 @ y2 @ th @ y2))
    return i29, i210


def check_identities(inv: InvariantSet) -> tuple[float, ...]:
    """Residuals of the six linear relations among I1^2 and the I2_r."""
    q = inv.q
    vals = (
        inv.I1**2 - q(9) - q(10),
        q(1) + q(6) + q(7) - q(8) - q(9) - q(10),
        q(2) + q(6) - q(9) - q(10),
        q(3) + q(7) - q(9) - q(10),
        q(4) - q(6) + q(8),
        q(5) - q(7) + q(8),
    )
    return tuple(abs(v) for v in vals)


def xtype_closed_forms(h) -> dict[str, complex]:
    """The six X-type closed forms: I1 and I2_{4,5,8,9,10} in terms of h."""
    if hasattr(h, "as_tuple"):
        h1, h2, h3, h4, h5, h6, h7, h8 = h.as_tuple()
    else:
        h1, h2, h3, h4, h5, h6, h7, h8 = h
    return {
        "I1": h1 + h3 + h6 + h8,
        "I2_4": 2 * (h1 * h6 - h4 * h5 - h2 * h7 + h3 * h8),
        "I2_5": 2 * (h1 * h3 - h4 * h5 - h2 * h7 + h6 * h8),
        "I2_8": 2 * (h4 * h5 + h3 * h6 + h2 * h7 + h1 * h8),
        "I2_9": h1**2 + h8**2 + (h1 + h8) * (h3 + h6) + 2 * h3 * h6,
        "I2_10": h3**2 + h6**2 + (h1 + h8) * (h3 + h6) + 2 * h1 * h8,
    }


def reconstruct_params(inv: InvariantSet, eigenvalues, tol: float | None = None) -> dict[str, complex]:
    """Recover X-type parameter combinations from invariants and eigenvalues.

    ``eigenvalues`` is the labeled tuple (lam1+, lam1-, lam2+, lam2-).  The
    square roots introduce the inherent {h1, h8} and {h3, h6} pair
    ambiguities: callers should compare the returned pairs as unordered sets.
    ``h2*h7`` and ``h4*h5`` are branch-free.

    Raises ValueError when the invariants and eigenvalues cannot come from a
    common source (detected through the trace, which both must reproduce).
    """
    tol = default_tol() if tol is None else tol
    l1p, l1m, l2p, l2m = (complex(v) for v in eigenvalues)
    lam_sum = l1p + l1m + l2p + l2m
    scale = max(abs(inv.I1), abs(lam_sum), 1.0)
    if abs(inv.I1 - lam_sum) > 1e3 * tol * scale:
        raise ValueError(
            "inconsistent inputs: eigenvalue sum does not reproduce the trace "
            f"({lam_sum} vs {inv.I1})"
        )
    q = inv.q
    half_sum45 = (q(4) + q(5)) / 2
    s1 = np.sqrt(q(9) - q(8) - half_sum45)
    s2 = np.sqrt(q(10) - q(8) - half_sum45)
    return {
        "h1": (l1p + l1m + s1) / 2,
        "h8": (l1p + l1m - s1) / 2,
        "h3": (l2p + l2m + s2) / 2,
        "h6": (l2p + l2m - s2) / 2,
        "h2h7": ((l1p - l1m) ** 2 - q(9) + q(8) + half_sum45) / 4,
        "h4h5": ((l2p - l2m) ** 2 - q(10) + q(8) + half_sum45) / 4,
    }


def random_sl2(rng: np.random.Generator) -> np.ndarray:
    """Random 2x2 complex matrix rescaled to unit determinant."""
    while True:
        q = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        det = np.linalg.det(q)
        if abs(det) > 1e-6:
            return q / np.sqrt(det)


# ---------------------------------------------------------------------------
# Per-class eigenvalue formulas for I2_{4,5,8,9,10}
# ---------------------------------------------------------------------------

INDEPENDENT_COUNTS = {1: 3, 2: 2, 3: 2, 4: 2, 5: 2, 6: 2, 7: 2, 8: 1, 9: 1, 10: 1, 11: 1, 12: 1}

# Each entry maps the catalog's named eigenvalue combinations to the five
# quadratic invariants.  Classes 3 and 5 share one shape.
def _formulas_c3_like(e):
    lp, lm = e["lamp"], e["lamm"]
    return {
        "I2_4": 2 * lp * (lp + 2 * lm),
        "I2_5": 2 * lm * (2 * lp + lm),
        "I2_8": 0j,
        "I2_9": 2 * (lp**2 + lm**2 + lp * lm),
        "I2_10": 2 * (lp**2 + lm**2 + 3 * lp * lm),
    }


_CLASS_FORMULAS = {
    1: lambda e: {
        "I2_4": -2 * e["lam2sq"],
        "I2_5": -2 * e["lam2sq"],
        "I2_8": 2 * (e["lam1p"] * e["lam1m"] + e["lam2sq"]),
        "I2_9": e["lam1p"] ** 2 + e["lam1m"] ** 2,
        "I2_10": 2 * e["lam1p"] * e["lam1m"],
    },
    2: lambda e: {
        "I2_4": -2 * e["lam1sq"],
        "I2_5": -2 * e["lam1sq"],
        "I2_8": 2 * (e["lam1sq"] + e["lam2"] ** 2),
        "I2_9": 2 * e["lam2"] ** 2,
        "I2_10": 2 * e["lam2"] ** 2,
    },
    3: _formulas_c3_like,
    4: lambda e: {
        "I2_4": 2 * e["lam1"] * (e["lam1"] + 2 * e["lam2"]),
        "I2_5": 2 * e["lam1"] * (e["lam1"] + 2 * e["lam2"]),
        "I2_8": 2 * e["lam1"] * (e["lam1"] - e["lam2"]),
        "I2_9": 2 * e["lam1"] * (2 * e["lam1"] + e["lam2"]),
        "I2_10": 5 * e["lam1"] ** 2 + 4 * e["lam1"] * e["lam2"] + e["lam2"] ** 2,
    },
    5: _formulas_c3_like,
    6: lambda e: {
        # symmetric in lam+-, written via e1 = lam+ + lam-, e2 = lam+ lam-
        "I2_4": 2 * e["e2"],
        "I2_5": 2 * e["e2"],
        "I2_8": 2 * e["e1"] ** 2,
        "I2_9": 2 * (e["e1"] ** 2 - e["e2"]),
        "I2_10": 2 * (e["e1"] ** 2 + e["e2"]),
    },
    7: lambda e: {
        "I2_4": -2 * e["lamm"] ** 2,
        "I2_5": -2 * e["lamm"] ** 2,
        "I2_8": 2 * (e["lamp"] ** 2 + e["lamm"] ** 2),
        "I2_9": 2 * e["lamp"] ** 2,
        "I2_10": 2 * e["lamp"] ** 2,
    },
    8: lambda e: {
        "I2_4": 2 * e["lamsum"] ** 2,
        "I2_5": 2 * e["lamsum"] ** 2,
        "I2_8": 0j,
        "I2_9": 2 * e["lamsum"] ** 2,
        "I2_10": 2 * e["lamsum"] ** 2,
    },
    9: lambda e: {
        "I2_4": -2 * e["lam"] ** 2,
        "I2_5": -2 * e["lam"] ** 2,
        "I2_8": 4 * e["lam"] ** 2,
        "I2_9": 2 * e["lam"] ** 2,
        "I2_10": 2 * e["lam"] ** 2,
    },
    10: lambda e: {
        "I2_4": -2 * e["lam"] ** 2,
        "I2_5": -2 * e["lam"] ** 2,
        "I2_8": 0j,
        "I2_9": 2 * e["lam"] ** 2,
        "I2_10": -2 * e["lam"] ** 2,
    },
    11: lambda e: {
        "I2_4": 6 * e["lam"] ** 2,
        "I2_5": 6 * e["lam"] ** 2,
        "I2_8": 0j,
        "I2_9": 6 * e["lam"] ** 2,
        "I2_10": 10 * e["lam"] ** 2,
    },
    12: lambda e: {
        "I2_4": 2 * e["lam"] ** 2,
        "I2_5": 2 * e["lam"] ** 2,
        "I2_8": 8 * e["lam"] ** 2,
        "I2_9": 6 * e["lam"] ** 2,
        "I2_10": 10 * e["lam"] ** 2,
    },
}


def _dependence_residuals(class_id: int, v: dict[str, complex]) -> tuple[float, ...]:
    """Residuals of the class's dependence relations among direct invariants."""
    i24, i25, i28, i29, i210 = v["I2_4"], v["I2_5"], v["I2_8"], v["I2_9"], v["I2_10"]
    if class_id in (1, 2):
        return (abs(i28 - (i210 - i24)),)
    if class_id in (3, 5):
        # (2 lam+^2)(2 lam-^2) = 4 (lam+ lam-)^2 with the stated substitutions
        lhs = (i24 - i210 + i29) * (i25 - i210 + i29)
        return (abs(i28), abs(lhs - (i210 - i29) ** 2 / 4))
    if class_id == 4:
        # lam1^2 = (I28+I29)/6 and lam2^2 = (I29-2 I28)^2 / (6 (I28+I29));
        # I24 and I210 then follow, written squared to stay branch-free.
        lam1sq = (i28 + i29) / 6
        lam2sq = (i29 - 2 * i28) ** 2 / (6 * (i28 + i29))
        return (
            abs(i24 - i25),
            abs((i24 - 2 * lam1sq) ** 2 - 16 * lam1sq * lam2sq),
            abs(i210 - i24 - 3 * lam1sq - lam2sq),
        )
    if class_id == 6:
        return (abs(i24 - i25),)
    if class_id == 7:
        return (abs(i28 - (i29 - i24)),)
    if class_id == 8:
        return (abs(i28), abs(i24 - i29), abs(i29 - i210))
    if class_id == 9:
        return (abs(i28 + 2 * i24), abs(i29 - i210))
    if class_id == 10:
        return (abs(i28), abs(i24 - i210), abs(i29 + i24))
    if class_id == 11:
        return (abs(i28), abs(i24 - i29), abs(5 * i24 - 3 * i210))
    if class_id == 12:
        return (abs(4 * i24 - i28), abs(3 * i24 - i29), abs(5 * i24 - i210))
    return ()


@dataclass(frozen=True)
class EigenReport:
    """Comparison of per-class eigenvalue formulas against direct evaluation."""

    entry_id: str
    eigenvalues: dict[str, complex]
    closed: dict[str, complex]
    direct: dict[str, complex]
    independent_count: int
    max_diff: float
    dependence_residuals: tuple[float, ...]
    passed: bool


def class_eigen_report(entry: CatalogEntry | str, params: dict, tol: float | None = None) -> EigenReport:
    """Evaluate the class's invariant-vs-eigenvalue formulas at given params."""
    if isinstance(entry, str):
        entry = catalog_entry(entry)
    tol = default_tol() if tol is None else tol
    h = entry.fill(params)
    inv = quadratic_invariants(assemble(h))
    direct = {f"I2_{r}": inv.q(r) for r in (4, 5, 8, 9, 10)}
    eig = entry.eigen_values(params)
    closed = _CLASS_FORMULAS[entry.class_id](eig)
    max_diff = max(abs(closed[k] - direct[k]) for k in closed)
    deps = _dependence_residuals(entry.class_id, direct)
    scale = max(max(abs(v) for v in direct.values()), 1.0)
    passed = max_diff < tol * scale and all(d < tol * scale for d in deps)
    return EigenReport(
        entry_id=entry.entry_id,
        eigenvalues=eig,
        closed=closed,
        direct=direct,
        independent_count=INDEPENDENT_COUNTS[entry.class_id],
        max_diff=max_diff,
        dependence_residuals=deps,
        passed=passed,
    )
