"""X-type braiding operators: assembly, the solution catalog, braid words.

An X-type operator is a 4x4 matrix supported on the diagonal and
anti-diagonal, parameterized by eight complex numbers h1..h8:

    [[h1, 0,  0,  h2],
     [0,  h3, h4, 0 ],
     [0,  h5, h6, 0 ],
     [h7, 0,  0,  h8]]

The catalog lists the twelve classes (38 parameter families in total) of
invertible X-type solutions of the constant Yang-Baxter equation

    (R x I)(I x R)(R x I) = (I x R)(R x I)(I x R)

as declarative constraint records, keyed "C<class>.<variant>" with variant 0
the representative.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix_core import (
    I2,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    as_matrix,
    default_tol,
    invert,
    max_norm,
    tensor_product,
)

__all__ = [
    "XTypeParams",
    "PauliExpansion",
    "BraidWord",
    "CatalogEntry",
    "CATALOG",
    "catalog_entry",
    "catalog_instantiate",
    "assemble",
    "check_ybe",
    "braid_rep",
    "rep_of_word",
    "pauli_expand",
    "lie_orbit_rank",
    "InadmissibleParamsError",
]


class InadmissibleParamsError(ValueError):
    """Parameters violate a catalog entry's admissibility constraints."""


@dataclass(frozen=True)
class XTypeParams:
    """The eight complex parameters of an X-type operator."""

    h1: complex = 0
    h2: complex = 0
    h3: complex = 0
    h4: complex = 0
    h5: complex = 0
    h6: complex = 0
    h7: complex = 0
    h8: complex = 0

    def as_tuple(self):
        return (self.h1, self.h2, self.h3, self.h4, self.h5, self.h6, self.h7, self.h8)

    def as_dict(self):
        return {f"h{k}": v for k, v in zip(range(1, 9), self.as_tuple())}


def assemble(h) -> np.ndarray:
    """Build the 4x4 X-patterned matrix from h1..h8."""
    if not isinstance(h, XTypeParams):
        h = XTypeParams(*_coerce_eight(h))
    return np.array(
        [
            [h.h1, 0, 0, h.h2],
            [0, h.h3, h.h4, 0],
            [0, h.h5, h.h6, 0],
            [h.h7, 0, 0, h.h8],
        ],
        dtype=complex,
    )


def _coerce_eight(h):
    if hasattr(h, "as_tuple"):
        return h.as_tuple()
    if isinstance(h, dict):
        return tuple(h[f"h{k}"] for k in range(1, 9))
    t = tuple(h)
    if len(t) != 8:
        raise ValueError("expected eight X-type parameters")
    return t


def check_ybe(r, tol: float | None = None) -> tuple[float, bool]:
    """Residual and verdict of the braided Yang-Baxter equation on 8x8.

    The verdict also requires invertibility, since a braiding operator is by
    definition an invertible solution (the all-ones X pattern, for example,
    satisfies the equation identically but is singular).
    """
    r = as_matrix(r)
    if r.shape != (4, 4):
        raise ValueError("YBE check expects a 4x4 operator")
    tol = default_tol() if tol is None else tol
    a = tensor_product(r, I2)
    b = tensor_product(I2, r)
    residual = max_norm(a @ b @ a - b @ a @ b)
    scale = max(max_norm(r), 1.0)
    invertible = abs(np.linalg.det(r)) > 1e-12 * scale**4
    return residual, residual < tol and invertible


def braid_rep(r, i: int, n: int) -> np.ndarray:
    """Generator sigma_i of B_n represented on n qubits: I^(i-1) x R x I^(n-i-1)."""
    r = as_matrix(r)
    if r.shape != (4, 4):
        raise ValueError("braid generators are built from a 4x4 operator")
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for {n} strands")
    out = r
    if i > 1:
        out = tensor_product(np.eye(2 ** (i - 1), dtype=complex), out)
    if i < n - 1:
        out = tensor_product(out, np.eye(2 ** (n - i - 1), dtype=complex))
    return out


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group B_n as (generator, exponent) letters.

    Canonicalization merges adjacent letters on the same generator and drops
    zero exponents; generator indices must lie in [1, strands-1].
    """

    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a braid word needs at least 2 strands")
        merged: list[list[int]] = []
        for gen, exp in self.letters:
            gen, exp = int(gen), int(exp)
            if not 1 <= gen <= self.strands - 1:
                raise ValueError(f"generator s{gen} out of range for {self.strands} strands")
            if merged and merged[-1][0] == gen:
                merged[-1][1] += exp
                if merged[-1][1] == 0:
                    merged.pop()
            elif exp != 0:
                merged.append([gen, exp])
        object.__setattr__(self, "letters", tuple((g, e) for g, e in merged))

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> "BraidWord":
        """Parse whitespace-separated tokens like "s1^3 s2^-1" (or "s2" for ^1)."""
        letters = []
        for token in text.split():
            if not token.startswith("s"):
                raise ValueError(f"bad braid token {token!r}")
            body = token[1:]
            if "^" in body:
                gen_s, exp_s = body.split("^", 1)
            else:
                gen_s, exp_s = body, "1"
            letters.append((int(gen_s), int(exp_s)))
        if strands is None:
            strands = max((g for g, _ in letters), default=1) + 1
        return cls(strands=strands, letters=tuple(letters))

    def writhe(self) -> int:
        return sum(e for _, e in self.letters)

    def __str__(self) -> str:
        return " ".join(f"s{g}^{e}" for g, e in self.letters) or "<empty>"


def rep_of_word(r, word: BraidWord) -> np.ndarray:
    """Image of a braid word, multiplying generator powers left to right."""
    n = word.strands
    out = np.eye(2**n, dtype=complex)
    r = as_matrix(r)
    inv_cache: np.ndarray | None = None
    for gen, exp in word.letters:
        if exp >= 0:
            base = r
        else:
            if inv_cache is None:
                inv_cache = invert(r)
            base = inv_cache
        g = braid_rep(base, gen, n)
        out = out @ np.linalg.matrix_power(g, abs(exp))
    return out


@dataclass(frozen=True)
class PauliExpansion:
    """Coefficients of an X-type operator on the eight supported Pauli words."""

    l: complex
    a3: complex
    a6: complex
    b9: complex
    b1: complex
    b2: complex
    b4: complex
    b5: complex

    def reassemble(self) -> np.ndarray:
        return (
            self.l * tensor_product(I2, I2)
            + self.a3 * tensor_product(PAULI_Z, I2)
            + self.a6 * tensor_product(I2, PAULI_Z)
            + self.b9 * tensor_product(PAULI_Z, PAULI_Z)
            + self.b1 * tensor_product(PAULI_X, PAULI_X)
            + self.b2 * tensor_product(PAULI_X, PAULI_Y)
            + self.b4 * tensor_product(PAULI_Y, PAULI_X)
            + self.b5 * tensor_product(PAULI_Y, PAULI_Y)
        )


def pauli_expand(h) -> PauliExpansion:
    """Expand an X-type operator over {II, ZI, IZ, ZZ, XX, XY, YX, YY}."""
    h1, h2, h3, h4, h5, h6, h7, h8 = _coerce_eight(h)
    return PauliExpansion(
        l=(h1 + h3 + h6 + h8) / 4,
        a3=(h1 + h3 - h6 - h8) / 4,
        a6=(h1 - h3 + h6 - h8) / 4,
        b9=(h1 - h3 - h6 + h8) / 4,
        b1=(h2 + h4 + h5 + h7) / 4,
        b2=1j * (h2 - h4 + h5 - h7) / 4,
        b4=1j * (h2 + h4 - h5 - h7) / 4,
        b5=(-h2 + h4 + h5 - h7) / 4,
    )


_GENERATORS = (
    ("X1", PAULI_X, 1),
    ("Y1", PAULI_Y, 1),
    ("Z1", PAULI_Z, 1),
    ("X2", PAULI_X, 2),
    ("Y2", PAULI_Y, 2),
    ("Z2", PAULI_Z, 2),
)

_XTYPE_SUPPORT = np.array(
    [
        [True, False, False, True],
        [False, True, True, False],
        [False, True, True, False],
        [True, False, False, True],
    ]
)


def lie_orbit_rank(h, rank_tol: float = 1e-8) -> tuple[int, dict[str, dict]]:
    """Rank of the local-algebra orbit directions at an X-type operator.

    Commutes the operator with the six one-qubit generators {X, Y, Z} x I and
    I x {X, Y, Z}, stacks the flattened commutators, and counts singular
    values above rank_tol times the largest.  The report notes which
    generators keep the commutator inside the X pattern (only Z1 and Z2 do,
    for generic parameters).
    """
    r = assemble(h)
    rows = []
    report: dict[str, dict] = {}
    for name, g, pos in _GENERATORS:
        full = tensor_product(g, I2) if pos == 1 else tensor_product(I2, g)
        comm = full @ r - r @ full
        rows.append(comm.ravel())
        off_pattern = max_norm(comm[~_XTYPE_SUPPORT]) if comm[~_XTYPE_SUPPORT].size else 0.0
        report[name] = {
            "nonzero": max_norm(comm) > rank_tol,
            "preserves_xtype": off_pattern <= rank_tol * max(max_norm(comm), 1.0),
        }
    stack = np.array(rows)
    svals = np.linalg.svd(stack, compute_uv=False)
    cutoff = rank_tol * (svals[0] if svals.size else 0.0)
    rank = int(np.sum(svals > cutoff))
    return rank, report


# --------------------------------------------------------------------------
# Solution catalog
# --------------------------------------------------------------------------

_SAFE_ENV = {"sqrt": lambda z: complex(np.sqrt(complex(z))), "I": 1j}


def _eval_expr(expr: str, params: dict[str, complex]) -> complex:
    return complex(eval(expr, {"__builtins__": {}}, {**_SAFE_ENV, **params}))


@dataclass(frozen=True)
class CatalogEntry:
    """One parameter family of X-type Yang-Baxter solutions.

    ``constraints`` assigns every non-free slot an expression over the free
    parameters (zeros included), so the record is fully declarative.
    ``eigen_named`` gives the class's canonical eigenvalue combinations used
    by the per-class invariant formulas; squared combinations are stored
    where the defining formulas take a square root, keeping the record
    branch-free.
    """

    class_id: int
    variant_id: int
    free_params: tuple[str, ...]
    constraints: dict[str, str]
    eigen_pattern: str
    eigen_named: dict[str, str]
    nonzero: tuple[str, ...] = ()
    enhancement_refs: tuple[str, ...] = ()

    @property
    def entry_id(self) -> str:
        return f"C{self.class_id}.{self.variant_id}"

    def fill(self, params: dict[str, complex]) -> XTypeParams:
        missing = [k for k in self.free_params if k not in params]
        if missing:
            raise InadmissibleParamsError(f"{self.entry_id}: missing parameters {missing}")
        extra = [k for k in params if k not in self.free_params]
        if extra:
            raise InadmissibleParamsError(f"{self.entry_id}: unexpected parameters {extra}")
        env = {k: complex(params[k]) for k in self.free_params}
        for expr in self.nonzero:
            if abs(_eval_expr(expr, env)) < 1e-12:
                raise InadmissibleParamsError(
                    f"{self.entry_id}: requires nonzero {expr}"
                )
        full = dict(env)
        for slot, expr in self.constraints.items():
            full[slot] = _eval_expr(expr, env)
        return XTypeParams(**{f"h{k}": full.get(f"h{k}", 0j) for k in range(1, 9)})

    def eigen_values(self, params: dict[str, complex]) -> dict[str, complex]:
        env = {k: complex(params[k]) for k in self.free_params}
        return {name: _eval_expr(expr, env) for name, expr in self.eigen_named.items()}

    def random_params(self, rng: np.random.Generator, scale: float = 1.0) -> dict[str, complex]:
        """Draw admissible free parameters (re/im standard normal, rejection)."""
        for _ in range(100):
            params = {
                k: complex(rng.normal(scale=scale), rng.normal(scale=scale))
                for k in self.free_params
            }
            try:
                h = self.fill(params)
            except InadmissibleParamsError:
                continue
            if abs(np.linalg.det(assemble(h))) > 1e-6:
                return params
        raise RuntimeError(f"could not draw admissible parameters for {self.entry_id}")


def _entry(class_id, variant_id, free, constraints, pattern, eigen, nonzero=(), refs=()):
    return CatalogEntry(
        class_id=class_id,
        variant_id=variant_id,
        free_params=tuple(free),
        constraints=constraints,
        eigen_pattern=pattern,
        eigen_named=eigen,
        nonzero=tuple(nonzero),
        enhancement_refs=tuple(refs),
    )


def _build_catalog() -> dict[str, CatalogEntry]:
    entries: list[CatalogEntry] = []

    entries.append(
        _entry(
            1, 0, ("h1", "h4", "h5", "h8"),
            {"h2": "0", "h3": "0", "h6": "0", "h7": "0"},
            "lam1+=h1, lam1-=h8, lam2+-=+-sqrt(h4*h5)",
            {"lam1p": "h1", "lam1m": "h8", "lam2sq": "h4*h5"},
            refs=("C1.I", "C1.Z", "C1.I+Z", "C1.I-Z"),
        )
    )
    entries.append(
        _entry(
            2, 0, ("h2", "h3", "h7"),
            {"h1": "0", "h4": "0", "h5": "0", "h8": "0", "h6": "h3"},
            "lam1+-=+-sqrt(h2*h7), lam2=h3 (x2)",
            {"lam1sq": "h2*h7", "lam2": "h3"},
            refs=("C2.I",),
        )
    )

    # Class 3: two equal eigenvalue pairs {h1, h8}.  Variants 4-7 put the
    # h1+h8 constraint on h3 instead of h6, which swaps I2_4 with I2_5 and
    # hence the lam+/lam- labels.
    c3 = [
        (("h1", "h7", "h8"), {"h2": "0", "h3": "0", "h4": "-h1", "h5": "h8", "h6": "h1+h8"}, "h1", "h8"),
        (("h1", "h7", "h8"), {"h2": "0", "h3": "0", "h4": "h1", "h5": "-h8", "h6": "h1+h8"}, "h1", "h8"),
        (("h1", "h2", "h8"), {"h3": "0", "h7": "0", "h4": "-h8", "h5": "h1", "h6": "h1+h8"}, "h1", "h8"),
        (("h1", "h2", "h8"), {"h3": "0", "h7": "0", "h4": "h8", "h5": "-h1", "h6": "h1+h8"}, "h1", "h8"),
        (("h1", "h2", "h8"), {"h6": "0", "h7": "0", "h4": "-h1", "h5": "h8", "h3": "h1+h8"}, "h8", "h1"),
        (("h1", "h2", "h8"), {"h6": "0", "h7": "0", "h4": "h1", "h5": "-h8", "h3": "h1+h8"}, "h8", "h1"),
        (("h1", "h7", "h8"), {"h2": "0", "h6": "0", "h4": "-h8", "h5": "h1", "h3": "h1+h8"}, "h8", "h1"),
        (("h1", "h7", "h8"), {"h2": "0", "h6": "0", "h4": "h8", "h5": "-h1", "h3": "h1+h8"}, "h8", "h1"),
    ]
    for k, (free, cons, lp, lm) in enumerate(c3):
        entries.append(
            _entry(3, k, free, cons, f"lam+={lp} (x2), lam-={lm} (x2)",
                   {"lamp": lp, "lamm": lm},
                   refs=("C3.Z", "C3.mu2", "C3.mu3") if k == 0 else ())
        )

    entries.append(
        _entry(
            4, 0, ("h1", "h4", "h6"),
            {"h2": "0", "h3": "0", "h7": "0", "h5": "h1/h4*(h1-h6)", "h8": "h1"},
            "lam1=h1 (x3), lam2=-h1+h6",
            {"lam1": "h1", "lam2": "-h1+h6"},
            nonzero=("h4",),
            refs=("C4.I", "C4.Z", "C4.I+Z", "C4.I-Z", "C4.mu5"),
        )
    )
    entries.append(
        _entry(
            4, 1, ("h1", "h3", "h4"),
            {"h2": "0", "h6": "0", "h7": "0", "h5": "h1/h4*(h1-h3)", "h8": "h1"},
            "lam1=h1 (x3), lam2=-h1+h3",
            {"lam1": "h1", "lam2": "-h1+h3"},
            nonzero=("h4",),
        )
    )
    entries.append(
        _entry(
            5, 0, ("h1", "h4", "h6"),
            {"h2": "0", "h3": "0", "h7": "0", "h5": "h1/h4*(h1-h6)", "h8": "-h1+h6"},
            "lam+=h1 (x2), lam-=-h1+h6 (x2)",
            {"lamp": "h1", "lamm": "-h1+h6"},
            nonzero=("h4",),
            refs=("C5.Z", "C5.I+Z", "C5.I-Z"),
        )
    )
    entries.append(
        _entry(
            5, 1, ("h1", "h3", "h4"),
            # h3 takes over h6's role, swapping the lam+/lam- labels
            {"h2": "0", "h6": "0", "h7": "0", "h5": "h1/h4*(h1-h3)", "h8": "-h1+h3"},
            "lam+=-h1+h3 (x2), lam-=h1 (x2)",
            {"lamp": "-h1+h3", "lamm": "h1"},
            nonzero=("h4",),
        )
    )

    c6_eigen = {"e1": "h1+h8", "e2": "-(h1-h8)**2/4"}  # lam+ + lam-, lam+ * lam-
    entries.append(
        _entry(
            6, 0, ("h1", "h2", "h8"),
            {
                "h3": "(h1+h8)/2",
                "h6": "(h1+h8)/2",
                "h4": "-sqrt((h1**2+h8**2)/2)",
                "h5": "-sqrt((h1**2+h8**2)/2)",
                "h7": "(h1+h8)**2/(4*h2)",
            },
            "lam+- = [h1+h8 +- sqrt(2(h1^2+h8^2))]/2 (x2 each)",
            c6_eigen,
            nonzero=("h2",),
            refs=("C6.Z", "C6.mu2", "C6.mu3", "C6.mu4", "C6.mu5"),
        )
    )
    entries.append(
        _entry(
            6, 1, ("h1", "h2", "h8"),
            {
                "h3": "(h1+h8)/2",
                "h6": "(h1+h8)/2",
                "h4": "sqrt((h1**2+h8**2)/2)",
                "h5": "sqrt((h1**2+h8**2)/2)",
                "h7": "(h1+h8)**2/(4*h2)",
            },
            "lam+- = [h1+h8 +- sqrt(2(h1^2+h8^2))]/2 (x2 each)",
            c6_eigen,
            nonzero=("h2",),
        )
    )

    c7_eigen = {"lamp": "h1+h3", "lamm": "h1-h3"}
    entries.append(
        _entry(
            7, 0, ("h1", "h2", "h3"),
            {"h4": "-h1", "h5": "-h1", "h6": "h3", "h8": "h1", "h7": "h3**2/h2"},
            "lam+=h1+h3 (x2), +-lam-=+-(h1-h3)",
            c7_eigen,
            nonzero=("h2",),
            refs=("C7.I",),
        )
    )
    entries.append(
        _entry(
            7, 1, ("h1", "h2", "h3"),
            {"h4": "h1", "h5": "h1", "h6": "h3", "h8": "h1", "h7": "h3**2/h2"},
            "lam+=h1+h3 (x2), +-lam-=+-(h1-h3)",
            c7_eigen,
            nonzero=("h2",),
        )
    )

    c8_eigen = {"lamsum": "2*h1"}  # lam+ + lam- = (1+i)h1 + (1-i)h1
    for k, (h4e, h5e) in enumerate([("-h1", "h1"), ("h1", "-h1")]):
        entries.append(
            _entry(
                8, k, ("h1", "h2"),
                {"h3": "h1", "h6": "h1", "h8": "h1", "h4": h4e, "h5": h5e,
                 "h7": "-h1**2/h2"},
                "lam+- = (1 +- I) h1 (x2 each)",
                c8_eigen,
                nonzero=("h2",),
                refs=("C8.I",) if k == 0 else (),
            )
        )

    c9 = [
        (("h1", "h7"), {"h2": "0", "h3": "0", "h6": "0", "h4": "-h1", "h5": "-h1", "h8": "h1"}),
        (("h1", "h2"), {"h3": "0", "h6": "0", "h7": "0", "h4": "-h1", "h5": "-h1", "h8": "h1"}),
        (("h1", "h7"), {"h2": "0", "h3": "0", "h6": "0", "h4": "h1", "h5": "h1", "h8": "h1"}),
        (("h1", "h2"), {"h3": "0", "h6": "0", "h7": "0", "h4": "h1", "h5": "h1", "h8": "h1"}),
    ]
    for k, (free, cons) in enumerate(c9):
        entries.append(
            _entry(9, k, free, cons, "lam=h1 (x3), -lam=-h1", {"lam": "h1"},
                   refs=("C9.I",) if k == 0 else ())
        )

    c10 = [
        (("h1", "h7"), {"h2": "0", "h3": "0", "h6": "0", "h4": "-h1", "h5": "-h1", "h8": "-h1"}),
        (("h1", "h2"), {"h3": "0", "h6": "0", "h7": "0", "h4": "-h1", "h5": "-h1", "h8": "-h1"}),
        (("h1", "h7"), {"h2": "0", "h3": "0", "h6": "0", "h4": "h1", "h5": "h1", "h8": "-h1"}),
        (("h1", "h2"), {"h3": "0", "h6": "0", "h7": "0", "h4": "h1", "h5": "h1", "h8": "-h1"}),
    ]
    for k, (free, cons) in enumerate(c10):
        entries.append(
            _entry(10, k, free, cons, "+-lam = +-h1 (x2 each)", {"lam": "h1"},
                   refs=("C10.Z", "C10.mu2", "C10.mu3") if k == 0 else ())
        )

    c11 = [
        (("h7", "h8"), {"h2": "0", "h6": "0", "h1": "h8", "h5": "h8", "h4": "-h8", "h3": "2*h8"}, "h8"),
        (("h2", "h8"), {"h6": "0", "h7": "0", "h1": "h8", "h5": "h8", "h4": "-h8", "h3": "2*h8"}, "h8"),
        (("h7", "h8"), {"h2": "0", "h6": "0", "h1": "h8", "h4": "h8", "h5": "-h8", "h3": "2*h8"}, "h8"),
        (("h2", "h8"), {"h6": "0", "h7": "0", "h1": "h8", "h4": "h8", "h5": "-h8", "h3": "2*h8"}, "h8"),
        (("h1", "h7"), {"h2": "0", "h3": "0", "h5": "h1", "h8": "h1", "h4": "-h1", "h6": "2*h1"}, "h1"),
        (("h1", "h2"), {"h3": "0", "h7": "0", "h5": "h1", "h8": "h1", "h4": "-h1", "h6": "2*h1"}, "h1"),
        (("h1", "h7"), {"h2": "0", "h3": "0", "h4": "h1", "h8": "h1", "h5": "-h1", "h6": "2*h1"}, "h1"),
        (("h1", "h2"), {"h3": "0", "h7": "0", "h4": "h1", "h8": "h1", "h5": "-h1", "h6": "2*h1"}, "h1"),
    ]
    for k, (free, cons, lam) in enumerate(c11):
        entries.append(
            _entry(11, k, free, cons, f"lam={lam} (x4)", {"lam": lam},
                   refs=("C11.Z",) if k == 0 else ())
        )

    entries.append(
        _entry(
            12, 0, ("h1", "h2"),
            {"h4": "0", "h5": "0", "h3": "(1-1j)/2*h1", "h6": "(1-1j)/2*h1",
             "h8": "-1j*h1", "h7": "-1j/2*h1**2/h2"},
            "lam=(1-I)/2 h1 (x4)",
            {"lam": "(1-1j)/2*h1"},
            nonzero=("h2",),
            refs=("C12.Z", "C12.mu2", "C12.mu3", "C12.mu4", "C12.mu5"),
        )
    )
    entries.append(
        _entry(
            12, 1, ("h1", "h2"),
            {"h4": "0", "h5": "0", "h3": "(1+1j)/2*h1", "h6": "(1+1j)/2*h1",
             "h8": "1j*h1", "h7": "1j/2*h1**2/h2"},
            "lam=(1+I)/2 h1 (x4)",
            {"lam": "(1+1j)/2*h1"},
            nonzero=("h2",),
        )
    )

    return {e.entry_id: e for e in entries}


CATALOG: dict[str, CatalogEntry] = _build_catalog()

VARIANT_COUNTS = {1: 1, 2: 1, 3: 8, 4: 2, 5: 2, 6: 2, 7: 2, 8: 2, 9: 4, 10: 4, 11: 8, 12: 2}


def catalog_entry(entry_id: str) -> CatalogEntry:
    try:
        return CATALOG[entry_id]
    except KeyError:
        raise KeyError(f"unknown catalog id {entry_id!r}; known: C1.0 .. C12.1") from None


def catalog_instantiate(entry: CatalogEntry | str, params: dict[str, complex]) -> XTypeParams:
    """Fill an entry's constrained parameters from its free ones."""
    if isinstance(entry, str):
        entry = catalog_entry(entry)
    return entry.fill(params)
