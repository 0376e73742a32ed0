"""Surface lattice models.

The seven bielliptic types with the rank-4 numerical Grothendieck lattice
([S], A, B, [pt]), Picard-rank-1 K3 models in Mukai coordinates (r, H, s),
and abstract canonical-cover block lattices base (+) K with K negative
definite.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .matrices import Matrix, block_diagonal, char_poly
from .polynomials import IntPolynomial, sturm_root_count


class SurfaceKind(str, Enum):
    BIELLIPTIC = "bielliptic"
    K3 = "k3"
    ENRIQUES_BLOCK = "enriques_block"
    ABELIAN_BLOCK = "abelian_block"


# type -> (n = ord(K_S), k = |G|/n, G)
BIELLIPTIC_TABLE: dict[int, tuple[int, int, str]] = {
    1: (2, 1, "Z/2Z"),
    2: (2, 2, "Z/2Z x Z/2Z"),
    3: (4, 1, "Z/4Z"),
    4: (4, 2, "Z/4Z x Z/2Z"),
    5: (3, 1, "Z/3Z"),
    6: (3, 3, "Z/3Z x Z/3Z"),
    7: (6, 1, "Z/6Z"),
}

BIELLIPTIC_BASIS = ("[S]", "A", "B", "[pt]")
K3_BASIS = ("r", "H", "s")


@dataclass(frozen=True)
class SurfaceModel:
    kind: SurfaceKind
    rank: int
    basis_labels: tuple[str, ...]
    n: int  # ord(K_S); 1 for K3
    k: int | None = None
    d: int | None = None
    type_id: int | None = None
    group_name: str | None = None
    ell: int = 0
    gram_k: Matrix | None = None
    base: "SurfaceModel | None" = None

    @property
    def is_block(self) -> bool:
        return self.kind in (SurfaceKind.ENRIQUES_BLOCK, SurfaceKind.ABELIAN_BLOCK)

    def euler_gram(self) -> Matrix:
        """Gram matrix of the Euler pairing chi in the fixed basis."""
        if self.kind == SurfaceKind.BIELLIPTIC:
            return Matrix.from_rows(
                [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]]
            )
        if self.kind == SurfaceKind.K3:
            return Matrix.from_rows(
                [[0, 0, 1], [0, -2 * self.d, 0], [1, 0, 0]]
            )
        assert self.base is not None
        return block_diagonal(self.base.euler_gram(), self.gram_k)

    def mukai_gram(self) -> Matrix:
        if self.kind != SurfaceKind.K3:
            raise ValueError("Mukai Gram matrix is defined for K3 models")
        return Matrix.from_rows([[0, 0, -1], [0, 2 * self.d, 0], [-1, 0, 0]])

    def describe(self) -> str:
        if self.kind == SurfaceKind.BIELLIPTIC:
            return f"bielliptic:{self.type_id}"
        if self.kind == SurfaceKind.K3:
            return f"k3:d={self.d}"
        if self.kind == SurfaceKind.ENRIQUES_BLOCK:
            return f"enriques:l={self.ell}"
        return f"abelian:type={self.base.type_id},l={self.ell}"

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "l": self.ell,
            "gram_K": None
            if self.gram_k is None
            else [[str(x) for x in row] for row in self.gram_k.rows],
            "rank": self.rank,
            "basis": list(self.basis_labels),
        }


@dataclass(frozen=True)
class NumClass:
    """A numerical class: coordinate vector in a model's fixed basis."""

    coordinates: tuple[Fraction, ...]

    @classmethod
    def of(cls, coords: Sequence) -> "NumClass":
        return cls(tuple(Fraction(c) for c in coords))


def _coords(v, rank: int) -> tuple[Fraction, ...]:
    coords = v.coordinates if isinstance(v, NumClass) else tuple(Fraction(c) for c in v)
    if len(coords) != rank:
        raise ValueError(f"class has length {len(coords)}, model rank is {rank}")
    return coords


def bielliptic(type_id: int) -> SurfaceModel:
    """The bielliptic surface model of the given classification type (1..7)."""
    if type_id not in BIELLIPTIC_TABLE:
        raise ValueError(f"bielliptic type must be 1..7, got {type_id}")
    n, k, group = BIELLIPTIC_TABLE[type_id]
    return SurfaceModel(
        kind=SurfaceKind.BIELLIPTIC,
        rank=4,
        basis_labels=BIELLIPTIC_BASIS,
        n=n,
        k=k,
        type_id=type_id,
        group_name=group,
    )


def k3(d: int = 1) -> SurfaceModel:
    """Picard-rank-1 K3 model with H^2 = 2d, Mukai coordinates (r, H, s)."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    return SurfaceModel(kind=SurfaceKind.K3, rank=3, basis_labels=K3_BASIS, n=1, d=d)


def intersection(model: SurfaceModel, c, cp) -> Fraction:
    """Intersection number of two divisor classes on a bielliptic model.

    The divisor lattice is Z*A + Z*B with A.A = B.B = 0 and A.B = 1.
    Accepts (a, b) pairs or full rank-4 classes with zero rank and point
    components.
    """
    if model.kind != SurfaceKind.BIELLIPTIC:
        raise ValueError("intersection form is defined on bielliptic models")

    def divisor_part(v) -> tuple[Fraction, Fraction]:
        coords = v.coordinates if isinstance(v, NumClass) else tuple(Fraction(x) for x in v)
        if len(coords) == 2:
            return coords[0], coords[1]
        if len(coords) == 4:
            if coords[0] != 0 or coords[3] != 0:
                raise ValueError("not a divisor class: rank/point components must vanish")
            return coords[1], coords[2]
        raise ValueError("divisor input must have length 2 or 4")

    a, b = divisor_part(c)
    ap, bp = divisor_part(cp)
    return a * bp + ap * b


def euler_pairing(model: SurfaceModel, v, w) -> Fraction:
    """Euler pairing chi(v, w) in the model's fixed basis."""
    g = model.euler_gram()
    x = _coords(v, model.rank)
    y = _coords(w, model.rank)
    return sum(x[i] * g.entry(i, j) * y[j] for i in range(model.rank) for j in range(model.rank))


def mukai_pairing(model: SurfaceModel, v, w) -> Fraction:
    """Mukai pairing on a K3 model; chi = -<.,.>."""
    g = model.mukai_gram()
    x = _coords(v, model.rank)
    y = _coords(w, model.rank)
    return sum(x[i] * g.entry(i, j) * y[j] for i in range(model.rank) for j in range(model.rank))


def is_negative_definite(gram: Matrix) -> bool:
    """Symmetric and negative definite (leading principal minors alternate)."""
    n = gram.dimension
    for i in range(n):
        for j in range(i + 1, n):
            if gram.entry(i, j) != gram.entry(j, i):
                return False
    for size in range(1, n + 1):
        sub = Matrix.from_rows([row[:size] for row in gram.rows[:size]])
        minor = sub.det()
        if (-1) ** size * minor <= 0:
            return False
    return True


def cover_block_model(
    base: SurfaceModel, ell: int, gram_k: Matrix | None
) -> tuple[SurfaceModel, Matrix]:
    """Canonical-cover block lattice base (+) K and the push-pull map.

    Returns (cover_model, pushpull) where pushpull = ord(K_S) * identity on
    the base block, the scaling law of the covering map. A bielliptic base
    yields an abelian cover model, a K3 base an Enriques-type one (ord 2).
    """
    if base.is_block:
        raise ValueError("cover blocks over block models are not supported")
    if ell < 0:
        raise ValueError("l must be >= 0")
    if ell == 0:
        gram_k = None
    else:
        if gram_k is None or gram_k.dimension != ell:
            raise ValueError("gram_K must be an l x l matrix")
        if not is_negative_definite(gram_k):
            raise ValueError("K must be negative definite")
    if base.kind == SurfaceKind.BIELLIPTIC:
        kind = SurfaceKind.ABELIAN_BLOCK
        order = base.n
    elif base.kind == SurfaceKind.K3:
        kind = SurfaceKind.ENRIQUES_BLOCK
        order = 2
    else:  # pragma: no cover
        raise ValueError("unsupported base model")
    labels = base.basis_labels + tuple(f"K{i+1}" for i in range(ell))
    model = SurfaceModel(
        kind=kind,
        rank=base.rank + ell,
        basis_labels=labels,
        n=order,
        k=base.k,
        d=base.d,
        type_id=base.type_id,
        group_name=base.group_name,
        ell=ell,
        gram_k=gram_k,
        base=base,
    )
    pushpull = Matrix.identity(base.rank).scale(order)
    return model, pushpull


def signature(gram: Matrix) -> tuple[int, int]:
    """Signature (positive, negative) of a symmetric rational Gram matrix.

    Eigenvalue signs are counted with multiplicity from the characteristic
    polynomial (all roots real by symmetry), via its square-free
    decomposition; zero eigenvalues are excluded.
    """
    from .polynomials import root_bound, square_free_decomposition

    p = char_poly(gram)
    k = 0
    while p.coeffs[k] == 0:
        k += 1
    stripped = IntPolynomial(p.coeffs[k:])
    if stripped.degree < 1:
        return (0, 0)
    pos = neg = 0
    for factor, mult in square_free_decomposition(stripped):
        bound = Fraction(root_bound(factor))
        pos += mult * sturm_root_count(factor, Fraction(0), bound)
        neg += mult * sturm_root_count(factor, -bound, Fraction(0))
    return (pos, neg)


def parse_surface_spec(text: str) -> SurfaceModel:
    """Parse CLI surface specs: bielliptic:3, k3:d=1, enriques:l=2,
    abelian:type=3,l=2."""
    text = text.strip()
    if ":" not in text:
        raise ValueError(f"bad surface spec {text!r}: expected kind:params")
    kind, _, rest = text.partition(":")
    kind = kind.strip().lower()
    params: dict[str, int] = {}
    plain: list[str] = []
    for part in rest.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" in part:
            key, _, val = part.partition("=")
            try:
                params[key.strip()] = int(val)
            except ValueError:
                raise ValueError(f"bad surface spec {text!r}: {val!r} is not an integer")
        else:
            try:
                plain.append(part)
                int(part)
            except ValueError:
                raise ValueError(f"bad surface spec {text!r}")
    if kind == "bielliptic":
        if len(plain) != 1 or params:
            raise ValueError("bielliptic spec takes a single type, e.g. bielliptic:3")
        return bielliptic(int(plain[0]))
    if kind == "k3":
        if plain:
            raise ValueError("k3 spec takes d=<int>, e.g. k3:d=1")
        return k3(params.pop("d", 1))
    if kind == "enriques":
        if plain:
            raise ValueError("enriques spec takes l=<int>[,d=<int>]")
        ell = params.pop("l", 2)
        d = params.pop("d", 1)
        gram = -Matrix.identity(ell) if ell else None
        model, _ = cover_block_model(k3(d), ell, gram)
        return model
    if kind == "abelian":
        if plain and len(plain) == 1 and "type" not in params:
            params["type"] = int(plain[0])
        type_id = params.pop("type", None)
        if type_id is None:
            raise ValueError("abelian spec needs type=<1..7>")
        ell = params.pop("l", 2)
        gram = -Matrix.identity(ell) if ell else None
        model, _ = cover_block_model(bielliptic(type_id), ell, gram)
        return model
    raise ValueError(f"unknown surface kind {kind!r}")


def model_to_json_str(model: SurfaceModel) -> str:
    return json.dumps(model.to_json(), indent=2, sort_keys=True)
